#pragma once

// Plugs the finite relation model into the law harness as a one-dimensional
// modal Kleene algebra (composition dimension 0 only).

#include <random>
#include <string>
#include <vector>

#include "hka/mutant.hpp"
#include "hka/relation.hpp"

namespace hka {

class RelAdapter {
 public:
  using value_type = Relation;

  explicit RelAdapter(int carrier, Mutant mutant = Mutant::None)
      : n_(carrier), mutant_(mutant) {
    if (carrier < 1 || carrier * carrier > 62) {
      throw IndexError("relation adapter carrier out of range");
    }
  }

  int carrier() const { return n_; }
  int dims() const { return 1; }

  Relation zero() const { return Relation(n_); }
  Relation add(const Relation& a, const Relation& b) const { return a | b; }
  Relation unit(int i) const {
    dim(i);
    return Relation::identity(n_);
  }
  Relation mul(int i, const Relation& a, const Relation& b) const {
    dim(i);
    return a * b;
  }
  Relation dom(int i, const Relation& x) const {
    dim(i);
    return x.dom();
  }
  Relation cod(int i, const Relation& x) const {
    dim(i);
    return x.cod();
  }

  bool has_adom() const { return true; }
  Relation adom(int i, const Relation& x) const {
    dim(i);
    return mutant_ == Mutant::AdomComplement ? x.acod() : x.adom();
  }
  Relation acod(int i, const Relation& x) const {
    dim(i);
    return x.acod();
  }

  bool has_star() const { return true; }
  Relation star(int i, const Relation& x) const {
    dim(i);
    if (mutant_ == Mutant::StarNoUnit) return x * x.star();
    return x.star();
  }

  bool has_conv() const { return true; }
  Relation conv(int i, const Relation& x) const {
    dim(i);
    return x.transpose();
  }

  bool leq(const Relation& a, const Relation& b) const {
    return a.subset_of(b);
  }
  bool eq(const Relation& a, const Relation& b) const { return a == b; }
  bool exact(const Relation&) const { return true; }
  std::string show(const Relation& x) const { return x.show(); }

  Relation sample(std::mt19937_64& rng) const {
    // AND two random masks: ~25% density keeps stars from saturating at once
    uint64_t mask = (uint64_t{1} << (n_ * n_)) - 1;
    return Relation::from_index(n_, rng() & rng() & mask);
  }

  Relation sample_dim(int i, std::mt19937_64& rng) const {
    dim(i);
    Relation p(n_);
    for (int a = 0; a < n_; ++a) {
      if (rng() & 1u) p.set(a, a);
    }
    return p;
  }

  std::vector<Relation> enumerate() const {
    std::vector<Relation> all;
    if (n_ > 3) return all;  // 2^(n*n) blows up past this
    uint64_t total = uint64_t{1} << (n_ * n_);
    all.reserve(total);
    for (uint64_t idx = 0; idx < total; ++idx) {
      all.push_back(Relation::from_index(n_, idx));
    }
    return all;
  }

 private:
  void dim(int i) const {
    if (i != 0) throw DimensionError("relation model has dimension 0 only");
  }

  int n_;
  Mutant mutant_;
};

}  // namespace hka
