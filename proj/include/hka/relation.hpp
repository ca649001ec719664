#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hka/errors.hpp"

namespace hka {

/// Binary relation over a finite carrier {0, ..., n-1}, stored as an n x n
/// bit matrix (one uint64_t row per source element, carrier <= 64).
class Relation {
 public:
  explicit Relation(int carrier);

  static Relation identity(int carrier);
  static Relation from_pairs(int carrier,
                             const std::vector<std::pair<int, int>>& pairs);

  int carrier() const { return n_; }
  bool contains(int a, int b) const { return (rows_[a] >> b) & 1u; }
  void set(int a, int b, bool on = true);
  bool empty() const;
  std::size_t count() const;
  std::vector<std::pair<int, int>> pairs() const;

  Relation unite(const Relation& other) const;
  Relation intersect(const Relation& other) const;
  Relation compose(const Relation& other) const;
  Relation star() const;
  Relation transpose() const;
  Relation dom() const;
  Relation cod() const;
  Relation adom() const;  // Id \ dom
  Relation acod() const;  // Id \ cod

  bool subset_of(const Relation& other) const;
  bool operator==(const Relation& other) const = default;

  /// Bit-packed index over the n*n pair lattice; inverse of from_index.
  uint64_t index() const;
  static Relation from_index(int carrier, uint64_t idx);

  std::string show() const;

 private:
  int n_;
  std::vector<uint64_t> rows_;
};

inline Relation operator|(const Relation& a, const Relation& b) {
  return a.unite(b);
}
inline Relation operator&(const Relation& a, const Relation& b) {
  return a.intersect(b);
}
inline Relation operator*(const Relation& a, const Relation& b) {
  return a.compose(b);
}

/// dom(x ; p) restricted to subidentities p.
Relation dia_fwd(const Relation& x, const Relation& p);
/// cod(p ; x).
Relation dia_bwd(const Relation& x, const Relation& p);
Relation box_fwd(const Relation& x, const Relation& p);
Relation box_bwd(const Relation& x, const Relation& p);

/// Greatest-fixpoint emptiness of p -> p /\ <R>p seeded at Id.
bool rel_noetherian(const Relation& r);
/// Independent oracle: directed cycle detection.
bool rel_has_cycle(const Relation& r);

struct CrEquivalence {
  bool semi_commutes;
  bool church_rosser;
};
/// x*y* <= y*x*  vs  (x+y)* <= y*x*; the two must agree (Church-Rosser
/// theorem), throws OracleMismatch otherwise.
CrEquivalence verify_cr_equivalence(const Relation& x, const Relation& y);

struct NewmanCheck {
  bool local;
  bool global;
  bool applicable;  // x+y Noetherian
};
/// Local vs global modal commutation; when x+y is Noetherian the two must
/// agree (Newman's lemma), throws OracleMismatch otherwise.
NewmanCheck verify_newman(const Relation& x, const Relation& y);

}  // namespace hka
