#pragma once

// Generic law checker for globular modal Kleene algebra models.
//
// A model M plugs in by providing (duck-typed):
//   using value_type = V;
//   int dims();                           // number of composition dimensions
//   V zero();  V add(V, V);
//   V unit(int i);  V mul(int i, V, V);
//   V dom(int i, V);  V cod(int i, V);
//   bool has_adom();  V adom(int i, V);  V acod(int i, V);
//   bool has_star();  V star(int i, V);
//   bool has_conv();  V conv(int i, V);  // may throw NotInvertibleError
//   bool leq(V, V);  bool eq(V, V);
//   V sample(Rng&);  V sample_dim(int i, Rng&);  // subidentity at dim i
//   std::vector<V> enumerate();           // empty when not enumerable
//   bool exact(V);                        // false once truncation clipped it
//   std::string show(V);
//
// Tuples involving inexact values are skipped, never reported as violations:
// truncation removes witnesses but cannot forge counterexamples.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hka/errors.hpp"
#include "hka/law_report.hpp"

namespace hka {

struct LawOptions {
  long samples = 400;
  uint64_t seed = 0x51ee7ULL;
  long exhaustive_threshold = 4096;  // max tuple count for full enumeration
  long rejection_cap = 10000;        // attempts for guarded (conditional) laws
  int max_failures = 5;              // per sub-law
};

namespace detail {

template <class M>
class Harness {
 public:
  using V = typename M::value_type;
  struct Skip {};
  enum class Cmp { Eq, Leq };
  static constexpr int kAny = -1;

  Harness(M& m, const LawOptions& opt)
      : m_(m), opt_(opt), rng_(opt.seed), pool_(m.enumerate()) {}

  // Throws Skip when a value got clipped by the truncation bounds.
  const V& ok(const V& v) {
    if (!m_.exact(v)) throw Skip{};
    return v;
  }

  void rule(LawReport& rep, const std::string& which, std::vector<int> kinds,
            Cmp cmp, const std::function<std::pair<V, V>(const std::vector<V>&)>& eval) {
    bool exhaustive = !pool_.empty();
    std::vector<const std::vector<V>*> pools;
    long tuples = 1;
    if (exhaustive) {
      for (int k : kinds) {
        const auto& p = (k < 0) ? pool_ : sub_pool(k);
        if (p.empty()) {
          exhaustive = false;
          break;
        }
        pools.push_back(&p);
        tuples *= static_cast<long>(p.size());
        if (tuples > opt_.exhaustive_threshold) {
          exhaustive = false;
          break;
        }
      }
    }
    if (exhaustive) {
      any_exhaustive_ = true;
      std::vector<std::size_t> odo(kinds.size(), 0);
      std::vector<V> args;
      int fails = 0;
      for (long t = 0; t < tuples && fails < opt_.max_failures; ++t) {
        args.clear();
        for (std::size_t s = 0; s < kinds.size(); ++s) {
          args.push_back((*pools[s])[odo[s]]);
        }
        fails += judge(rep, which, cmp, eval, args);
        for (std::size_t s = 0; s < kinds.size(); ++s) {
          if (++odo[s] < pools[s]->size()) break;
          odo[s] = 0;
        }
      }
    } else {
      any_sampled_ = true;
      long accepted = 0;
      int fails = 0;
      for (long att = 0; att < opt_.rejection_cap && accepted < opt_.samples &&
                         fails < opt_.max_failures;
           ++att) {
        std::vector<V> args;
        for (int k : kinds) {
          args.push_back(k < 0 ? m_.sample(rng_) : m_.sample_dim(k, rng_));
        }
        long before = rep.skipped;
        fails += judge(rep, which, cmp, eval, args);
        if (rep.skipped == before) ++accepted;
      }
    }
    rep.mode = any_sampled_ ? (any_exhaustive_ ? "mixed" : "sampled")
                            : "exhaustive";
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  // Returns 1 on failure, 0 otherwise; bumps the report counters.
  int judge(LawReport& rep, const std::string& which, Cmp cmp,
            const std::function<std::pair<V, V>(const std::vector<V>&)>& eval,
            const std::vector<V>& args) {
    for (const V& a : args) {
      if (!m_.exact(a)) {
        ++rep.skipped;
        return 0;
      }
    }
    try {
      auto [lhs, rhs] = eval(args);
      if (!m_.exact(lhs) || !m_.exact(rhs)) {
        ++rep.skipped;
        return 0;
      }
      ++rep.samples;
      bool good = (cmp == Cmp::Eq) ? m_.eq(lhs, rhs) : m_.leq(lhs, rhs);
      if (good) return 0;
      LawFailure f;
      f.which = which;
      for (const V& a : args) f.inputs.push_back(m_.show(a));
      f.lhs = m_.show(lhs);
      f.rhs = m_.show(rhs);
      rep.failures.push_back(std::move(f));
      return 1;
    } catch (const Skip&) {
    } catch (const TruncationError&) {
    } catch (const FuelExhaustedError&) {
    } catch (const NotInvertibleError&) {
    }
    ++rep.skipped;
    return 0;
  }

  const std::vector<V>& sub_pool(int i) {
    if (static_cast<int>(sub_pools_.size()) <= i) sub_pools_.resize(i + 1);
    auto& cached = sub_pools_[i];
    if (!cached) {
      cached.emplace();
      for (const V& v : pool_) {
        if (m_.exact(v) && m_.eq(m_.dom(i, v), v)) cached->push_back(v);
      }
    }
    return *cached;
  }

  M& m_;
  LawOptions opt_;
  std::mt19937_64 rng_;
  std::vector<V> pool_;
  std::vector<std::optional<std::vector<V>>> sub_pools_;
  bool any_exhaustive_ = false;
  bool any_sampled_ = false;
};

}  // namespace detail

// ---- generic modal operators ----

template <class M>
typename M::value_type power(M& m, int i, const typename M::value_type& x,
                             int k) {
  if (i < 0 || i >= m.dims()) throw DimensionError("dimension out of range");
  if (k < 0) throw IndexError("negative power");
  auto acc = m.unit(i);
  for (int t = 0; t < k; ++t) acc = m.mul(i, acc, x);
  return acc;
}

template <class M>
typename M::value_type dia(M& m, int i, const typename M::value_type& x,
                           const typename M::value_type& p,
                           bool forward = true) {
  if (i < 0 || i >= m.dims()) throw DimensionError("dimension out of range");
  if (!m.eq(m.dom(i, p), p)) {
    throw NotBooleanError("diamond argument is not a subidentity");
  }
  return forward ? m.dom(i, m.mul(i, x, p)) : m.cod(i, m.mul(i, p, x));
}

template <class M>
typename M::value_type box(M& m, int i, const typename M::value_type& x,
                           const typename M::value_type& p,
                           bool forward = true) {
  if (!m.has_adom()) throw NotProvidedError("box needs an antidomain");
  if (i < 0 || i >= m.dims()) throw DimensionError("dimension out of range");
  if (!m.eq(m.dom(i, p), p)) {
    throw NotBooleanError("box argument is not a subidentity");
  }
  auto np = m.adom(i, p);
  return m.adom(i, dia(m, i, x, np, forward));
}

// ---- law suites ----

template <class M>
LawReport check_dioid(M& m, int i, const LawOptions& opt = {}) {
  using H = detail::Harness<M>;
  using Cmp = typename H::Cmp;
  LawReport rep{.law = "dioid", .dims = {i}};
  H h(m, opt);
  auto u = [&] { return m.unit(i); };
  h.rule(rep, "add-assoc", {-1, -1, -1}, Cmp::Eq, [&](const auto& a) {
    return std::pair{m.add(m.add(a[0], a[1]), a[2]),
                     m.add(a[0], m.add(a[1], a[2]))};
  });
  h.rule(rep, "add-comm", {-1, -1}, Cmp::Eq, [&](const auto& a) {
    return std::pair{m.add(a[0], a[1]), m.add(a[1], a[0])};
  });
  h.rule(rep, "add-idem", {-1}, Cmp::Eq, [&](const auto& a) {
    return std::pair{m.add(a[0], a[0]), a[0]};
  });
  h.rule(rep, "add-zero", {-1}, Cmp::Eq, [&](const auto& a) {
    return std::pair{m.add(a[0], m.zero()), a[0]};
  });
  h.rule(rep, "mul-assoc", {-1, -1, -1}, Cmp::Eq, [&](const auto& a) {
    return std::pair{m.mul(i, m.mul(i, a[0], a[1]), a[2]),
                     m.mul(i, a[0], m.mul(i, a[1], a[2]))};
  });
  h.rule(rep, "mul-unit-left", {-1}, Cmp::Eq, [&](const auto& a) {
    return std::pair{m.mul(i, u(), a[0]), a[0]};
  });
  h.rule(rep, "mul-unit-right", {-1}, Cmp::Eq, [&](const auto& a) {
    return std::pair{m.mul(i, a[0], u()), a[0]};
  });
  h.rule(rep, "mul-zero-left", {-1}, Cmp::Eq, [&](const auto& a) {
    return std::pair{m.mul(i, m.zero(), a[0]), m.zero()};
  });
  h.rule(rep, "mul-zero-right", {-1}, Cmp::Eq, [&](const auto& a) {
    return std::pair{m.mul(i, a[0], m.zero()), m.zero()};
  });
  h.rule(rep, "distrib-left", {-1, -1, -1}, Cmp::Eq, [&](const auto& a) {
    return std::pair{m.mul(i, a[0], m.add(a[1], a[2])),
                     m.add(m.mul(i, a[0], a[1]), m.mul(i, a[0], a[2]))};
  });
  h.rule(rep, "distrib-right", {-1, -1, -1}, Cmp::Eq, [&](const auto& a) {
    return std::pair{m.mul(i, m.add(a[0], a[1]), a[2]),
                     m.add(m.mul(i, a[0], a[2]), m.mul(i, a[1], a[2]))};
  });
  return rep;
}

// Lax interchange between a lower dimension i and a higher dimension j.
template <class M>
LawReport check_interchange(M& m, int i, int j, const LawOptions& opt = {}) {
  using H = detail::Harness<M>;
  using Cmp = typename H::Cmp;
  LawReport rep{.law = "interchange", .dims = {i, j}};
  if (i >= j) throw DimensionError("interchange wants i < j");
  H h(m, opt);
  h.rule(rep, "lax-interchange", {-1, -1, -1, -1}, Cmp::Leq,
         [&](const auto& a) {
           return std::pair{
               m.mul(i, m.mul(j, a[0], a[1]), m.mul(j, a[2], a[3])),
               m.mul(j, m.mul(i, a[0], a[2]), m.mul(i, a[1], a[3]))};
         });
  h.rule(rep, "higher-unit-idem", {}, Cmp::Eq, [&](const auto&) {
    return std::pair{m.mul(i, m.unit(j), m.unit(j)), m.unit(j)};
  });
  // derived instance with x' := dom_j(x), y' := cod_j(y): a 2-ary probe that
  // actually hits aligned witnesses under sampling, where the 4-ary law
  // almost never does
  h.rule(rep, "whisker-exchange", {-1, -1}, Cmp::Leq, [&](const auto& a) {
    return std::pair{
        m.mul(i, a[0], a[1]),
        m.mul(j, m.mul(i, m.dom(j, a[0]), a[1]),
              m.mul(i, a[0], m.cod(j, a[1])))};
  });
  return rep;
}

template <class M>
LawReport check_domain_axioms(M& m, int i, const LawOptions& opt = {}) {
  using H = detail::Harness<M>;
  using Cmp = typename H::Cmp;
  LawReport rep{.law = "domain", .dims = {i}};
  H h(m, opt);
  h.rule(rep, "dom-absorb", {-1}, Cmp::Leq, [&](const auto& a) {
    return std::pair{a[0], m.mul(i, m.dom(i, a[0]), a[0])};
  });
  h.rule(rep, "dom-local", {-1, -1}, Cmp::Eq, [&](const auto& a) {
    return std::pair{m.dom(i, m.mul(i, a[0], a[1])),
                     m.dom(i, m.mul(i, a[0], m.dom(i, a[1])))};
  });
  h.rule(rep, "dom-sub-unit", {-1}, Cmp::Leq, [&](const auto& a) {
    return std::pair{m.dom(i, a[0]), m.unit(i)};
  });
  h.rule(rep, "dom-zero", {}, Cmp::Eq, [&](const auto&) {
    return std::pair{m.dom(i, m.zero()), m.zero()};
  });
  h.rule(rep, "dom-additive", {-1, -1}, Cmp::Eq, [&](const auto& a) {
    return std::pair{m.dom(i, m.add(a[0], a[1])),
                     m.add(m.dom(i, a[0]), m.dom(i, a[1]))};
  });
  h.rule(rep, "dom-export", {i, -1}, Cmp::Eq, [&](const auto& a) {
    return std::pair{m.dom(i, m.mul(i, a[0], a[1])),
                     m.mul(i, a[0], m.dom(i, a[1]))};
  });
  h.rule(rep, "dom-of-cod", {-1}, Cmp::Eq, [&](const auto& a) {
    return std::pair{m.dom(i, m.cod(i, a[0])), m.cod(i, a[0])};
  });
  h.rule(rep, "cod-absorb", {-1}, Cmp::Leq, [&](const auto& a) {
    return std::pair{a[0], m.mul(i, a[0], m.cod(i, a[0]))};
  });
  h.rule(rep, "cod-local", {-1, -1}, Cmp::Eq, [&](const auto& a) {
    return std::pair{m.cod(i, m.mul(i, a[0], a[1])),
                     m.cod(i, m.mul(i, m.cod(i, a[0]), a[1]))};
  });
  h.rule(rep, "cod-sub-unit", {-1}, Cmp::Leq, [&](const auto& a) {
    return std::pair{m.cod(i, a[0]), m.unit(i)};
  });
  h.rule(rep, "cod-additive", {-1, -1}, Cmp::Eq, [&](const auto& a) {
    return std::pair{m.cod(i, m.add(a[0], a[1])),
                     m.add(m.cod(i, a[0]), m.cod(i, a[1]))};
  });
  h.rule(rep, "cod-of-dom", {-1}, Cmp::Eq, [&](const auto& a) {
    return std::pair{m.cod(i, m.dom(i, a[0])), m.dom(i, a[0])};
  });
  return rep;
}

template <class M>
LawReport check_antidomain_axioms(M& m, int i, const LawOptions& opt = {}) {
  using H = detail::Harness<M>;
  using Cmp = typename H::Cmp;
  LawReport rep{.law = "antidomain", .dims = {i}};
  if (!m.has_adom()) throw NotProvidedError("model has no antidomain");
  H h(m, opt);
  h.rule(rep, "adom-annihilate", {-1}, Cmp::Eq, [&](const auto& a) {
    return std::pair{m.mul(i, m.adom(i, a[0]), a[0]), m.zero()};
  });
  h.rule(rep, "adom-local", {-1, -1}, Cmp::Leq, [&](const auto& a) {
    return std::pair{
        m.adom(i, m.mul(i, a[0], a[1])),
        m.adom(i, m.mul(i, a[0], m.adom(i, m.adom(i, a[1]))))};
  });
  h.rule(rep, "adom-partition", {-1}, Cmp::Eq, [&](const auto& a) {
    return std::pair{m.add(m.adom(i, m.adom(i, a[0])), m.adom(i, a[0])),
                     m.unit(i)};
  });
  h.rule(rep, "adom-squared-is-dom", {-1}, Cmp::Eq, [&](const auto& a) {
    return std::pair{m.adom(i, m.adom(i, a[0])), m.dom(i, a[0])};
  });
  h.rule(rep, "acod-annihilate", {-1}, Cmp::Eq, [&](const auto& a) {
    return std::pair{m.mul(i, a[0], m.acod(i, a[0])), m.zero()};
  });
  h.rule(rep, "acod-partition", {-1}, Cmp::Eq, [&](const auto& a) {
    return std::pair{m.add(m.acod(i, m.acod(i, a[0])), m.acod(i, a[0])),
                     m.unit(i)};
  });
  h.rule(rep, "acod-squared-is-cod", {-1}, Cmp::Eq, [&](const auto& a) {
    return std::pair{m.acod(i, m.acod(i, a[0])), m.cod(i, a[0])};
  });
  return rep;
}

// Globular interaction of the dimension-i and dimension-j structure, i < j.
template <class M>
LawReport check_globularity(M& m, int i, int j, const LawOptions& opt = {}) {
  using H = detail::Harness<M>;
  using Cmp = typename H::Cmp;
  LawReport rep{.law = "globularity", .dims = {i, j}};
  if (i >= j) throw DimensionError("globularity wants i < j");
  H h(m, opt);
  h.rule(rep, "dom-dom-collapse", {-1}, Cmp::Eq, [&](const auto& a) {
    return std::pair{m.dom(i, m.dom(j, a[0])), m.dom(i, a[0])};
  });
  h.rule(rep, "dom-cod-collapse", {-1}, Cmp::Eq, [&](const auto& a) {
    return std::pair{m.dom(i, m.cod(j, a[0])), m.dom(i, a[0])};
  });
  h.rule(rep, "cod-dom-collapse", {-1}, Cmp::Eq, [&](const auto& a) {
    return std::pair{m.cod(i, m.dom(j, a[0])), m.cod(i, a[0])};
  });
  h.rule(rep, "cod-cod-collapse", {-1}, Cmp::Eq, [&](const auto& a) {
    return std::pair{m.cod(i, m.cod(j, a[0])), m.cod(i, a[0])};
  });
  h.rule(rep, "dom-hom", {-1, -1}, Cmp::Eq, [&](const auto& a) {
    return std::pair{m.dom(j, m.mul(i, a[0], a[1])),
                     m.mul(i, m.dom(j, a[0]), m.dom(j, a[1]))};
  });
  h.rule(rep, "cod-hom", {-1, -1}, Cmp::Eq, [&](const auto& a) {
    return std::pair{m.cod(j, m.mul(i, a[0], a[1])),
                     m.mul(i, m.cod(j, a[0]), m.cod(j, a[1]))};
  });
  h.rule(rep, "lower-cells-fixed", {-1}, Cmp::Eq, [&](const auto& a) {
    return std::pair{m.dom(j, m.dom(i, a[0])), m.dom(i, a[0])};
  });
  h.rule(rep, "unit-tower", {}, Cmp::Leq, [&](const auto&) {
    return std::pair{m.unit(i), m.unit(j)};
  });
  h.rule(rep, "lower-unit-fixed", {}, Cmp::Eq, [&](const auto&) {
    return std::pair{m.dom(j, m.unit(i)), m.unit(i)};
  });
  return rep;
}

// Kleene star at dimension i; when j >= 0 also the lax morphism laws for
// whiskering a j-star along dimension i (j > i).
template <class M>
LawReport check_star_axioms(M& m, int i, int j = -1,
                            const LawOptions& opt = {}) {
  using H = detail::Harness<M>;
  using Cmp = typename H::Cmp;
  using Skip = typename H::Skip;
  LawReport rep{.law = "star", .dims = {i}};
  if (j >= 0) rep.dims.push_back(j);
  if (!m.has_star()) throw NotProvidedError("model has no star");
  H h(m, opt);
  h.rule(rep, "star-reflexive", {-1}, Cmp::Leq, [&](const auto& a) {
    return std::pair{m.unit(i), m.star(i, a[0])};
  });
  h.rule(rep, "star-unfold-left", {-1}, Cmp::Leq, [&](const auto& a) {
    auto s = h.ok(m.star(i, a[0]));
    return std::pair{m.mul(i, a[0], s), s};
  });
  h.rule(rep, "star-unfold-right", {-1}, Cmp::Leq, [&](const auto& a) {
    auto s = h.ok(m.star(i, a[0]));
    return std::pair{m.mul(i, s, a[0]), s};
  });
  h.rule(rep, "star-induct-left", {-1, -1}, Cmp::Leq, [&](const auto& a) {
    if (!m.leq(h.ok(m.mul(i, a[0], a[1])), a[1])) throw Skip{};
    return std::pair{m.mul(i, m.star(i, a[0]), a[1]), a[1]};
  });
  h.rule(rep, "star-induct-right", {-1, -1}, Cmp::Leq, [&](const auto& a) {
    if (!m.leq(h.ok(m.mul(i, a[1], a[0])), a[1])) throw Skip{};
    return std::pair{m.mul(i, a[1], m.star(i, a[0])), a[1]};
  });
  h.rule(rep, "star-idem", {-1}, Cmp::Eq, [&](const auto& a) {
    auto s = h.ok(m.star(i, a[0]));
    return std::pair{m.star(i, s), s};
  });
  h.rule(rep, "star-denest", {-1, -1}, Cmp::Eq, [&](const auto& a) {
    auto sx = h.ok(m.star(i, a[0]));
    auto sy = h.ok(m.star(i, a[1]));
    return std::pair{m.star(i, m.add(a[0], a[1])),
                     m.star(i, m.mul(i, sx, sy))};
  });
  if (j >= 0) {
    if (j <= i) throw DimensionError("star morphism laws want j > i");
    h.rule(rep, "star-whisker-left", {-1, -1}, Cmp::Leq, [&](const auto& a) {
      auto s = h.ok(m.star(j, a[1]));
      return std::pair{m.mul(i, a[0], s),
                       m.star(j, m.mul(i, a[0], a[1]))};
    });
    h.rule(rep, "star-whisker-right", {-1, -1}, Cmp::Leq, [&](const auto& a) {
      auto s = h.ok(m.star(j, a[1]));
      return std::pair{m.mul(i, s, a[0]),
                       m.star(j, m.mul(i, a[1], a[0]))};
    });
  }
  return rep;
}

template <class M>
LawReport check_modal_duality(M& m, int i, const LawOptions& opt = {}) {
  using H = detail::Harness<M>;
  using Cmp = typename H::Cmp;
  using Skip = typename H::Skip;
  LawReport rep{.law = "modal-duality", .dims = {i}};
  H h(m, opt);
  auto dia_f = [&](const auto& x, const auto& p) {
    return m.dom(i, m.mul(i, x, p));
  };
  auto dia_b = [&](const auto& x, const auto& p) {
    return m.cod(i, m.mul(i, p, x));
  };
  h.rule(rep, "dia-fwd-additive", {-1, i, i}, Cmp::Eq, [&](const auto& a) {
    return std::pair{dia_f(a[0], m.add(a[1], a[2])),
                     m.add(dia_f(a[0], a[1]), dia_f(a[0], a[2]))};
  });
  h.rule(rep, "dia-bwd-additive", {-1, i, i}, Cmp::Eq, [&](const auto& a) {
    return std::pair{dia_b(a[0], m.add(a[1], a[2])),
                     m.add(dia_b(a[0], a[1]), dia_b(a[0], a[2]))};
  });
  h.rule(rep, "dia-strict", {-1}, Cmp::Eq, [&](const auto& a) {
    return std::pair{dia_f(a[0], m.zero()), m.zero()};
  });
  h.rule(rep, "dia-of-unit-is-dom", {-1}, Cmp::Eq, [&](const auto& a) {
    return std::pair{dia_f(a[0], m.unit(i)), m.dom(i, a[0])};
  });
  h.rule(rep, "dia-fwd-functorial", {-1, -1, i}, Cmp::Eq, [&](const auto& a) {
    return std::pair{dia_f(m.mul(i, a[0], a[1]), a[2]),
                     dia_f(a[0], h.ok(dia_f(a[1], a[2])))};
  });
  h.rule(rep, "dia-bwd-functorial", {-1, -1, i}, Cmp::Eq, [&](const auto& a) {
    return std::pair{dia_b(m.mul(i, a[0], a[1]), a[2]),
                     dia_b(a[1], h.ok(dia_b(a[0], a[2])))};
  });
  // conjugation: <x>p and q are disjoint iff p and <x>'q are, both ways
  h.rule(rep, "conjugate-fwd", {-1, i, i}, Cmp::Eq, [&](const auto& a) {
    if (!m.eq(h.ok(m.mul(i, dia_f(a[0], a[1]), a[2])), m.zero())) throw Skip{};
    return std::pair{m.mul(i, a[1], dia_b(a[0], a[2])), m.zero()};
  });
  h.rule(rep, "conjugate-bwd", {-1, i, i}, Cmp::Eq, [&](const auto& a) {
    if (!m.eq(h.ok(m.mul(i, a[1], dia_b(a[0], a[2]))), m.zero())) throw Skip{};
    return std::pair{m.mul(i, dia_f(a[0], a[1]), a[2]), m.zero()};
  });
  if (m.has_adom()) {
    auto box_b = [&](const auto& x, const auto& q) {
      return m.adom(i, dia_b(x, m.adom(i, q)));
    };
    auto box_f = [&](const auto& x, const auto& q) {
      return m.adom(i, dia_f(x, m.adom(i, q)));
    };
    h.rule(rep, "galois-dia-to-box", {-1, i, i}, Cmp::Leq, [&](const auto& a) {
      if (!m.leq(h.ok(dia_f(a[0], a[1])), a[2])) throw Skip{};
      return std::pair{a[1], box_b(a[0], a[2])};
    });
    h.rule(rep, "galois-box-to-dia", {-1, i, i}, Cmp::Leq, [&](const auto& a) {
      if (!m.leq(a[1], h.ok(box_b(a[0], a[2])))) throw Skip{};
      return std::pair{dia_f(a[0], a[1]), a[2]};
    });
    h.rule(rep, "box-demorgan", {-1, i}, Cmp::Eq, [&](const auto& a) {
      return std::pair{box_f(a[0], a[1]),
                       m.adom(i, dia_f(a[0], m.adom(i, a[1])))};
    });
    h.rule(rep, "box-multiplicative", {-1, i, i}, Cmp::Eq,
           [&](const auto& a) {
             return std::pair{box_f(a[0], m.mul(i, a[1], a[2])),
                              m.mul(i, box_f(a[0], a[1]), box_f(a[0], a[2]))};
           });
  }
  return rep;
}

template <class M>
LawReport check_converse_axioms(M& m, int i, const LawOptions& opt = {}) {
  using H = detail::Harness<M>;
  using Cmp = typename H::Cmp;
  LawReport rep{.law = "converse", .dims = {i}};
  if (!m.has_conv()) throw NotProvidedError("model has no converse");
  H h(m, opt);
  h.rule(rep, "conv-involutive", {-1}, Cmp::Eq, [&](const auto& a) {
    return std::pair{m.conv(i, m.conv(i, a[0])), a[0]};
  });
  h.rule(rep, "conv-antihom", {-1, -1}, Cmp::Eq, [&](const auto& a) {
    return std::pair{m.conv(i, m.mul(i, a[0], a[1])),
                     m.mul(i, m.conv(i, a[1]), m.conv(i, a[0]))};
  });
  h.rule(rep, "conv-additive", {-1, -1}, Cmp::Eq, [&](const auto& a) {
    return std::pair{m.conv(i, m.add(a[0], a[1])),
                     m.add(m.conv(i, a[0]), m.conv(i, a[1]))};
  });
  h.rule(rep, "conv-unit", {}, Cmp::Eq, [&](const auto&) {
    return std::pair{m.conv(i, m.unit(i)), m.unit(i)};
  });
  h.rule(rep, "conv-expand", {-1}, Cmp::Leq, [&](const auto& a) {
    return std::pair{a[0], m.mul(i, m.mul(i, a[0], m.conv(i, a[0])), a[0])};
  });
  h.rule(rep, "conv-swaps-dom-cod", {-1}, Cmp::Eq, [&](const auto& a) {
    return std::pair{m.dom(i, m.conv(i, a[0])), m.cod(i, a[0])};
  });
  return rep;
}

}  // namespace hka
