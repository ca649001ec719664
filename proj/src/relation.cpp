#include "hka/relation.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace hka {

Relation::Relation(int carrier) : n_(carrier), rows_(carrier, 0) {
  if (carrier < 0 || carrier > 64) {
    throw IndexError("carrier size must be between 0 and 64");
  }
}

Relation Relation::identity(int carrier) {
  Relation r(carrier);
  for (int a = 0; a < carrier; ++a) r.set(a, a);
  return r;
}

Relation Relation::from_pairs(int carrier,
                              const std::vector<std::pair<int, int>>& pairs) {
  Relation r(carrier);
  for (auto [a, b] : pairs) r.set(a, b);
  return r;
}

void Relation::set(int a, int b, bool on) {
  if (a < 0 || a >= n_ || b < 0 || b >= n_) {
    throw IndexError("pair out of carrier range");
  }
  if (on) {
    rows_[a] |= uint64_t{1} << b;
  } else {
    rows_[a] &= ~(uint64_t{1} << b);
  }
}

bool Relation::empty() const {
  return std::all_of(rows_.begin(), rows_.end(),
                     [](uint64_t r) { return r == 0; });
}

std::size_t Relation::count() const {
  std::size_t c = 0;
  for (uint64_t r : rows_) c += std::popcount(r);
  return c;
}

std::vector<std::pair<int, int>> Relation::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (contains(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

Relation Relation::unite(const Relation& other) const {
  Relation r(n_);
  for (int a = 0; a < n_; ++a) r.rows_[a] = rows_[a] | other.rows_[a];
  return r;
}

Relation Relation::intersect(const Relation& other) const {
  Relation r(n_);
  for (int a = 0; a < n_; ++a) r.rows_[a] = rows_[a] & other.rows_[a];
  return r;
}

Relation Relation::compose(const Relation& other) const {
  Relation r(n_);
  for (int a = 0; a < n_; ++a) {
    uint64_t row = rows_[a];
    uint64_t acc = 0;
    while (row) {
      int c = std::countr_zero(row);
      row &= row - 1;
      acc |= other.rows_[c];
    }
    r.rows_[a] = acc;
  }
  return r;
}

Relation Relation::star() const {
  Relation acc = identity(n_).unite(*this);
  for (;;) {
    Relation next = acc.unite(acc.compose(acc));
    if (next == acc) return acc;
    acc = next;
  }
}

Relation Relation::transpose() const {
  Relation r(n_);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (contains(a, b)) r.set(b, a);
    }
  }
  return r;
}

Relation Relation::dom() const {
  Relation r(n_);
  for (int a = 0; a < n_; ++a) {
    if (rows_[a] != 0) r.set(a, a);
  }
  return r;
}

Relation Relation::cod() const { return transpose().dom(); }

Relation Relation::adom() const {
  Relation r(n_);
  for (int a = 0; a < n_; ++a) {
    if (rows_[a] == 0) r.set(a, a);
  }
  return r;
}

Relation Relation::acod() const { return transpose().adom(); }

bool Relation::subset_of(const Relation& other) const {
  for (int a = 0; a < n_; ++a) {
    if (rows_[a] & ~other.rows_[a]) return false;
  }
  return true;
}

uint64_t Relation::index() const {
  uint64_t idx = 0;
  for (int a = n_ - 1; a >= 0; --a) {
    idx = (idx << n_) | rows_[a];
  }
  return idx;
}

Relation Relation::from_index(int carrier, uint64_t idx) {
  Relation r(carrier);
  uint64_t mask = (carrier == 64) ? ~uint64_t{0} : ((uint64_t{1} << carrier) - 1);
  for (int a = 0; a < carrier; ++a) {
    r.rows_[a] = idx & mask;
    idx >>= carrier;
  }
  return r;
}

std::string Relation::show() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto [a, b] : pairs()) {
    if (!first) os << ',';
    first = false;
    os << '(' << a << ',' << b << ')';
  }
  os << '}';
  return os.str();
}

Relation dia_fwd(const Relation& x, const Relation& p) {
  return x.compose(p).dom();
}

Relation dia_bwd(const Relation& x, const Relation& p) {
  return p.compose(x).cod();
}

static Relation neg_sub(const Relation& p) {
  // complement within the subidentity algebra
  Relation r(p.carrier());
  for (int a = 0; a < p.carrier(); ++a) {
    if (!p.contains(a, a)) r.set(a, a);
  }
  return r;
}

Relation box_fwd(const Relation& x, const Relation& p) {
  return neg_sub(dia_fwd(x, neg_sub(p)));
}

Relation box_bwd(const Relation& x, const Relation& p) {
  return neg_sub(dia_bwd(x, neg_sub(p)));
}

bool rel_noetherian(const Relation& r) {
  Relation p = Relation::identity(r.carrier());
  for (;;) {
    Relation next = p.intersect(dia_fwd(r, p));
    if (next == p) break;
    p = next;
  }
  return p.empty();
}

bool rel_has_cycle(const Relation& r) {
  // a cycle exists iff some element reaches itself in >= 1 steps
  Relation plus = r.compose(r.star());
  for (int a = 0; a < r.carrier(); ++a) {
    if (plus.contains(a, a)) return true;
  }
  return false;
}

CrEquivalence verify_cr_equivalence(const Relation& x, const Relation& y) {
  Relation xs = x.star();
  Relation ys = y.star();
  Relation ysxs = ys.compose(xs);
  bool semi = xs.compose(ys).subset_of(ysxs);
  bool cr = x.unite(y).star().subset_of(ysxs);
  if (semi != cr) {
    throw OracleMismatch("Church-Rosser equivalence violated for x=" +
                         x.show() + " y=" + y.show());
  }
  return {semi, cr};
}

NewmanCheck verify_newman(const Relation& x, const Relation& y) {
  int n = x.carrier();
  Relation xs = x.star();
  Relation ys = y.star();
  bool local = true;
  bool global = true;
  // diamonds are additive, so checking all atoms p = {(b,b)} suffices; we
  // still sweep all subidentities at desk scale
  for (uint64_t bits = 0; bits < (uint64_t{1} << n); ++bits) {
    Relation p(n);
    for (int a = 0; a < n; ++a) {
      if ((bits >> a) & 1u) p.set(a, a);
    }
    Relation rhs = dia_fwd(ys, dia_fwd(xs, p));
    if (!dia_fwd(x, dia_fwd(y, p)).subset_of(rhs)) local = false;
    if (!dia_fwd(xs, dia_fwd(ys, p)).subset_of(rhs)) global = false;
  }
  bool applicable = rel_noetherian(x.unite(y));
  if (applicable && local != global) {
    throw OracleMismatch("Newman equivalence violated for x=" + x.show() +
                         " y=" + y.show());
  }
  return {local, global, applicable};
}

}  // namespace hka
