#include "hka/path_algebra.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace hka {

namespace {

// letters [from, to) of z, with the start object walked forward
ZigZag zz_sub(const PolygraphSpec& p, const ZigZag& z, std::size_t from,
              std::size_t to) {
  ZigZag out;
  Obj at = z.start;
  for (std::size_t k = 0; k < from; ++k) at = sg_tgt(p, z.word[k]);
  out.start = at;
  out.word.assign(z.word.begin() + from, z.word.begin() + to);
  return out;
}

bool cancels(SignedGen a, SignedGen b) {
  return a.gen == b.gen && a.inv != b.inv;
}

}  // namespace

KpgModel::KpgModel(PolygraphSpec spec, TruncationBounds bounds, Mutant mutant)
    : spec_(std::move(spec)), bounds_(bounds), mutant_(mutant) {
  validate(spec_);
  if (spec_.dim != 1) {
    throw DimensionError("the cell model is built over a dim-1 presentation");
  }
  if (bounds_.max_len < 1 || bounds_.max_tiles < 1) {
    throw BoundRequiredError("truncation bounds must be positive");
  }
  enumerate_zigzags();
  build_gamma_steps();
  build_sample_pool();
}

void KpgModel::enumerate_zigzags() {
  std::vector<std::pair<ZigZag, Obj>> frontier;  // zigzag with its endpoint
  for (Obj a = 0; a < static_cast<Obj>(spec_.objects.size()); ++a) {
    ZigZag z;
    z.start = a;
    frontier.push_back({z, a});
    zigzags_.push_back(z);
  }
  zigzags_complete_ = true;
  for (int len = 1; len <= bounds_.max_len + 1; ++len) {
    std::vector<std::pair<ZigZag, Obj>> next;
    for (const auto& [z, end] : frontier) {
      for (std::size_t g = 0; g < spec_.gens1.size(); ++g) {
        for (bool inv : {false, true}) {
          SignedGen sg{static_cast<int>(g), inv};
          if (sg_src(spec_, sg) != end) continue;
          if (!z.word.empty() && cancels(z.word.back(), sg)) continue;
          ZigZag nz = z;
          nz.word.push_back(sg);
          next.push_back({nz, sg_tgt(spec_, sg)});
        }
      }
    }
    if (len > bounds_.max_len) {
      zigzags_complete_ = next.empty();
      break;
    }
    for (auto& [z, end] : next) zigzags_.push_back(z);
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
}

TwoCell KpgModel::identity_cell(const ZigZag& z) const {
  TwoCell c;
  c.src = zigzag_reduce(z);
  zz_tgt(spec_, c.src);  // composability check
  return c;
}

TwoCell KpgModel::tile_cell(const ZigZag& l, int gamma, const ZigZag& r) const {
  if (gamma < 0 || gamma >= static_cast<int>(spec_.extension.size())) {
    throw IndexError("no such extension cell");
  }
  Tile t{zigzag_reduce(l), gamma, zigzag_reduce(r)};
  TwoCell c;
  c.src = tile_src(t);
  c.tiles.push_back(std::move(t));
  return c;
}

ZigZag KpgModel::tile_src(const Tile& t) const {
  return zz_concat(spec_, zz_concat(spec_, t.left, gamma_src(t.gamma)),
                   t.right);
}

ZigZag KpgModel::tile_tgt(const Tile& t) const {
  return zz_concat(spec_, zz_concat(spec_, t.left, gamma_tgt(t.gamma)),
                   t.right);
}

ZigZag KpgModel::cell_tgt1(const TwoCell& c) const {
  ZigZag at = c.src;
  for (const Tile& t : c.tiles) {
    if (tile_src(t) != at) throw ChainError("tiles do not chain");
    at = tile_tgt(t);
  }
  return at;
}

Obj KpgModel::cell_src0(const TwoCell& c) const { return c.src.start; }

Obj KpgModel::cell_tgt0(const TwoCell& c) const {
  return zz_tgt(spec_, c.src);
}

bool KpgModel::in_bounds(const TwoCell& c) const {
  if (static_cast<int>(c.tiles.size()) > bounds_.max_tiles) return false;
  auto fits = [&](const ZigZag& z) {
    return static_cast<int>(z.word.size()) <= bounds_.max_len;
  };
  if (!fits(c.src)) return false;
  for (const Tile& t : c.tiles) {
    if (!fits(t.left) || !fits(t.right) || !fits(tile_tgt(t))) return false;
  }
  return true;
}

// Middle-four exchange on adjacent tiles.  The two presentations of a
// horizontal composite x *0 y are
//     route 1:  (x *0 s(y)) ;  (t(x) *0 y)      -- left factor rewritten first
//     route 2:  (s(x) *0 y) ;  (x *0 t(y))      -- right factor first
// In reduced whiskers the cut between the factors is invisible (letters of
// one factor may cancel into the other), but the free groupoid is
// cancellative, so the cut witness drops out of the arithmetic entirely:
// each direction leaves one closed-form candidate pair and one equation
// that decides whether the exchange applies.
void KpgModel::swap_variants(const Tile& a, const Tile& b,
                             std::vector<std::pair<Tile, Tile>>& out,
                             bool& bound_limited) const {
  if (tile_tgt(a) != tile_src(b)) return;
  auto red = [&](const ZigZag& x, const ZigZag& y) {
    return zz_concat(spec_, x, y);
  };
  auto fits = [&](const ZigZag& z) {
    return static_cast<int>(z.word.size()) <= bounds_.max_len;
  };
  const ZigZag& sa = gamma_src(a.gamma);
  const ZigZag& ta = gamma_tgt(a.gamma);
  const ZigZag& sb = gamma_src(b.gamma);
  const ZigZag& tb = gamma_tgt(b.gamma);
  auto emit = [&](const Tile& bt, const Tile& at) {
    if (!fits(bt.left) || !fits(bt.right) || !fits(at.left) ||
        !fits(at.right) || !fits(tile_tgt(bt))) {
      bound_limited = true;  // a reachable arrangement was clipped away
      return;
    }
    if (tile_src(bt) != tile_src(a) || tile_tgt(bt) != tile_src(at) ||
        tile_tgt(at) != tile_tgt(b)) {
      throw OracleMismatch("interchange swap broke a tile boundary");
    }
    out.push_back({bt, at});
  };
  // route 1 -> route 2: a = x on the left factor, b = y on the right
  {
    // u carries a's target boundary over to b's side of the cut
    ZigZag u = red(zz_invert(spec_, red(a.left, ta)), b.left);
    if (red(red(u, sb), b.right) == a.right) {
      Tile bt{red(red(a.left, sa), u), b.gamma, b.right};
      Tile at{a.left, a.gamma, red(red(u, tb), b.right)};
      emit(bt, at);
    }
  }
  // route 2 -> route 1: a = y on the right factor, b = x on the left
  {
    ZigZag v = red(zz_invert(spec_, red(b.left, sb)), a.left);
    if (red(red(v, ta), a.right) == b.right) {
      Tile bt{b.left, b.gamma, red(red(v, sa), a.right)};
      Tile at{red(red(b.left, tb), v), a.gamma, a.right};
      emit(bt, at);
    }
  }
}

TwoCell KpgModel::normalize_cell(TwoCell c, bool* bound_limited) const {
  c.src = zigzag_reduce(c.src);
  cell_tgt1(c);  // chain check
  if (bound_limited) *bound_limited = false;
  if (mutant_ == Mutant::InterchangeRaw || c.tiles.size() < 2) return c;
  if (auto it = norm_cache_.find(c); it != norm_cache_.end()) {
    if (bound_limited) *bound_limited = it->second.second;
    return it->second.first;
  }
  TwoCell key = c;
  std::set<std::vector<Tile>> seen{c.tiles};
  std::deque<std::vector<Tile>> queue{{c.tiles}};
  std::vector<Tile> best = c.tiles;
  std::vector<std::pair<Tile, Tile>> vars;
  bool limited = false;
  int cap = 5000;
  while (!queue.empty()) {
    if (cap-- <= 0) {
      limited = true;
      break;
    }
    std::vector<Tile> ts = queue.front();
    queue.pop_front();
    if (ts < best) best = ts;
    for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
      vars.clear();
      swap_variants(ts[k], ts[k + 1], vars, limited);
      for (const auto& [b2, a2] : vars) {
        std::vector<Tile> nxt = ts;
        nxt[k] = b2;
        nxt[k + 1] = a2;
        if (seen.insert(nxt).second) queue.push_back(std::move(nxt));
      }
    }
  }
  c.tiles = std::move(best);
  norm_cache_.emplace(std::move(key), std::pair{c, limited});
  if (bound_limited) *bound_limited = limited;
  return c;
}

KpgModel::Compose KpgModel::compose0(const TwoCell& a, const TwoCell& b,
                                     TwoCell& out, bool* bound_limited) const {
  if (cell_tgt0(a) != cell_src0(b)) return Compose::NotComposable;
  ZigZag t1a = cell_tgt1(a);
  TwoCell raw;
  raw.src = zz_concat(spec_, a.src, b.src);
  for (const Tile& t : a.tiles) {
    raw.tiles.push_back({t.left, t.gamma, zz_concat(spec_, t.right, b.src)});
  }
  for (const Tile& t : b.tiles) {
    raw.tiles.push_back({zz_concat(spec_, t1a, t.left), t.gamma, t.right});
  }
  out = normalize_cell(std::move(raw), bound_limited);
  return in_bounds(out) ? Compose::Ok : Compose::OutOfBounds;
}

KpgModel::Compose KpgModel::compose1(const TwoCell& a, const TwoCell& b,
                                     TwoCell& out, bool* bound_limited) const {
  if (cell_tgt1(a) != b.src) return Compose::NotComposable;
  TwoCell raw;
  raw.src = a.src;
  raw.tiles = a.tiles;
  raw.tiles.insert(raw.tiles.end(), b.tiles.begin(), b.tiles.end());
  out = normalize_cell(std::move(raw), bound_limited);
  return in_bounds(out) ? Compose::Ok : Compose::OutOfBounds;
}

CellSet KpgModel::add(const CellSet& a, const CellSet& b) const {
  CellSet out = a;
  out.cells.insert(b.cells.begin(), b.cells.end());
  out.clipped = a.clipped || b.clipped;
  return out;
}

CellSet KpgModel::unit(int i) const {
  CellSet out;
  if (i == 0) {
    for (Obj a = 0; a < static_cast<Obj>(spec_.objects.size()); ++a) {
      ZigZag z;
      z.start = a;
      out.cells.insert(identity_cell(z));
    }
  } else if (i == 1) {
    for (const ZigZag& z : zigzags_) out.cells.insert(identity_cell(z));
    out.clipped = !zigzags_complete_;
  } else {
    throw DimensionError("dimension out of range");
  }
  return out;
}

CellSet KpgModel::mul(int i, const CellSet& a, const CellSet& b) const {
  if (i != 0 && i != 1) throw DimensionError("dimension out of range");
  CellSet out;
  out.clipped = a.clipped || b.clipped;
  if (i == 1) {
    // only cells whose 1-source matches the left factor's 1-target compose
    std::map<ZigZag, std::vector<const TwoCell*>> by_src;
    for (const TwoCell& cb : b.cells) by_src[cb.src].push_back(&cb);
    for (const TwoCell& ca : a.cells) {
      auto it = by_src.find(cell_tgt1(ca));
      if (it == by_src.end()) continue;
      for (const TwoCell* cb : it->second) {
        TwoCell c;
        bool limited = false;
        if (compose1(ca, *cb, c, &limited) == Compose::Ok) {
          out.cells.insert(std::move(c));
        } else {
          out.clipped = true;
        }
        out.clipped = out.clipped || limited;
      }
    }
    return out;
  }
  std::map<Obj, std::vector<const TwoCell*>> by_obj;
  for (const TwoCell& cb : b.cells) by_obj[cell_src0(cb)].push_back(&cb);
  for (const TwoCell& ca : a.cells) {
    auto it = by_obj.find(cell_tgt0(ca));
    if (it == by_obj.end()) continue;
    for (const TwoCell* cb : it->second) {
      TwoCell c;
      bool limited = false;
      Compose st = compose0(ca, *cb, c, &limited);
      if (st == Compose::Ok) {
        out.cells.insert(std::move(c));
      } else if (st == Compose::OutOfBounds) {
        out.clipped = true;
      }
      out.clipped = out.clipped || limited;
    }
  }
  return out;
}

CellSet KpgModel::dom(int i, const CellSet& x) const {
  if (i != 0 && i != 1) throw DimensionError("dimension out of range");
  CellSet out;
  out.clipped = x.clipped;
  for (const TwoCell& c : x.cells) {
    if (i == 1) {
      out.cells.insert(identity_cell(c.src));
    } else {
      ZigZag z;
      z.start = cell_src0(c);
      out.cells.insert(identity_cell(z));
    }
  }
  return out;
}

CellSet KpgModel::cod(int i, const CellSet& x) const {
  if (i != 0 && i != 1) throw DimensionError("dimension out of range");
  CellSet out;
  out.clipped = x.clipped;
  for (const TwoCell& c : x.cells) {
    if (i == 1) {
      out.cells.insert(identity_cell(
          mutant_ == Mutant::CodSwap ? c.src : cell_tgt1(c)));
    } else {
      ZigZag z;
      z.start = cell_tgt0(c);
      out.cells.insert(identity_cell(z));
    }
  }
  return out;
}

CellSet KpgModel::adom(int i, const CellSet& x) const {
  int ui = (mutant_ == Mutant::AdomComplement) ? 1 - i : i;
  CellSet u = unit(ui);
  CellSet d = dom(i, x);
  CellSet out;
  out.clipped = u.clipped || x.clipped;
  for (const TwoCell& c : u.cells) {
    if (!d.cells.count(c)) out.cells.insert(c);
  }
  return out;
}

CellSet KpgModel::acod(int i, const CellSet& x) const {
  CellSet u = unit(i);
  CellSet cd = cod(i, x);
  CellSet out;
  out.clipped = u.clipped || x.clipped;
  for (const TwoCell& c : u.cells) {
    if (!cd.cells.count(c)) out.cells.insert(c);
  }
  return out;
}

CellSet KpgModel::star(int i, const CellSet& x) const {
  CellSet s = (mutant_ == Mutant::StarNoUnit) ? x : add(unit(i), x);
  for (int iter = 0; iter < 64; ++iter) {
    CellSet p = mul(i, s, x);
    CellSet n = add(s, p);
    if (n.cells == s.cells) {
      n.clipped = n.clipped || s.clipped;
      return n;
    }
    s = std::move(n);
  }
  throw FuelExhaustedError("star iteration did not stabilize");
}

CellSet KpgModel::conv(int i, const CellSet& x) const {
  if (i != 0 && i != 1) throw DimensionError("dimension out of range");
  CellSet out;
  out.clipped = x.clipped;
  for (const TwoCell& c : x.cells) {
    if (!c.tiles.empty()) {
      throw NotInvertibleError("only identity 2-cells invert here");
    }
    out.cells.insert(i == 0 ? identity_cell(zz_invert(spec_, c.src))
                            : c);
  }
  return out;
}

bool KpgModel::leq(const CellSet& a, const CellSet& b) const {
  return std::includes(b.cells.begin(), b.cells.end(), a.cells.begin(),
                       a.cells.end());
}

bool KpgModel::eq(const CellSet& a, const CellSet& b) const {
  return a.cells == b.cells;
}

std::string KpgModel::show(const CellSet& x) const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const TwoCell& c : x.cells) {
    if (!first) os << ", ";
    first = false;
    if (c.tiles.empty()) {
      os << "1(" << zz_show(spec_, c.src) << ')';
    } else {
      bool ft = true;
      for (const Tile& t : c.tiles) {
        if (!ft) os << " *1 ";
        ft = false;
        os << '[' << zz_show(spec_, t.left) << '|'
           << spec_.extension[t.gamma].name << '|'
           << zz_show(spec_, t.right) << ']';
      }
    }
  }
  os << '}';
  if (x.clipped) os << "~";
  return os.str();
}

CellSet KpgModel::gamma_steps() const { return gamma_steps_; }

void KpgModel::build_gamma_steps() {
  // route 1: enumerate whiskers directly, staging left whisker first so the
  // truncation matches route 2
  CellSet direct;
  direct.clipped = !zigzags_complete_;
  for (std::size_t g = 0; g < spec_.extension.size(); ++g) {
    const ZigZag& sg = gamma_src(static_cast<int>(g));
    Obj mid = zz_tgt(spec_, sg);
    for (const ZigZag& l : zigzags_) {
      if (zz_tgt(spec_, l) != sg.start) continue;
      Tile lt{l, static_cast<int>(g), ZigZag{mid, {}}};
      TwoCell lc;
      lc.src = tile_src(lt);
      lc.tiles.push_back(lt);
      if (!in_bounds(lc)) {
        direct.clipped = true;
        continue;
      }
      for (const ZigZag& r : zigzags_) {
        if (r.start != mid) continue;
        Tile t{l, static_cast<int>(g), r};
        TwoCell c;
        c.src = tile_src(t);
        c.tiles.push_back(t);
        if (in_bounds(c)) {
          direct.cells.insert(c);
        } else {
          direct.clipped = true;
        }
      }
    }
  }
  // route 2: unit1 * gamma * unit1 through the algebra
  CellSet gens;
  for (std::size_t g = 0; g < spec_.extension.size(); ++g) {
    const ZigZag& sg = gamma_src(static_cast<int>(g));
    ZigZag le{sg.start, {}}, re{zz_tgt(spec_, sg), {}};
    gens.cells.insert(tile_cell(le, static_cast<int>(g), re));
  }
  CellSet alg = mul(0, mul(0, unit(1), gens), unit(1));
  if (alg.cells != direct.cells) {
    throw OracleMismatch("whiskered extension steps disagree between routes");
  }
  direct.clipped = direct.clipped || alg.clipped;
  gamma_steps_ = direct;
}

CellSet KpgModel::lift(const std::vector<ZigZag>& zs) const {
  CellSet out;
  for (const ZigZag& z : zs) {
    TwoCell c = identity_cell(z);
    if (!in_bounds(c)) throw TruncationError("zigzag exceeds the bounds");
    out.cells.insert(c);
  }
  return out;
}

CellSet KpgModel::lift_edges(const std::vector<int>& edges) const {
  CellSet out;
  for (int g : edges) {
    const Gen1& e = spec_.gens1.at(g);
    ZigZag z;
    z.start = e.src;
    z.word.push_back({g, false});
    out.cells.insert(identity_cell(z));
  }
  return out;
}

CellSet KpgModel::single(TwoCell c) const {
  CellSet out;
  bool limited = false;
  c = normalize_cell(std::move(c), &limited);
  out.clipped = limited;
  if (in_bounds(c)) {
    out.cells.insert(std::move(c));
  } else {
    out.clipped = true;
  }
  return out;
}

void KpgModel::build_sample_pool() {
  for (const ZigZag& z : zigzags_) sample_pool_.push_back(identity_cell(z));
  std::vector<TwoCell> gammas(gamma_steps_.cells.begin(),
                              gamma_steps_.cells.end());
  for (const TwoCell& c : gammas) sample_pool_.push_back(c);
  // a few genuine 2-tile composites
  int made = 0;
  for (const TwoCell& a : gammas) {
    for (const TwoCell& b : gammas) {
      TwoCell c;
      bool limited = false;
      if (compose1(a, b, c, &limited) == Compose::Ok && !limited) {
        sample_pool_.push_back(c);
        if (++made >= 64) break;
      }
    }
    if (made >= 64) break;
  }
}

CellSet KpgModel::sample(std::mt19937_64& rng) const {
  CellSet out;
  if (sample_pool_.empty()) return out;
  std::uniform_int_distribution<std::size_t> pick(0, sample_pool_.size() - 1);
  std::uniform_int_distribution<int> howmany(1, 3);
  int k = howmany(rng);
  for (int t = 0; t < k; ++t) out.cells.insert(sample_pool_[pick(rng)]);
  return out;
}

CellSet KpgModel::sample_dim(int i, std::mt19937_64& rng) const {
  CellSet u = unit(i);
  std::vector<TwoCell> us(u.cells.begin(), u.cells.end());
  CellSet out;  // a literal finite subset of units is exact
  if (us.empty()) return out;
  std::uniform_int_distribution<std::size_t> pick(0, us.size() - 1);
  std::uniform_int_distribution<int> howmany(0, 3);
  int k = howmany(rng);
  for (int t = 0; t < k; ++t) out.cells.insert(us[pick(rng)]);
  return out;
}

}  // namespace hka
