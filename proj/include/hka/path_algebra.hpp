#pragma once

// Power-set model over the 2-cells freely generated by a cellular extension
// of the zigzag groupoid of a dim-1 presentation, truncated to finite size:
// zigzag boundaries of length <= max_len and at most max_tiles generator
// tiles per 2-cell.  Truncation only ever removes elements; every value
// carries a sticky `clipped` flag once something was dropped, and the law
// harness / coherence engine treat clipped values as lower approximations.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hka/mutant.hpp"
#include "hka/polygraph.hpp"

namespace hka {

struct TruncationBounds {
  int max_len = 6;    // reduced zigzag length
  int max_tiles = 4;  // generator tiles per 2-cell
};

// One extension generator whiskered by zigzags on both sides.  Whiskers are
// stored reduced; a tile determines its boundary and vice versa.
struct Tile {
  ZigZag left;
  int gamma = 0;  // index into spec.extension
  ZigZag right;
  auto operator<=>(const Tile&) const = default;
};

// 2-cell: a chain of tiles composed along dimension 1.  Empty chain is the
// identity on `src`.  Cells held in a CellSet are kept in interchange normal
// form, so structural equality is semantic equality.
struct TwoCell {
  ZigZag src;
  std::vector<Tile> tiles;
  auto operator<=>(const TwoCell&) const = default;
};

struct CellSet {
  std::set<TwoCell> cells;
  bool clipped = false;
};

class KpgModel {
 public:
  using value_type = CellSet;

  KpgModel(PolygraphSpec spec, TruncationBounds bounds,
           Mutant mutant = Mutant::None);

  const PolygraphSpec& spec() const { return spec_; }
  const TruncationBounds& bounds() const { return bounds_; }

  // ---- law-harness interface ----
  int dims() const { return 2; }
  CellSet zero() const { return {}; }
  CellSet add(const CellSet& a, const CellSet& b) const;
  CellSet unit(int i) const;
  CellSet mul(int i, const CellSet& a, const CellSet& b) const;
  CellSet dom(int i, const CellSet& x) const;
  CellSet cod(int i, const CellSet& x) const;
  bool has_adom() const { return true; }
  CellSet adom(int i, const CellSet& x) const;
  CellSet acod(int i, const CellSet& x) const;
  bool has_star() const { return true; }
  CellSet star(int i, const CellSet& x) const;
  bool has_conv() const { return true; }
  CellSet conv(int i, const CellSet& x) const;
  bool leq(const CellSet& a, const CellSet& b) const;
  bool eq(const CellSet& a, const CellSet& b) const;
  bool exact(const CellSet& x) const { return !x.clipped; }
  std::string show(const CellSet& x) const;
  CellSet sample(std::mt19937_64& rng) const;
  CellSet sample_dim(int i, std::mt19937_64& rng) const;
  std::vector<CellSet> enumerate() const { return {}; }

  // ---- structural layer ----
  TwoCell identity_cell(const ZigZag& z) const;
  TwoCell tile_cell(const ZigZag& l, int gamma, const ZigZag& r) const;
  ZigZag cell_src1(const TwoCell& c) const { return c.src; }
  ZigZag cell_tgt1(const TwoCell& c) const;
  Obj cell_src0(const TwoCell& c) const;
  Obj cell_tgt0(const TwoCell& c) const;
  ZigZag tile_src(const Tile& t) const;
  ZigZag tile_tgt(const Tile& t) const;

  /// Interchange normal form: lexicographic least arrangement reachable by
  /// commuting tiles whose active regions sit in each other's whiskers.
  /// When an exchange move would leave the whisker bounds the reachable
  /// class is cut short and the form may depend on the route that built the
  /// cell; `bound_limited` (if given) reports that, and set-level operations
  /// fold it into the sticky clipped flag.
  TwoCell normalize_cell(TwoCell c, bool* bound_limited = nullptr) const;
  bool in_bounds(const TwoCell& c) const;

  enum class Compose { Ok, NotComposable, OutOfBounds };
  Compose compose0(const TwoCell& a, const TwoCell& b, TwoCell& out,
                   bool* bound_limited = nullptr) const;
  Compose compose1(const TwoCell& a, const TwoCell& b, TwoCell& out,
                   bool* bound_limited = nullptr) const;

  /// All reduced zigzags up to max_len, and whether that is all of them.
  const std::vector<ZigZag>& all_zigzags() const { return zigzags_; }
  bool zigzags_complete() const { return zigzags_complete_; }

  /// Every in-bounds whiskering of every extension generator; cross-checked
  /// against the algebraic route (unit1 * gamma * unit1) on construction.
  CellSet gamma_steps() const;

  /// Identity cells on the given zigzags (exact by construction).
  CellSet lift(const std::vector<ZigZag>& zs) const;
  /// Identity cells on the single forward steps drawn from the given edges.
  CellSet lift_edges(const std::vector<int>& edges) const;

  CellSet single(TwoCell c) const;

 private:
  void enumerate_zigzags();
  void build_gamma_steps();
  void build_sample_pool();
  const ZigZag& gamma_src(int g) const { return spec_.extension[g].src; }
  const ZigZag& gamma_tgt(int g) const { return spec_.extension[g].tgt; }
  /// All exchange-related rearrangements of the adjacent pair a ; b.
  /// Sets `bound_limited` when a valid rearrangement was dropped because a
  /// whisker would exceed max_len.
  void swap_variants(const Tile& a, const Tile& b,
                     std::vector<std::pair<Tile, Tile>>& out,
                     bool& bound_limited) const;
  void insert_bounded(CellSet& out, TwoCell c) const;

  PolygraphSpec spec_;
  TruncationBounds bounds_;
  Mutant mutant_;
  std::vector<ZigZag> zigzags_;
  bool zigzags_complete_ = false;
  CellSet gamma_steps_;
  std::vector<TwoCell> sample_pool_;
  mutable std::map<TwoCell, std::pair<TwoCell, bool>> norm_cache_;
};

}  // namespace hka
