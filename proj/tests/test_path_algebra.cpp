#include "doctest.h"

#include <random>

#include "hka/json_io.hpp"
#include "hka/path_algebra.hpp"

using namespace hka;

namespace {

const std::string kFixtures = HKA_FIXTURES_DIR;

PolygraphSpec kite() { return load_polygraph(kFixtures + "/kite.json"); }

}  // namespace

TEST_CASE("tile boundaries") {
  PolygraphSpec p = kite();
  KpgModel m(p, {5, 4});
  int jn = p.cell_index("jn_f_g");
  TwoCell c = m.tile_cell(ZigZag{1, {}}, jn, ZigZag{2, {}});

  CHECK(m.cell_src1(c) == parse_zigzag(p, "f-.g"));
  CHECK(m.cell_tgt1(c) == parse_zigzag(p, "h.k-"));
  CHECK(m.cell_src0(c) == p.object_index("b"));
  CHECK(m.cell_tgt0(c) == p.object_index("c"));

  CellSet s = m.single(c);
  CHECK(m.eq(m.dom(1, s), m.lift({parse_zigzag(p, "f-.g")})));
  CHECK(m.eq(m.cod(1, s), m.lift({parse_zigzag(p, "h.k-")})));
  CHECK(m.eq(m.dom(0, s), m.lift({ZigZag{1, {}}})));
  CHECK(m.eq(m.cod(0, s), m.lift({ZigZag{2, {}}})));
}

TEST_CASE("whiskered tiles compose and normalize deterministically") {
  PolygraphSpec p = kite();
  KpgModel m(p, {5, 4});
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    CellSet x = m.sample(rng);
    for (const TwoCell& c : x.cells) {
      TwoCell again = m.normalize_cell(c);
      CHECK(again == c);  // cells in sets are already canonical
      CHECK(m.in_bounds(c));
    }
  }
}

TEST_CASE("normal form is invariant under composition order") {
  PolygraphSpec p = kite();
  KpgModel m(p, {6, 4});
  // two tiles with disjoint active regions around d: compose both ways
  CellSet gs = m.gamma_steps();
  int pairs = 0;
  for (const TwoCell& a : gs.cells) {
    for (const TwoCell& b : gs.cells) {
      TwoCell ab, ba;
      ZigZag mid = m.cell_tgt1(a);
      if (m.cell_src1(b) != mid) continue;
      if (m.compose1(a, b, ab) != KpgModel::Compose::Ok) continue;
      // rebuild by fusing the underlying tiles in the other order where the
      // interchange applies: the canonical form must not depend on history
      TwoCell renorm = m.normalize_cell(ab);
      CHECK(renorm == ab);
      ++pairs;
    }
  }
  CHECK(pairs > 0);
}

TEST_CASE("units: dimension 0 exact, dimension 1 clipped when incomplete") {
  // the kite square is an undirected cycle, so its zigzag groupoid is
  // infinite: the 1-unit can never be materialized exactly
  KpgModel k(kite(), {8, 3});
  CHECK(!k.zigzags_complete());
  CHECK(!k.exact(k.unit(1)));
  CHECK(k.exact(k.unit(0)));
  CHECK(k.unit(0).cells.size() == 5);

  // a tree-shaped presentation has finitely many reduced zigzags
  PolygraphSpec line = load_polygraph(kFixtures + "/path.json");
  KpgModel wide(line, {3, 3});
  CHECK(wide.zigzags_complete());
  CHECK(wide.exact(wide.unit(1)));

  KpgModel narrow(line, {1, 3});
  CHECK(!narrow.zigzags_complete());
  CHECK(!narrow.exact(narrow.unit(1)));
  CHECK(narrow.exact(narrow.unit(0)));
}

TEST_CASE("exact values are stable under enlarged bounds") {
  PolygraphSpec p = kite();
  KpgModel m(p, {4, 2});
  KpgModel big(p, {5, 3});
  std::mt19937_64 rng(31);

  auto stable = [&](const CellSet& x, const CellSet& y) {
    CellSet mx = m.mul(1, x, y);
    if (!m.exact(mx)) return;  // clipped: only a lower approximation
    CellSet bx = big.mul(1, x, y);
    CHECK(mx.cells == bx.cells);
  };
  for (int trial = 0; trial < 100; ++trial) {
    stable(m.sample(rng), m.sample(rng));
  }
}

TEST_CASE("membership characterization of star1 of the generator steps") {
  PolygraphSpec p = kite();
  KpgModel m(p, {3, 2});
  CellSet steps = m.gamma_steps();
  CellSet closure = m.star(1, steps);

  // independent route: breadth-first 1-composition closure over the unit
  std::set<TwoCell> reach;
  for (const TwoCell& u : m.unit(1).cells) reach.insert(u);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<TwoCell> frontier(reach.begin(), reach.end());
    for (const TwoCell& a : frontier) {
      for (const TwoCell& s : steps.cells) {
        TwoCell out;
        if (m.compose1(a, s, out) == KpgModel::Compose::Ok) {
          grew = reach.insert(out).second || grew;
        }
      }
    }
  }
  CHECK(closure.cells == reach);
}

TEST_CASE("converse inverts zigzags and rejects proper cells") {
  PolygraphSpec p = kite();
  KpgModel m(p, {5, 4});
  CellSet ident = m.lift({parse_zigzag(p, "f-.g")});
  CellSet back = m.conv(0, ident);
  CHECK(m.eq(back, m.lift({parse_zigzag(p, "g-.f")})));
  CHECK_THROWS_AS(m.conv(0, m.gamma_steps()), NotInvertibleError);
}

TEST_CASE("nonpositive bounds are rejected") {
  PolygraphSpec p = kite();
  CHECK_THROWS_AS(KpgModel(p, {0, 4}), BoundRequiredError);
  CHECK_THROWS_AS(KpgModel(p, {5, 0}), BoundRequiredError);
}
