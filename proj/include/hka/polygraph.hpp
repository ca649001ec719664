#pragma once

// Presentations by generators:
//   dim 1 — a graph whose edges are rewrite steps between objects (abstract
//           rewriting), optionally extended by named 2-cells between zigzags;
//   dim 2 — a rewriting system on composable words of edges (string rewriting
//           when there is a single object).

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "hka/errors.hpp"

namespace hka {

using Obj = int;

struct Gen1 {
  std::string name;
  Obj src = 0;
  Obj tgt = 0;
};

// Composable word of forward edges.
struct Path {
  Obj start = 0;
  std::vector<int> gens;
  auto operator<=>(const Path&) const = default;
};

struct Gen2 {
  std::string name;
  Path lhs;
  Path rhs;
};

struct SignedGen {
  int gen = 0;
  bool inv = false;
  auto operator<=>(const SignedGen&) const = default;
};

// Word in the free groupoid on the edges.
struct ZigZag {
  Obj start = 0;
  std::vector<SignedGen> word;
  auto operator<=>(const ZigZag&) const = default;
};

// Named 2-cell between parallel zigzags (a cellular extension).
struct CellGen {
  std::string name;
  ZigZag src;
  ZigZag tgt;
};

struct OrderSpec {
  std::string kind;             // "length-lex" | "weight"
  std::vector<long> weights;    // per edge, "weight" kind only
  std::vector<int> precedence;  // rank per edge, lower = smaller
};

struct PolygraphSpec {
  int dim = 1;
  std::vector<std::string> objects;
  std::vector<Gen1> gens1;
  std::vector<Gen2> gens2;
  std::vector<CellGen> extension;
  std::optional<OrderSpec> order;

  int object_index(const std::string& name) const;
  int gen1_index(const std::string& name) const;
  int gen2_index(const std::string& name) const;
  int cell_index(const std::string& name) const;
};

/// Throws (ParseError/ChainError/SphereError/IndexError) on an ill-formed
/// presentation; in particular every extension cell must bound a sphere.
void validate(const PolygraphSpec& p);

// ---- paths and zigzags ----

Obj sg_src(const PolygraphSpec& p, SignedGen g);
Obj sg_tgt(const PolygraphSpec& p, SignedGen g);
Obj path_src(const PolygraphSpec& p, const Path& w);
Obj path_tgt(const PolygraphSpec& p, const Path& w);  // throws ChainError
Obj zz_src(const PolygraphSpec& p, const ZigZag& z);
Obj zz_tgt(const PolygraphSpec& p, const ZigZag& z);  // throws ChainError

/// Cancels adjacent g g~ / g~ g pairs until none remain.
ZigZag zigzag_reduce(ZigZag z);
ZigZag zz_concat(const PolygraphSpec& p, const ZigZag& a, const ZigZag& b);
ZigZag zz_invert(const PolygraphSpec& p, const ZigZag& z);
ZigZag zz_of_path(const Path& w);
bool zz_is_forward(const ZigZag& z);
std::string zz_show(const PolygraphSpec& p, const ZigZag& z);
std::string path_show(const PolygraphSpec& p, const Path& w);

// ---- dim 1: rewriting on objects ----

struct ArsBranching {
  Obj source = 0;
  int a = 0;  // edge indexes, a <= b
  int b = 0;
};

/// Edges out of an object.
std::vector<int> rewriting_steps(const PolygraphSpec& p, Obj a);

struct NormalizeResult {
  Obj nf = 0;
  std::vector<int> steps;
  bool exhausted = false;
};

/// Leftmost strategy: always the lowest-index applicable edge.
NormalizeResult normalize(const PolygraphSpec& p, Obj a, int fuel = 10000);

std::vector<ArsBranching> local_branchings(const PolygraphSpec& p);

// ---- dim 2: rewriting on words ----

struct StringStep {
  int rule = 0;
  int pos = 0;
  auto operator<=>(const StringStep&) const = default;
};

struct StringBranching {
  Path word;
  StringStep a;
  StringStep b;
  bool critical = false;
};

std::vector<StringStep> rewriting_steps(const PolygraphSpec& p, const Path& w);
Path apply_step(const PolygraphSpec& p, const Path& w, const StringStep& s);

struct WordNormalizeResult {
  Path nf;
  std::vector<StringStep> steps;
  bool exhausted = false;
};

/// Leftmost position, then lowest rule index.
WordNormalizeResult normalize(const PolygraphSpec& p, const Path& w,
                              int fuel = 10000);

std::vector<StringBranching> local_branchings(const PolygraphSpec& p,
                                              const Path& w);

/// Overlap and inclusion branchings between rule left-hand sides, in minimal
/// context, canonically ordered.
std::vector<StringBranching> critical_branchings(const PolygraphSpec& p);

/// dim 1: edge graph acyclic.  dim 2: true when the given order strictly
/// decreases across every rule; otherwise a bounded search either finds a
/// loop (false) or throws FuelExhaustedError (inconclusive).
bool is_terminating(const PolygraphSpec& p);

/// Strict word comparison under p.order (dim 2).
bool word_greater(const PolygraphSpec& p, const Path& a, const Path& b);

}  // namespace hka
