#pragma once

// Coherent confluence machinery on top of the truncated 2-cell model:
// filler inequalities, whiskered completions, the inductive Church-Rosser
// construction, the coherent Newman argument, and constructive pavings with
// independently checkable certificates.
//
// Everything here reads clipped values as lower approximations: a positive
// verdict obtained from an exact right-hand side is sound, a negative verdict
// under clipping is reported as such rather than as a refutation.

#include <optional>
#include <string>
#include <vector>

#include "hka/path_algebra.hpp"

namespace hka {

enum class FillerKind { Local, LeftSemi, RightSemi, Confluence, ChurchRosser };

std::string filler_kind_name(FillerKind k);
FillerKind parse_filler_kind(const std::string& name);

struct FillerQuery {
  FillerKind kind = FillerKind::Local;
  std::vector<int> phi_edges;  // steps that make up the reversed leg
  std::vector<int> psi_edges;  // steps that make up the forward leg
};

struct FillerReport {
  FillerKind kind = FillerKind::Local;
  bool holds = false;
  bool clipped = false;
  long covered = 0;                  // rhs elements found under the diamond
  std::vector<std::string> deficit;  // rhs elements not covered
};

struct NewmanReport {
  bool psi_noetherian = false;
  bool phi_wellfounded = false;
  FillerReport local;       // premise: the local filler inequality
  FillerReport conclusion;  // all composite peaks paved to valleys
  bool r_full = false;      // internal fixpoint reached the full 0-unit
  std::vector<std::string> r_objects;
};

struct GammaBridgeReport {
  FillerKind kind = FillerKind::Local;
  bool combinatorial = false;  // zigzag search over tile moves
  FillerReport algebraic;      // diamond inequality in the algebra
};

// A concrete pavement: a 2-cell from `subject` down to the valley
// forward . backward~.  Certificates are not subject to the tile-count
// truncation; verify_certificate rechecks them from scratch.
struct PavingCertificate {
  ZigZag subject;
  TwoCell cell;
  Path forward;
  Path backward;
};

class CoherenceEngine {
 public:
  /// phi = reversed steps, psi = forward steps of the presentation; pass
  /// edge subsets to restrict either leg (empty = all edges).
  CoherenceEngine(const KpgModel& m, Mutant mutant = Mutant::None);
  CoherenceEngine(const KpgModel& m, const std::vector<int>& phi_edges,
                  const std::vector<int>& psi_edges,
                  Mutant mutant = Mutant::None);

  const KpgModel& model() const { return m_; }
  const CellSet& phi() const { return phi_; }
  const CellSet& psi() const { return psi_; }
  CellSet valleys() const;  // psi* phi*
  CellSet peaks() const;    // phi* psi*

  FillerReport is_filler(const CellSet& A, FillerKind kind) const;

  /// (phi+psi)* A (phi+psi)*, with an absorption self-check when exact.
  CellSet whisker_completion(const CellSet& A) const;

  /// A_0 = 1_0, A_k = ((phi+psi) A_{k-1}) *_1 ((hatAstar *_1 valleys) phi*).
  std::vector<CellSet> cr_inductive_sequence(const CellSet& hat_a_star,
                                             int kmax) const;

  FillerReport verify_coherent_cr(const CellSet& A, int kmax = 4) const;
  FillerReport verify_semi_cr(const CellSet& A, bool left_semi) const;

  /// Greatest fixpoint of p -> p /\ <x>_0 p seeded at the 0-unit is empty.
  bool noetherian_0(const CellSet& x) const;

  NewmanReport verify_coherent_newman(const CellSet& A) const;

  PavingCertificate pave_zigzag(const ZigZag& z, int fuel = 10000) const;
  PavingCertificate pave_branching_newman(const std::vector<int>& f,
                                          const std::vector<int>& g,
                                          int fuel = 10000) const;
  bool verify_certificate(const PavingCertificate& cert) const;

  /// Tile-move zigzag search vs the diamond inequality; the two verdicts
  /// must agree unless clipped.
  GammaBridgeReport gamma_bridge(FillerKind kind) const;

  /// The extension generators as bare cells (to be completed/whiskered).
  CellSet gamma_cells() const;

 private:
  CellSet dia1(const CellSet& a, const CellSet& p) const;
  CellSet filler_rhs(FillerKind kind) const;
  bool zigzag_paves(const ZigZag& z) const;  // combinatorial route
  TwoCell pave_span(const std::vector<int>& f, const std::vector<int>& g,
                    Obj apex, long& fuel) const;
  TwoCell pave_zz(const ZigZag& z, long& fuel) const;
  int find_filler(const ZigZag& span) const;  // index into extension, -1

  const KpgModel& m_;
  Mutant mutant_;
  CellSet phi_, psi_;
};

// ---- presentation-level helpers ----

struct ArsFillerReport {
  std::vector<CellGen> cells;
  std::vector<ArsBranching> unjoinable;
};
/// dim 1: one filler per ordered pair of distinct co-initial steps, built by
/// normalizing both targets with the leftmost strategy.
ArsFillerReport generate_fillers(const PolygraphSpec& p, int fuel = 10000);

struct CriticalJoin {
  StringBranching branching;
  bool joinable = false;
  WordNormalizeResult left, right;
};
/// dim 2: joinability of every critical branching.
std::vector<CriticalJoin> generate_critical_joins(const PolygraphSpec& p,
                                                  int fuel = 10000);

struct CoherenceSummary {
  bool terminating = false;
  std::vector<GammaBridgeReport> bridges;  // local, confluence, church-rosser
  std::optional<NewmanReport> newman;      // only when hypotheses hold
  std::string newman_failure;              // hypothesis that failed, if any
};
CoherenceSummary check_polygraph_coherence(const PolygraphSpec& p,
                                           TruncationBounds bounds,
                                           Mutant mutant = Mutant::None);

}  // namespace hka
