#include "hka/coherence.hpp"

#include <algorithm>

#include "hka/laws.hpp"
#include <deque>
#include <optional>
#include <utility>

namespace hka {

namespace {

CellSet intersect(const CellSet& a, const CellSet& b) {
  CellSet out;
  out.clipped = a.clipped || b.clipped;
  for (const TwoCell& c : a.cells) {
    if (b.cells.count(c)) out.cells.insert(c);
  }
  return out;
}

// forward-then-backward shape: z = h . k~ with h, k forward edge paths
std::optional<std::pair<std::vector<int>, std::vector<int>>> valley_split(
    const ZigZag& z) {
  std::vector<int> fwd, bwd;
  std::size_t k = 0;
  while (k < z.word.size() && !z.word[k].inv) fwd.push_back(z.word[k++].gen);
  while (k < z.word.size() && z.word[k].inv) bwd.push_back(z.word[k++].gen);
  if (k != z.word.size()) return std::nullopt;
  std::reverse(bwd.begin(), bwd.end());
  return std::pair{fwd, bwd};
}

ZigZag path_zz(const PolygraphSpec& p, const std::vector<int>& edges,
               Obj start) {
  ZigZag z;
  z.start = start;
  for (int g : edges) z.word.push_back({g, false});
  zz_tgt(p, z);  // composability check
  return z;
}

}  // namespace

std::string filler_kind_name(FillerKind k) {
  switch (k) {
    case FillerKind::Local: return "local";
    case FillerKind::LeftSemi: return "left-semi";
    case FillerKind::RightSemi: return "right-semi";
    case FillerKind::Confluence: return "confluence";
    case FillerKind::ChurchRosser: return "church-rosser";
  }
  throw IndexError("bad filler kind");
}

FillerKind parse_filler_kind(const std::string& name) {
  if (name == "local") return FillerKind::Local;
  if (name == "left-semi") return FillerKind::LeftSemi;
  if (name == "right-semi") return FillerKind::RightSemi;
  if (name == "confluence") return FillerKind::Confluence;
  if (name == "church-rosser") return FillerKind::ChurchRosser;
  throw ParseError("unknown filler kind: " + name);
}

CoherenceEngine::CoherenceEngine(const KpgModel& m, Mutant mutant)
    : m_(m), mutant_(mutant) {
  std::vector<int> all(m.spec().gens1.size());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = static_cast<int>(k);
  psi_ = m_.lift_edges(all);
  phi_ = m_.conv(0, psi_);
}

CoherenceEngine::CoherenceEngine(const KpgModel& m,
                                 const std::vector<int>& phi_edges,
                                 const std::vector<int>& psi_edges,
                                 Mutant mutant)
    : m_(m), mutant_(mutant) {
  psi_ = m_.lift_edges(psi_edges);
  phi_ = m_.conv(0, m_.lift_edges(phi_edges));
}

CellSet CoherenceEngine::valleys() const {
  return m_.mul(0, m_.star(0, psi_), m_.star(0, phi_));
}

CellSet CoherenceEngine::peaks() const {
  return m_.mul(0, m_.star(0, phi_), m_.star(0, psi_));
}

CellSet CoherenceEngine::dia1(const CellSet& a, const CellSet& p) const {
  return m_.dom(1, m_.mul(1, a, p));
}

CellSet CoherenceEngine::filler_rhs(FillerKind kind) const {
  switch (kind) {
    case FillerKind::Local: return m_.mul(0, phi_, psi_);
    case FillerKind::LeftSemi: return m_.mul(0, phi_, m_.star(0, psi_));
    case FillerKind::RightSemi: return m_.mul(0, m_.star(0, phi_), psi_);
    case FillerKind::Confluence: return peaks();
    case FillerKind::ChurchRosser: return m_.star(0, m_.add(phi_, psi_));
  }
  throw IndexError("bad filler kind");
}

FillerReport CoherenceEngine::is_filler(const CellSet& A,
                                        FillerKind kind) const {
  FillerReport rep;
  rep.kind = kind;
  CellSet v = valleys();
  CellSet lhs = dia1(A, v);
  CellSet rhs = filler_rhs(kind);
  rep.clipped = A.clipped || v.clipped || lhs.clipped || rhs.clipped;
  rep.holds = true;
  for (const TwoCell& c : rhs.cells) {
    if (lhs.cells.count(c)) {
      ++rep.covered;
    } else {
      rep.holds = false;
      rep.deficit.push_back(zz_show(m_.spec(), c.src));
    }
  }
  return rep;
}

CellSet CoherenceEngine::whisker_completion(const CellSet& A) const {
  if (mutant_ == Mutant::UnwhiskeredCompletion) return A;
  CellSet w = m_.star(0, m_.add(phi_, psi_));
  CellSet hat = m_.mul(0, m_.mul(0, w, A), w);
  if (!hat.clipped && !w.clipped) {
    // absorption: a completed set swallows further whiskering
    CellSet again = m_.mul(0, hat, w);
    if (!again.clipped && !m_.eq(again, hat)) {
      throw OracleMismatch("whisker completion is not absorbing");
    }
  }
  return hat;
}

std::vector<CellSet> CoherenceEngine::cr_inductive_sequence(
    const CellSet& hat_a_star, int kmax) const {
  CellSet v = valleys();
  CellSet aprime = m_.mul(0, m_.mul(1, hat_a_star, v), m_.star(0, phi_));
  CellSet steps = m_.add(phi_, psi_);
  std::vector<CellSet> seq{m_.unit(0)};
  for (int k = 1; k <= kmax; ++k) {
    seq.push_back(m_.mul(1, m_.mul(0, steps, seq.back()), aprime));
  }
  return seq;
}

FillerReport CoherenceEngine::verify_coherent_cr(const CellSet& A,
                                                 int kmax) const {
  CellSet s = m_.star(1, whisker_completion(A));
  FillerReport main = is_filler(s, FillerKind::ChurchRosser);
  CellSet v = valleys();
  CellSet steps = m_.add(phi_, psi_);
  auto seq = cr_inductive_sequence(s, kmax);
  for (int k = 0; k <= kmax; ++k) {
    const CellSet& ak = seq[k];
    // upper bounds stay valid on lower approximations when the bound is exact
    CellSet cod = m_.cod(1, ak);
    if (!v.clipped && !m_.leq(cod, v)) {
      throw OracleMismatch("inductive stage escapes the valley set");
    }
    CellSet pw = power(m_, 0, steps, k);
    CellSet dom = m_.dom(1, ak);
    if (!pw.clipped && !ak.clipped && !dom.clipped && !m_.leq(pw, dom)) {
      throw OracleMismatch("inductive stage misses a length-k zigzag");
    }
    if (!s.clipped && !ak.clipped && !m_.leq(ak, s)) {
      throw OracleMismatch("inductive stage leaves the completion closure");
    }
    CellSet bwd = m_.cod(1, m_.mul(1, pw, ak));
    if (!v.clipped && !m_.leq(bwd, v)) {
      throw OracleMismatch("backward diamond of a stage escapes the valleys");
    }
  }
  return main;
}

FillerReport CoherenceEngine::verify_semi_cr(const CellSet& A,
                                             bool left_semi) const {
  FillerReport premise = is_filler(
      A, left_semi ? FillerKind::LeftSemi : FillerKind::RightSemi);
  if (!premise.holds) {
    throw NotAFillerError("the given set is not a semi filler");
  }
  CellSet s = m_.star(1, whisker_completion(A));
  FillerReport conclusion = is_filler(s, FillerKind::ChurchRosser);
  if (!premise.clipped && !conclusion.clipped && !conclusion.holds) {
    throw OracleMismatch("semi filler without the Church-Rosser conclusion");
  }
  return conclusion;
}

bool CoherenceEngine::noetherian_0(const CellSet& x) const {
  CellSet p = m_.unit(0);
  for (;;) {
    CellSet next = intersect(p, m_.dom(0, m_.mul(0, x, p)));
    if (next.cells == p.cells) break;
    p = std::move(next);
  }
  return p.cells.empty();
}

NewmanReport CoherenceEngine::verify_coherent_newman(const CellSet& A) const {
  NewmanReport rep;
  rep.psi_noetherian = noetherian_0(psi_);
  if (!rep.psi_noetherian) {
    throw HypothesisFailedError("forward steps are 0-Noetherian");
  }
  rep.phi_wellfounded = noetherian_0(m_.conv(0, phi_));
  if (!rep.phi_wellfounded) {
    throw HypothesisFailedError("reversed steps are 0-well-founded");
  }
  CellSet s = m_.star(1, whisker_completion(A));
  rep.local = is_filler(s, FillerKind::Local);
  rep.conclusion = is_filler(s, FillerKind::Confluence);

  // internal fixpoint: the largest 0-subidentity r with
  //   <s>_1(psi* phi*) >= phi* r psi*
  // computed atom by atom (the property is union-closed)
  CellSet lhs = dia1(s, valleys());
  CellSet sphi = m_.star(0, phi_), spsi = m_.star(0, psi_);
  auto rp = [&](const CellSet& p) {
    return m_.leq(m_.mul(0, m_.mul(0, sphi, p), spsi), lhs);
  };
  CellSet r;
  for (const TwoCell& atom : m_.unit(0).cells) {
    CellSet p;
    p.cells.insert(atom);
    if (rp(p)) {
      r.cells.insert(atom);
      rep.r_objects.push_back(m_.spec().objects.at(atom.src.start));
    }
  }
  if (!r.cells.empty() && !rp(r)) {
    throw OracleMismatch("reachability property is not union-closed here");
  }
  rep.r_full = (r.cells == m_.unit(0).cells);
  bool anything_clipped = rep.conclusion.clipped || sphi.clipped ||
                          spsi.clipped || lhs.clipped;
  if (!anything_clipped && rep.conclusion.holds != rep.r_full) {
    throw OracleMismatch("fixpoint and diamond verdicts disagree");
  }
  return rep;
}

// ---- constructive pavings ----

int CoherenceEngine::find_filler(const ZigZag& span) const {
  const auto& ext = m_.spec().extension;
  for (std::size_t k = 0; k < ext.size(); ++k) {
    if (zigzag_reduce(ext[k].src) == span) return static_cast<int>(k);
  }
  return -1;
}

namespace {

// tile-list concatenation with a boundary check, no truncation
TwoCell seq_cells(const KpgModel& m, TwoCell a, const TwoCell& b) {
  if (m.cell_tgt1(a) != b.src) throw ChainError("pavement does not chain");
  a.tiles.insert(a.tiles.end(), b.tiles.begin(), b.tiles.end());
  return a;
}

TwoCell whisker(const KpgModel& m, const ZigZag& l, const TwoCell& c,
                const ZigZag& r) {
  const PolygraphSpec& p = m.spec();
  TwoCell out;
  out.src = zz_concat(p, zz_concat(p, l, c.src), r);
  for (const Tile& t : c.tiles) {
    out.tiles.push_back(
        {zz_concat(p, l, t.left), t.gamma, zz_concat(p, t.right, r)});
  }
  return out;
}

}  // namespace

TwoCell CoherenceEngine::pave_span(const std::vector<int>& f,
                                   const std::vector<int>& g, Obj apex,
                                   long& fuel) const {
  if (fuel-- <= 0) throw FuelExhaustedError("paving ran out of fuel");
  const PolygraphSpec& p = m_.spec();
  if (f.empty()) {
    return m_.identity_cell(path_zz(p, g, apex));
  }
  if (g.empty()) {
    return m_.identity_cell(zz_invert(p, path_zz(p, f, apex)));
  }
  int f1 = f.front(), g1 = g.front();
  std::vector<int> f2(f.begin() + 1, f.end());
  std::vector<int> g2(g.begin() + 1, g.end());
  if (f1 == g1) {
    return pave_span(f2, g2, p.gens1.at(f1).tgt, fuel);
  }
  ZigZag span1;
  span1.start = p.gens1.at(f1).tgt;
  span1.word = {{f1, true}, {g1, false}};
  int idx = find_filler(span1);
  if (idx < 0) throw MissingFillerError(zz_show(p, span1));
  const CellGen& gamma = p.extension[idx];
  ZigZag gtgt = zigzag_reduce(gamma.tgt);
  auto split = valley_split(gtgt);
  if (!split) throw NotAFillerError("filler " + gamma.name +
                                    " does not land on a valley");
  const auto& [h, kpath] = *split;
  Obj tf1 = p.gens1.at(f1).tgt, tg1 = p.gens1.at(g1).tgt;
  ZigZag f2inv = zz_invert(p, path_zz(p, f2, tf1));
  ZigZag g2z = path_zz(p, g2, tg1);
  // step 1: the local filler, whiskered into the span
  TwoCell stage1 = whisker(m_, f2inv, m_.tile_cell({span1.start, {}}, idx,
                                                   {zz_tgt(p, span1), {}}),
                           g2z);
  // step 2: join the f-remainder against the left valley leg
  TwoCell beta = pave_span(f2, h, tf1, fuel);
  auto bsplit = valley_split(m_.cell_tgt1(beta));
  if (!bsplit) throw OracleMismatch("inner pavement missed the valley");
  const auto& [u, v] = *bsplit;
  ZigZag kz = path_zz(p, kpath, tg1);
  ZigZag tail = zz_concat(p, zz_invert(p, kz), g2z);
  TwoCell stage2 = whisker(m_, {f2inv.start, {}}, beta, tail);
  // step 3: join the g-remainder against the accumulated right leg
  std::vector<int> kv = kpath;
  kv.insert(kv.end(), v.begin(), v.end());
  TwoCell gammacell = pave_span(kv, g2, tg1, fuel);
  ZigZag uz = path_zz(p, u, f2inv.start);
  TwoCell stage3 = whisker(m_, uz, gammacell, {zz_tgt(p, g2z), {}});
  return seq_cells(m_, seq_cells(m_, stage1, stage2), stage3);
}

TwoCell CoherenceEngine::pave_zz(const ZigZag& zin, long& fuel) const {
  if (fuel-- <= 0) throw FuelExhaustedError("paving ran out of fuel");
  const PolygraphSpec& p = m_.spec();
  ZigZag z = zigzag_reduce(zin);
  if (z.word.empty()) return m_.identity_cell(z);
  ZigZag w = z;
  SignedGen last = w.word.back();
  w.word.pop_back();
  TwoCell c1 = pave_zz(w, fuel);
  auto split = valley_split(m_.cell_tgt1(c1));
  if (!split) throw OracleMismatch("pavement target is not a valley");
  const auto& [pp, qq] = *split;
  ZigZag lastz;
  lastz.start = sg_src(p, last);
  lastz.word = {last};
  TwoCell c1w = whisker(m_, {z.start, {}}, c1, lastz);
  if (last.inv) return c1w;  // valley just grows its backward leg
  // forward step after the backward leg: resolve the new peak q~ . g
  TwoCell c2 = pave_span(qq, {last.gen}, zz_tgt(p, w), fuel);
  ZigZag ppz = path_zz(p, pp, z.start);
  TwoCell c2w = whisker(m_, ppz, c2, {p.gens1.at(last.gen).tgt, {}});
  return seq_cells(m_, c1w, c2w);
}

PavingCertificate CoherenceEngine::pave_zigzag(const ZigZag& z,
                                               int fuel) const {
  long f = fuel;
  PavingCertificate cert;
  cert.subject = zigzag_reduce(z);
  cert.cell = m_.normalize_cell(pave_zz(cert.subject, f));
  auto split = valley_split(m_.cell_tgt1(cert.cell));
  if (!split) throw OracleMismatch("pavement target is not a valley");
  cert.forward = Path{m_.cell_tgt1(cert.cell).start, split->first};
  ZigZag t = m_.cell_tgt1(cert.cell);
  cert.backward = Path{zz_tgt(m_.spec(), t), split->second};
  if (!verify_certificate(cert)) {
    throw OracleMismatch("freshly built certificate failed verification");
  }
  return cert;
}

PavingCertificate CoherenceEngine::pave_branching_newman(
    const std::vector<int>& f, const std::vector<int>& g, int fuel) const {
  const PolygraphSpec& p = m_.spec();
  if (f.empty() && g.empty()) throw IndexError("empty branching has no apex");
  Obj apex = f.empty() ? p.gens1.at(g.front()).src : p.gens1.at(f.front()).src;
  ZigZag fz = path_zz(p, f, apex);
  ZigZag gz = path_zz(p, g, apex);
  long fu = fuel;
  PavingCertificate cert;
  cert.subject = zz_concat(p, zz_invert(p, fz), gz);
  cert.cell = m_.normalize_cell(pave_span(f, g, apex, fu));
  ZigZag t = m_.cell_tgt1(cert.cell);
  auto split = valley_split(t);
  if (!split) throw OracleMismatch("pavement target is not a valley");
  cert.forward = Path{t.start, split->first};
  cert.backward = Path{zz_tgt(p, t), split->second};
  if (!verify_certificate(cert)) {
    throw OracleMismatch("freshly built certificate failed verification");
  }
  return cert;
}

bool CoherenceEngine::verify_certificate(const PavingCertificate& cert) const {
  const PolygraphSpec& p = m_.spec();
  try {
    if (zigzag_reduce(cert.subject) != cert.cell.src) return false;
    ZigZag t = m_.cell_tgt1(cert.cell);  // also validates the tile chain
    ZigZag fwd = zz_of_path(cert.forward);
    ZigZag bwd = zz_of_path(cert.backward);
    path_tgt(p, cert.forward);
    path_tgt(p, cert.backward);
    if (zz_concat(p, fwd, zz_invert(p, bwd)) != t) return false;
  } catch (const Error&) {
    // broken chains, dangling indexes etc. are verification failures, not
    // internal errors: the certificate is untrusted input here
    return false;
  }
  for (const Tile& tl : cert.cell.tiles) {
    if (tl.gamma < 0 ||
        tl.gamma >= static_cast<int>(p.extension.size())) {
      return false;
    }
  }
  return true;
}

bool CoherenceEngine::zigzag_paves(const ZigZag& z) const {
  const PolygraphSpec& p = m_.spec();
  int maxlen = m_.bounds().max_len, maxtiles = m_.bounds().max_tiles;
  if (static_cast<int>(z.word.size()) > maxlen) return false;
  if (valley_split(z)) return true;
  std::set<ZigZag> seen{z};
  std::deque<std::pair<ZigZag, int>> queue{{z, 0}};
  while (!queue.empty()) {
    auto [cur, depth] = queue.front();
    queue.pop_front();
    if (depth >= maxtiles) continue;
    for (std::size_t g = 0; g < p.extension.size(); ++g) {
      ZigZag gs = zigzag_reduce(p.extension[g].src);
      ZigZag gt = zigzag_reduce(p.extension[g].tgt);
      for (const ZigZag& l : m_.all_zigzags()) {
        if (l.start != cur.start) continue;
        if (zz_tgt(p, l) != gs.start) continue;
        // solve l . gs . r == cur for the right whisker
        ZigZag r = zz_concat(p, zz_invert(p, zz_concat(p, l, gs)), cur);
        if (static_cast<int>(r.word.size()) > maxlen) continue;
        ZigZag next = zz_concat(p, zz_concat(p, l, gt), r);
        if (static_cast<int>(next.word.size()) > maxlen) continue;
        if (valley_split(next)) return true;
        if (seen.insert(next).second) queue.push_back({next, depth + 1});
      }
    }
  }
  return false;
}

GammaBridgeReport CoherenceEngine::gamma_bridge(FillerKind kind) const {
  GammaBridgeReport rep;
  rep.kind = kind;
  CellSet s = m_.star(1, m_.gamma_steps());
  rep.algebraic = is_filler(s, kind);
  rep.combinatorial = true;
  for (const TwoCell& c : filler_rhs(kind).cells) {
    if (!zigzag_paves(c.src)) {
      rep.combinatorial = false;
      break;
    }
  }
  if (rep.combinatorial != rep.algebraic.holds) {
    throw OracleMismatch("combinatorial and algebraic filler verdicts differ");
  }
  return rep;
}

CellSet CoherenceEngine::gamma_cells() const {
  const PolygraphSpec& p = m_.spec();
  CellSet out;
  for (std::size_t g = 0; g < p.extension.size(); ++g) {
    ZigZag gs = zigzag_reduce(p.extension[g].src);
    out = m_.add(out, m_.single(m_.tile_cell({gs.start, {}},
                                             static_cast<int>(g),
                                             {zz_tgt(p, gs), {}})));
  }
  return out;
}

// ---- presentation-level helpers ----

ArsFillerReport generate_fillers(const PolygraphSpec& p, int fuel) {
  ArsFillerReport rep;
  for (const ArsBranching& br : local_branchings(p)) {
    if (br.a == br.b) continue;
    for (auto [x, y] : {std::pair{br.a, br.b}, std::pair{br.b, br.a}}) {
      NormalizeResult nx = normalize(p, p.gens1[x].tgt, fuel);
      NormalizeResult ny = normalize(p, p.gens1[y].tgt, fuel);
      if (nx.exhausted || ny.exhausted || nx.nf != ny.nf) {
        rep.unjoinable.push_back({br.source, x, y});
        continue;
      }
      CellGen cell;
      cell.name = "jn_" + p.gens1[x].name + "_" + p.gens1[y].name;
      cell.src.start = p.gens1[x].tgt;
      cell.src.word = {{x, true}, {y, false}};
      cell.tgt.start = p.gens1[x].tgt;
      for (int s : nx.steps) cell.tgt.word.push_back({s, false});
      for (auto it = ny.steps.rbegin(); it != ny.steps.rend(); ++it) {
        cell.tgt.word.push_back({*it, true});
      }
      cell.tgt = zigzag_reduce(cell.tgt);
      rep.cells.push_back(std::move(cell));
    }
  }
  return rep;
}

std::vector<CriticalJoin> generate_critical_joins(const PolygraphSpec& p,
                                                  int fuel) {
  std::vector<CriticalJoin> out;
  for (const StringBranching& br : critical_branchings(p)) {
    CriticalJoin j;
    j.branching = br;
    j.left = normalize(p, apply_step(p, br.word, br.a), fuel);
    j.right = normalize(p, apply_step(p, br.word, br.b), fuel);
    j.joinable =
        !j.left.exhausted && !j.right.exhausted && j.left.nf == j.right.nf;
    out.push_back(std::move(j));
  }
  return out;
}

CoherenceSummary check_polygraph_coherence(const PolygraphSpec& p,
                                           TruncationBounds bounds,
                                           Mutant mutant) {
  KpgModel m(p, bounds, mutant);
  CoherenceEngine eng(m, mutant);
  CoherenceSummary sum;
  try {
    sum.terminating = is_terminating(p);
  } catch (const FuelExhaustedError&) {
    sum.terminating = false;
  }
  for (FillerKind k : {FillerKind::Local, FillerKind::Confluence,
                       FillerKind::ChurchRosser}) {
    sum.bridges.push_back(eng.gamma_bridge(k));
  }
  try {
    sum.newman = eng.verify_coherent_newman(eng.gamma_cells());
  } catch (const HypothesisFailedError& e) {
    sum.newman_failure = e.hypothesis;
  }
  return sum;
}

}  // namespace hka
