// Command-line front end: validate presentations, run law suites, analyze
// coherence, emit paving certificates, export DOT diagrams.
//
// Exit codes: 0 success, 1 parse/I-O, 2 validation (or undetermined under
// --fail-on-clipped), 3 law failure, 4 internal mismatch, 5 missing filler.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hka/coherence.hpp"
#include "hka/dot.hpp"
#include "hka/json_io.hpp"
#include "hka/laws.hpp"
#include "hka/rel_adapter.hpp"

namespace {

using namespace hka;

struct RunConfig {
  std::string input;
  int bounds_l = 6;
  int bounds_t = 4;
  int fuel = 10000;
  long budget = 500;
  uint64_t seed = 0x51ee7ULL;
  std::string format = "text";
  bool fail_on_clipped = false;
  std::string mutate;
  std::string model = "kpg";
  std::string zigzag;
  std::string branching;
  std::string certificate;
  std::string out;
};

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("input", cfg.input, "input file")->required();
  cmd->add_option("--bounds-l", cfg.bounds_l, "max zigzag length");
  cmd->add_option("--bounds-t", cfg.bounds_t, "max tiles per 2-cell");
  cmd->add_option("--fuel", cfg.fuel, "recursion/normalization fuel");
  cmd->add_option("--budget", cfg.budget, "sample budget for law suites");
  cmd->add_option("--seed", cfg.seed, "RNG seed");
  cmd->add_option("--format", cfg.format, "json | text | dot")
      ->check(CLI::IsMember({"json", "text", "dot"}));
  cmd->add_flag("--fail-on-clipped", cfg.fail_on_clipped,
                "treat clipped verdicts as failures");
  cmd->add_option("--mutate", cfg.mutate, "law-breaking switch (test hook)");
}

void emit(const RunConfig& cfg, const ojson& j, const std::string& text) {
  if (cfg.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

int cmd_validate(const RunConfig& cfg) {
  PolygraphSpec p;
  try {
    p = load_polygraph(cfg.input);
    validate(p);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    ojson j;
    j["valid"] = false;
    j["violation"] = e.what();
    emit(cfg, j, std::string("invalid: ") + e.what() + "\n");
    return 2;
  }
  ojson j;
  j["valid"] = true;
  j["dim"] = p.dim;
  j["objects"] = p.objects.size();
  j["gens1"] = p.gens1.size();
  j["gens2"] = p.gens2.size();
  j["extension"] = p.extension.size();
  std::ostringstream text;
  text << "valid: dim " << p.dim << ", " << p.objects.size() << " objects, "
       << p.gens1.size() << " edges, " << p.gens2.size() << " rules, "
       << p.extension.size() << " extension cells\n";
  emit(cfg, j, text.str());
  return 0;
}

template <class M>
std::vector<LawReport> run_suites(M& m, const LawOptions& opt) {
  std::vector<LawReport> reps;
  for (int i = 0; i < m.dims(); ++i) {
    reps.push_back(check_dioid(m, i, opt));
    reps.push_back(check_domain_axioms(m, i, opt));
    reps.push_back(check_antidomain_axioms(m, i, opt));
    reps.push_back(check_modal_duality(m, i, opt));
  }
  if (m.dims() >= 2) {
    reps.push_back(check_interchange(m, 0, 1, opt));
    reps.push_back(check_globularity(m, 0, 1, opt));
    reps.push_back(check_star_axioms(m, 0, 1, opt));
    reps.push_back(check_star_axioms(m, 1, -1, opt));
  } else {
    reps.push_back(check_star_axioms(m, 0, -1, opt));
  }
  reps.push_back(check_converse_axioms(m, 0, opt));
  return reps;
}

int cmd_laws(const RunConfig& cfg) {
  Mutant mutant = parse_mutant(cfg.mutate);
  LawOptions opt;
  opt.samples = cfg.budget;
  opt.seed = cfg.seed;
  std::vector<LawReport> reps;
  if (cfg.model == "rel") {
    RelInput in = load_relations(cfg.input);
    RelAdapter m(in.carrier, mutant);
    reps = run_suites(m, opt);
  } else {
    PolygraphSpec p = load_polygraph(cfg.input);
    validate(p);
    KpgModel m(p, {cfg.bounds_l, cfg.bounds_t}, mutant);
    reps = run_suites(m, opt);
  }
  bool all_pass = true;
  ojson out = ojson::array();
  std::ostringstream text;
  for (const auto& r : reps) {
    all_pass = all_pass && r.passed();
    out.push_back(law_report_json(r));
    text << r.law << " [";
    for (std::size_t k = 0; k < r.dims.size(); ++k) {
      text << (k ? "," : "") << r.dims[k];
    }
    text << "] " << r.mode << ": " << (r.passed() ? "pass" : "FAIL") << " ("
         << r.samples << " checked, " << r.skipped << " skipped)\n";
    for (const auto& f : r.failures) {
      text << "  " << f.which << ": " << f.lhs << " vs " << f.rhs << "\n";
    }
  }
  emit(cfg, out, text.str());
  return all_pass ? 0 : 3;
}

int cmd_analyze(const RunConfig& cfg) {
  PolygraphSpec p = load_polygraph(cfg.input);
  validate(p);
  ojson j;
  std::ostringstream text;
  bool clipped = false;
  if (p.dim == 1) {
    CoherenceSummary s = check_polygraph_coherence(
        p, {cfg.bounds_l, cfg.bounds_t}, parse_mutant(cfg.mutate));
    j = coherence_summary_json(p, s);
    j["branchings"] = local_branchings(p).size();
    text << "termination: " << (s.terminating ? "yes" : "no") << "\n";
    text << "local branchings: " << local_branchings(p).size() << "\n";
    for (const auto& b : s.bridges) {
      clipped = clipped || b.algebraic.clipped;
      text << filler_kind_name(b.kind) << ": "
           << (b.algebraic.holds
                   ? "confirmed"
                   : (b.algebraic.clipped ? "undetermined" : "refuted"))
           << (b.algebraic.clipped ? " (clipped)" : "") << "\n";
    }
    if (s.newman) {
      clipped = clipped || s.newman->conclusion.clipped;
      text << "Newman: "
           << (s.newman->conclusion.holds ? "confirmed" : "undetermined")
           << (s.newman->r_full ? ", fixpoint full" : "") << "\n";
      bool refuted = false;
      for (const auto& b : s.bridges) {
        refuted = refuted || (!b.algebraic.holds && !b.algebraic.clipped);
      }
      if (refuted) return 4;
    } else {
      text << "Newman: hypotheses unmet (" << s.newman_failure << ")\n";
    }
  } else {
    bool term = false;
    std::string term_note;
    try {
      term = is_terminating(p);
    } catch (const FuelExhaustedError&) {
      term_note = "inconclusive";
    }
    auto joins = generate_critical_joins(p, cfg.fuel);
    j["terminating"] = term;
    if (!term_note.empty()) j["termination_note"] = term_note;
    j["critical_branchings"] = joins.size();
    auto& jj = j["joins"] = ojson::array();
    bool all_join = true;
    for (const auto& cj : joins) {
      ojson e;
      e["word"] = path_show(p, cj.branching.word);
      e["joinable"] = cj.joinable;
      jj.push_back(std::move(e));
      all_join = all_join && cj.joinable;
    }
    text << "termination: "
         << (term_note.empty() ? (term ? "yes" : "no") : term_note) << "\n";
    text << "critical branchings: " << joins.size()
         << (all_join ? ", all joinable" : ", some unjoinable") << "\n";
  }
  emit(cfg, j, text.str());
  if (cfg.fail_on_clipped && clipped) {
    std::cerr << "undetermined: truncation clipped a verdict\n";
    return 2;
  }
  return 0;
}

std::vector<int> parse_edge_list(const PolygraphSpec& p,
                                 const std::string& text) {
  std::vector<int> edges;
  std::istringstream in(text);
  std::string piece;
  while (std::getline(in, piece, '.')) {
    int g = p.gen1_index(piece);
    if (g < 0) throw ParseError("unknown edge: " + piece);
    edges.push_back(g);
  }
  return edges;
}

int cmd_pave(const RunConfig& cfg) {
  PolygraphSpec p = load_polygraph(cfg.input);
  validate(p);
  KpgModel m(p, {cfg.bounds_l, cfg.bounds_t});
  CoherenceEngine eng(m);
  PavingCertificate cert;
  if (!cfg.zigzag.empty()) {
    cert = eng.pave_zigzag(parse_zigzag(p, cfg.zigzag), cfg.fuel);
  } else {
    auto semi = cfg.branching.find(';');
    if (semi == std::string::npos) {
      throw ParseError("branching literal wants 'f.h;g.k'");
    }
    cert = eng.pave_branching_newman(
        parse_edge_list(p, cfg.branching.substr(0, semi)),
        parse_edge_list(p, cfg.branching.substr(semi + 1)), cfg.fuel);
  }
  if (!eng.verify_certificate(cert)) {
    throw OracleMismatch("emitted certificate failed re-verification");
  }
  ojson j = certificate_json(p, cert);
  if (!cfg.out.empty()) {
    std::ofstream f(cfg.out);
    f << j.dump(2) << "\n";
    if (!f) {
      std::cerr << "cannot write " << cfg.out << "\n";
      return 1;
    }
  }
  std::ostringstream text;
  text << "paved " << zz_show(p, cert.subject) << " with "
       << cert.cell.tiles.size() << " tiles down to "
       << path_show(p, cert.forward) << " . "
       << path_show(p, cert.backward) << "~\n";
  emit(cfg, j, text.str());
  return 0;
}

int cmd_export_dot(const RunConfig& cfg) {
  PolygraphSpec p = load_polygraph(cfg.input);
  validate(p);
  if (!cfg.certificate.empty()) {
    std::ifstream f(cfg.certificate);
    if (!f) {
      std::cerr << "cannot open " << cfg.certificate << "\n";
      return 1;
    }
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(f);
    } catch (const nlohmann::json::exception& e) {
      std::cerr << "parse error: " << e.what() << "\n";
      return 1;
    }
    std::cout << certificate_dot(p, certificate_from_json(p, j));
  } else {
    std::cout << polygraph_dot(p);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"higher globular modal Kleene algebra toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* validate_cmd =
      app.add_subcommand("validate", "check a presentation file");
  add_common(validate_cmd, cfg);

  auto* laws_cmd = app.add_subcommand("laws", "run the law suites");
  add_common(laws_cmd, cfg);
  laws_cmd->add_option("--model", cfg.model, "rel | kpg")
      ->check(CLI::IsMember({"rel", "kpg"}));

  auto* analyze_cmd =
      app.add_subcommand("analyze", "termination, branchings, coherence");
  add_common(analyze_cmd, cfg);

  auto* pave_cmd = app.add_subcommand("pave", "emit a paving certificate");
  add_common(pave_cmd, cfg);
  pave_cmd->add_option("--zigzag", cfg.zigzag, "dotted zigzag, e.g. f-.g");
  pave_cmd->add_option("--branching", cfg.branching,
                       "two forward paths, e.g. f.h;g.k");
  pave_cmd->add_option("--out", cfg.out, "also write the certificate here");

  auto* dot_cmd = app.add_subcommand("export-dot", "DOT diagram export");
  add_common(dot_cmd, cfg);
  dot_cmd->add_option("--certificate", cfg.certificate,
                      "certificate file to draw instead of the graph");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate_cmd->parsed()) return cmd_validate(cfg);
    if (laws_cmd->parsed()) return cmd_laws(cfg);
    if (analyze_cmd->parsed()) return cmd_analyze(cfg);
    if (pave_cmd->parsed()) {
      if (cfg.zigzag.empty() == cfg.branching.empty()) {
        std::cerr << "pave wants exactly one of --zigzag / --branching\n";
        return 1;
      }
      return cmd_pave(cfg);
    }
    if (dot_cmd->parsed()) return cmd_export_dot(cfg);
  } catch (const MissingFillerError& e) {
    std::cerr << "missing filler: " << e.what() << "\n";
    return 5;
  } catch (const OracleMismatch& e) {
    std::cerr << "internal mismatch: " << e.what() << "\n";
    return 4;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
