// Thin python surface: everything goes in and out as JSON text, so the
// bindings stay stable while the C++ types evolve.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hka/coherence.hpp"
#include "hka/dot.hpp"
#include "hka/json_io.hpp"
#include "hka/laws.hpp"
#include "hka/rel_adapter.hpp"

namespace py = pybind11;
using namespace hka;

namespace {

PolygraphSpec parse_spec(const std::string& text) {
  return polygraph_from_json(nlohmann::json::parse(text));
}

template <class M>
ojson suites_json(M& m, const LawOptions& opt) {
  ojson out = ojson::array();
  for (int i = 0; i < m.dims(); ++i) {
    out.push_back(law_report_json(check_dioid(m, i, opt)));
    out.push_back(law_report_json(check_domain_axioms(m, i, opt)));
    out.push_back(law_report_json(check_antidomain_axioms(m, i, opt)));
    out.push_back(law_report_json(check_modal_duality(m, i, opt)));
  }
  if (m.dims() >= 2) {
    out.push_back(law_report_json(check_interchange(m, 0, 1, opt)));
    out.push_back(law_report_json(check_globularity(m, 0, 1, opt)));
    out.push_back(law_report_json(check_star_axioms(m, 0, 1, opt)));
    out.push_back(law_report_json(check_star_axioms(m, 1, -1, opt)));
  } else {
    out.push_back(law_report_json(check_star_axioms(m, 0, -1, opt)));
  }
  out.push_back(law_report_json(check_converse_axioms(m, 0, opt)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_hka, mod) {
  mod.doc() = "higher globular modal Kleene algebra toolkit";

  mod.def("validate_spec", [](const std::string& text) {
    PolygraphSpec p = parse_spec(text);
    validate(p);
    return true;
  });

  mod.def(
      "check_laws_kpg",
      [](const std::string& text, int max_len, int max_tiles, long budget,
         uint64_t seed, const std::string& mutant) {
        PolygraphSpec p = parse_spec(text);
        validate(p);
        KpgModel m(p, {max_len, max_tiles}, parse_mutant(mutant));
        LawOptions opt;
        opt.samples = budget;
        opt.seed = seed;
        return suites_json(m, opt).dump();
      },
      py::arg("spec"), py::arg("max_len") = 5, py::arg("max_tiles") = 4,
      py::arg("budget") = 100, py::arg("seed") = 0x51ee7ULL,
      py::arg("mutant") = "");

  mod.def(
      "check_laws_rel",
      [](int carrier, long budget, uint64_t seed, const std::string& mutant) {
        RelAdapter m(carrier, parse_mutant(mutant));
        LawOptions opt;
        opt.samples = budget;
        opt.seed = seed;
        return suites_json(m, opt).dump();
      },
      py::arg("carrier") = 2, py::arg("budget") = 200,
      py::arg("seed") = 0x51ee7ULL, py::arg("mutant") = "");

  mod.def(
      "analyze",
      [](const std::string& text, int max_len, int max_tiles) {
        PolygraphSpec p = parse_spec(text);
        validate(p);
        return coherence_summary_json(
                   p, check_polygraph_coherence(p, {max_len, max_tiles}))
            .dump();
      },
      py::arg("spec"), py::arg("max_len") = 5, py::arg("max_tiles") = 4);

  mod.def(
      "pave",
      [](const std::string& text, const std::string& zigzag, int max_len,
         int max_tiles, int fuel) {
        PolygraphSpec p = parse_spec(text);
        validate(p);
        KpgModel m(p, {max_len, max_tiles});
        CoherenceEngine eng(m);
        PavingCertificate cert = eng.pave_zigzag(parse_zigzag(p, zigzag), fuel);
        if (!eng.verify_certificate(cert)) {
          throw OracleMismatch("certificate failed re-verification");
        }
        return certificate_json(p, cert).dump();
      },
      py::arg("spec"), py::arg("zigzag"), py::arg("max_len") = 5,
      py::arg("max_tiles") = 4, py::arg("fuel") = 10000);

  mod.def("spec_dot", [](const std::string& text) {
    PolygraphSpec p = parse_spec(text);
    validate(p);
    return polygraph_dot(p);
  });

  py::register_exception<MissingFillerError>(mod, "MissingFillerError");
  py::register_exception<HypothesisFailedError>(mod, "HypothesisFailedError");
  py::register_exception<ParseError>(mod, "SpecParseError");
}
