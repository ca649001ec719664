#include "doctest.h"

#include "hka/laws.hpp"
#include "hka/rel_adapter.hpp"

using namespace hka;

namespace {

std::vector<LawReport> all_suites(RelAdapter& m, const LawOptions& opt) {
  return {check_dioid(m, 0, opt),
          check_domain_axioms(m, 0, opt),
          check_antidomain_axioms(m, 0, opt),
          check_star_axioms(m, 0, -1, opt),
          check_modal_duality(m, 0, opt),
          check_converse_axioms(m, 0, opt)};
}

}  // namespace

TEST_CASE("carrier 2 is decided exhaustively and passes everything") {
  RelAdapter m(2);
  for (const auto& rep : all_suites(m, {})) {
    INFO(rep.law);
    CHECK(rep.passed());
    CHECK(rep.mode == "exhaustive");
    CHECK(rep.samples > 0);
  }
}

TEST_CASE("carrier 5 is sampled and passes everything") {
  RelAdapter m(5);
  LawOptions opt;
  opt.samples = 250;
  for (const auto& rep : all_suites(m, opt)) {
    INFO(rep.law);
    CHECK(rep.passed());
    CHECK(rep.mode == "sampled");
    CHECK(rep.samples >= 250);  // every rule contributes
  }
}

TEST_CASE("antidomain mutant is caught by the antidomain suite") {
  RelAdapter m(2, Mutant::AdomComplement);
  auto rep = check_antidomain_axioms(m, 0);
  CHECK(!rep.passed());
  CHECK(!rep.failures.empty());
  CHECK(!rep.failures[0].inputs.empty());
}

TEST_CASE("star mutant is caught by the star suite") {
  RelAdapter m(2, Mutant::StarNoUnit);
  auto rep = check_star_axioms(m, 0);
  CHECK(!rep.passed());
  bool reflexive_broken = false;
  for (const auto& f : rep.failures) {
    if (f.which == "star-reflexive") reflexive_broken = true;
  }
  CHECK(reflexive_broken);
}

TEST_CASE("failure reports carry readable counterexamples") {
  RelAdapter m(2, Mutant::StarNoUnit);
  auto rep = check_star_axioms(m, 0);
  REQUIRE(!rep.failures.empty());
  const auto& f = rep.failures.front();
  CHECK(f.lhs != f.rhs);
  CHECK(f.which != "");
}
