#include "doctest.h"

#include "hka/coherence.hpp"
#include "hka/dot.hpp"
#include "hka/json_io.hpp"

using namespace hka;

namespace {

const std::string kFixtures = HKA_FIXTURES_DIR;

}  // namespace

TEST_CASE("presentation loading resolves names and validates endpoints") {
  PolygraphSpec p = load_polygraph(kFixtures + "/kite.json");
  CHECK(p.objects.size() == 5);
  CHECK(p.gens1.size() == 5);
  CHECK(p.extension.size() == 2);
  CHECK(p.gens1[p.gen1_index("k")].src == p.object_index("c"));
  CHECK(p.extension[0].src == parse_zigzag(p, "f-.g"));

  CHECK_THROWS_AS(load_polygraph(kFixtures + "/nonexistent.json"), ParseError);
  CHECK_THROWS_AS(
      polygraph_from_json(nlohmann::json::parse(
          R"({"dim":1,"objects":["a"],"gens1":[{"name":"f","src":"a","tgt":"zz"}]})")),
      ParseError);
  CHECK_THROWS_AS(
      polygraph_from_json(nlohmann::json::parse(R"({"objects":1})")),
      ParseError);
}

TEST_CASE("zigzag text round-trip") {
  PolygraphSpec p = load_polygraph(kFixtures + "/kite.json");
  for (std::string text : {"f-.g", "h.k-", "f.h.t", "1_d"}) {
    ZigZag z = parse_zigzag(p, text);
    CHECK(zz_show(p, z) == text);
    CHECK(zigzag_from_json(p, zigzag_json(p, z)) == z);
  }
  CHECK_THROWS_AS(parse_zigzag(p, "f.q"), ParseError);
  CHECK_THROWS_AS(parse_zigzag(p, "f.k"), ChainError);  // not composable
}

TEST_CASE("relation file loading") {
  RelInput in = load_relations(kFixtures + "/rel_small.json");
  CHECK(in.carrier == 2);
  CHECK(in.relations.at("step").contains(0, 1));
  CHECK(in.relations.at("full").count() == 4);
}

TEST_CASE("certificate JSON round-trip preserves verification") {
  PolygraphSpec p = load_polygraph(kFixtures + "/kite.json");
  KpgModel m(p, {5, 4});
  CoherenceEngine eng(m);
  PavingCertificate cert = eng.pave_zigzag(parse_zigzag(p, "k.t"));
  ojson j = certificate_json(p, cert);
  PavingCertificate back = certificate_from_json(p, j);
  CHECK(back.subject == cert.subject);
  CHECK(back.cell == cert.cell);
  CHECK(back.forward == cert.forward);
  CHECK(back.backward == cert.backward);
  CHECK(eng.verify_certificate(back));
  CHECK(certificate_json(p, back) == j);
}

TEST_CASE("emitters are byte-stable") {
  PolygraphSpec p = load_polygraph(kFixtures + "/kite.json");
  CoherenceSummary s1 = check_polygraph_coherence(p, {4, 3});
  CoherenceSummary s2 = check_polygraph_coherence(p, {4, 3});
  CHECK(coherence_summary_json(p, s1).dump() ==
        coherence_summary_json(p, s2).dump());
  CHECK(polygraph_dot(p) == polygraph_dot(p));
}

TEST_CASE("DOT export shapes") {
  PolygraphSpec p = load_polygraph(kFixtures + "/kite.json");
  std::string dot = polygraph_dot(p);
  for (const auto& o : p.objects) {
    CHECK(dot.find("\"" + o + "\"") != std::string::npos);
  }
  CHECK(dot.find("\"a\" -> \"b\" [label=\"f\"]") != std::string::npos);

  KpgModel m(p, {5, 4});
  CoherenceEngine eng(m);
  PavingCertificate cert = eng.pave_zigzag(parse_zigzag(p, "f-.g"));
  std::string cdot = certificate_dot(p, cert);
  // single tile: two layers and one labeled edge
  CHECK(cdot.find("s0 ->") != std::string::npos);
  CHECK(cdot.find("jn_f_g") != std::string::npos);
  CHECK(cdot.find("s2") == std::string::npos);
}
