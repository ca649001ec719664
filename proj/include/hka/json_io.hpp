#pragma once

// File formats.
//
// Presentation files:
//   { "dim": 1|2, "objects": [...],
//     "gens1": [{"name","src","tgt"}, ...],
//     "gens2": [{"name","lhs","rhs"}, ...],          // dim 2 rules
//     "extension": [{"name","src_zigzag","tgt_zigzag"}, ...],
//     "orders": {"kind": "length-lex"|"weight", "weights": {...},
//                "precedence": [...]} }
// Paths are arrays of edge names; zigzags additionally allow "f-" for a
// reversed letter and the object form {"at": obj, "word": [...]} when empty.
//
// Relation files: { "carrier": n, "relations": {"name": [[s,d], ...], ...} }
//
// All emitters use ordered_json so output is byte-stable.

#include <map>
#include <string>

#include "json.hpp"

#include "hka/coherence.hpp"
#include "hka/law_report.hpp"
#include "hka/polygraph.hpp"
#include "hka/relation.hpp"

namespace hka {

using ojson = nlohmann::ordered_json;

PolygraphSpec polygraph_from_json(const nlohmann::json& j);
PolygraphSpec load_polygraph(const std::string& path);

struct RelInput {
  int carrier = 0;
  std::map<std::string, Relation> relations;
};
RelInput relations_from_json(const nlohmann::json& j);
RelInput load_relations(const std::string& path);

/// Dotted zigzag notation, e.g. "f-.g" or "1_a".
ZigZag parse_zigzag(const PolygraphSpec& p, const std::string& text);

ojson zigzag_json(const PolygraphSpec& p, const ZigZag& z);
ZigZag zigzag_from_json(const PolygraphSpec& p, const nlohmann::json& j);

ojson law_report_json(const LawReport& r);
ojson filler_report_json(const FillerReport& r);
ojson newman_report_json(const NewmanReport& r);
ojson coherence_summary_json(const PolygraphSpec& p,
                             const CoherenceSummary& s);
ojson bounds_json(const TruncationBounds& b);

ojson certificate_json(const PolygraphSpec& p, const PavingCertificate& c);
PavingCertificate certificate_from_json(const PolygraphSpec& p,
                                        const nlohmann::json& j);

}  // namespace hka
