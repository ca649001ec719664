#include "hka/json_io.hpp"

#include <fstream>
#include <sstream>

namespace hka {

namespace {

nlohmann::json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

int want_object(const PolygraphSpec& p, const std::string& name) {
  int k = p.object_index(name);
  if (k < 0) throw ParseError("unknown object: " + name);
  return k;
}

SignedGen parse_signed(const PolygraphSpec& p, std::string name) {
  bool inv = false;
  if (!name.empty() && name.back() == '-') {
    inv = true;
    name.pop_back();
  }
  int g = p.gen1_index(name);
  if (g < 0) throw ParseError("unknown edge: " + name);
  return {g, inv};
}

Path path_from_json(const PolygraphSpec& p, const nlohmann::json& j) {
  Path w;
  const nlohmann::json* word = &j;
  if (j.is_object()) {
    w.start = want_object(p, j.at("at").get<std::string>());
    word = &j.at("word");
  }
  bool first = !j.is_object();
  for (const auto& item : *word) {
    int g = p.gen1_index(item.get<std::string>());
    if (g < 0) throw ParseError("unknown edge: " + item.get<std::string>());
    if (first) {
      w.start = p.gens1[g].src;
      first = false;
    }
    w.gens.push_back(g);
  }
  if (first) throw ParseError("empty path needs an explicit object");
  return w;
}

ojson path_json(const PolygraphSpec& p, const Path& w) {
  ojson j;
  j["at"] = p.objects.at(w.start);
  auto& word = j["word"] = ojson::array();
  for (int g : w.gens) word.push_back(p.gens1.at(g).name);
  return j;
}

}  // namespace

ZigZag zigzag_from_json(const PolygraphSpec& p, const nlohmann::json& j) {
  ZigZag z;
  const nlohmann::json* word = &j;
  if (j.is_object()) {
    z.start = want_object(p, j.at("at").get<std::string>());
    word = &j.at("word");
  }
  bool first = !j.is_object();
  for (const auto& item : *word) {
    SignedGen g = parse_signed(p, item.get<std::string>());
    if (first) {
      z.start = sg_src(p, g);
      first = false;
    }
    z.word.push_back(g);
  }
  if (first) throw ParseError("empty zigzag needs an explicit object");
  zz_tgt(p, z);  // composability check
  return z;
}

ojson zigzag_json(const PolygraphSpec& p, const ZigZag& z) {
  ojson j;
  j["at"] = p.objects.at(z.start);
  auto& word = j["word"] = ojson::array();
  for (SignedGen g : z.word) {
    word.push_back(p.gens1.at(g.gen).name + (g.inv ? "-" : ""));
  }
  return j;
}

ZigZag parse_zigzag(const PolygraphSpec& p, const std::string& text) {
  if (text.rfind("1_", 0) == 0) {
    ZigZag z;
    z.start = want_object(p, text.substr(2));
    return z;
  }
  ZigZag z;
  std::istringstream in(text);
  std::string piece;
  bool first = true;
  while (std::getline(in, piece, '.')) {
    if (piece.empty()) throw ParseError("empty letter in zigzag: " + text);
    SignedGen g = parse_signed(p, piece);
    if (first) {
      z.start = sg_src(p, g);
      first = false;
    }
    z.word.push_back(g);
  }
  if (first) throw ParseError("empty zigzag: " + text);
  zz_tgt(p, z);
  return z;
}

PolygraphSpec polygraph_from_json(const nlohmann::json& j) {
  PolygraphSpec p;
  try {
    p.dim = j.value("dim", 1);
    for (const auto& o : j.at("objects")) {
      p.objects.push_back(o.get<std::string>());
    }
    for (const auto& g : j.value("gens1", nlohmann::json::array())) {
      Gen1 e;
      e.name = g.at("name").get<std::string>();
      e.src = want_object(p, g.at("src").get<std::string>());
      e.tgt = want_object(p, g.at("tgt").get<std::string>());
      p.gens1.push_back(std::move(e));
    }
    for (const auto& g : j.value("gens2", nlohmann::json::array())) {
      Gen2 r;
      r.name = g.at("name").get<std::string>();
      r.lhs = path_from_json(p, g.at("lhs"));
      r.rhs = path_from_json(p, g.at("rhs"));
      p.gens2.push_back(std::move(r));
    }
    for (const auto& g : j.value("extension", nlohmann::json::array())) {
      CellGen c;
      c.name = g.at("name").get<std::string>();
      c.src = zigzag_from_json(p, g.at("src_zigzag"));
      c.tgt = zigzag_from_json(p, g.at("tgt_zigzag"));
      p.extension.push_back(std::move(c));
    }
    if (j.contains("orders")) {
      const auto& o = j.at("orders");
      OrderSpec os;
      os.kind = o.at("kind").get<std::string>();
      if (o.contains("weights")) {
        os.weights.assign(p.gens1.size(), 1);
        for (const auto& [name, w] : o.at("weights").items()) {
          int g = p.gen1_index(name);
          if (g < 0) throw ParseError("unknown edge in weights: " + name);
          os.weights[g] = w.get<long>();
        }
      }
      if (o.contains("precedence")) {
        os.precedence.assign(p.gens1.size(), 0);
        int rank = 0;
        for (const auto& name : o.at("precedence")) {
          int g = p.gen1_index(name.get<std::string>());
          if (g < 0) {
            throw ParseError("unknown edge in precedence: " +
                             name.get<std::string>());
          }
          os.precedence[g] = rank++;
        }
      }
      p.order = std::move(os);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed presentation: ") + e.what());
  }
  return p;
}

PolygraphSpec load_polygraph(const std::string& path) {
  return polygraph_from_json(read_file(path));
}

RelInput relations_from_json(const nlohmann::json& j) {
  RelInput in;
  try {
    in.carrier = j.at("carrier").get<int>();
    for (const auto& [name, pairs] : j.at("relations").items()) {
      Relation r(in.carrier);
      for (const auto& pr : pairs) {
        r.set(pr.at(0).get<int>(), pr.at(1).get<int>());
      }
      in.relations.emplace(name, std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed relation file: ") + e.what());
  }
  return in;
}

RelInput load_relations(const std::string& path) {
  return relations_from_json(read_file(path));
}

ojson law_report_json(const LawReport& r) {
  ojson j;
  j["law"] = r.law;
  j["dims"] = r.dims;
  j["mode"] = r.mode;
  j["samples"] = r.samples;
  j["skipped"] = r.skipped;
  auto& fails = j["failures"] = ojson::array();
  for (const auto& f : r.failures) {
    ojson fj;
    fj["which"] = f.which;
    fj["inputs"] = f.inputs;
    fj["lhs"] = f.lhs;
    fj["rhs"] = f.rhs;
    fails.push_back(std::move(fj));
  }
  return j;
}

ojson bounds_json(const TruncationBounds& b) {
  ojson j;
  j["max_len"] = b.max_len;
  j["max_tiles"] = b.max_tiles;
  return j;
}

ojson filler_report_json(const FillerReport& r) {
  ojson j;
  j["kind"] = filler_kind_name(r.kind);
  j["holds"] = r.holds;
  j["clipped"] = r.clipped;
  j["covered"] = r.covered;
  j["deficit"] = r.deficit;
  return j;
}

ojson newman_report_json(const NewmanReport& r) {
  ojson j;
  j["psi_noetherian"] = r.psi_noetherian;
  j["phi_wellfounded"] = r.phi_wellfounded;
  j["local"] = filler_report_json(r.local);
  j["conclusion"] = filler_report_json(r.conclusion);
  j["r_full"] = r.r_full;
  j["r_objects"] = r.r_objects;
  return j;
}

ojson coherence_summary_json(const PolygraphSpec&, const CoherenceSummary& s) {
  ojson j;
  j["terminating"] = s.terminating;
  auto& bridges = j["bridges"] = ojson::array();
  for (const auto& b : s.bridges) {
    ojson bj;
    bj["kind"] = filler_kind_name(b.kind);
    bj["combinatorial"] = b.combinatorial;
    bj["algebraic"] = filler_report_json(b.algebraic);
    bridges.push_back(std::move(bj));
  }
  if (s.newman) {
    j["newman"] = newman_report_json(*s.newman);
  } else if (!s.newman_failure.empty()) {
    j["newman_failure"] = s.newman_failure;
  }
  return j;
}

ojson certificate_json(const PolygraphSpec& p, const PavingCertificate& c) {
  ojson j;
  j["subject"] = zigzag_json(p, c.subject);
  j["source"] = zigzag_json(p, c.cell.src);
  auto& tiles = j["tiles"] = ojson::array();
  for (const Tile& t : c.cell.tiles) {
    ojson tj;
    tj["l"] = zigzag_json(p, t.left);
    tj["gen"] = p.extension.at(t.gamma).name;
    tj["r"] = zigzag_json(p, t.right);
    tiles.push_back(std::move(tj));
  }
  j["target_forward"] = path_json(p, c.forward);
  j["target_backward"] = path_json(p, c.backward);
  return j;
}

PavingCertificate certificate_from_json(const PolygraphSpec& p,
                                        const nlohmann::json& j) {
  PavingCertificate c;
  try {
    c.subject = zigzag_from_json(p, j.at("subject"));
    c.cell.src = zigzag_from_json(p, j.at("source"));
    for (const auto& tj : j.at("tiles")) {
      Tile t;
      t.left = zigzag_from_json(p, tj.at("l"));
      t.gamma = p.cell_index(tj.at("gen").get<std::string>());
      if (t.gamma < 0) {
        throw ParseError("unknown extension cell: " +
                         tj.at("gen").get<std::string>());
      }
      t.right = zigzag_from_json(p, tj.at("r"));
      c.cell.tiles.push_back(std::move(t));
    }
    c.forward = path_from_json(p, j.at("target_forward"));
    c.backward = path_from_json(p, j.at("target_backward"));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
  return c;
}

}  // namespace hka
