#include "hka/dot.hpp"

#include <sstream>

namespace hka {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string polygraph_dot(const PolygraphSpec& p) {
  std::ostringstream out;
  out << "digraph presentation {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (const auto& o : p.objects) {
    out << "  " << quote(o) << ";\n";
  }
  for (const auto& g : p.gens1) {
    out << "  " << quote(p.objects[g.src]) << " -> " << quote(p.objects[g.tgt])
        << " [label=" << quote(g.name) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string certificate_dot(const PolygraphSpec& p,
                            const PavingCertificate& c) {
  std::ostringstream out;
  out << "digraph certificate {\n  rankdir=TB;\n  node [shape=box];\n";
  ZigZag cur = c.cell.src;
  out << "  s0 [label=" << quote(zz_show(p, cur)) << "];\n";
  int k = 0;
  for (const Tile& t : c.cell.tiles) {
    const CellGen& gamma = p.extension.at(t.gamma);
    cur = zigzag_reduce(
        zz_concat(p, zz_concat(p, t.left, gamma.tgt), t.right));
    out << "  s" << (k + 1) << " [label=" << quote(zz_show(p, cur)) << "];\n";
    out << "  s" << k << " -> s" << (k + 1)
        << " [label=" << quote(gamma.name) << "];\n";
    ++k;
  }
  out << "}\n";
  return out.str();
}

}  // namespace hka
