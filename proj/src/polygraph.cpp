#include "hka/polygraph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace hka {

namespace {

int find_name(const std::vector<std::string>& names, const std::string& n) {
  auto it = std::find(names.begin(), names.end(), n);
  return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

void require_unique(const std::vector<std::string>& names, const char* what) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw ParseError(std::string("empty ") + what + " name");
    if (!seen.insert(n).second) {
      throw ParseError(std::string("duplicate ") + what + " name: " + n);
    }
  }
}

}  // namespace

int PolygraphSpec::object_index(const std::string& name) const {
  return find_name(objects, name);
}

int PolygraphSpec::gen1_index(const std::string& name) const {
  for (std::size_t k = 0; k < gens1.size(); ++k) {
    if (gens1[k].name == name) return static_cast<int>(k);
  }
  return -1;
}

int PolygraphSpec::gen2_index(const std::string& name) const {
  for (std::size_t k = 0; k < gens2.size(); ++k) {
    if (gens2[k].name == name) return static_cast<int>(k);
  }
  return -1;
}

int PolygraphSpec::cell_index(const std::string& name) const {
  for (std::size_t k = 0; k < extension.size(); ++k) {
    if (extension[k].name == name) return static_cast<int>(k);
  }
  return -1;
}

Obj sg_src(const PolygraphSpec& p, SignedGen g) {
  const Gen1& e = p.gens1.at(g.gen);
  return g.inv ? e.tgt : e.src;
}

Obj sg_tgt(const PolygraphSpec& p, SignedGen g) {
  const Gen1& e = p.gens1.at(g.gen);
  return g.inv ? e.src : e.tgt;
}

Obj path_src(const PolygraphSpec&, const Path& w) { return w.start; }

Obj path_tgt(const PolygraphSpec& p, const Path& w) {
  Obj at = w.start;
  for (int g : w.gens) {
    const Gen1& e = p.gens1.at(g);
    if (e.src != at) throw ChainError("path does not compose at " + e.name);
    at = e.tgt;
  }
  return at;
}

Obj zz_src(const PolygraphSpec&, const ZigZag& z) { return z.start; }

Obj zz_tgt(const PolygraphSpec& p, const ZigZag& z) {
  Obj at = z.start;
  for (SignedGen g : z.word) {
    if (sg_src(p, g) != at) {
      throw ChainError("zigzag does not compose at " + p.gens1.at(g.gen).name);
    }
    at = sg_tgt(p, g);
  }
  return at;
}

ZigZag zigzag_reduce(ZigZag z) {
  std::vector<SignedGen> out;
  for (SignedGen g : z.word) {
    if (!out.empty() && out.back().gen == g.gen && out.back().inv != g.inv) {
      out.pop_back();
    } else {
      out.push_back(g);
    }
  }
  z.word = std::move(out);
  return z;
}

ZigZag zz_concat(const PolygraphSpec& p, const ZigZag& a, const ZigZag& b) {
  if (zz_tgt(p, a) != zz_src(p, b)) {
    throw ChainError("zigzag endpoints do not match");
  }
  ZigZag out = a;
  out.word.insert(out.word.end(), b.word.begin(), b.word.end());
  return zigzag_reduce(std::move(out));
}

ZigZag zz_invert(const PolygraphSpec& p, const ZigZag& z) {
  ZigZag out;
  out.start = zz_tgt(p, z);
  for (auto it = z.word.rbegin(); it != z.word.rend(); ++it) {
    out.word.push_back({it->gen, !it->inv});
  }
  return out;
}

ZigZag zz_of_path(const Path& w) {
  ZigZag z;
  z.start = w.start;
  for (int g : w.gens) z.word.push_back({g, false});
  return z;
}

bool zz_is_forward(const ZigZag& z) {
  return std::none_of(z.word.begin(), z.word.end(),
                      [](SignedGen g) { return g.inv; });
}

std::string zz_show(const PolygraphSpec& p, const ZigZag& z) {
  if (z.word.empty()) {
    return "1_" + p.objects.at(z.start);
  }
  std::ostringstream os;
  bool first = true;
  for (SignedGen g : z.word) {
    if (!first) os << '.';
    first = false;
    os << p.gens1.at(g.gen).name;
    if (g.inv) os << '-';
  }
  return os.str();
}

std::string path_show(const PolygraphSpec& p, const Path& w) {
  return zz_show(p, zz_of_path(w));
}

void validate(const PolygraphSpec& p) {
  if (p.dim != 1 && p.dim != 2) {
    throw ParseError("dim must be 1 or 2");
  }
  require_unique(p.objects, "object");
  {
    std::vector<std::string> names;
    for (const auto& g : p.gens1) names.push_back(g.name);
    for (const auto& g : p.gens2) names.push_back(g.name);
    for (const auto& g : p.extension) names.push_back(g.name);
    require_unique(names, "generator");
  }
  int nobj = static_cast<int>(p.objects.size());
  for (const auto& g : p.gens1) {
    if (g.src < 0 || g.src >= nobj || g.tgt < 0 || g.tgt >= nobj) {
      throw IndexError("edge " + g.name + " has an unknown endpoint");
    }
  }
  if (p.dim == 1 && !p.gens2.empty()) {
    throw ParseError("a dim-1 presentation cannot carry rewrite rules");
  }
  for (const auto& r : p.gens2) {
    Obj ls = path_src(p, r.lhs), lt = path_tgt(p, r.lhs);
    Obj rs = path_src(p, r.rhs), rt = path_tgt(p, r.rhs);
    if (ls != rs || lt != rt) {
      throw SphereError("rule " + r.name + " is not between parallel paths");
    }
    if (r.lhs.gens.empty()) {
      throw ParseError("rule " + r.name + " has an empty left-hand side");
    }
  }
  for (const auto& c : p.extension) {
    Obj ss = zz_src(p, c.src), st = zz_tgt(p, c.src);
    Obj ts = zz_src(p, c.tgt), tt = zz_tgt(p, c.tgt);
    if (ss != ts || st != tt) {
      throw SphereError("cell " + c.name + " is not between parallel zigzags");
    }
  }
  if (p.order) {
    const auto& o = *p.order;
    if (o.kind != "length-lex" && o.kind != "weight") {
      throw ParseError("unknown order kind: " + o.kind);
    }
    if (o.kind == "weight" && o.weights.size() != p.gens1.size()) {
      throw ParseError("order weights must cover every edge");
    }
    if (!o.precedence.empty() && o.precedence.size() != p.gens1.size()) {
      throw ParseError("order precedence must cover every edge");
    }
  }
}

// ---- dim 1 ----

std::vector<int> rewriting_steps(const PolygraphSpec& p, Obj a) {
  std::vector<int> out;
  for (std::size_t k = 0; k < p.gens1.size(); ++k) {
    if (p.gens1[k].src == a) out.push_back(static_cast<int>(k));
  }
  return out;
}

NormalizeResult normalize(const PolygraphSpec& p, Obj a, int fuel) {
  NormalizeResult res;
  res.nf = a;
  while (fuel-- > 0) {
    auto steps = rewriting_steps(p, res.nf);
    if (steps.empty()) return res;
    res.steps.push_back(steps.front());
    res.nf = p.gens1[steps.front()].tgt;
  }
  res.exhausted = true;
  return res;
}

std::vector<ArsBranching> local_branchings(const PolygraphSpec& p) {
  std::vector<ArsBranching> out;
  for (Obj a = 0; a < static_cast<Obj>(p.objects.size()); ++a) {
    auto steps = rewriting_steps(p, a);
    for (std::size_t x = 0; x < steps.size(); ++x) {
      for (std::size_t y = x; y < steps.size(); ++y) {
        out.push_back({a, steps[x], steps[y]});
      }
    }
  }
  return out;
}

// ---- dim 2 ----

std::vector<StringStep> rewriting_steps(const PolygraphSpec& p,
                                        const Path& w) {
  path_tgt(p, w);  // composability check
  std::vector<StringStep> out;
  for (std::size_t pos = 0; pos <= w.gens.size(); ++pos) {
    for (std::size_t r = 0; r < p.gens2.size(); ++r) {
      const auto& l = p.gens2[r].lhs.gens;
      if (pos + l.size() > w.gens.size()) continue;
      if (std::equal(l.begin(), l.end(), w.gens.begin() + pos)) {
        out.push_back({static_cast<int>(r), static_cast<int>(pos)});
      }
    }
  }
  return out;
}

Path apply_step(const PolygraphSpec& p, const Path& w, const StringStep& s) {
  const Gen2& rule = p.gens2.at(s.rule);
  const auto& l = rule.lhs.gens;
  if (s.pos < 0 || s.pos + l.size() > w.gens.size() ||
      !std::equal(l.begin(), l.end(), w.gens.begin() + s.pos)) {
    throw IndexError("rule " + rule.name + " does not apply there");
  }
  Path out;
  out.start = w.start;
  out.gens.assign(w.gens.begin(), w.gens.begin() + s.pos);
  out.gens.insert(out.gens.end(), rule.rhs.gens.begin(), rule.rhs.gens.end());
  out.gens.insert(out.gens.end(), w.gens.begin() + s.pos + l.size(),
                  w.gens.end());
  return out;
}

WordNormalizeResult normalize(const PolygraphSpec& p, const Path& w,
                              int fuel) {
  WordNormalizeResult res;
  res.nf = w;
  while (fuel-- > 0) {
    auto steps = rewriting_steps(p, res.nf);
    if (steps.empty()) return res;
    res.steps.push_back(steps.front());
    res.nf = apply_step(p, res.nf, steps.front());
  }
  res.exhausted = true;
  return res;
}

std::vector<StringBranching> local_branchings(const PolygraphSpec& p,
                                              const Path& w) {
  auto steps = rewriting_steps(p, w);
  std::vector<StringBranching> out;
  for (std::size_t x = 0; x < steps.size(); ++x) {
    for (std::size_t y = x; y < steps.size(); ++y) {
      out.push_back({w, steps[x], steps[y], false});
    }
  }
  return out;
}

std::vector<StringBranching> critical_branchings(const PolygraphSpec& p) {
  std::vector<StringBranching> out;
  for (std::size_t r1 = 0; r1 < p.gens2.size(); ++r1) {
    const auto& l1 = p.gens2[r1].lhs.gens;
    for (std::size_t r2 = r1; r2 < p.gens2.size(); ++r2) {
      const auto& l2 = p.gens2[r2].lhs.gens;
      for (std::size_t o = (r1 == r2 ? 1 : 0); o < l1.size(); ++o) {
        // l2 must start inside l1 and match it where they overlap
        std::size_t shared = std::min(l1.size() - o, l2.size());
        if (!std::equal(l2.begin(), l2.begin() + shared, l1.begin() + o)) {
          continue;
        }
        Path word;
        word.start = p.gens2[r1].lhs.start;
        word.gens = l1;
        if (o + l2.size() > l1.size()) {
          word.gens.insert(word.gens.end(), l2.begin() + shared, l2.end());
        }
        StringBranching br;
        br.word = word;
        br.a = {static_cast<int>(r1), 0};
        br.b = {static_cast<int>(r2), static_cast<int>(o)};
        br.critical = true;
        out.push_back(br);
      }
      if (r1 != r2) {
        // inclusion the other way: l1 strictly inside l2 (offset 0 was
        // already caught above as a shared-prefix overlap)
        for (std::size_t o = 1; o + l1.size() <= l2.size(); ++o) {
          if (!std::equal(l1.begin(), l1.end(), l2.begin() + o)) continue;
          Path word;
          word.start = p.gens2[r2].lhs.start;
          word.gens = l2;
          StringBranching br;
          br.word = word;
          br.a = {static_cast<int>(r1), static_cast<int>(o)};
          br.b = {static_cast<int>(r2), 0};
          br.critical = true;
          out.push_back(br);
        }
      }
    }
  }
  return out;
}

bool word_greater(const PolygraphSpec& p, const Path& a, const Path& b) {
  if (!p.order) throw NotProvidedError("no term order given");
  const auto& o = *p.order;
  long wa = 0, wb = 0;
  if (o.kind == "weight") {
    for (int g : a.gens) wa += o.weights.at(g);
    for (int g : b.gens) wb += o.weights.at(g);
  } else {
    wa = static_cast<long>(a.gens.size());
    wb = static_cast<long>(b.gens.size());
  }
  if (wa != wb) return wa > wb;
  auto rank = [&](int g) {
    return o.precedence.empty() ? g : o.precedence.at(g);
  };
  return std::lexicographical_compare(
      b.gens.begin(), b.gens.end(), a.gens.begin(), a.gens.end(),
      [&](int x, int y) { return rank(x) < rank(y); });
}

bool is_terminating(const PolygraphSpec& p) {
  if (p.dim == 1) {
    // DFS cycle detection on the edge graph
    int n = static_cast<int>(p.objects.size());
    std::vector<int> state(n, 0);  // 0 fresh, 1 open, 2 done
    std::vector<std::pair<Obj, std::size_t>> stack;
    for (Obj s = 0; s < n; ++s) {
      if (state[s]) continue;
      stack.push_back({s, 0});
      state[s] = 1;
      while (!stack.empty()) {
        auto& [a, k] = stack.back();
        auto steps = rewriting_steps(p, a);
        if (k >= steps.size()) {
          state[a] = 2;
          stack.pop_back();
          continue;
        }
        Obj b = p.gens1[steps[k++]].tgt;
        if (state[b] == 1) return false;
        if (state[b] == 0) {
          state[b] = 1;
          stack.push_back({b, 0});
        }
      }
    }
    return true;
  }
  if (p.order) {
    bool all_down = std::all_of(p.gens2.begin(), p.gens2.end(),
                                [&](const Gen2& r) {
                                  return word_greater(p, r.lhs, r.rhs);
                                });
    if (all_down) return true;
  }
  // no usable order: bounded depth-first search for a word that rewrites
  // back into a word still on the recursion stack
  std::map<Path, int> state;  // 1 open, 2 done
  long budget = 20000;
  std::function<bool(const Path&)> loops = [&](const Path& w) -> bool {
    if (budget-- <= 0) {
      throw FuelExhaustedError("termination analysis inconclusive");
    }
    int& st = state[w];
    if (st == 1) return true;
    if (st == 2) return false;
    st = 1;
    for (const auto& s : rewriting_steps(p, w)) {
      if (loops(apply_step(p, w, s))) return true;
    }
    state[w] = 2;
    return false;
  };
  for (const auto& r : p.gens2) {
    if (loops(r.lhs)) return false;
  }
  return true;
}

}  // namespace hka
