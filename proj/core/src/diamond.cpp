#include "kron/diamond.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <regex>
#include <set>
#include <tuple>

#include "json.hpp"
#include "kron/error.hpp"

namespace kron {

std::optional<DiamondVertex> DiamondVertex::make(int sign, int i, int j, int k) {
  if (i < 1 || j < 0 || k < 0 || j + k != i) return std::nullopt;
  if (sign != 1 && sign != -1) return std::nullopt;
  DiamondVertex v{sign, i, j, k};
  if (v.horizontal()) v.sign = 1;
  return v;
}

std::string DiamondVertex::label() const {
  return "(" + std::to_string(i) + ";" + std::to_string(j) + "," + std::to_string(k) + ")" + (sign > 0 ? "+" : "-");
}

DiamondVertex DiamondVertex::parse(std::string_view text) {
  static const std::regex re(R"(\s*\((\d+);(\d+),(\d+)\)([+-]?)\s*)");
  std::cmatch m;
  if (!std::regex_match(text.data(), text.data() + text.size(), m, re)) {
    throw_parse("vertex label must look like '(i;j,k)+' or '(i;j,k)-': '" + std::string(text) + "'");
  }
  int sign = (m[4].str() == "-") ? -1 : 1;
  auto v = make(sign, std::stoi(m[1].str()), std::stoi(m[2].str()), std::stoi(m[3].str()));
  if (!v) throw_parse("vertex triple must satisfy i = j + k >= 1: '" + std::string(text) + "'");
  if (sign < 0 && v->horizontal()) throw_parse("horizontal vertices carry sign +: '" + std::string(text) + "'");
  return *v;
}

Diamond::Diamond(int l) : l_(l) {
  if (l < 1) throw_invariant("the diamond quiver needs l >= 1");
  for (int i = 1; i <= l; ++i) {
    for (int j = i; j >= 0; --j) vertices_.push_back(*DiamondVertex::make(1, i, j, i - j));
    for (int j = i - 1; j >= 1; --j) vertices_.push_back(*DiamondVertex::make(-1, i, j, i - j));
  }

  std::set<std::tuple<int, int, char>> seen;
  auto add_from = [&](int src, int sign) {
    const DiamondVertex& v = vertices_[static_cast<std::size_t>(src)];
    const std::tuple<ArrowType, int, int, int> recipes[] = {
        {ArrowType::A, v.i - 1, v.j - 1, v.k},
        {ArrowType::B, v.i + 1, v.j, v.k + 1},
        {ArrowType::C, v.i, v.j + 1, v.k - 1},
    };
    for (const auto& [type, i, j, k] : recipes) {
      auto w = DiamondVertex::make(sign, i, j, k);
      if (!w) continue;
      int dst = index_of(*w);
      if (dst < 0) continue;
      if (!seen.insert({src, dst, static_cast<char>(type)}).second) continue;
      arrows_.push_back({src, dst, type});
    }
  };
  for (int s = 0; s < size(); ++s) {
    const DiamondVertex& v = vertices_[static_cast<std::size_t>(s)];
    add_from(s, v.sign);
    if (v.horizontal()) add_from(s, -1);
  }
  // The doubled C arrow (1;0,1) -> (1;1,0).
  arrows_.push_back({index_of(1, 1, 0, 1), index_of(1, 1, 1, 0), ArrowType::C});

  std::vector<std::pair<int, int>> pairs;
  for (const auto& a : arrows_) pairs.emplace_back(a.src, a.dst);
  quiver_ = IceQuiver(labels(), num_mutable(), pairs);

  for (int s = 0; s < size(); ++s) {
    IntVec row = flag_weight(s);
    row.push_back(vertex(s).j);
    row.push_back(vertex(s).k);
    sigma_.rows.push_back(std::move(row));
  }
}

int Diamond::index_of(const DiamondVertex& v) const {
  for (std::size_t t = 0; t < vertices_.size(); ++t)
    if (vertices_[t] == v) return static_cast<int>(t);
  return -1;
}

int Diamond::index_of(int sign, int i, int j, int k) const {
  auto v = DiamondVertex::make(sign, i, j, k);
  return v ? index_of(*v) : -1;
}

IntVec Diamond::flag_weight(int idx) const {
  const DiamondVertex& v = vertex(idx);
  IntVec f(static_cast<std::size_t>(2 * l_), 0);
  // e_t for t in -l..-1, 1..l; e_0 = 0.
  auto e = [&](int t, long long c) {
    if (t == 0) return;
    std::size_t col = t < 0 ? static_cast<std::size_t>(-t - 1) : static_cast<std::size_t>(l_ + t - 1);
    f[col] += c;
  };
  if (v.sign > 0) {
    e(v.j, 1);
    e(v.k, 1);
    e(-v.i, -1);
  } else {
    e(v.i, 1);
    e(-v.j, -1);
    e(-v.k, -1);
  }
  return f;
}

LambdaWeight Diamond::lambda_weight(int idx) const { return {vertex(idx).j, vertex(idx).k}; }

Weight Diamond::sigma_of(const IntVec& g) const {
  if (static_cast<int>(g.size()) != size()) throw_invariant("g-vector has wrong dimension");
  IntVec flat(static_cast<std::size_t>(2 * l_), 0);
  for (int s = 0; s < size(); ++s) {
    if (g[static_cast<std::size_t>(s)] == 0) continue;
    IntVec f = flag_weight(s);
    for (std::size_t c = 0; c < flat.size(); ++c) flat[c] += g[static_cast<std::size_t>(s)] * f[c];
  }
  return Weight::from_flat(l_, flat);
}

LambdaWeight Diamond::lambda_of(const IntVec& g) const {
  if (static_cast<int>(g.size()) != size()) throw_invariant("g-vector has wrong dimension");
  LambdaWeight w;
  for (int s = 0; s < size(); ++s) {
    w.a += g[static_cast<std::size_t>(s)] * vertex(s).j;
    w.b += g[static_cast<std::size_t>(s)] * vertex(s).k;
  }
  return w;
}

std::vector<std::string> Diamond::labels() const {
  std::vector<std::string> out;
  for (const auto& v : vertices_) out.push_back(v.label());
  return out;
}

std::string Diamond::display_label(int idx) const {
  std::string s = vertex(idx).label();
  if (l_ == 2) s += " [" + std::to_string(diamond2_alias_of_index(idx)) + "]";
  return s;
}

const Diamond& build_diamond(int l) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Diamond>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(l);
  if (it == cache.end()) it = cache.emplace(l, std::make_unique<Diamond>(l)).first;
  return *it->second;
}

namespace {
constexpr int kAliasToIndex[6] = {0, 1, 3, 5, 2, 4};
}

int diamond2_index_of_alias(int alias) {
  if (alias < 1 || alias > 6) throw_invariant("diamond-2 alias must be in 1..6");
  return kAliasToIndex[alias - 1];
}

int diamond2_alias_of_index(int idx) {
  for (int a = 0; a < 6; ++a)
    if (kAliasToIndex[a] == idx) return a + 1;
  throw_invariant("diamond-2 index must be in 0..5");
}

VertexPath tri_broken_path(int l, int j, int k, int sign) {
  const Diamond& d = build_diamond(l);
  if (j < 0 || k < 0 || j + k != l) throw_invariant("tri-broken path needs j + k = l with j, k >= 0");
  if (sign != 1 && sign != -1) throw_invariant("sign must be +1 or -1");
  VertexPath p;
  auto push = [&](int s, int i, int a, int b, ArrowType via, int group) {
    int idx = d.index_of(s, i, a, b);
    if (idx < 0) throw_invariant("internal: tri-broken path leaves the quiver");
    if (!p.vertices.empty()) p.steps.push_back({via, group});
    p.vertices.push_back(idx);
  };
  if (k == 0) {
    for (int i = l; i >= 1; --i) push(1, i, i, 0, ArrowType::A, 0);
    return p;
  }
  if (j == 0) {
    for (int i = 1; i <= l; ++i) push(1, i, 0, i, ArrowType::B, 0);
    return p;
  }
  for (int t = 0; t <= k; ++t) push(sign, l - t, k - t, j, ArrowType::A, 0);
  for (int m = 1; m <= j; ++m) {
    // Only (1;0,1) -> (1;1,0) is doubled; use the copy of the opposite-sign group.
    int group = (j == 1 && m == 1) ? -sign : 0;
    push(-sign, j, m, j - m, ArrowType::C, group);
  }
  for (int t = 1; t <= k; ++t) push(sign, j + t, j, t, ArrowType::B, 0);
  return p;
}

bool path_is_legal(const Diamond& d, const VertexPath& p) {
  if (p.vertices.empty() || p.steps.size() + 1 != p.vertices.size()) return false;
  for (std::size_t t = 0; t < p.steps.size(); ++t) {
    bool found = false;
    for (const auto& a : d.arrows()) {
      if (a.src == p.vertices[t] && a.dst == p.vertices[t + 1] && a.type == p.steps[t].type) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

HRep ConeSystem::to_hrep() const {
  HRep h;
  h.dim = dim;
  h.ineq = rows;
  h.ineq_notes = provenance;
  return h;
}

std::string ConeSystem::to_json() const {
  const Diamond& d = build_diamond(l);
  nlohmann::ordered_json j;
  j["l"] = l;
  j["dim"] = dim;
  std::vector<std::string> names;
  for (int v = 0; v < d.size(); ++v) names.push_back(d.display_label(v));
  j["vertices"] = names;
  nlohmann::ordered_json rs = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    rs.push_back({{"coeffs", rows[r]}, {"provenance", provenance[r]}});
  }
  j["rows"] = rs;
  return j.dump();
}

bool ConeSystem::contains(const IntVec& g) const {
  for (const auto& r : rows)
    if (dot(r, g) < 0) return false;
  return true;
}

ConeSystem cone_inequalities(int l) {
  const Diamond& d = build_diamond(l);
  ConeSystem cs;
  cs.l = l;
  cs.dim = d.size();
  auto add_suffix = [&](const VertexPath& p, std::size_t from, const std::string& tag) {
    IntVec row(static_cast<std::size_t>(cs.dim), 0);
    for (std::size_t t = from; t < p.vertices.size(); ++t) ++row[static_cast<std::size_t>(p.vertices[t])];
    cs.rows.push_back(std::move(row));
    cs.provenance.push_back(tag + " suffix@" + std::to_string(from));
  };
  for (int sign : {1, -1}) {
    for (int j = 1; j < l; ++j) {
      const int k = l - j;
      VertexPath p = tri_broken_path(l, j, k, sign);
      std::string tag = std::string("tp") + (sign > 0 ? "+" : "-") + "[" + std::to_string(l) + ";" +
                        std::to_string(j) + "," + std::to_string(k) + "]";
      for (std::size_t from = 1; from < p.vertices.size(); ++from) add_suffix(p, from, tag);
    }
  }
  {
    VertexPath p = tri_broken_path(l, 0, l, 1);
    std::string tag = "tp[" + std::to_string(l) + ";0," + std::to_string(l) + "]";
    for (std::size_t from = 0; from < p.vertices.size(); ++from) add_suffix(p, from, tag);
  }
  {
    IntVec row(static_cast<std::size_t>(cs.dim), 0);
    row[static_cast<std::size_t>(d.index_of(1, l, l, 0))] = 1;
    cs.rows.push_back(std::move(row));
    cs.provenance.push_back("e[" + std::to_string(l) + ";" + std::to_string(l) + ",0]");
  }
  std::set<IntVec> uniq(cs.rows.begin(), cs.rows.end());
  if (uniq.size() != cs.rows.size()) throw_invariant("internal: duplicate cone rows");
  return cs;
}

std::vector<GVectorFamilyMember> u_invariant_gvectors(int l) {
  const Diamond& d = build_diamond(l);
  std::vector<GVectorFamilyMember> out;
  auto unit = [&](IntVec& g, int sign, int i, int j, int k, long long c) {
    int idx = d.index_of(sign, i, j, k);
    if (idx < 0) throw_invariant("internal: g-vector family leaves the quiver");
    g[static_cast<std::size_t>(idx)] += c;
  };
  const auto n = static_cast<std::size_t>(d.size());
  if (l >= 2) {
    IntVec g(n, 0);
    unit(g, 1, 2, 0, 2, 1);
    unit(g, 1, 1, 1, 0, 2);
    unit(g, 1, 1, 0, 1, -1);
    out.push_back({"e(2;0,2)+2e(1;1,0)-e(1;0,1)", g});
  }
  for (int sign : {1, -1}) {
    const char* sg = sign > 0 ? "+" : "-";
    for (int i = 3; i <= l; ++i) {
      IntVec g(n, 0);
      unit(g, sign, i, 0, i, i - 2);
      unit(g, sign, 2, 1, 1, 1);
      for (int m = 3; m <= i; ++m) {
        unit(g, sign, m, m - 1, 1, 1);
        unit(g, sign, m - 1, 0, m - 1, -1);
      }
      out.push_back({std::string("first") + sg + "[i=" + std::to_string(i) + "]", g});
    }
    for (int i = 3; i <= l; ++i) {
      for (int j = 1; 2 * j < i; ++j) {
        IntVec g(n, 0);
        unit(g, sign, i, j, i - j, i - 2 * j + 1);
        for (int m = 0; m <= i - 2 * j - 1; ++m) {
          unit(g, sign, 2 * j + m, j + m + 1, j - 1, 1);
          unit(g, sign, 2 * j + m, j, j + m, -1);
        }
        out.push_back({std::string("second") + sg + "[i=" + std::to_string(i) + ",j=" + std::to_string(j) + "]", g});
      }
    }
  }
  return out;
}

}  // namespace kron
