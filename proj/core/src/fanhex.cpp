#include "kron/fanhex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"
#include "kron/diamond.hpp"
#include "kron/error.hpp"
#include "kron/lp.hpp"

namespace kron {

namespace {

LaurentPoly::Exponent to_exp(const IntVec& w) { return LaurentPoly::Exponent(w.begin(), w.end()); }

LaurentPoly one_minus(const IntVec& w) {
  LaurentPoly p = LaurentPoly::constant(w.size(), 1);
  p -= LaurentPoly::monomial(to_exp(w));
  return p;
}

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

IntVec unit(int dim, int idx) {
  IntVec v(static_cast<std::size_t>(dim), 0);
  v[static_cast<std::size_t>(idx)] = 1;
  return v;
}

IntVec add(const IntVec& a, const IntVec& b, long long sb = 1) {
  IntVec r = a;
  for (std::size_t t = 0; t < r.size(); ++t) r[t] += sb * b[t];
  return r;
}

// max sum of coefficients on `outside` for a in cone(g1) and b in cone(g2)
// with g1 a = g2 b and sum(a) <= 1. Zero iff those coefficients vanish on
// the whole intersection.
bool intersection_supported(const std::vector<IntVec>& g1, const std::vector<IntVec>& g2,
                            const std::vector<bool>& outside1) {
  const std::size_t d = g1.empty() ? 0 : g1[0].size();
  const std::size_t n1 = g1.size(), n2 = g2.size(), n = n1 + n2;
  IntMatrix a;
  IntVec b;
  for (std::size_t r = 0; r < d; ++r) {
    IntVec row(n, 0);
    for (std::size_t c = 0; c < n1; ++c) row[c] = g1[c][r];
    for (std::size_t c = 0; c < n2; ++c) row[n1 + c] = -g2[c][r];
    a.push_back(row);
    b.push_back(0);
    for (auto& x : row) x = -x;
    a.push_back(row);
    b.push_back(0);
  }
  for (std::size_t c = 0; c < n; ++c) {
    IntVec row(n, 0);
    row[c] = -1;
    a.push_back(row);
    b.push_back(0);
  }
  IntVec total(n, 0);
  std::fill(total.begin(), total.begin() + static_cast<long>(n1), 1);
  a.push_back(total);
  b.push_back(1);
  LinearProgram lp(a, b, n);
  QVec obj(n, 0);
  for (std::size_t c = 0; c < n1; ++c)
    if (outside1[c]) obj[c] = 1;
  LpResult r = lp.maximize(obj);
  return r.status == LpStatus::Optimal && r.value == 0;
}

}  // namespace

FanCheck check_unimodular_fan(const UnimodularFan& fan) {
  FanCheck out;
  auto fail = [&](std::string msg) {
    out.ok = false;
    out.diagnostics.push_back(std::move(msg));
  };
  for (const auto& g : fan.generators)
    if (static_cast<int>(g.size()) != fan.dim) fail("generator of wrong dimension");
  if (!out.ok) return out;
  for (std::size_t c = 0; c < fan.cones.size(); ++c) {
    const auto& cone = fan.cones[c];
    if (static_cast<int>(cone.size()) != fan.dim) {
      fail("cone " + std::to_string(c) + " has " + std::to_string(cone.size()) + " generators");
      continue;
    }
    IntMatrix m;
    for (int g : cone) {
      if (g < 0 || g >= static_cast<int>(fan.generators.size())) {
        fail("cone " + std::to_string(c) + " references a missing generator");
        m.clear();
        break;
      }
      m.push_back(fan.generators[static_cast<std::size_t>(g)]);
    }
    if (m.empty()) continue;
    mpz_class det = determinant(m);
    if (abs(det) != 1) fail("cone " + std::to_string(c) + " has determinant " + det.get_str());
  }
  if (!out.ok) return out;
  for (std::size_t c1 = 0; c1 < fan.cones.size(); ++c1)
    for (std::size_t c2 = c1 + 1; c2 < fan.cones.size(); ++c2) {
      std::vector<IntVec> g1, g2;
      std::set<IntVec> v1, v2;
      for (int g : fan.cones[c1]) v1.insert(fan.generators[static_cast<std::size_t>(g)]);
      for (int g : fan.cones[c2]) v2.insert(fan.generators[static_cast<std::size_t>(g)]);
      g1.assign(v1.begin(), v1.end());
      g2.assign(v2.begin(), v2.end());
      std::vector<bool> out1, out2;
      for (const auto& g : g1) out1.push_back(!v2.count(g));
      for (const auto& g : g2) out2.push_back(!v1.count(g));
      if (!intersection_supported(g1, g2, out1) || !intersection_supported(g2, g1, out2)) {
        fail("cones " + std::to_string(c1) + " and " + std::to_string(c2) + " do not meet in a common face");
      }
    }
  return out;
}

std::optional<LaurentPoly> divide_one_minus(const LaurentPoly& p, const IntVec& w) {
  std::size_t piv = 0;
  while (piv < w.size() && w[piv] == 0) ++piv;
  if (piv == w.size()) throw_invariant("cannot divide by 1 - z^0");
  // Group terms along lines x0 + t w.
  std::map<LaurentPoly::Exponent, std::map<long long, mpq_class>> lines;
  for (const auto& [e, c] : p.terms()) {
    const long long t = floor_div(e[piv], w[piv]);
    LaurentPoly::Exponent key = e;
    for (std::size_t s = 0; s < key.size(); ++s) key[s] -= static_cast<int>(t * w[s]);
    lines[key][t] += c;
  }
  LaurentPoly q(p.nvars());
  for (const auto& [key, pts] : lines) {
    mpq_class run = 0;
    long long t = pts.begin()->first;
    const long long tmax = pts.rbegin()->first;
    for (; t <= tmax; ++t) {
      auto it = pts.find(t);
      if (it != pts.end()) run += it->second;
      if (t < tmax && run != 0) {
        LaurentPoly::Exponent e = key;
        for (std::size_t s = 0; s < e.size(); ++s) e[s] += static_cast<int>(t * w[s]);
        q.add_term(e, run);
      }
    }
    if (run != 0) return std::nullopt;
  }
  return q;
}

void HilbertSeries::canonicalize() {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t t = 0; t < denominator.size(); ++t) {
      if (numerator.is_zero()) break;
      if (auto q = divide_one_minus(numerator, denominator[t])) {
        numerator = std::move(*q);
        denominator.erase(denominator.begin() + static_cast<long>(t));
        changed = true;
        break;
      }
    }
  }
  std::sort(denominator.begin(), denominator.end());
}

bool HilbertSeries::equivalent(const HilbertSeries& other) const {
  LaurentPoly lhs = numerator, rhs = other.numerator;
  for (const auto& w : other.denominator) lhs *= one_minus(w);
  for (const auto& w : denominator) rhs *= one_minus(w);
  return lhs == rhs;
}

std::map<IntVec, mpz_class> HilbertSeries::expand(const IntVec& grading, long long max_degree) const {
  auto degree = [&](const IntVec& x) {
    long long s = 0;
    for (std::size_t t = 0; t < x.size(); ++t) s += grading[t] * x[t];
    return s;
  };
  std::map<IntVec, mpz_class> cur;
  for (const auto& [e, c] : numerator.terms()) {
    if (c.get_den() != 1) throw_invariant("numerator has a non-integral coefficient");
    IntVec x(e.begin(), e.end());
    if (degree(x) <= max_degree) cur[x] += c.get_num();
  }
  for (const auto& w : denominator) {
    const long long dw = degree(w);
    if (dw <= 0) throw_invariant("denominator vector with non-positive grading");
    std::map<IntVec, mpz_class> next;
    for (const auto& [x, c] : cur) {
      IntVec y = x;
      for (long long d = degree(x); d <= max_degree; d += dw) {
        next[y] += c;
        y = add(y, w);
      }
    }
    cur.clear();
    for (auto& [x, c] : next)
      if (c != 0) cur.emplace(x, std::move(c));
  }
  return cur;
}

std::string HilbertSeries::str(const std::vector<std::string>& names) const {
  std::ostringstream os;
  os << "(" << numerator.str(names) << ")";
  if (denominator.empty()) return os.str();
  os << " / (";
  for (std::size_t t = 0; t < denominator.size(); ++t) {
    os << (t ? " " : "") << "(1 - " << LaurentPoly::monomial(to_exp(denominator[t])).str(names) << ")";
  }
  os << ")";
  return os.str();
}

HilbertSeries fan_hilbert(const UnimodularFan& fan) {
  FanCheck chk = check_unimodular_fan(fan);
  if (!chk.ok) throw_invariant("fan check failed: " + chk.diagnostics.front());
  std::vector<IntVec> pool;
  std::vector<std::set<IntVec>> cones;
  for (const auto& c : fan.cones) {
    std::set<IntVec> s;
    for (int g : c) s.insert(fan.generators[static_cast<std::size_t>(g)]);
    pool.insert(pool.end(), s.begin(), s.end());
    cones.push_back(std::move(s));
  }
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  HilbertSeries h;
  h.numerator = LaurentPoly(static_cast<std::size_t>(fan.dim));
  h.denominator = pool;
  const std::size_t nc = cones.size();
  if (nc > 20) throw_invariant("too many cones for inclusion-exclusion");
  for (unsigned long mask = 1; mask < (1UL << nc); ++mask) {
    std::set<IntVec> common;
    bool first = true;
    int size = 0;
    for (std::size_t c = 0; c < nc; ++c) {
      if (!(mask >> c & 1UL)) continue;
      ++size;
      if (first) {
        common = cones[c];
        first = false;
      } else {
        std::set<IntVec> keep;
        std::set_intersection(common.begin(), common.end(), cones[c].begin(), cones[c].end(),
                              std::inserter(keep, keep.end()));
        common = std::move(keep);
      }
    }
    LaurentPoly term = LaurentPoly::constant(static_cast<std::size_t>(fan.dim), size % 2 == 1 ? 1 : -1);
    for (const auto& u : pool)
      if (!common.count(u)) term *= one_minus(u);
    h.numerator += term;
  }
  h.canonicalize();
  return h;
}

namespace {

IntVec d2(int alias) { return unit(6, diamond2_index_of_alias(alias)); }

}  // namespace

UnimodularFan diamond2_fan() {
  const IntVec e1p = add(add(d2(3), d2(4)), d2(1), -1);
  const IntVec e2o = add(add(d2(6), d2(1)), d2(2), -1);
  UnimodularFan fan;
  fan.dim = 6;
  // 0..3 = aliases 3..6, then e1, e2, e1', e2o.
  for (int a = 3; a <= 6; ++a) fan.generators.push_back(d2(a));
  fan.generators.push_back(d2(1));
  fan.generators.push_back(d2(2));
  fan.generators.push_back(e1p);
  fan.generators.push_back(e2o);
  fan.cones = {{0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 6, 5}, {0, 1, 2, 3, 4, 7}, {0, 1, 2, 3, 7, 6}};
  return fan;
}

HilbertSeries diamond2_closed_form() {
  const IntVec e1 = d2(1), e2 = d2(2);
  const IntVec e1p = add(add(d2(3), d2(4)), e1, -1);
  const IntVec e2o = add(add(d2(6), e1), e2, -1);
  HilbertSeries h;
  h.numerator = one_minus(add(e1, e1p)) * one_minus(add(e2, e2o));
  for (int a = 3; a <= 6; ++a) h.denominator.push_back(d2(a));
  h.denominator.push_back(e1);
  h.denominator.push_back(e1p);
  h.denominator.push_back(e2);
  h.denominator.push_back(e2o);
  h.canonicalize();
  return h;
}

std::vector<std::pair<int, int>> hex_vertices(int l) {
  if (l < 1) throw_invariant("l must be at least 1");
  const std::set<std::pair<int, int>> deleted{{0, 0}, {0, l}, {l, 0}, {0, -l}, {-l, 0}};
  std::vector<std::pair<int, int>> out;
  for (int i = -l; i <= l; ++i)
    for (int j = -l; j <= l; ++j)
      if (std::abs(i + j) <= l && !deleted.count({i, j})) out.emplace_back(i, j);
  return out;
}

int hex_index(int l, int i, int j) {
  const auto pts = hex_vertices(l);
  auto it = std::lower_bound(pts.begin(), pts.end(), std::make_pair(i, j));
  return (it != pts.end() && *it == std::make_pair(i, j)) ? static_cast<int>(it - pts.begin()) : -1;
}

IntMatrix phi_matrix(int l) {
  const Diamond& d = build_diamond(l);
  const auto pts = hex_vertices(l);
  IntMatrix m(pts.size(), IntVec(static_cast<std::size_t>(d.size()), 0));
  for (int c = 0; c < d.size(); ++c) {
    const DiamondVertex& v = d.vertex(c);
    auto put = [&](int a, int b, long long x) {
      if (a == 0 && b == 0) return;
      auto it = std::lower_bound(pts.begin(), pts.end(), std::make_pair(a, b));
      if (it == pts.end() || *it != std::make_pair(a, b)) {
        throw_invariant("phi image point (" + std::to_string(a) + "," + std::to_string(b) + ") lies outside V_l");
      }
      m[static_cast<std::size_t>(it - pts.begin())][static_cast<std::size_t>(c)] += x;
    };
    const int i = v.i, j = v.j, k = v.k;
    if (i == l && j == l) {
      put(-l, l, 1);
    } else if (v.sign > 0) {
      put(k, -i, 1);
      put(-j, j, 1);
      put(j, 0, 1);
      put(-j, 0, -1);
      put(0, j, -1);
    } else {
      put(i, -k, 1);
      put(-j, j, 1);
      put(0, -j, 1);
      put(-j, 0, -1);
      put(0, j, -1);
    }
  }
  return m;
}

IntVec phi_apply(int l, const IntVec& g) {
  IntMatrix m = phi_matrix(l);
  if (!m.empty() && g.size() != m[0].size()) throw_invariant("g has the wrong dimension");
  return mat_vec(m, g);
}

bool ghouila_houri(const IntMatrix& m, std::vector<int>* failing_cols) {
  if (m.empty()) return true;
  const std::size_t rows = m.size(), n = m[0].size();
  if (n > 24) throw_invariant("too many columns for an exhaustive Ghouila-Houri check");
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < n; ++c)
      if (mask >> c & 1UL) cols.push_back(c);
    bool found = false;
    // The first column is fixed in the positive part.
    for (unsigned long signs = 0; signs < (1UL << (cols.size() - 1)) && !found; ++signs) {
      bool ok = true;
      for (std::size_t r = 0; r < rows && ok; ++r) {
        long long s = m[r][cols[0]];
        for (std::size_t t = 1; t < cols.size(); ++t) s += (signs >> (t - 1) & 1UL) ? -m[r][cols[t]] : m[r][cols[t]];
        ok = s >= -1 && s <= 1;
      }
      found = ok;
    }
    if (!found) {
      if (failing_cols) failing_cols->assign(cols.begin(), cols.end());
      return false;
    }
  }
  return true;
}

TuReport check_tu_blocks(int l) {
  const IntMatrix m = phi_matrix(l);
  const std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
  // Union-find over rows (0..rows-1) and columns (rows..rows+cols-1).
  std::vector<std::size_t> parent(rows + cols);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (m[r][c] != 0) parent[find(r)] = find(rows + c);
  std::map<std::size_t, TuBlock> by_root;
  for (std::size_t c = 0; c < cols; ++c) by_root[find(rows + c)].cols.push_back(static_cast<int>(c));
  for (std::size_t r = 0; r < rows; ++r) {
    auto it = by_root.find(find(r));
    if (it != by_root.end()) it->second.rows.push_back(static_cast<int>(r));
  }
  TuReport rep;
  rep.l = l;
  for (auto& [root, blk] : by_root) rep.blocks.push_back(std::move(blk));
  std::sort(rep.blocks.begin(), rep.blocks.end(), [](const TuBlock& a, const TuBlock& b) { return a.cols < b.cols; });
  for (auto& blk : rep.blocks) {
    IntMatrix sub;
    for (int r : blk.rows) {
      IntVec row;
      for (int c : blk.cols) row.push_back(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
      sub.push_back(std::move(row));
    }
    std::vector<int> bad;
    blk.ok = ghouila_houri(sub, &bad);
    for (int b : bad) blk.failing_cols.push_back(blk.cols[static_cast<std::size_t>(b)]);
    rep.ok = rep.ok && blk.ok;
  }
  return rep;
}

std::string TuReport::to_json() const {
  const Diamond& d = build_diamond(l);
  const auto pts = hex_vertices(l);
  nlohmann::ordered_json j;
  j["relation"] = "phi blocks are totally unimodular";
  j["l"] = l;
  j["ok"] = ok;
  nlohmann::ordered_json bs = nlohmann::ordered_json::array();
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const auto& b : blocks) {
    nlohmann::ordered_json cols = nlohmann::ordered_json::array(), rows = nlohmann::ordered_json::array();
    for (int c : b.cols) cols.push_back(d.vertex(c).label());
    for (int r : b.rows) rows.push_back({pts[static_cast<std::size_t>(r)].first, pts[static_cast<std::size_t>(r)].second});
    bs.push_back({{"columns", cols}, {"rows", rows}, {"ok", b.ok}});
    if (!b.ok) {
      nlohmann::ordered_json fc = nlohmann::ordered_json::array();
      for (int c : b.failing_cols) fc.push_back(d.vertex(c).label());
      failures.push_back({{"columns", fc}});
    }
  }
  j["blocks"] = bs;
  j["failures"] = failures;
  return j.dump();
}

HexSystem hex_system(int l) {
  HexSystem hs;
  hs.l = l;
  hs.points = hex_vertices(l);
  std::set<IntVec> seen;
  auto row = [&](const std::vector<std::pair<int, int>>& ps, const std::string& tag) {
    IntVec r(hs.points.size(), 0);
    bool any = false;
    for (const auto& p : ps) {
      auto it = std::lower_bound(hs.points.begin(), hs.points.end(), p);
      if (it != hs.points.end() && *it == p) {
        ++r[static_cast<std::size_t>(it - hs.points.begin())];
        any = true;
      }
    }
    if (any && seen.insert(r).second) {
      hs.rows.push_back(std::move(r));
      hs.provenance.push_back(tag);
    }
  };
  auto tag = [](const std::string& fam, const std::string& rest) { return fam + " " + rest; };
  row({{-l, l}}, "h(-l,l)");
  for (int m = 0; m < l; ++m) {
    std::vector<std::pair<int, int>> ps;
    for (int n = 0; n <= m; ++n) ps.emplace_back(l - n, -l + n);
    row(ps, tag("rim", "m=" + std::to_string(m)));
  }
  for (int j = 1; j < l; ++j)
    for (int m = j; m < 2 * l; ++m) {
      std::vector<std::pair<int, int>> a, b;
      for (int n = j; n <= m; ++n) {
        a.emplace_back(j, l - n);
        b.emplace_back(n - l, -j);
      }
      const std::string at = "j=" + std::to_string(j) + " m=" + std::to_string(m);
      row(a, tag("column", at));
      row(b, tag("column-mirror", at));
    }
  for (int k = 1; k < l; ++k)
    for (int m = 0; m < l + k; ++m) {
      std::vector<std::pair<int, int>> a, b;
      for (int n = 0; n <= m; ++n) {
        a.emplace_back(k - n, -l + n);
        b.emplace_back(l - n, n - k);
      }
      const std::string at = "k=" + std::to_string(k) + " m=" + std::to_string(m);
      row(a, tag("diagonal", at));
      row(b, tag("diagonal-mirror", at));
    }
  for (int j = 1; j < l; ++j)
    for (int m = 0; m < 2 * l - j; ++m) {
      std::vector<std::pair<int, int>> a, b;
      for (int n = 0; n <= m; ++n) {
        a.emplace_back(-j, l - n);
        b.emplace_back(n - l, j);
      }
      const std::string at = "j=" + std::to_string(j) + " m=" + std::to_string(m);
      row(a, tag("row", at));
      row(b, tag("row-mirror", at));
    }
  return hs;
}

HRep HexSystem::to_hrep() const {
  HRep h;
  h.dim = static_cast<int>(points.size());
  h.ineq = rows;
  h.ineq_notes = provenance;
  return h;
}

bool HexSystem::contains(const IntVec& h) const {
  if (h.size() != points.size()) throw_invariant("h must be indexed by V_l");
  for (const auto& r : rows)
    if (dot(r, h) < 0) return false;
  return true;
}

bool hex_membership(int l, const IntVec& h) { return hex_system(l).contains(h); }

int sigma_hat_dim(int l) { return 2 * l + 4 * (l - 1); }

namespace {

void add_arm(int l, IntVec& v, int arm, int t, long long c) {
  if (t == 0) return;
  if (std::abs(t) > l) throw_invariant("arm coordinate out of range");
  if (arm == 1 || std::abs(t) == l) {
    v[static_cast<std::size_t>(t < 0 ? -t - 1 : l + t - 1)] += c;
    return;
  }
  const int base = 2 * l + (arm - 2) * 2 * (l - 1);
  v[static_cast<std::size_t>(base + (t < 0 ? -t - 1 : (l - 1) + t - 1))] += c;
}

}  // namespace

IntVec sigma_hat_point(int l, int i, int j) {
  IntVec v(static_cast<std::size_t>(sigma_hat_dim(l)), 0);
  if (i >= 0 && j >= 0) {
    add_arm(l, v, 1, i, 1);
    add_arm(l, v, 2, j, 1);
    add_arm(l, v, 3, l - i - j, 1);
    add_arm(l, v, 1, l, -1);
  } else if (i <= 0 && j <= 0) {
    add_arm(l, v, 1, j, -1);
    add_arm(l, v, 2, i, -1);
    add_arm(l, v, 3, -l - i - j, -1);
    add_arm(l, v, 1, -l, 1);
  } else {
    const int arm = i > 0 ? 1 : 2;
    const int hi = i > 0 ? i : j, lo = i > 0 ? j : i;
    add_arm(l, v, arm, hi, 1);
    add_arm(l, v, arm, lo, -1);
    const int s = (i + j > 0) - (i + j < 0);
    if (s != 0) {
      add_arm(l, v, 3, s * l - i - j, s);
      add_arm(l, v, 1, s * l, -s);
    }
  }
  return v;
}

IntVec sigma_hat_weight(int l, const IntVec& h) {
  const auto pts = hex_vertices(l);
  if (h.size() != pts.size()) throw_invariant("h must be indexed by V_l");
  IntVec w(static_cast<std::size_t>(sigma_hat_dim(l)), 0);
  for (std::size_t p = 0; p < pts.size(); ++p) {
    if (h[p] == 0) continue;
    w = add(w, sigma_hat_point(l, pts[p].first, pts[p].second), h[p]);
  }
  return w;
}

IntVec restrict_to_flag(int l, const IntVec& w) { return IntVec(w.begin(), w.begin() + 2 * l); }

}  // namespace kron
