#include <algorithm>
#include <set>

#include "doctest.h"
#include "kron/diamond.hpp"
#include "kron/error.hpp"
#include "kron/lattice.hpp"

using kron::DiamondVertex;
using kron::IntVec;

namespace {

std::vector<std::string> path_labels(const kron::Diamond& d, const kron::VertexPath& p) {
  std::vector<std::string> out;
  for (int v : p.vertices) out.push_back(d.vertex(v).label());
  return out;
}

// Row as the set of canonical vertex indices with coefficient 1 (all cone
// rows are 0/1 vectors).
std::set<int> support(const IntVec& row) {
  std::set<int> s;
  for (std::size_t c = 0; c < row.size(); ++c)
    if (row[c] != 0) s.insert(static_cast<int>(c));
  return s;
}

int alias(int a) { return kron::diamond2_index_of_alias(a); }

// The six points of the l = 2 example, in alias coordinates 1..6.
std::vector<IntVec> golden_points() {
  auto vec = [](std::initializer_list<std::pair<int, int>> terms) {
    IntVec g(6, 0);
    for (auto [a, c] : terms) g[static_cast<std::size_t>(alias(a))] += c;
    return g;
  };
  return {vec({{1, 1}, {5, 1}}), vec({{2, 1}, {6, 1}}), vec({{2, 1}, {5, 1}}),
          vec({{1, 1}, {6, 1}}), vec({{6, 1}, {1, 2}, {2, -1}}), vec({{3, 1}, {4, 1}, {1, -1}})};
}

}  // namespace

TEST_CASE("vertex canonicalization and labels") {
  auto h = DiamondVertex::make(-1, 2, 2, 0);
  REQUIRE(h);
  CHECK(h->sign == 1);
  CHECK(h->label() == "(2;2,0)+");
  auto m = DiamondVertex::make(-1, 2, 1, 1);
  REQUIRE(m);
  CHECK(m->label() == "(2;1,1)-");
  CHECK_FALSE(DiamondVertex::make(1, 2, 2, 1));
  CHECK_FALSE(DiamondVertex::make(1, 0, 0, 0));
  CHECK(DiamondVertex::parse("(2;1,1)-") == *m);
  CHECK(DiamondVertex::parse("(2;0,2)+").k == 2);
  CHECK_THROWS(DiamondVertex::parse("(2;1,2)+"));
}

TEST_CASE("diamond sizes and frozen vertices") {
  for (int l = 1; l <= 6; ++l) {
    const auto& d = kron::build_diamond(l);
    CHECK(d.size() == l * (l + 1));
    int frozen = 0;
    for (int v = 0; v < d.size(); ++v) frozen += d.frozen(v);
    CHECK(frozen == 2 * l);
    CHECK(d.num_mutable() == d.size() - 2 * l);
    // canonical order: levels ascending, then + with j descending, then -.
    for (int v = 0; v + 1 < d.size(); ++v) CHECK(d.vertex(v).i <= d.vertex(v + 1).i);
  }
  const auto& d2 = kron::build_diamond(2);
  std::set<std::string> frozen;
  for (int v = 0; v < d2.size(); ++v)
    if (d2.frozen(v)) frozen.insert(d2.vertex(v).label());
  CHECK(frozen == std::set<std::string>{"(2;2,0)+", "(2;1,1)+", "(2;1,1)-", "(2;0,2)+"});
  CHECK(d2.quiver().arrow_count(d2.index_of(1, 1, 0, 1), d2.index_of(1, 1, 1, 0)) == 2);
  CHECK(d2.labels() == std::vector<std::string>{"(1;1,0)+", "(1;0,1)+", "(2;2,0)+", "(2;1,1)+", "(2;0,2)+",
                                                "(2;1,1)-"});
  CHECK(d2.display_label(alias(4)) == "(2;1,1)- [4]");
  for (int a = 1; a <= 6; ++a) CHECK(kron::diamond2_alias_of_index(alias(a)) == a);

  const auto& d1 = kron::build_diamond(1);
  REQUIRE(d1.size() == 2);
  CHECK(d1.frozen(0));
  CHECK(d1.frozen(1));
  for (int v = 0; v < 2; ++v) CHECK(d1.flag_weight(v) == IntVec{-1, 1});
  CHECK(d1.lambda_weight(d1.index_of(1, 1, 1, 0)) == kron::LambdaWeight{1, 0});
  CHECK(d1.lambda_weight(d1.index_of(1, 1, 0, 1)) == kron::LambdaWeight{0, 1});
}

TEST_CASE("sigma tilde rows follow the weight vector formulas") {
  for (int l = 1; l <= 5; ++l) {
    const auto& d = kron::build_diamond(l);
    auto e = [l](int vertex) {
      IntVec v(static_cast<std::size_t>(2 * l), 0);
      if (vertex < 0) v[static_cast<std::size_t>(-vertex - 1)] = 1;
      if (vertex > 0) v[static_cast<std::size_t>(l + vertex - 1)] = 1;
      return v;
    };
    for (int idx = 0; idx < d.size(); ++idx) {
      const auto& x = d.vertex(idx);
      IntVec expect(static_cast<std::size_t>(2 * l), 0);
      auto add = [&](const IntVec& v, int c) {
        for (std::size_t t = 0; t < v.size(); ++t) expect[t] += c * v[t];
      };
      if (x.sign > 0) {
        add(e(x.j), 1);
        add(e(x.k), 1);
        add(e(-x.i), -1);
      } else {
        add(e(x.i), 1);
        add(e(-x.j), -1);
        add(e(-x.k), -1);
      }
      CHECK(d.flag_weight(idx) == expect);
      CHECK(d.lambda_weight(idx) == kron::LambdaWeight{x.j, x.k});
      IntVec row = d.sigma_tilde().rows[static_cast<std::size_t>(idx)];
      CHECK(IntVec(row.begin(), row.begin() + 2 * l) == expect);
      CHECK(row[static_cast<std::size_t>(2 * l)] == x.j);
      CHECK(row[static_cast<std::size_t>(2 * l + 1)] == x.k);
    }
  }
}

TEST_CASE("tri-broken paths") {
  const auto& d4 = kron::build_diamond(4);
  auto p = kron::tri_broken_path(4, 1, 3, 1);
  CHECK(path_labels(d4, p) == std::vector<std::string>{"(4;3,1)+", "(3;2,1)+", "(2;1,1)+", "(1;0,1)+",
                                                       "(1;1,0)+", "(2;1,1)+", "(3;1,2)+", "(4;1,3)+"});
  CHECK(kron::path_is_legal(d4, p));

  const auto& d2 = kron::build_diamond(2);
  CHECK(path_labels(d2, kron::tri_broken_path(2, 1, 1, 1)) ==
        std::vector<std::string>{"(2;1,1)+", "(1;0,1)+", "(1;1,0)+", "(2;1,1)+"});
  CHECK(path_labels(d2, kron::tri_broken_path(2, 0, 2, 1)) == std::vector<std::string>{"(1;0,1)+", "(2;0,2)+"});
  CHECK(path_labels(d2, kron::tri_broken_path(2, 2, 0, 1)) == std::vector<std::string>{"(2;2,0)+", "(1;1,0)+"});

  for (int l = 1; l <= 6; ++l) {
    const auto& d = kron::build_diamond(l);
    for (int j = 0; j <= l; ++j)
      for (int sign : {1, -1}) {
        const int k = l - j;
        auto path = kron::tri_broken_path(l, j, k, sign);
        CHECK(kron::path_is_legal(d, path));
        CHECK(path.steps.size() + 1 == path.vertices.size());
        if (j >= 1 && k >= 1) {
          CHECK(static_cast<int>(path.vertices.size()) == 2 * k + j + 1);
          CHECK(d.vertex(path.vertices.back()) == *DiamondVertex::make(sign, l, j, k));
        } else {
          CHECK(static_cast<int>(path.vertices.size()) == l);
        }
      }
  }
  CHECK_THROWS(kron::tri_broken_path(3, 1, 1, 1));
  CHECK_THROWS(kron::tri_broken_path(2, 3, -1, 1));

  // A bogus step is rejected.
  kron::VertexPath bad = kron::tri_broken_path(2, 1, 1, 1);
  std::reverse(bad.vertices.begin(), bad.vertices.end());
  CHECK_FALSE(kron::path_is_legal(d2, bad));
}

TEST_CASE("cone rows for l = 2") {
  auto cs = kron::cone_inequalities(2);
  CHECK(cs.dim == 6);
  REQUIRE(cs.rows.size() == 9);
  std::set<std::set<int>> got;
  for (const auto& r : cs.rows) {
    for (long long x : r) CHECK((x == 0 || x == 1));
    got.insert(support(r));
  }
  std::set<std::set<int>> expect = {
      {alias(3)},           {alias(1), alias(3)}, {alias(2), alias(1), alias(3)},
      {alias(4)},           {alias(1), alias(4)}, {alias(1), alias(2), alias(4)},
      {alias(6)},           {alias(2), alias(6)}, {alias(5)},
  };
  CHECK(got == expect);
  CHECK(std::find(cs.provenance.begin(), cs.provenance.end(), "tp+[2;1,1] suffix@1") != cs.provenance.end());
  CHECK(std::find(cs.provenance.begin(), cs.provenance.end(), "e[2;2,0]") != cs.provenance.end());
  for (const auto& g : golden_points()) CHECK(cs.contains(g));

  auto h = cs.to_hrep();
  CHECK(h.dim == 6);
  CHECK(h.ineq.size() == 9);
  CHECK(h.ineq_notes.size() == 9);
  CHECK(cs.to_json().find("\"provenance\"") != std::string::npos);
}

TEST_CASE("cone rows for l = 1 and row counts") {
  auto c1 = kron::cone_inequalities(1);
  std::set<std::set<int>> got;
  for (const auto& r : c1.rows) got.insert(support(r));
  CHECK(got == std::set<std::set<int>>{{0}, {1}});

  for (int l = 1; l <= 6; ++l) {
    auto cs = kron::cone_inequalities(l);
    CHECK(static_cast<int>(cs.rows.size()) == 3 * l * l - 2 * l + 1);
    CHECK(cs.provenance.size() == cs.rows.size());
    std::set<IntVec> uniq(cs.rows.begin(), cs.rows.end());
    CHECK(uniq.size() == cs.rows.size());
    const auto& d = kron::build_diamond(l);
    for (int v = 0; v < d.size(); ++v) {
      if (!d.frozen(v)) continue;
      IntVec e(static_cast<std::size_t>(d.size()), 0);
      e[static_cast<std::size_t>(v)] = 1;
      CHECK(cs.contains(e));
    }
  }
}

TEST_CASE("golden points carry the expected weights") {
  const auto& d = kron::build_diamond(2);
  const std::vector<kron::LambdaWeight> lam = {{3, 0}, {0, 3}, {2, 1}, {1, 2}, {2, 1}, {1, 2}};
  auto pts = golden_points();
  for (std::size_t t = 0; t < pts.size(); ++t) {
    CHECK(d.sigma_of(pts[t]).str() == "-1,-1;1,1");
    CHECK(d.lambda_of(pts[t]) == lam[t]);
  }
}

TEST_CASE("U-invariant g-vector families lie in the cone") {
  auto f2 = kron::u_invariant_gvectors(2);
  REQUIRE_FALSE(f2.empty());
  IntVec special(6, 0);
  special[static_cast<std::size_t>(alias(6))] = 1;
  special[static_cast<std::size_t>(alias(1))] = 2;
  special[static_cast<std::size_t>(alias(2))] = -1;
  CHECK(std::any_of(f2.begin(), f2.end(), [&](const auto& m) { return m.g == special; }));

  for (int l = 2; l <= 5; ++l) {
    auto cs = kron::cone_inequalities(l);
    auto fam = kron::u_invariant_gvectors(l);
    CHECK(fam.size() >= (l == 2 ? 1u : 2u));
    for (const auto& m : fam) CHECK_MESSAGE(cs.contains(m.g), m.name);
  }
}
