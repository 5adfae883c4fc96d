#include "doctest.h"
#include "kron/diamond.hpp"
#include "kron/error.hpp"
#include "kron/semiinv.hpp"
#include "oracles.hpp"

using kron::FlagRep;
using kron::QMatrix;

namespace {

QMatrix mul(const QMatrix& a, const QMatrix& b) {
  QMatrix c(a.size(), kron::QVec(b.empty() ? 0 : b[0].size(), mpq_class(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

QMatrix hcat(const QMatrix& a, const QMatrix& b) {
  QMatrix c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i].insert(c[i].end(), b[i].begin(), b[i].end());
  return c;
}

QMatrix vcat(const QMatrix& a, const QMatrix& b) {
  QMatrix c = a;
  c.insert(c.end(), b.begin(), b.end());
  return c;
}

QMatrix submatrix(const QMatrix& m, int r0, int r1, int c0, int c1) {
  QMatrix out;
  for (int r = r0; r <= r1; ++r) {
    kron::QVec row;
    for (int c = c0; c <= c1; ++c) row.push_back(m[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)]);
    out.push_back(row);
  }
  return out;
}

QMatrix scaled(QMatrix m, const mpq_class& t) {
  for (auto& row : m)
    for (auto& x : row) x *= t;
  return m;
}

QMatrix identity(int n) {
  QMatrix m(static_cast<std::size_t>(n), kron::QVec(static_cast<std::size_t>(n), mpq_class(0)));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return m;
}

}  // namespace

TEST_CASE("explicit l = 2 semi-invariants") {
  for (int trial = 0; trial < 20; ++trial) {
    auto rng = kron::trial_rng(17, trial);
    FlagRep m = FlagRep::random(2, rng);
    const QMatrix& bm1 = m.neg[0];  // 1 x 2
    const QMatrix& b1 = m.pos[0];   // 2 x 1
    CHECK(kron::eval_initial(1, 1, 1, 0, m) == mul(mul(bm1, m.a1), b1)[0][0]);
    CHECK(kron::eval_initial(1, 2, 1, 1, m) == oracle::det_cofactor(hcat(mul(m.a1, b1), mul(m.a2, b1))));
    CHECK(kron::eval_initial(-1, 2, 1, 1, m) == oracle::det_cofactor(vcat(mul(bm1, m.a1), mul(bm1, m.a2))));
    CHECK(kron::eval_initial(1, 2, 2, 0, m) == oracle::det_cofactor(m.a1));
    CHECK(kron::eval_initial(1, 2, 0, 2, m) == oracle::det_cofactor(m.a2));
    CHECK(kron::eval_initial(1, 1, 0, 1, m) == mul(mul(bm1, m.a2), b1)[0][0]);
  }
}

TEST_CASE("minor formula on normalized representations") {
  for (int l = 1; l <= 4; ++l) {
    const auto& d = kron::build_diamond(l);
    for (int trial = 0; trial < 10; ++trial) {
      auto rng = kron::trial_rng(3, trial);
      FlagRep m = FlagRep::random_normalized(l, rng);
      CHECK(m.is_normalized());
      for (const auto& v : d.vertices()) {
        const int i = v.i, j = v.j, k = v.k;
        QMatrix minor = v.sign > 0 ? submatrix(m.a2, j + 1, i, 1, k) : submatrix(m.a2, 1, k, j + 1, i);
        const mpq_class expect = oracle::det_cofactor(minor);
        CHECK(kron::eval_schofield(kron::initial_presentation(v.sign, i, j, k), m) == expect);
        CHECK(kron::eval_initial_minor(v.sign, i, j, k, m) == expect);
      }
    }
  }
  CHECK(kron::verify_initial_minors(3, 50, 1).ok());
}

TEST_CASE("identity central matrix kills off-diagonal minors") {
  for (int l = 2; l <= 4; ++l) {
    FlagRep m = FlagRep::normalized(l, identity(l));
    for (const auto& v : kron::build_diamond(l).vertices()) {
      const mpq_class s = kron::eval_initial(v.sign, v.i, v.j, v.k, m);
      if (v.j >= 1 && v.k >= 1)
        CHECK(s == 0);
      else
        CHECK(s == 1);
    }
  }
}

TEST_CASE("torus scaling by hand") {
  const mpq_class t1(3, 2), t2(-5, 7);
  for (int l = 1; l <= 3; ++l)
    for (int trial = 0; trial < 5; ++trial) {
      auto rng = kron::trial_rng(8, trial);
      FlagRep m = FlagRep::random(l, rng);
      FlagRep mt = m;
      mt.a1 = scaled(m.a1, t1);
      mt.a2 = scaled(m.a2, t2);
      for (const auto& v : kron::build_diamond(l).vertices()) {
        mpq_class factor = 1;
        for (int e = 0; e < v.j; ++e) factor *= t1;
        for (int e = 0; e < v.k; ++e) factor *= t2;
        CHECK(kron::eval_initial(v.sign, v.i, v.j, v.k, mt) == factor * kron::eval_initial(v.sign, v.i, v.j, v.k, m));
      }
    }
}

TEST_CASE("the horizontal exchange relation at l = 2") {
  for (int trial = 0; trial < 100; ++trial) {
    auto rng = kron::trial_rng(41, trial);
    FlagRep m = FlagRep::random(2, rng);
    const mpq_class lhs = kron::eval_initial(1, 1, 1, 0, m) * kron::eval_mutated(1, 1, 1, 0, m);
    const mpq_class s01 = kron::eval_initial(1, 1, 0, 1, m);
    const mpq_class rhs = kron::eval_initial(-1, 2, 1, 1, m) * kron::eval_initial(1, 2, 1, 1, m) +
                          s01 * s01 * kron::eval_initial(1, 2, 2, 0, m);
    CHECK(lhs == rhs);
    CHECK(kron::exchange_rhs(1, 1, 1, 0, m) == rhs);
  }
}

TEST_CASE("exchange relations for l = 2, 3, 4") {
  for (int l = 2; l <= 4; ++l) {
    auto rep = kron::verify_exchange(l, 50, 7, 4);
    CHECK_MESSAGE(rep.ok(), rep.to_json());
    CHECK(rep.checks == static_cast<std::size_t>(50 * kron::build_diamond(l).num_mutable()));
  }
  CHECK(kron::verify_exchange(3, 20, 9, 1).to_json() == kron::verify_exchange(3, 20, 9, 3).to_json());
}

TEST_CASE("group actions") {
  for (int l = 1; l <= 3; ++l) {
    auto rep = kron::verify_group_actions(l, 50, 11, 4);
    CHECK_MESSAGE(rep.ok(), rep.to_json());
    CHECK(rep.checks > 0);
  }
  auto witness = kron::u_prime_asymmetry_witness(2, 50, 5);
  CHECK(witness.has_value());
}

TEST_CASE("swapping the central arrows transposes the vertex") {
  for (int l = 2; l <= 3; ++l)
    for (int trial = 0; trial < 10; ++trial) {
      auto rng = kron::trial_rng(21, trial);
      FlagRep m = FlagRep::random(l, rng);
      FlagRep sw = m;
      std::swap(sw.a1, sw.a2);
      for (const auto& v : kron::build_diamond(l).vertices()) {
        const int sgn = (v.j * v.k) % 2 == 0 ? 1 : -1;
        const int s2 = v.horizontal() ? 1 : v.sign;
        CHECK(kron::eval_initial(s2, v.i, v.k, v.j, sw) == sgn * kron::eval_initial(v.sign, v.i, v.j, v.k, m));
      }
    }
}

TEST_CASE("restriction") {
  for (int l = 2; l <= 4; ++l) {
    auto rng = kron::trial_rng(2, l);
    FlagRep m = FlagRep::random_normalized(l, rng);
    FlagRep r = kron::restrict_flag(m);
    CHECK(r.l == l - 1);
    CHECK(r.is_normalized());
    CHECK(r.a2 == submatrix(m.a2, 1, l - 1, 1, l - 1));

    FlagRep id = FlagRep::normalized(l, identity(l));
    FlagRep rid = kron::restrict_flag(id);
    CHECK(rid.a1 == identity(l - 1));
    CHECK(rid.a2 == identity(l - 1));
  }
  auto rng = kron::trial_rng(0, 0);
  CHECK_THROWS_AS(kron::restrict_flag(FlagRep::random(1, rng)), kron::InvariantError);

  for (int l = 2; l <= 3; ++l) {
    auto table = kron::restriction_sign_table(l, 50, 13);
    CHECK(table.size() == static_cast<std::size_t>((l - 1) * l));
    for (const auto& row : table) CHECK_MESSAGE(row.epsilon.has_value(), row.vertex.label());
  }
}

TEST_CASE("shape and squareness errors") {
  auto rng = kron::trial_rng(1, 1);
  FlagRep m = FlagRep::random(2, rng);
  m.a1.pop_back();
  CHECK_THROWS_AS(m.validate(), kron::InvariantError);

  FlagRep ok = FlagRep::random(2, rng);
  kron::PresentationMatrix p = kron::initial_presentation(1, 2, 1, 1);
  p.targets.push_back(1);
  for (auto& row : p.entries) row.push_back({});
  CHECK_THROWS_AS(kron::eval_schofield(p, ok), kron::InvariantError);
}

TEST_CASE("trial generators are deterministic") {
  auto a = kron::trial_rng(5, 3);
  auto b = kron::trial_rng(5, 3);
  auto c = kron::trial_rng(5, 4);
  const auto x = a();
  CHECK(x == b());
  CHECK(x != c());
}
