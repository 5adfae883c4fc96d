#include <algorithm>
#include <random>
#include <tuple>

#include "doctest.h"
#include "kron/error.hpp"
#include "kron/symfunc.hpp"
#include "oracles.hpp"

using kron::Partition;

namespace {

std::vector<Partition> all_upto(int n_max) {
  std::vector<Partition> out;
  for (int n = 0; n <= n_max; ++n)
    for (const auto& p : kron::partitions_of(n)) out.push_back(p);
  return out;
}

Partition ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

}  // namespace

TEST_CASE("lr examples") {
  for (int j = 0; j <= 4; ++j)
    for (int k = 0; k <= 4; ++k) CHECK(kron::lr_coeff(Partition{j + k}, Partition{j}, Partition{k}) == 1);
  CHECK(kron::lr_coeff({3, 1}, {2}, {1, 1, 1}) == 0);
  CHECK(kron::lr_coeff({5, 4, 3}, {4, 3, 2}, {2, 1}) == 2);
  CHECK(kron::lr_coeff({3, 2, 1}, {2, 1}, {2, 1}) == 2);
  CHECK(kron::lr_coeff({2, 1}, {3}, {}) == 0);
}

TEST_CASE("lr agrees with the character restriction oracle") {
  const auto ps = all_upto(4);
  std::size_t checked = 0;
  for (const auto& mu : ps)
    for (const auto& nu : ps) {
      if (mu.size() + nu.size() > 7 || mu.size() + nu.size() == 0) continue;
      for (const auto& lam : kron::partitions_of(mu.size() + nu.size())) {
        CHECK_MESSAGE(kron::lr_coeff(lam, mu, nu) == oracle::lr_via_characters(lam, mu, nu),
                      lam.paren() << mu.paren() << nu.paren());
        CHECK(kron::lr_coeff(lam, mu, nu) == kron::lr_coeff(lam, nu, mu));
        ++checked;
      }
    }
  CHECK(checked > 500);
}

TEST_CASE("multi lr") {
  for (const auto& lam : kron::partitions_of(4))
    for (const auto& eta : kron::partitions_of(4)) CHECK(kron::multi_lr({eta}, lam) == (eta == lam ? 1 : 0));
  CHECK(kron::multi_lr({{4, 3, 2}, {2, 1}}, {4, 3, 2, 2, 1}) == 1);

  const auto ps = all_upto(6);
  for (const auto& lam : ps)
    for (const auto& mu : ps) {
      if (mu.size() > lam.size()) continue;
      for (const auto& nu : kron::partitions_of(lam.size() - mu.size()))
        CHECK(kron::multi_lr({mu, nu}, lam) == kron::lr_coeff(lam, mu, nu));
    }

  std::mt19937_64 rng(11);
  const auto small = all_upto(3);
  for (int t = 0; t < 40; ++t) {
    std::vector<Partition> eta;
    int total = 0;
    for (int c = 0; c < 3; ++c) {
      eta.push_back(small[rng() % small.size()]);
      total += eta.back().size();
    }
    for (const auto& lam : kron::partitions_of(total)) {
      const long long base = kron::multi_lr(eta, lam);
      auto perm = eta;
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(kron::multi_lr(perm, lam) == base);
    }
  }
}

TEST_CASE("characters") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& rho : kron::partitions_of(n)) {
      CHECK(kron::mn_character(Partition{n}, rho) == 1);
      // sign of the class is (-1)^(n - length)
      CHECK(kron::mn_character(ones(n), rho) == (((n - rho.length()) % 2 == 0) ? 1 : -1));
    }
  CHECK(kron::mn_character({2, 1}, {3}) == -1);
  CHECK(kron::mn_character({2, 1}, {1, 1, 1}) == 2);
  CHECK_THROWS_AS(kron::mn_character({2, 1}, {2}), kron::InvariantError);

  // chi(identity) is the hook length dimension.
  for (int n = 1; n <= 10; ++n)
    for (const auto& lam : kron::partitions_of(n)) CHECK(kron::mn_character(lam, ones(n)) == oracle::hook_dimension(lam));
}

TEST_CASE("column orthogonality and z") {
  for (int n = 1; n <= 10; ++n) {
    const auto ps = kron::partitions_of(n);
    for (const auto& rho : ps) {
      kron::CycleType ct(rho);
      CHECK(ct.zed > 0);
      CHECK(ct.zed == oracle::zee_direct(rho));
      mpz_class sum = 0;
      for (const auto& lam : ps) {
        mpz_class v = kron::mn_character(lam, ct);
        sum += v * v;
      }
      CHECK(sum == ct.zed);
    }
  }
}

TEST_CASE("kronecker via characters") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lam : kron::partitions_of(n))
      for (const auto& mu : kron::partitions_of(n)) {
        CHECK(kron::kron_characters(lam, mu, Partition{n}) == (lam == mu ? 1 : 0));
        CHECK(kron::kron_characters(lam, mu, ones(n)) == (lam == kron::conjugate(mu) ? 1 : 0));
      }
  CHECK(kron::kron_characters({1, 1}, {1, 1}, {1, 1}) == 0);
  CHECK(kron::kron_characters({2, 2}, {2, 2}, {2, 2}) == 1);
  CHECK(kron::kron_characters({3}, {2, 1}, {2, 1}) == 1);
  CHECK(kron::kron_characters({2, 1}, {2, 1}, {2, 1}) == 1);
  CHECK_THROWS_AS(kron::kron_characters({2}, {1}, {1}), kron::InvariantError);
}

TEST_CASE("kronecker symmetries for n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    const auto ps = kron::partitions_of(n);
    for (std::size_t a = 0; a < ps.size(); ++a)
      for (std::size_t b = a; b < ps.size(); ++b)
        for (std::size_t c = b; c < ps.size(); ++c) {
          const auto &x = ps[a], &y = ps[b], &z = ps[c];
          const long long g = kron::kron_characters(x, y, z);
          CHECK(g >= 0);
          CHECK(kron::kron_characters(y, x, z) == g);
          CHECK(kron::kron_characters(z, y, x) == g);
          CHECK(kron::kron_characters(x, z, y) == g);
          CHECK(kron::kron_characters(x, kron::conjugate(y), kron::conjugate(z)) == g);
        }
  }
}

TEST_CASE("a_k") {
  CHECK(kron::a_k({4}, {4}, 4) == 1);
  CHECK(kron::a_k({2, 1}, {2, 1}, 2) == 2);
  CHECK(kron::a_k({2, 1}, {2, 1}, 5) == 0);
  CHECK(kron::a_k({2, 1}, {2, 1}, -1) == 0);
  // Brute force over (eta1, eta2) with the character oracle for LR.
  for (const auto& mu : kron::partitions_of(5))
    for (const auto& nu : kron::partitions_of(5))
      for (int k = 0; k <= 5; ++k) {
        long long brute = 0;
        for (const auto& e1 : kron::partitions_of(k))
          for (const auto& e2 : kron::partitions_of(5 - k))
            brute += oracle::lr_via_characters(mu, e1, e2) * oracle::lr_via_characters(nu, e1, e2);
        CHECK(kron::a_k(mu, nu, k) == brute);
      }
  // The g = 2 family with j = 3, k = 1.
  CHECK(kron::a_k({5, 4, 3}, {4, 3, 2, 2, 1}, 10) == 0);
}

TEST_CASE("kronecker via lr") {
  CHECK(kron::kron_via_lr({2, 1}, {2, 1}, {2, 1}, 2) == 1);
  CHECK(kron::kron_via_lr({9, 3}, {5, 4, 3}, {4, 3, 2, 2, 1}, 2) == 2);
  CHECK_THROWS_AS(kron::kron_via_lr({1, 1, 1}, {3}, {3}, 2), kron::InvariantError);

  for (int n = 1; n <= 8; ++n) {
    const auto lams = kron::partitions_of(n, 2);
    const auto ps = kron::partitions_of(n);
    for (const auto& lam : lams)
      for (const auto& mu : ps)
        for (const auto& nu : ps) {
          if (nu < mu) continue;
          const long long g = kron::kron_characters(lam, mu, nu);
          CHECK(kron::kron_via_lr(lam, mu, nu, 2) == g);
          if (n <= 6) {
            CHECK(kron::kron_via_lr(lam, mu, nu, 2, false) == g);
            CHECK(kron::kron_via_lr(lam, mu, nu, 3) == g);
          }
        }
  }
}

TEST_CASE("horn positivity") {
  CHECK(kron::horn_positive({4}, {3}, {1}, 1));
  CHECK_FALSE(kron::horn_positive({1, 1, 1}, {2}, {1}, 3));
  CHECK(kron::lr_coeff({1, 1, 1}, {2}, {1}) == 0);
  CHECK_FALSE(kron::weyl_ok({1, 1, 1}, {2}, {1}));

  // Low-rank base triples for m = 2, with both orders of the lower pair.
  using P = kron::Partition;
  for (const auto& [lam, mu, nu] : std::vector<std::tuple<P, P, P>>{
           {{}, {}, {}}, {{1}, {}, {1}}, {{1, 1}, {}, {1, 1}}, {{1, 1}, {1}, {1}}}) {
    CHECK(kron::lr_coeff(lam, mu, nu) == 1);
    CHECK(kron::lr_coeff(lam, nu, mu) == 1);
    CHECK(kron::horn_positive(lam, mu, nu, 2));
  }

  std::size_t positive = 0, checked = 0;
  for (int n = 0; n <= 8; ++n)
    for (const auto& lam : kron::partitions_of(n, 4))
      for (int m = 0; m <= n; ++m)
        for (const auto& mu : kron::partitions_of(m, 4))
          for (const auto& nu : kron::partitions_of(n - m, 4)) {
            const bool lr = kron::lr_coeff(lam, mu, nu) > 0;
            CHECK_MESSAGE(kron::horn_positive(lam, mu, nu, 4) == lr, lam.paren() << mu.paren() << nu.paren());
            if (lr) CHECK(kron::weyl_ok(lam, mu, nu));
            positive += lr;
            ++checked;
          }
  CHECK(positive > 100);
  CHECK(checked > positive);
}

TEST_CASE("schur expansion from GL2 weights") {
  using kron::LambdaWeight;
  auto s1 = kron::schur_from_weights({{1, 0}, {0, 1}});
  CHECK(s1.to_json() == "{\"(1)\":1}");
  auto s = kron::schur_from_weights({{3, 0}, {2, 1}, {2, 1}, {1, 2}, {1, 2}, {0, 3}});
  CHECK(s.coeff({3}) == 1);
  CHECK(s.coeff({2, 1}) == 1);
  CHECK(s.coeffs().size() == 2);
  CHECK(s.to_text() == "s[3] + s[2,1]");
  CHECK(s.to_json() == "{\"(3)\":1,\"(2,1)\":1}");
  CHECK(s.homogeneous_degree() == 3);
  CHECK(kron::schur_from_weights({}).empty());
  CHECK_THROWS_AS(kron::schur_from_weights({{2, 0}}), kron::InvariantError);
  CHECK_THROWS_AS(kron::schur_from_weights({{1, 1}, {2, 0}, {0, 2}, {0, 2}}), kron::InvariantError);

  kron::SchurExpansion e;
  e.add({2}, 1);
  e.add({2}, -1);
  CHECK(e.empty());
}
