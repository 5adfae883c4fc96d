#include "doctest.h"
#include "kron/engine.hpp"
#include "kron/error.hpp"

using kron::KroneckerQuery;
using kron::Method;
using kron::Partition;

namespace {

long long poly(const Partition& mu, const Partition& nu, const Partition& lam, int l = 0) {
  return kron::kronecker({mu, nu, lam, l}).value();
}

}  // namespace

TEST_CASE("method names") {
  CHECK(kron::parse_method("polytope") == Method::Polytope);
  CHECK(kron::parse_method("characters") == Method::Characters);
  CHECK(kron::parse_method("lr") == Method::Lr);
  CHECK(kron::parse_method("all") == Method::All);
  CHECK(kron::method_name(Method::Lr) == "lr");
  CHECK_THROWS_AS(kron::parse_method("fast"), kron::ParseError);
}

TEST_CASE("query validation") {
  CHECK(KroneckerQuery{{2, 1}, {3}, {3}, 0}.resolve_l() == 2);
  CHECK(KroneckerQuery{{2, 1}, {3}, {3}, 4}.resolve_l() == 4);
  CHECK_THROWS_AS((KroneckerQuery{{2, 1}, {2}, {3}, 0}.resolve_l()), kron::InvariantError);
  CHECK_THROWS_AS((KroneckerQuery{{1, 1, 1}, {3}, {1, 1, 1}, 0}.resolve_l()), kron::InvariantError);
  CHECK_THROWS_AS((KroneckerQuery{{1, 1, 1}, {3}, {3}, 2}.resolve_l()), kron::InvariantError);
}

TEST_CASE("kronecker examples") {
  auto r3 = kron::kronecker({{2, 1}, {2, 1}, {3}, 0}, Method::All);
  CHECK(r3.agree());
  CHECK(r3.value() == 1);

  auto r21 = kron::kronecker({{2, 1}, {2, 1}, {2, 1}, 0}, Method::All);
  CHECK(r21.agree());
  CHECK(r21.value() == 1);
  CHECK(r21.count_lambda == 2u);
  CHECK(r21.count_lambda_omega == 1u);
  CHECK(r21.sigma.str() == "-1,-1;1,1");
  CHECK(r21.to_json({{2, 1}, {2, 1}, {2, 1}, 0}) ==
        R"({"mu":"2,1","nu":"2,1","lambda":"2,1","l":2,"sigma":"-1,-1;1,1","counts":{"lambda":2,"lambda_omega":1},)"
        R"("g":1,"methods":{"polytope":1,"characters":1,"lr":1},"agree":true})");

  CHECK(poly({1, 1}, {1, 1}, {1, 1}) == 0);
  CHECK(poly({2, 1}, {3}, {3}) == kron::kron_characters({3}, {2, 1}, {3}));
  CHECK(poly({5, 4, 3}, {4, 3, 2, 2, 1}, {9, 3}, 5) == 2);
}

TEST_CASE("truncated products") {
  CHECK(kron::truncated_product({2, 1}, {2, 1}).to_text() == "s[3] + s[2,1]");
  for (int n = 1; n <= 5; ++n) CHECK(kron::truncated_product(Partition{n}, Partition{n}).to_text() == "s[" + std::to_string(n) + "]");
  CHECK(kron::truncated_product({1, 1}, {1, 1}).to_text() == "s[2]");
  CHECK(kron::truncated_product({2, 1}, {2, 1}).homogeneous_degree() == 3);
}

TEST_CASE("truncated product coefficients equal kronecker coefficients") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& mu : kron::partitions_of(n, 3))
      for (const auto& nu : kron::partitions_of(n, 3)) {
        auto tp = kron::truncated_product(mu, nu);
        for (const auto& lam : kron::partitions_of(n, 2)) {
          const long long g = kron::kron_characters(lam, mu, nu);
          CHECK(tp.coeff(lam) == g);
          CHECK(poly(mu, nu, lam) == g);
        }
      }
}

TEST_CASE("l-stability, nonnegativity and mu-nu symmetry") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& mu : kron::partitions_of(n, 2))
      for (const auto& nu : kron::partitions_of(n, 2))
        for (const auto& lam : kron::partitions_of(n, 2)) {
          const int base = std::max({mu.length(), nu.length(), 1});
          auto first = kron::kronecker({mu, nu, lam, base});
          CHECK(*first.count_lambda >= *first.count_lambda_omega);
          for (int l = base + 1; l <= base + 2; ++l) CHECK(poly(mu, nu, lam, l) == first.value());
          auto swapped = kron::kronecker({nu, mu, lam, base}, Method::All);
          CHECK(swapped.agree());
          CHECK(swapped.value() == first.value());
        }
}

TEST_CASE("cross validation") {
  auto r = kron::cross_validate(6, 3);
  CHECK(r.agree);
  CHECK(r.checked > 100);
  CHECK(r.first_discrepancy.empty());
  auto empty = kron::cross_validate(-1, 3);
  CHECK(empty.agree);
  CHECK(empty.checked == 0);
  kron::EnumOptions opt;
  opt.jobs = 4;
  auto par = kron::cross_validate(5, 2, opt);
  CHECK(par.to_json() == kron::cross_validate(5, 2).to_json());
}

TEST_CASE("single triple agreement") {
  std::string detail;
  kron::EnumOptions opt;
  CHECK(kron::triple_agrees({{3, 2, 1}, {2, 2, 2}, {4, 2}, 0}, opt, &detail));
  CHECK(detail.empty());
}
