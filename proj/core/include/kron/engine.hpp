#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kron/diamond.hpp"
#include "kron/lattice.hpp"
#include "kron/partitions.hpp"
#include "kron/symfunc.hpp"

namespace kron {

enum class Method { Polytope, Characters, Lr, All };

Method parse_method(const std::string& s);
std::string method_name(Method m);

struct KroneckerQuery {
  Partition mu;
  Partition nu;
  Partition lambda;
  int l = 0;  // 0 selects max(length(mu), length(nu))

  // Validates sizes and lengths; returns the effective l.
  int resolve_l() const;
};

struct MethodReport {
  int l = 0;
  Weight sigma;
  std::optional<long long> polytope;
  std::optional<long long> characters;
  std::optional<long long> lr;
  // Polytope counts at lambda and lambda^omega.
  std::optional<std::size_t> count_lambda;
  std::optional<std::size_t> count_lambda_omega;
  std::map<std::string, double> timings_ms;

  bool agree() const;
  long long value() const;  // first available method value
  // Deterministic JSON; timings only when requested.
  std::string to_json(const KroneckerQuery& q, bool with_timings = false) const;
};

// G_{<>_l}(sigma), optionally cut by the lambda-weight equalities.
PolytopeSection diamond_section(int l, const Weight& sigma, const std::optional<LambdaWeight>& lambda = std::nullopt);

MethodReport kronecker(const KroneckerQuery& q, Method method = Method::Polytope, const EnumOptions& opt = {});

// [s_mu * s_nu]_2 from the lambda-weights of all points of G(sigma).
SchurExpansion truncated_product(const Partition& mu, const Partition& nu, int l = 0, const EnumOptions& opt = {});

struct CrossReport {
  int n_max = 0;
  int l_max = 0;
  std::size_t checked = 0;
  bool agree = true;
  std::string first_discrepancy;

  std::string to_json() const;
};

// All triples with |.| <= n_max, length(lambda) <= 2, length(mu), length(nu) <= l_max.
CrossReport cross_validate(int n_max, int l_max, const EnumOptions& opt = {});

// Runs all three methods on one query and reports whether they agree.
bool triple_agrees(const KroneckerQuery& q, const EnumOptions& opt, std::string* detail = nullptr);

}  // namespace kron
