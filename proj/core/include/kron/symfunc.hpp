#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kron/partitions.hpp"

namespace kron {

// Littlewood-Richardson coefficient c^lambda_{mu,nu} (memoized, thread safe).
long long lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu);

// Multiplicity of S_lambda in S_eta1 (x) ... (x) S_etam.
long long multi_lr(const std::vector<Partition>& eta, const Partition& lambda);

struct CycleType {
  Partition rho;
  mpz_class zed;
  explicit CycleType(Partition r);
};

mpz_class zee(const Partition& rho);

// chi^lambda evaluated on the class of cycle type rho (Murnaghan-Nakayama).
mpz_class mn_character(const Partition& lambda, const Partition& rho);
inline mpz_class mn_character(const Partition& lambda, const CycleType& rho) {
  return mn_character(lambda, rho.rho);
}

// g^lambda_{mu,nu} from the character table of S_n.
long long kron_characters(const Partition& lambda, const Partition& mu, const Partition& nu);

long long a_k(const Partition& mu, const Partition& nu, int k);

// Necessary condition for c^mu_{eta1,eta2} > 0: containment and the Weyl
// inequalities mu(j+k-1) <= eta1(j) + eta2(k).
bool weyl_ok(const Partition& mu, const Partition& eta1, const Partition& eta2);

// g^lambda_{mu,nu} via the Jacobi-Trudi expansion over S_m and multiple LR
// coefficients. `prune` skips eta tuples that fail necessary conditions.
long long kron_via_lr(const Partition& lambda, const Partition& mu, const Partition& nu, int m,
                      bool prune = true);

// Recursive Horn test for c^lambda_{mu,nu} > 0 with all lengths <= m.
bool horn_positive(const Partition& lambda, const Partition& mu, const Partition& nu, int m);

// Finite Schur expansion sum c_lambda s_lambda with no zero coefficients.
// Keys are ordered lexicographically decreasing, so (3) precedes (2,1).
class SchurExpansion {
 public:
  using Map = std::map<Partition, long long, std::greater<Partition>>;

  SchurExpansion() = default;
  explicit SchurExpansion(Map coeffs);

  void add(const Partition& p, long long c);
  long long coeff(const Partition& p) const;
  const Map& coeffs() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }
  // Degree when every key has the same size.
  std::optional<int> homogeneous_degree() const;

  std::string to_json() const;  // {"(3)":1,"(2,1)":1}
  std::string to_text() const;  // s[3] + s[2,1]

  friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;

 private:
  Map coeffs_;
};

// Converts the weight multiset of a polynomial GL2 character to its Schur
// expansion; throws InvariantError when the multiset is not a character.
SchurExpansion schur_from_weights(const std::vector<LambdaWeight>& weights);

// Memo tables exposed for the persistent cache.
struct MemoSnapshot {
  std::vector<std::pair<std::string, long long>> lr;
  std::vector<std::pair<std::string, std::string>> characters;
};
MemoSnapshot snapshot_memo();
void preload_memo(const MemoSnapshot& snap);
void clear_memo();

}  // namespace kron
