#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "kron/diamond.hpp"
#include "kron/linalg.hpp"

namespace kron {

// Representation of K_{l,l}^2 with dimension vector beta_l(i) = |i|, using
// row-vector conventions: the map of an arrow s -> t is a dim(s) x dim(t)
// matrix and paths compose left to right.
struct FlagRep {
  int l = 0;
  std::vector<QMatrix> neg;  // neg[i-1] = B_{-i}, i x (i+1), arrow -i -> -(i+1)
  std::vector<QMatrix> pos;  // pos[i-1] = B_i, (i+1) x i, arrow i+1 -> i
  QMatrix a1;                // l x l
  QMatrix a2;

  void validate() const;

  // Entries uniform in [-9, 9].
  static FlagRep random(int l, std::mt19937_64& rng);
  // Arms (I 0) and (I 0)^T, A1 = I, A2 as given.
  static FlagRep normalized(int l, const QMatrix& a2);
  static FlagRep random_normalized(int l, std::mt19937_64& rng);
  bool is_normalized() const;
};

// The unique path -x -> ... -> -l -a_eps-> l -> ... -> y, an x x y matrix.
QMatrix path_matrix(const FlagRep& m, int eps, int x, int y);

struct PathTerm {
  int eps = 1;
  long long coef = 1;
};

// Presentation P(f1) -> P(f0): entries[a][b] is the combination of paths
// from source summand a to target summand b. Summands are arm vertices given
// by their index: sources on the positive arm, targets on the negative arm.
struct PresentationMatrix {
  std::vector<int> sources;
  std::vector<int> targets;
  std::vector<std::vector<std::vector<PathTerm>>> entries;

  PresentationMatrix transposed() const;
  // Exchanges a1 and a2.
  PresentationMatrix swapped_arrows() const;
};

// f^{sign}_{i;j,k}; horizontal vertices ignore the sign.
PresentationMatrix initial_presentation(int sign, int i, int j, int k);
// f'_u for a mutable vertex u (i < l).
PresentationMatrix mutated_presentation(int sign, int i, int j, int k);

// det Hom(f, M); the determinant of an empty block matrix is 1.
mpq_class eval_schofield(const PresentationMatrix& f, const FlagRep& m);

// s^{sign}_{i;j,k}(M), with s = 1 at i = 0.
mpq_class eval_initial(int sign, int i, int j, int k, const FlagRep& m);
// Minor of A2 for a normalized representation.
mpq_class eval_initial_minor(int sign, int i, int j, int k, const FlagRep& m);
// s'_u(M) including the exchange sign.
mpq_class eval_mutated(int sign, int i, int j, int k, const FlagRep& m);

// Right-hand side of the exchange relation at u.
mpq_class exchange_rhs(int sign, int i, int j, int k, const FlagRep& m);

// The l-1 representation obtained by composing the central arrows with the
// last arm arrows.
FlagRep restrict_flag(const FlagRep& m);

struct VerifyFailure {
  std::string check;
  std::string vertex;
  int trial = 0;
  std::string lhs;
  std::string rhs;
};

struct VerifyReport {
  std::string relation;
  int l = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::size_t checks = 0;
  std::vector<VerifyFailure> failures;

  bool ok() const { return failures.empty(); }
  std::string to_json() const;
};

// Deterministic per-trial generator.
std::mt19937_64 trial_rng(std::uint64_t seed, int trial);

VerifyReport verify_exchange(int l, int trials, std::uint64_t seed, unsigned jobs = 1);
// T-action, U-invariance for j >= k, transposition, SL invariance and
// rescaling by t^{sigma(v)}.
VerifyReport verify_group_actions(int l, int trials, std::uint64_t seed, unsigned jobs = 1);
// eval_initial_minor against eval_schofield on normalized representations.
VerifyReport verify_initial_minors(int l, int trials, std::uint64_t seed);

// A witness that s_{2;2,0} is moved by the lower unipotent action, or
// nullopt when none was found in the given number of trials.
std::optional<std::string> u_prime_asymmetry_witness(int l, int trials, std::uint64_t seed);

struct RestrictionSign {
  DiamondVertex vertex;
  int l = 0;
  // +1 or -1 when constant over all trials with nonzero values.
  std::optional<int> epsilon;
};

// s^{(l-1)}_v(restrict(M)) / s^{(l)}_v(M) for every vertex v of the l-1 diamond.
std::vector<RestrictionSign> restriction_sign_table(int l, int trials, std::uint64_t seed);

}  // namespace kron
