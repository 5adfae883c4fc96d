#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kron/hrep.hpp"
#include "kron/linalg.hpp"

namespace kron {

// {g : ineq . g >= 0, eq . g = eq_rhs}.
struct PolytopeSection {
  int dim = 0;
  IntMatrix ineq;
  IntMatrix eq;
  IntVec eq_rhs;

  PolytopeSection() = default;
  PolytopeSection(int dim_, IntMatrix ineq_) : dim(dim_), ineq(std::move(ineq_)) {}

  void add_equality(IntVec a, long long b);
  bool contains(const IntVec& g) const;

  HRep to_hrep() const;
  static PolytopeSection from_hrep(const HRep& h);
};

enum class BoundStatus { Bounded, Unbounded, Infeasible };

struct BoundReport {
  BoundStatus status = BoundStatus::Infeasible;
  // Exact coordinate ranges of the rational relaxation (when bounded).
  std::vector<mpq_class> lower;
  std::vector<mpq_class> upper;
  int unbounded_coord = -1;  // first coordinate without a finite bound
  std::string message;
};

BoundReport analyze_bounds(const PolytopeSection& s);

// True iff every coordinate has finite max and min; throws InfeasibleError
// when the rational relaxation is empty.
bool is_bounded(const PolytopeSection& s);

struct EnumOptions {
  unsigned jobs = 1;
  // DFS depth at which subtrees are handed to workers.
  int parallel_depth = 2;
};

struct LatticePointSet {
  std::vector<IntVec> points;  // lexicographically sorted, duplicate free
  bool exact = true;
};

struct EnumStats {
  std::size_t nodes = 0;
  std::size_t lp_solves = 0;
  std::size_t free_dims = 0;
};

// Exact integer points. An infeasible section yields the empty set; an
// unbounded one throws UnboundedError.
LatticePointSet enumerate(const PolytopeSection& s, const EnumOptions& opt = {}, EnumStats* stats = nullptr);
std::size_t count(const PolytopeSection& s, const EnumOptions& opt = {}, EnumStats* stats = nullptr);

// For each row a of the cone {g : rows . g >= 0}: a rational point that
// satisfies every other row strictly and violates a, or nullopt when a is
// redundant.
std::vector<std::optional<QVec>> irredundancy_certificates(const IntMatrix& rows, int dim);

}  // namespace kron
