#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace kron {

using IntVec = std::vector<long long>;
using IntMatrix = std::vector<IntVec>;
using QVec = std::vector<mpq_class>;
using QMatrix = std::vector<QVec>;

QMatrix to_q(const IntMatrix& m);
IntMatrix transpose(const IntMatrix& m);
IntVec mat_vec(const IntMatrix& m, const IntVec& v);
long long dot(const IntVec& a, const IntVec& b);

int rank(QMatrix m);
int rank(const IntMatrix& m);
mpq_class determinant(QMatrix m);
mpz_class determinant(const IntMatrix& m);

// {x in Z^n : A x = b} written as base + sum_t gens[t] * y_t with y free
// integers. gens are the columns of the parametrization, stored as vectors.
struct IntegerSolutionSet {
  bool empty = false;
  IntVec base;
  std::vector<IntVec> gens;
  // When the parametrization came from a unit-pivot elimination, free[t] is
  // the original coordinate that y_t equals; otherwise -1.
  std::vector<int> free_coord;

  std::size_t dim() const { return gens.size(); }
  IntVec point(const IntVec& y) const;
};

IntegerSolutionSet solve_integer(const IntMatrix& a, const IntVec& b, std::size_t n);

}  // namespace kron
