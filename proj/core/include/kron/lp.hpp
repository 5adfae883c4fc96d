#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kron/linalg.hpp"

namespace kron {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  mpq_class value;
  QVec x;  // an optimal point when status == Optimal
};

// Exact rational LP in inequality form: constraints A x <= b, x free.
// Phase 1 runs once on construction; maximize/minimize reuse the feasible
// dictionary it leaves behind.
class LinearProgram {
 public:
  // num_vars is only needed when there are no constraint rows.
  LinearProgram(const QMatrix& a, const QVec& b, std::size_t num_vars = 0);
  LinearProgram(const IntMatrix& a, const IntVec& b, std::size_t num_vars = 0);

  bool feasible() const { return feasible_; }
  std::size_t num_vars() const { return n_; }
  LpResult maximize(const QVec& c) const;
  LpResult minimize(const QVec& c) const;
  // Max/min of a single coordinate.
  LpResult maximize_coord(std::size_t j) const;
  LpResult minimize_coord(std::size_t j) const;

  // A feasible point (valid when feasible()).
  QVec point() const;

  // Pivots spent in phase 1.
  std::size_t pivots() const { return pivots_; }

 private:
  struct Tableau {
    std::size_t rows = 0;
    std::size_t cols = 0;  // 1 + nonbasic count
    std::vector<mpq_class> t;  // row-major; column 0 is the constant term
    std::vector<int> basic;     // variable id per row
    std::vector<int> nonbasic;  // variable id per column 1..cols-1
    std::vector<char> free_row;
    mpq_class& at(std::size_t r, std::size_t c) { return t[r * cols + c]; }
    const mpq_class& at(std::size_t r, std::size_t c) const { return t[r * cols + c]; }
  };

  void init(const QMatrix& a, const QVec& b, std::size_t num_vars);
  static void pivot(Tableau& tab, std::vector<mpq_class>& obj, std::size_t r, std::size_t e);
  // Runs the simplex loop on obj (max); returns false when unbounded.
  bool optimize(Tableau& tab, std::vector<mpq_class>& obj, std::size_t& pivot_count) const;
  LpResult solve_max(const QVec& c) const;

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  bool feasible_ = false;
  Tableau tab_;
  std::size_t pivots_ = 0;
};

}  // namespace kron
