#include "kron/linalg.hpp"

#include <algorithm>
#include <utility>

#include "kron/error.hpp"

namespace kron {

namespace {

long long to_ll(const mpz_class& z) {
  if (!z.fits_slong_p()) throw_invariant("integer overflow in lattice parametrization");
  return z.get_si();
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    mpq_class inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      mpq_class f = m[i][c];
      for (std::size_t j = c; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

bool is_integer(const mpq_class& q) { return q.get_den() == 1; }

IntegerSolutionSet solve_hnf(const IntMatrix& a, const IntVec& b, std::size_t n) {
  const std::size_t m = a.size();
  std::vector<std::vector<mpz_class>> h(m, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) h[i][j] = static_cast<long>(a[i][j]);
  std::vector<std::vector<mpz_class>> u(n, std::vector<mpz_class>(n));
  for (std::size_t j = 0; j < n; ++j) u[j][j] = 1;

  auto col_swap = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (auto& row : h) std::swap(row[x], row[y]);
    for (auto& row : u) std::swap(row[x], row[y]);
  };
  auto col_axpy = [&](std::size_t dst, std::size_t src, const mpz_class& f) {
    for (auto& row : h) row[dst] -= f * row[src];
    for (auto& row : u) row[dst] -= f * row[src];
  };

  std::size_t k = 0;
  std::vector<long> pivot_of_row(m, -1);
  for (std::size_t r = 0; r < m && k < n; ++r) {
    while (true) {
      std::size_t best = n;
      for (std::size_t c = k; c < n; ++c) {
        if (sgn(h[r][c]) == 0) continue;
        if (best == n || abs(h[r][c]) < abs(h[r][best])) best = c;
      }
      if (best == n) break;
      col_swap(k, best);
      bool done = true;
      for (std::size_t c = k + 1; c < n; ++c) {
        if (sgn(h[r][c]) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), h[r][c].get_mpz_t(), h[r][k].get_mpz_t());
        col_axpy(c, k, q);
        if (sgn(h[r][c]) != 0) done = false;
      }
      if (done) break;
    }
    if (sgn(h[r][k]) != 0) {
      if (sgn(h[r][k]) < 0) {
        for (auto& row : h) row[k] = -row[k];
        for (auto& row : u) row[k] = -row[k];
      }
      pivot_of_row[r] = static_cast<long>(k);
      ++k;
    }
  }

  IntegerSolutionSet out;
  std::vector<mpz_class> y(n);
  std::size_t solved = 0;
  for (std::size_t r = 0; r < m; ++r) {
    mpz_class val = static_cast<long>(b[r]);
    for (std::size_t q = 0; q < solved; ++q) val -= h[r][q] * y[q];
    if (pivot_of_row[r] >= 0) {
      auto p = static_cast<std::size_t>(pivot_of_row[r]);
      if (!mpz_divisible_p(val.get_mpz_t(), h[r][p].get_mpz_t())) {
        out.empty = true;
        return out;
      }
      y[p] = val / h[r][p];
      solved = p + 1;
    } else {
      for (std::size_t q = solved; q < n; ++q)
        if (sgn(h[r][q]) != 0) throw_invariant("internal: echelon form not reduced");
      if (sgn(val) != 0) {
        out.empty = true;
        return out;
      }
    }
  }
  out.base.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class s = 0;
    for (std::size_t q = 0; q < k; ++q) s += u[i][q] * y[q];
    out.base[i] = to_ll(s);
  }
  for (std::size_t q = k; q < n; ++q) {
    IntVec g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = to_ll(u[i][q]);
    out.gens.push_back(std::move(g));
    out.free_coord.push_back(-1);
  }
  return out;
}

}  // namespace

QMatrix to_q(const IntMatrix& m) {
  QMatrix q(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    q[i].reserve(m[i].size());
    for (long long x : m[i]) q[i].emplace_back(static_cast<long>(x));
  }
  return q;
}

IntMatrix transpose(const IntMatrix& m) {
  if (m.empty()) return {};
  IntMatrix t(m[0].size(), IntVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

IntVec mat_vec(const IntMatrix& m, const IntVec& v) {
  IntVec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
  return out;
}

long long dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw_invariant("dot product of vectors of different length");
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

int rank(QMatrix m) {
  if (m.empty()) return 0;
  return static_cast<int>(rref(m, m[0].size()).size());
}

int rank(const IntMatrix& m) { return rank(to_q(m)); }

mpq_class determinant(QMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw_invariant("determinant of a non-square matrix");
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m[p][c]) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m[i][c]) == 0) continue;
      mpq_class f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

mpz_class determinant(const IntMatrix& m) {
  // Bareiss fraction-free elimination.
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw_invariant("determinant of a non-square matrix");
  if (n == 0) return 1;
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m[i][j]);
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a[k][k]) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a[p][k]) == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

IntVec IntegerSolutionSet::point(const IntVec& y) const {
  if (y.size() != gens.size()) throw_invariant("parameter vector has wrong length");
  IntVec x = base;
  for (std::size_t t = 0; t < gens.size(); ++t) {
    if (y[t] == 0) continue;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += gens[t][i] * y[t];
  }
  return x;
}

IntegerSolutionSet solve_integer(const IntMatrix& a, const IntVec& b, std::size_t n) {
  if (a.size() != b.size()) throw_invariant("equality system and right-hand side differ in length");
  for (const auto& row : a)
    if (row.size() != n) throw_invariant("equality row has wrong dimension");

  IntegerSolutionSet out;
  QMatrix aug(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (long long x : a[i]) aug[i].emplace_back(static_cast<long>(x));
    aug[i].emplace_back(static_cast<long>(b[i]));
  }
  std::vector<std::size_t> pivots = rref(aug, n);
  for (std::size_t i = pivots.size(); i < aug.size(); ++i) {
    if (sgn(aug[i][n]) != 0) {
      out.empty = true;
      return out;
    }
  }
  bool integral = true;
  for (std::size_t r = 0; r < pivots.size() && integral; ++r)
    for (std::size_t j = 0; j < n; ++j)
      if (!is_integer(aug[r][j])) {
        integral = false;
        break;
      }
  if (!integral) return solve_hnf(a, b, n);

  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (!is_integer(aug[r][n])) {
      out.empty = true;
      return out;
    }
  }
  std::vector<char> is_pivot(n, 0);
  for (std::size_t c : pivots) is_pivot[c] = 1;
  out.base.assign(n, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) out.base[pivots[r]] = to_ll(aug[r][n].get_num());
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    IntVec g(n, 0);
    g[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) g[pivots[r]] = -to_ll(aug[r][f].get_num());
    out.gens.push_back(std::move(g));
    out.free_coord.push_back(static_cast<int>(f));
  }
  return out;
}

}  // namespace kron
