#include "kron/lp.hpp"

#include "kron/error.hpp"

namespace kron {

LinearProgram::LinearProgram(const QMatrix& a, const QVec& b, std::size_t num_vars) { init(a, b, num_vars); }

LinearProgram::LinearProgram(const IntMatrix& a, const IntVec& b, std::size_t num_vars) {
  QVec qb;
  qb.reserve(b.size());
  for (long long x : b) qb.emplace_back(static_cast<long>(x));
  init(to_q(a), qb, num_vars);
}

void LinearProgram::pivot(Tableau& tab, std::vector<mpq_class>& obj, std::size_t r, std::size_t e) {
  const std::size_t cols = tab.cols;
  mpq_class inv = 1 / tab.at(r, e);
  for (std::size_t c = 0; c < cols; ++c) {
    if (c == e) continue;
    mpq_class& x = tab.at(r, c);
    if (sgn(x) != 0) {
      x *= inv;
      x = -x;
    }
  }
  tab.at(r, e) = inv;
  std::swap(tab.basic[r], tab.nonbasic[e - 1]);

  auto eliminate = [&](mpq_class* row) {
    if (sgn(row[e]) == 0) return;
    mpq_class f = row[e];
    row[e] = 0;
    const mpq_class* pr = &tab.t[r * cols];
    mpq_class tmp;
    for (std::size_t c = 0; c < cols; ++c) {
      if (sgn(pr[c]) == 0) continue;
      tmp = f * pr[c];
      row[c] += tmp;
    }
  };
  for (std::size_t i = 0; i < tab.rows; ++i) {
    if (i != r) eliminate(&tab.t[i * cols]);
  }
  if (!obj.empty()) eliminate(obj.data());
}

bool LinearProgram::optimize(Tableau& tab, std::vector<mpq_class>& obj, std::size_t& pivot_count) const {
  bool bland = false;
  const int nfree = static_cast<int>(n_);
  while (true) {
    std::size_t enter = 0;
    for (std::size_t e = 1; e < tab.cols; ++e) {
      if (sgn(obj[e]) == 0) continue;
      if (tab.nonbasic[e - 1] < nfree) return false;  // free direction with nonzero gain
      if (sgn(obj[e]) < 0) continue;
      if (enter == 0) {
        enter = e;
      } else if (bland) {
        if (tab.nonbasic[e - 1] < tab.nonbasic[enter - 1]) enter = e;
      } else if (obj[e] > obj[enter]) {
        enter = e;
      }
    }
    if (enter == 0) return true;

    std::size_t leave = tab.rows;
    mpq_class best;
    mpq_class ratio;
    for (std::size_t i = 0; i < tab.rows; ++i) {
      if (tab.free_row[i]) continue;
      const mpq_class& coef = tab.at(i, enter);
      if (sgn(coef) >= 0) continue;
      ratio = tab.at(i, 0) / coef;
      ratio = -ratio;
      if (leave == tab.rows || ratio < best ||
          (ratio == best && tab.basic[i] < tab.basic[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == tab.rows) return false;
    if (sgn(best) == 0) bland = true;
    pivot(tab, obj, leave, enter);
    ++pivot_count;
  }
}

void LinearProgram::init(const QMatrix& a, const QVec& b, std::size_t num_vars) {
  m_ = a.size();
  if (b.size() != m_) throw_invariant("LP right-hand side has wrong length");
  n_ = m_ ? a[0].size() : num_vars;
  for (const auto& row : a)
    if (row.size() != n_) throw_invariant("LP constraint rows differ in length");

  Tableau& tab = tab_;
  tab.rows = m_;
  tab.cols = n_ + 1;
  tab.t.assign(tab.rows * tab.cols, mpq_class(0));
  tab.basic.resize(m_);
  tab.nonbasic.resize(n_);
  tab.free_row.assign(m_, 0);
  for (std::size_t i = 0; i < m_; ++i) {
    tab.basic[i] = static_cast<int>(n_ + i);
    tab.at(i, 0) = b[i];
    for (std::size_t j = 0; j < n_; ++j) tab.at(i, j + 1) = -a[i][j];
  }
  for (std::size_t j = 0; j < n_; ++j) tab.nonbasic[j] = static_cast<int>(j);

  std::vector<mpq_class> none;
  for (std::size_t j = 0; j < n_; ++j) {
    std::size_t e = 0;
    for (std::size_t c = 1; c < tab.cols; ++c)
      if (tab.nonbasic[c - 1] == static_cast<int>(j)) e = c;
    if (e == 0) continue;
    std::size_t r = tab.rows;
    for (std::size_t i = 0; i < tab.rows; ++i) {
      if (tab.free_row[i] || sgn(tab.at(i, e)) == 0) continue;
      if (r == tab.rows || abs(tab.at(i, e)) > abs(tab.at(r, e))) r = i;
    }
    if (r == tab.rows) continue;
    pivot(tab, none, r, e);
    tab.free_row[r] = 1;
  }

  std::size_t worst = tab.rows;
  for (std::size_t i = 0; i < tab.rows; ++i) {
    if (tab.free_row[i] || sgn(tab.at(i, 0)) >= 0) continue;
    if (worst == tab.rows || tab.at(i, 0) < tab.at(worst, 0)) worst = i;
  }
  if (worst == tab.rows) {
    feasible_ = true;
    return;
  }

  // Phase 1 with a single artificial variable.
  const int art = static_cast<int>(n_ + m_);
  const std::size_t old_cols = tab.cols;
  const std::size_t new_cols = old_cols + 1;
  std::vector<mpq_class> grown(tab.rows * new_cols);
  for (std::size_t i = 0; i < tab.rows; ++i) {
    for (std::size_t c = 0; c < old_cols; ++c) grown[i * new_cols + c] = tab.t[i * old_cols + c];
    grown[i * new_cols + old_cols] = tab.free_row[i] ? 0 : 1;
  }
  tab.t = std::move(grown);
  tab.cols = new_cols;
  tab.nonbasic.push_back(art);
  std::vector<mpq_class> obj(new_cols);
  obj[old_cols] = -1;
  pivot(tab, obj, worst, old_cols);
  ++pivots_;
  std::size_t count = 0;
  optimize(tab, obj, count);
  pivots_ += count;
  if (sgn(obj[0]) < 0) {
    feasible_ = false;
    return;
  }
  feasible_ = true;

  // Drive the artificial variable out of the basis if it is still there.
  for (std::size_t i = 0; i < tab.rows; ++i) {
    if (tab.basic[i] != art) continue;
    std::size_t e = 0;
    for (std::size_t c = 1; c < tab.cols; ++c) {
      if (sgn(tab.at(i, c)) != 0) {
        e = c;
        break;
      }
    }
    if (e != 0) {
      std::vector<mpq_class> dummy;
      pivot(tab, dummy, i, e);
    } else {
      // Row reads art = 0 identically; drop it.
      for (std::size_t c = 0; c < tab.cols; ++c) tab.at(i, c) = tab.at(tab.rows - 1, c);
      tab.basic[i] = tab.basic[tab.rows - 1];
      tab.free_row[i] = tab.free_row[tab.rows - 1];
      --tab.rows;
      tab.t.resize(tab.rows * tab.cols);
      tab.basic.resize(tab.rows);
      tab.free_row.resize(tab.rows);
    }
    break;
  }
  std::size_t acol = 0;
  for (std::size_t c = 1; c < tab.cols; ++c)
    if (tab.nonbasic[c - 1] == art) acol = c;
  if (acol == 0) throw_invariant("internal: artificial variable lost in phase 1");
  std::vector<mpq_class> shrunk(tab.rows * (tab.cols - 1));
  for (std::size_t i = 0; i < tab.rows; ++i) {
    std::size_t k = 0;
    for (std::size_t c = 0; c < tab.cols; ++c)
      if (c != acol) shrunk[i * (tab.cols - 1) + k++] = tab.at(i, c);
  }
  tab.t = std::move(shrunk);
  tab.nonbasic.erase(tab.nonbasic.begin() + static_cast<long>(acol - 1));
  --tab.cols;
}

LpResult LinearProgram::solve_max(const QVec& c) const {
  LpResult res;
  if (c.size() != n_) throw_invariant("LP objective has wrong length");
  if (!feasible_) {
    res.status = LpStatus::Infeasible;
    return res;
  }
  Tableau tab = tab_;
  std::vector<mpq_class> obj(tab.cols);
  for (std::size_t j = 0; j < n_; ++j) {
    if (sgn(c[j]) == 0) continue;
    bool found = false;
    for (std::size_t e = 1; e < tab.cols && !found; ++e) {
      if (tab.nonbasic[e - 1] == static_cast<int>(j)) {
        obj[e] += c[j];
        found = true;
      }
    }
    for (std::size_t i = 0; i < tab.rows && !found; ++i) {
      if (tab.basic[i] == static_cast<int>(j)) {
        for (std::size_t e = 0; e < tab.cols; ++e) obj[e] += c[j] * tab.at(i, e);
        found = true;
      }
    }
  }
  std::size_t count = 0;
  bool bounded = optimize(tab, obj, count);
  if (!bounded) {
    res.status = LpStatus::Unbounded;
    return res;
  }
  res.status = LpStatus::Optimal;
  res.value = obj[0];
  res.x.assign(n_, mpq_class(0));
  for (std::size_t i = 0; i < tab.rows; ++i) {
    if (tab.basic[i] < static_cast<int>(n_)) res.x[static_cast<std::size_t>(tab.basic[i])] = tab.at(i, 0);
  }
  return res;
}

LpResult LinearProgram::maximize(const QVec& c) const { return solve_max(c); }

LpResult LinearProgram::minimize(const QVec& c) const {
  QVec neg(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) neg[j] = -c[j];
  LpResult r = solve_max(neg);
  if (r.status == LpStatus::Optimal) r.value = -r.value;
  return r;
}

LpResult LinearProgram::maximize_coord(std::size_t j) const {
  QVec c(n_, mpq_class(0));
  c.at(j) = 1;
  return maximize(c);
}

LpResult LinearProgram::minimize_coord(std::size_t j) const {
  QVec c(n_, mpq_class(0));
  c.at(j) = 1;
  return minimize(c);
}

QVec LinearProgram::point() const {
  QVec x(n_, mpq_class(0));
  if (!feasible_) return x;
  for (std::size_t i = 0; i < tab_.rows; ++i) {
    if (tab_.basic[i] < static_cast<int>(n_)) x[static_cast<std::size_t>(tab_.basic[i])] = tab_.at(i, 0);
  }
  return x;
}

}  // namespace kron
