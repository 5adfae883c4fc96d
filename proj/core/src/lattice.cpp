#include "kron/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "kron/error.hpp"
#include "kron/lp.hpp"

namespace kron {

void PolytopeSection::add_equality(IntVec a, long long b) {
  if (static_cast<int>(a.size()) != dim) throw_invariant("equality row has wrong dimension");
  eq.push_back(std::move(a));
  eq_rhs.push_back(b);
}

bool PolytopeSection::contains(const IntVec& g) const {
  if (static_cast<int>(g.size()) != dim) return false;
  for (const auto& r : ineq)
    if (dot(r, g) < 0) return false;
  for (std::size_t i = 0; i < eq.size(); ++i)
    if (dot(eq[i], g) != eq_rhs[i]) return false;
  return true;
}

HRep PolytopeSection::to_hrep() const {
  HRep h;
  h.dim = dim;
  h.ineq = ineq;
  h.eq = eq;
  h.eq_rhs = eq_rhs;
  return h;
}

PolytopeSection PolytopeSection::from_hrep(const HRep& h) {
  PolytopeSection s(h.dim, h.ineq);
  s.eq = h.eq;
  s.eq_rhs = h.eq_rhs;
  return s;
}

namespace {

long long floor_q(const mpq_class& q) {
  mpz_class z;
  mpz_fdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!z.fits_slong_p()) throw_invariant("coordinate bound exceeds 64 bits");
  return z.get_si();
}

long long ceil_q(const mpq_class& q) {
  mpz_class z;
  mpz_cdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!z.fits_slong_p()) throw_invariant("coordinate bound exceeds 64 bits");
  return z.get_si();
}

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

// The section rewritten in the parameters y of the integer solutions of the
// equalities: G y <= h.
struct Reduced {
  bool empty = false;
  IntegerSolutionSet sol;
  IntMatrix g;
  IntVec h;
  std::size_t d = 0;
};

Reduced reduce(const PolytopeSection& s) {
  Reduced r;
  for (const auto& row : s.ineq)
    if (static_cast<int>(row.size()) != s.dim) throw_invariant("inequality row has wrong dimension");
  r.sol = solve_integer(s.eq, s.eq_rhs, static_cast<std::size_t>(s.dim));
  if (r.sol.empty) {
    r.empty = true;
    return r;
  }
  r.d = r.sol.dim();
  for (const auto& a : s.ineq) {
    IntVec grow(r.d);
    bool nonzero = false;
    for (std::size_t t = 0; t < r.d; ++t) {
      grow[t] = -dot(a, r.sol.gens[t]);
      if (grow[t]) nonzero = true;
    }
    long long rhs = dot(a, r.sol.base);
    if (!nonzero) {
      if (rhs < 0) r.empty = true;
      continue;
    }
    r.g.push_back(std::move(grow));
    r.h.push_back(rhs);
  }
  return r;
}

class Search {
 public:
  explicit Search(const Reduced& r) : r_(r) {}

  // Integer range of y_s given y_0..y_{s-1} = prefix; false when empty.
  bool range(const IntVec& prefix, long long& lo, long long& hi, EnumStats& st) const {
    const std::size_t s = prefix.size();
    const std::size_t rem = r_.d - s;
    IntMatrix rows;
    IntVec rhs;
    for (std::size_t i = 0; i < r_.g.size(); ++i) {
      long long b = r_.h[i];
      for (std::size_t t = 0; t < s; ++t) b -= r_.g[i][t] * prefix[t];
      bool nonzero = false;
      for (std::size_t t = s; t < r_.d; ++t)
        if (r_.g[i][t]) {
          nonzero = true;
          break;
        }
      if (!nonzero) {
        if (b < 0) return false;
        continue;
      }
      rows.emplace_back(r_.g[i].begin() + static_cast<long>(s), r_.g[i].end());
      rhs.push_back(b);
    }
    if (rem == 1) {
      bool has_lo = false, has_hi = false;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        long long c = rows[i][0];
        if (c > 0) {
          long long v = floor_div(rhs[i], c);
          if (!has_hi || v < hi) hi = v;
          has_hi = true;
        } else {
          long long v = ceil_div(rhs[i], c);
          if (!has_lo || v > lo) lo = v;
          has_lo = true;
        }
      }
      if (!has_lo || !has_hi) throw UnboundedError("section is unbounded in a parameter direction");
      return lo <= hi;
    }
    LinearProgram lp(rows, rhs, rem);
    st.lp_solves += 1;
    if (!lp.feasible()) return false;
    LpResult mx = lp.maximize_coord(0);
    LpResult mn = lp.minimize_coord(0);
    st.lp_solves += 2;
    if (mx.status == LpStatus::Unbounded || mn.status == LpStatus::Unbounded) {
      throw UnboundedError("section is unbounded in a parameter direction");
    }
    lo = ceil_q(mn.value);
    hi = floor_q(mx.value);
    return lo <= hi;
  }

  template <class Leaf>
  void dfs(IntVec& prefix, Leaf& leaf, EnumStats& st) const {
    ++st.nodes;
    if (prefix.size() == r_.d) {
      leaf(prefix);
      return;
    }
    long long lo = 0, hi = -1;
    if (!range(prefix, lo, hi, st)) return;
    for (long long v = lo; v <= hi; ++v) {
      prefix.push_back(v);
      dfs(prefix, leaf, st);
      prefix.pop_back();
    }
  }

  // Prefixes of length `depth` (or shorter complete ones) that survive.
  void frontier(IntVec& prefix, std::size_t depth, std::vector<IntVec>& out, EnumStats& st) const {
    if (prefix.size() == depth || prefix.size() == r_.d) {
      out.push_back(prefix);
      return;
    }
    ++st.nodes;
    long long lo = 0, hi = -1;
    if (!range(prefix, lo, hi, st)) return;
    for (long long v = lo; v <= hi; ++v) {
      prefix.push_back(v);
      frontier(prefix, depth, out, st);
      prefix.pop_back();
    }
  }

 private:
  const Reduced& r_;
};

void check_root(const Reduced& r) {
  if (r.d == 0) return;
  LinearProgram lp(r.g, r.h, r.d);
  if (!lp.feasible()) return;
  for (std::size_t t = 0; t < r.d; ++t) {
    if (lp.maximize_coord(t).status == LpStatus::Unbounded || lp.minimize_coord(t).status == LpStatus::Unbounded) {
      throw UnboundedError("section is unbounded (parameter " + std::to_string(t) + " has no finite bound)");
    }
  }
}

// Runs the search, calling sink(point) from possibly several threads; the
// sink is responsible for its own synchronisation.
template <class Sink>
void run(const PolytopeSection& s, const EnumOptions& opt, EnumStats* stats, Sink& sink) {
  EnumStats local;
  Reduced r = reduce(s);
  if (r.empty) {
    if (stats) *stats = local;
    return;
  }
  local.free_dims = r.d;
  check_root(r);
  Search search(r);
  auto verify_and_emit = [&](const IntVec& y) {
    IntVec x = r.sol.point(y);
    if (!s.contains(x)) throw_invariant("internal: enumerated point fails the section's rows");
    sink(x);
  };

  const unsigned jobs = std::max(1U, opt.jobs);
  if (jobs == 1 || r.d <= 1 || opt.parallel_depth <= 0) {
    IntVec prefix;
    search.dfs(prefix, verify_and_emit, local);
    if (stats) *stats = local;
    return;
  }
  std::vector<IntVec> front;
  IntVec prefix;
  search.frontier(prefix, std::min<std::size_t>(static_cast<std::size_t>(opt.parallel_depth), r.d), front, local);
  std::atomic<std::size_t> next{0};
  std::mutex stats_mu;
  std::exception_ptr failure;
  std::mutex fail_mu;
  auto worker = [&]() {
    EnumStats mine;
    try {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= front.size()) break;
        IntVec p = front[i];
        search.dfs(p, verify_and_emit, mine);
      }
    } catch (...) {
      std::lock_guard lock(fail_mu);
      if (!failure) failure = std::current_exception();
      next.store(front.size());
    }
    std::lock_guard lock(stats_mu);
    local.nodes += mine.nodes;
    local.lp_solves += mine.lp_solves;
  };
  std::vector<std::thread> pool;
  const unsigned n = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, front.size())));
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  if (stats) *stats = local;
}

}  // namespace

BoundReport analyze_bounds(const PolytopeSection& s) {
  BoundReport rep;
  for (const auto& row : s.ineq)
    if (static_cast<int>(row.size()) != s.dim) throw_invariant("inequality row has wrong dimension");
  for (const auto& row : s.eq)
    if (static_cast<int>(row.size()) != s.dim) throw_invariant("equality row has wrong dimension");
  // Rational relaxation: ineq as -a.g <= 0, equalities as two inequalities.
  IntMatrix a;
  IntVec b;
  for (const auto& row : s.ineq) {
    IntVec neg(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) neg[j] = -row[j];
    a.push_back(std::move(neg));
    b.push_back(0);
  }
  for (std::size_t i = 0; i < s.eq.size(); ++i) {
    a.push_back(s.eq[i]);
    b.push_back(s.eq_rhs[i]);
    IntVec neg(s.eq[i].size());
    for (std::size_t j = 0; j < neg.size(); ++j) neg[j] = -s.eq[i][j];
    a.push_back(std::move(neg));
    b.push_back(-s.eq_rhs[i]);
  }
  LinearProgram lp(a, b, static_cast<std::size_t>(s.dim));
  if (!lp.feasible()) {
    rep.status = BoundStatus::Infeasible;
    rep.message = "the rational relaxation of the section is empty";
    return rep;
  }
  rep.status = BoundStatus::Bounded;
  for (int j = 0; j < s.dim; ++j) {
    LpResult mx = lp.maximize_coord(static_cast<std::size_t>(j));
    LpResult mn = lp.minimize_coord(static_cast<std::size_t>(j));
    if (mx.status == LpStatus::Unbounded || mn.status == LpStatus::Unbounded) {
      rep.status = BoundStatus::Unbounded;
      rep.unbounded_coord = j;
      rep.message = "coordinate " + std::to_string(j) + " has no finite " +
                    (mx.status == LpStatus::Unbounded ? "maximum" : "minimum");
      rep.lower.clear();
      rep.upper.clear();
      return rep;
    }
    rep.lower.push_back(mn.value);
    rep.upper.push_back(mx.value);
  }
  return rep;
}

bool is_bounded(const PolytopeSection& s) {
  BoundReport rep = analyze_bounds(s);
  if (rep.status == BoundStatus::Infeasible) throw InfeasibleError(rep.message);
  return rep.status == BoundStatus::Bounded;
}

LatticePointSet enumerate(const PolytopeSection& s, const EnumOptions& opt, EnumStats* stats) {
  LatticePointSet out;
  std::mutex mu;
  auto sink = [&](const IntVec& x) {
    std::lock_guard lock(mu);
    out.points.push_back(x);
  };
  run(s, opt, stats, sink);
  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  return out;
}

std::size_t count(const PolytopeSection& s, const EnumOptions& opt, EnumStats* stats) {
  std::atomic<std::size_t> n{0};
  auto sink = [&](const IntVec&) { n.fetch_add(1, std::memory_order_relaxed); };
  run(s, opt, stats, sink);
  return n.load();
}

std::vector<std::optional<QVec>> irredundancy_certificates(const IntMatrix& rows, int dim) {
  // Variables (g, t): maximize t with b.g >= t for b != a, a.g <= -t, t <= 1.
  const std::size_t n = static_cast<std::size_t>(dim) + 1;
  std::vector<std::optional<QVec>> out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    IntMatrix a;
    IntVec b;
    for (std::size_t o = 0; o < rows.size(); ++o) {
      IntVec row(n, 0);
      const long long s = o == r ? 1 : -1;
      for (std::size_t c = 0; c + 1 < n; ++c) row[c] = s * rows[o][c];
      row[n - 1] = 1;
      a.push_back(std::move(row));
      b.push_back(0);
    }
    IntVec cap(n, 0);
    cap[n - 1] = 1;
    a.push_back(cap);
    b.push_back(1);
    LinearProgram lp(a, b, n);
    LpResult res = lp.maximize_coord(n - 1);
    if (res.status == LpStatus::Optimal && res.value > 0) {
      out.emplace_back(QVec(res.x.begin(), res.x.end() - 1));
    } else {
      out.emplace_back(std::nullopt);
    }
  }
  return out;
}

}  // namespace kron
