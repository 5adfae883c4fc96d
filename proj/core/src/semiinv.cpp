#include "kron/semiinv.hpp"

#include <atomic>
#include <functional>
#include <mutex>
#include <thread>

#include "json.hpp"
#include "kron/error.hpp"

namespace kron {

namespace {

QMatrix zeros(int r, int c) { return QMatrix(static_cast<std::size_t>(r), QVec(static_cast<std::size_t>(c), 0)); }

QMatrix identity(int n) {
  QMatrix m = zeros(n, n);
  for (int t = 0; t < n; ++t) m[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)] = 1;
  return m;
}

QMatrix mul(const QMatrix& a, const QMatrix& b) {
  const std::size_t r = a.size();
  const std::size_t inner = b.size();
  const std::size_t c = inner == 0 ? 0 : b[0].size();
  QMatrix out(r, QVec(c, 0));
  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t t = 0; t < inner; ++t) {
      if (a[x][t] == 0) continue;
      for (std::size_t y = 0; y < c; ++y) out[x][y] += a[x][t] * b[t][y];
    }
  return out;
}

void check_shape(const QMatrix& m, int r, int c, const std::string& what) {
  bool ok = static_cast<int>(m.size()) == r;
  for (const auto& row : m) ok = ok && static_cast<int>(row.size()) == c;
  if (!ok) throw_invariant(what + " must be " + std::to_string(r) + "x" + std::to_string(c));
}

QMatrix random_matrix(int r, int c, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-9, 9);
  QMatrix m = zeros(r, c);
  for (auto& row : m)
    for (auto& x : row) x = d(rng);
  return m;
}

// Vertex of K_{l,l}^2 as a slot: -t -> t-1, t -> l+t-1.
int slot(int l, int v) { return v < 0 ? -v - 1 : l + v - 1; }

struct Gauge {
  std::vector<QMatrix> g;
  std::vector<QMatrix> ginv;

  explicit Gauge(int l) {
    for (int s = 0; s < 2 * l; ++s) {
      int dim = s < l ? s + 1 : s - l + 1;
      g.push_back(identity(dim));
      ginv.push_back(identity(dim));
    }
  }
};

FlagRep apply_gauge(const FlagRep& m, const Gauge& h) {
  const int l = m.l;
  auto G = [&](int v) -> const QMatrix& { return h.g[static_cast<std::size_t>(slot(l, v))]; };
  auto Gi = [&](int v) -> const QMatrix& { return h.ginv[static_cast<std::size_t>(slot(l, v))]; };
  FlagRep out = m;
  for (int i = 1; i < l; ++i) {
    out.neg[static_cast<std::size_t>(i - 1)] = mul(mul(Gi(-i), m.neg[static_cast<std::size_t>(i - 1)]), G(-(i + 1)));
    out.pos[static_cast<std::size_t>(i - 1)] = mul(mul(Gi(i + 1), m.pos[static_cast<std::size_t>(i - 1)]), G(i));
  }
  out.a1 = mul(mul(Gi(-l), m.a1), G(l));
  out.a2 = mul(mul(Gi(-l), m.a2), G(l));
  return out;
}

// Product of random elementary matrices, so det = 1.
void random_sl(int n, std::mt19937_64& rng, QMatrix& g, QMatrix& ginv) {
  g = identity(n);
  ginv = identity(n);
  if (n < 2) return;
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int step = 0; step < 2 * n + 2; ++step) {
    int a = pick(rng), b = pick(rng);
    if (a == b) continue;
    int c = coef(rng);
    // g <- g (I + c E_ab): column b += c * column a.
    for (auto& row : g) row[static_cast<std::size_t>(b)] += c * row[static_cast<std::size_t>(a)];
    // ginv <- (I - c E_ab) ginv: row a -= c * row b.
    for (std::size_t y = 0; y < ginv.size(); ++y)
      ginv[static_cast<std::size_t>(a)][y] -= c * ginv[static_cast<std::size_t>(b)][y];
  }
}

int nonzero_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(1, 5);
  std::bernoulli_distribution neg(0.5);
  int t = d(rng);
  return neg(rng) ? -t : t;
}

mpq_class qpow(const mpq_class& t, long long e) {
  mpq_class r = 1;
  mpq_class b = e >= 0 ? t : mpq_class(1 / t);
  for (long long n = e >= 0 ? e : -e; n > 0; --n) r *= b;
  return r;
}

struct TrialResult {
  std::size_t checks = 0;
  std::vector<VerifyFailure> failures;
};

void run_trials(VerifyReport& rep, int trials, unsigned jobs, const std::function<TrialResult(int)>& fn) {
  std::vector<TrialResult> results(static_cast<std::size_t>(std::max(trials, 0)));
  std::atomic<int> next{0};
  std::exception_ptr err;
  std::mutex mu;
  auto worker = [&]() {
    try {
      for (int t = next.fetch_add(1); t < trials; t = next.fetch_add(1)) results[static_cast<std::size_t>(t)] = fn(t);
    } catch (...) {
      std::lock_guard lock(mu);
      if (!err) err = std::current_exception();
      next.store(trials);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < std::max(1U, jobs); ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
  for (auto& r : results) {
    rep.checks += r.checks;
    for (auto& f : r.failures) rep.failures.push_back(std::move(f));
  }
}

void expect(TrialResult& r, const std::string& check, const std::string& vertex, int trial, const mpq_class& lhs,
            const mpq_class& rhs) {
  ++r.checks;
  if (lhs != rhs) r.failures.push_back({check, vertex, trial, lhs.get_str(), rhs.get_str()});
}

}  // namespace

void FlagRep::validate() const {
  if (l < 1) throw_invariant("a flag representation needs l >= 1");
  if (static_cast<int>(neg.size()) != l - 1 || static_cast<int>(pos.size()) != l - 1)
    throw_invariant("arm matrix count must be l - 1");
  for (int i = 1; i < l; ++i) {
    check_shape(neg[static_cast<std::size_t>(i - 1)], i, i + 1, "B_{-" + std::to_string(i) + "}");
    check_shape(pos[static_cast<std::size_t>(i - 1)], i + 1, i, "B_" + std::to_string(i));
  }
  check_shape(a1, l, l, "A1");
  check_shape(a2, l, l, "A2");
}

FlagRep FlagRep::random(int l, std::mt19937_64& rng) {
  if (l < 1) throw_invariant("l must be at least 1");
  FlagRep m;
  m.l = l;
  for (int i = 1; i < l; ++i) {
    m.neg.push_back(random_matrix(i, i + 1, rng));
    m.pos.push_back(random_matrix(i + 1, i, rng));
  }
  m.a1 = random_matrix(l, l, rng);
  m.a2 = random_matrix(l, l, rng);
  return m;
}

FlagRep FlagRep::normalized(int l, const QMatrix& a2) {
  FlagRep m;
  m.l = l;
  for (int i = 1; i < l; ++i) {
    QMatrix b = zeros(i, i + 1);
    for (int t = 0; t < i; ++t) b[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)] = 1;
    m.neg.push_back(b);
    QMatrix c = zeros(i + 1, i);
    for (int t = 0; t < i; ++t) c[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)] = 1;
    m.pos.push_back(c);
  }
  m.a1 = identity(l);
  m.a2 = a2;
  m.validate();
  return m;
}

FlagRep FlagRep::random_normalized(int l, std::mt19937_64& rng) { return normalized(l, random_matrix(l, l, rng)); }

bool FlagRep::is_normalized() const {
  const FlagRep ref = normalized(l, a2);
  return ref.neg == neg && ref.pos == pos && ref.a1 == a1;
}

QMatrix path_matrix(const FlagRep& m, int eps, int x, int y) {
  if (x < 1 || x > m.l || y < 1 || y > m.l) throw_invariant("path endpoints out of range");
  if (eps != 1 && eps != 2) throw_invariant("central arrow index must be 1 or 2");
  QMatrix p = identity(x);
  for (int t = x; t < m.l; ++t) p = mul(p, m.neg[static_cast<std::size_t>(t - 1)]);
  p = mul(p, eps == 1 ? m.a1 : m.a2);
  for (int t = m.l - 1; t >= y; --t) p = mul(p, m.pos[static_cast<std::size_t>(t - 1)]);
  return p;
}

PresentationMatrix PresentationMatrix::transposed() const {
  PresentationMatrix t;
  t.sources = targets;
  t.targets = sources;
  t.entries.assign(targets.size(), std::vector<std::vector<PathTerm>>(sources.size()));
  for (std::size_t a = 0; a < sources.size(); ++a)
    for (std::size_t b = 0; b < targets.size(); ++b) t.entries[b][a] = entries[a][b];
  return t;
}

PresentationMatrix PresentationMatrix::swapped_arrows() const {
  PresentationMatrix s = *this;
  for (auto& row : s.entries)
    for (auto& cell : row)
      for (auto& term : cell) term.eps = 3 - term.eps;
  return s;
}

PresentationMatrix initial_presentation(int sign, int i, int j, int k) {
  if (i < 1 || j < 0 || k < 0 || j + k != i) throw_invariant("initial presentation needs i = j + k >= 1");
  PresentationMatrix f;
  if (sign > 0 || j == 0 || k == 0) {
    f.sources = {j, k};
    f.targets = {i};
    f.entries = {{{{1, 1}}}, {{{2, 1}}}};
  } else {
    f.sources = {i};
    f.targets = {j, k};
    f.entries = {{{{1, 1}}, {{2, 1}}}};
  }
  return f;
}

PresentationMatrix mutated_presentation(int sign, int i, int j, int k) {
  if (i < 1 || j < 0 || k < 0 || j + k != i) throw_invariant("mutated presentation needs i = j + k >= 1");
  PresentationMatrix f;
  if (k == 0 || j == 0) {
    f.sources = {i + 1, i - 1, 1};
    f.targets = {i + 1, i - 1, 1};
    f.entries = {{{{1, 1}}, {{1, 1}}, {{2, 1}}}, {{{1, 1}}, {}, {}}, {{{2, 1}}, {}, {}}};
    return k == 0 ? f : f.swapped_arrows();
  }
  f.sources = {j + 1, j - 1, k + 1, k - 1};
  f.targets = {i + 1, i - 1};
  f.entries = {{{{1, 1}}, {}}, {{}, {{1, 1}}}, {{{2, 1}}, {{2, 1}}}, {{}, {{2, 1}}}};
  return sign < 0 ? f.transposed() : f;
}

mpq_class eval_schofield(const PresentationMatrix& f, const FlagRep& m) {
  int rows = 0, cols = 0;
  for (int t : f.targets) rows += t;
  for (int s : f.sources) cols += s;
  if (rows != cols) {
    throw_invariant("substituted presentation is " + std::to_string(rows) + "x" + std::to_string(cols) +
                    ", not square");
  }
  if (rows == 0) return 1;
  QMatrix h = zeros(rows, cols);
  int r0 = 0;
  for (std::size_t b = 0; b < f.targets.size(); ++b) {
    const int tb = f.targets[b];
    int c0 = 0;
    for (std::size_t a = 0; a < f.sources.size(); ++a) {
      const int sa = f.sources[a];
      if (tb > 0 && sa > 0) {
        for (const PathTerm& term : f.entries[a][b]) {
          QMatrix p = path_matrix(m, term.eps, tb, sa);
          for (int x = 0; x < tb; ++x)
            for (int y = 0; y < sa; ++y)
              h[static_cast<std::size_t>(r0 + x)][static_cast<std::size_t>(c0 + y)] +=
                  mpq_class(static_cast<long>(term.coef)) * p[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
        }
      }
      c0 += sa;
    }
    r0 += tb;
  }
  return determinant(std::move(h));
}

mpq_class eval_initial(int sign, int i, int j, int k, const FlagRep& m) {
  if (i == 0) return 1;
  if (i > m.l) throw_invariant("vertex level exceeds l");
  return eval_schofield(initial_presentation(sign, i, j, k), m);
}

mpq_class eval_initial_minor(int sign, int i, int j, int k, const FlagRep& m) {
  if (!m.is_normalized()) throw_invariant("minor formula needs a normalized representation");
  if (i < 1 || i > m.l || j < 0 || k < 0 || j + k != i) throw_invariant("vertex out of range");
  QMatrix minor = zeros(k, k);
  const bool plus = sign > 0 || j == 0 || k == 0;
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      // rows j+1..i, cols 1..k for +; transposed ranges for -.
      const int r = plus ? j + x : x;
      const int c = plus ? y : j + y;
      minor[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          m.a2[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
  return k == 0 ? mpq_class(1) : determinant(std::move(minor));
}

mpq_class eval_mutated(int sign, int i, int j, int k, const FlagRep& m) {
  if (i >= m.l) throw_invariant("frozen vertices are not mutated");
  mpq_class v = eval_schofield(mutated_presentation(sign, i, j, k), m);
  const int e = (j == 0 || k == 0) ? i : j * k;
  return e % 2 == 0 ? v : mpq_class(-v);
}

mpq_class exchange_rhs(int sign, int i, int j, int k, const FlagRep& m) {
  auto S = [&](int s, int a, int b, int c) { return eval_initial(s, a, b, c, m); };
  if (k == 0) {
    return S(1, i - 1, i - 1, 0) * S(-1, i + 1, i, 1) * S(1, i + 1, i, 1) +
           S(-1, i, i - 1, 1) * S(1, i, i - 1, 1) * S(1, i + 1, i + 1, 0);
  }
  if (j == 0) {
    return S(1, i - 1, 0, i - 1) * S(-1, i + 1, 1, i) * S(1, i + 1, 1, i) +
           S(-1, i, 1, i - 1) * S(1, i, 1, i - 1) * S(1, i + 1, 0, i + 1);
  }
  return S(sign, i - 1, j - 1, k) * S(sign, i, j + 1, k - 1) * S(sign, i + 1, j, k + 1) +
         S(sign, i - 1, j, k - 1) * S(sign, i, j - 1, k + 1) * S(sign, i + 1, j + 1, k);
}

FlagRep restrict_flag(const FlagRep& m) {
  m.validate();
  if (m.l < 2) throw_invariant("restriction needs l >= 2");
  FlagRep r;
  r.l = m.l - 1;
  for (int i = 1; i < r.l; ++i) {
    r.neg.push_back(m.neg[static_cast<std::size_t>(i - 1)]);
    r.pos.push_back(m.pos[static_cast<std::size_t>(i - 1)]);
  }
  const QMatrix& bn = m.neg[static_cast<std::size_t>(m.l - 2)];
  const QMatrix& bp = m.pos[static_cast<std::size_t>(m.l - 2)];
  r.a1 = mul(mul(bn, m.a1), bp);
  r.a2 = mul(mul(bn, m.a2), bp);
  return r;
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["relation"] = relation;
  j["l"] = l;
  j["trials"] = trials;
  j["seed"] = seed;
  j["checks"] = checks;
  nlohmann::ordered_json fs = nlohmann::ordered_json::array();
  for (const auto& f : failures) {
    fs.push_back({{"check", f.check}, {"vertex", f.vertex}, {"trial", f.trial}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  }
  j["failures"] = fs;
  return j.dump();
}

std::mt19937_64 trial_rng(std::uint64_t seed, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  return std::mt19937_64(seq);
}

VerifyReport verify_exchange(int l, int trials, std::uint64_t seed, unsigned jobs) {
  if (l < 2) throw_invariant("exchange relations need l >= 2");
  VerifyReport rep{"exchange", l, trials, seed, 0, {}};
  const Diamond& d = build_diamond(l);
  run_trials(rep, trials, jobs, [&](int t) {
    TrialResult r;
    auto rng = trial_rng(seed, t);
    FlagRep m = FlagRep::random(l, rng);
    for (const DiamondVertex& v : d.vertices()) {
      if (v.i >= l) continue;
      mpq_class lhs = eval_initial(v.sign, v.i, v.j, v.k, m) * eval_mutated(v.sign, v.i, v.j, v.k, m);
      expect(r, "exchange", v.label(), t, lhs, exchange_rhs(v.sign, v.i, v.j, v.k, m));
    }
    return r;
  });
  return rep;
}

VerifyReport verify_group_actions(int l, int trials, std::uint64_t seed, unsigned jobs) {
  if (l < 1) throw_invariant("l must be at least 1");
  VerifyReport rep{"group_actions", l, trials, seed, 0, {}};
  const Diamond& d = build_diamond(l);
  run_trials(rep, trials, jobs, [&](int t) {
    TrialResult r;
    auto rng = trial_rng(seed, t);
    FlagRep m = FlagRep::random(l, rng);

    const int t1 = nonzero_scalar(rng), t2 = nonzero_scalar(rng);
    FlagRep mt = m;
    for (auto& row : mt.a1)
      for (auto& x : row) x *= t1;
    for (auto& row : mt.a2)
      for (auto& x : row) x *= t2;

    std::uniform_int_distribution<int> ud(-5, 5);
    const int u = ud(rng);
    FlagRep mu = m;
    for (int x = 0; x < l; ++x)
      for (int y = 0; y < l; ++y) mu.a2[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] += u * m.a1[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];

    FlagRep mw = m;
    std::swap(mw.a1, mw.a2);

    Gauge sl(l);
    for (std::size_t s = 0; s < sl.g.size(); ++s) random_sl(static_cast<int>(sl.g[s].size()), rng, sl.g[s], sl.ginv[s]);
    FlagRep msl = apply_gauge(m, sl);

    // Rescale one random vertex by diag(c, 1, ..., 1).
    std::uniform_int_distribution<int> vd(0, 2 * l - 1);
    const int sv = vd(rng);
    const int c = nonzero_scalar(rng);
    Gauge sc(l);
    sc.g[static_cast<std::size_t>(sv)][0][0] = c;
    sc.ginv[static_cast<std::size_t>(sv)][0][0] = mpq_class(1, 1) / c;
    FlagRep msc = apply_gauge(m, sc);

    for (int idx = 0; idx < d.size(); ++idx) {
      const DiamondVertex& v = d.vertex(idx);
      const std::string name = v.label();
      const mpq_class s0 = eval_initial(v.sign, v.i, v.j, v.k, m);
      expect(r, "torus", name, t, eval_initial(v.sign, v.i, v.j, v.k, mt), qpow(t1, v.j) * qpow(t2, v.k) * s0);
      if (v.j >= v.k) expect(r, "unipotent", name, t, eval_initial(v.sign, v.i, v.j, v.k, mu), s0);
      const mpq_class swapped = eval_initial(v.sign, v.i, v.k, v.j, m);
      expect(r, "transposition", name, t, eval_initial(v.sign, v.i, v.j, v.k, mw),
             (v.j * v.k) % 2 == 0 ? swapped : mpq_class(-swapped));
      expect(r, "sl", name, t, eval_initial(v.sign, v.i, v.j, v.k, msl), s0);
      const long long wt = d.flag_weight(idx)[static_cast<std::size_t>(sv)];
      expect(r, "rescale", name, t, eval_initial(v.sign, v.i, v.j, v.k, msc), qpow(c, wt) * s0);
    }
    return r;
  });
  return rep;
}

VerifyReport verify_initial_minors(int l, int trials, std::uint64_t seed) {
  VerifyReport rep{"initial_minors", l, trials, seed, 0, {}};
  const Diamond& d = build_diamond(l);
  run_trials(rep, trials, 1, [&](int t) {
    TrialResult r;
    auto rng = trial_rng(seed, t);
    FlagRep m = FlagRep::random_normalized(l, rng);
    for (const DiamondVertex& v : d.vertices()) {
      expect(r, "minor", v.label(), t, eval_initial_minor(v.sign, v.i, v.j, v.k, m),
             eval_schofield(initial_presentation(v.sign, v.i, v.j, v.k), m));
    }
    return r;
  });
  return rep;
}

std::optional<std::string> u_prime_asymmetry_witness(int l, int trials, std::uint64_t seed) {
  if (l < 2) throw_invariant("the witness needs l >= 2");
  for (int t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    FlagRep m = FlagRep::random(l, rng);
    FlagRep mv = m;
    for (int x = 0; x < l; ++x)
      for (int y = 0; y < l; ++y) mv.a1[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] += m.a2[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
    mpq_class before = eval_initial(1, 2, 2, 0, m);
    mpq_class after = eval_initial(1, 2, 2, 0, mv);
    if (before != after) {
      return "trial " + std::to_string(t) + ": " + before.get_str() + " -> " + after.get_str();
    }
  }
  return std::nullopt;
}

std::vector<RestrictionSign> restriction_sign_table(int l, int trials, std::uint64_t seed) {
  if (l < 2) throw_invariant("restriction needs l >= 2");
  const Diamond& small = build_diamond(l - 1);
  std::vector<RestrictionSign> table;
  std::vector<std::optional<int>> eps(static_cast<std::size_t>(small.size()));
  std::vector<bool> consistent(static_cast<std::size_t>(small.size()), true);
  for (int t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    FlagRep m = FlagRep::random(l, rng);
    FlagRep mr = restrict_flag(m);
    for (int idx = 0; idx < small.size(); ++idx) {
      const DiamondVertex& v = small.vertex(idx);
      mpq_class a = eval_initial(v.sign, v.i, v.j, v.k, mr);
      mpq_class b = eval_initial(v.sign, v.i, v.j, v.k, m);
      if (a == 0 && b == 0) continue;
      std::optional<int> e;
      if (a == b) e = 1;
      else if (a == -b) e = -1;
      auto& cur = eps[static_cast<std::size_t>(idx)];
      if (!e || (cur && *cur != *e)) consistent[static_cast<std::size_t>(idx)] = false;
      cur = e;
    }
  }
  for (int idx = 0; idx < small.size(); ++idx) {
    RestrictionSign rs{small.vertex(idx), l, std::nullopt};
    if (consistent[static_cast<std::size_t>(idx)]) rs.epsilon = eps[static_cast<std::size_t>(idx)];
    table.push_back(rs);
  }
  return table;
}

}  // namespace kron
