#include "kron/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <unordered_map>

#include "kron/error.hpp"

namespace kron {

namespace {

template <class V>
class Memo {
 public:
  bool find(const std::string& key, V& out) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return false;
    out = it->second;
    return true;
  }
  void insert(const std::string& key, const V& value) {
    std::unique_lock lock(mu_);
    map_.emplace(key, value);
  }
  std::vector<std::pair<std::string, V>> items() const {
    std::shared_lock lock(mu_);
    std::vector<std::pair<std::string, V>> out(map_.begin(), map_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }
  void clear() {
    std::unique_lock lock(mu_);
    map_.clear();
  }

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, V> map_;
};

Memo<long long>& lr_memo() {
  static Memo<long long> memo;
  return memo;
}

Memo<mpz_class>& chi_memo() {
  static Memo<mpz_class> memo;
  return memo;
}

// Counts LR tableaux of shape lambda/mu with content nu, row by row. Within a
// row the filling is 1^{a_1} 2^{a_2} ...; A[k] = a_1 + ... + a_k.
class LrCounter {
 public:
  LrCounter(const Partition& lambda, const Partition& mu, const Partition& nu)
      : lam_(lambda), mu_(mu), nu_(nu), k_(nu.length()) {}

  long long run() {
    content_.assign(static_cast<std::size_t>(k_ + 1), 0);
    prev_a_.assign(static_cast<std::size_t>(k_ + 1), 0);
    count_ = 0;
    row(1);
    return count_;
  }

 private:
  void row(int r) {
    if (r > lam_.length()) {
      ++count_;
      return;
    }
    const int len = lam_(r) - mu_(r);
    std::vector<int> start = content_;
    std::vector<int> cur_a(static_cast<std::size_t>(k_ + 1), 0);
    fill(r, 1, len, start, cur_a);
  }

  void fill(int r, int k, int remaining, const std::vector<int>& start, std::vector<int>& cur_a) {
    if (remaining == 0) {
      for (int t = k; t <= k_; ++t) cur_a[static_cast<std::size_t>(t)] = cur_a[static_cast<std::size_t>(t - 1)];
      std::vector<int> saved = prev_a_;
      prev_a_ = cur_a;
      row(r + 1);
      prev_a_ = std::move(saved);
      return;
    }
    if (k > k_) return;
    const auto ks = static_cast<std::size_t>(k);
    int hi = std::min(remaining, nu_(k) - content_[ks]);
    if (k >= 2) hi = std::min(hi, start[ks - 1] - start[ks]);
    if (r >= 2) hi = std::min(hi, mu_(r - 1) + prev_a_[ks - 1] - mu_(r) - cur_a[ks - 1]);
    for (int a = hi; a >= 0; --a) {
      cur_a[ks] = cur_a[ks - 1] + a;
      content_[ks] += a;
      fill(r, k + 1, remaining - a, start, cur_a);
      content_[ks] -= a;
    }
  }

  const Partition& lam_;
  const Partition& mu_;
  const Partition& nu_;
  int k_;
  std::vector<int> content_;
  std::vector<int> prev_a_;
  long long count_ = 0;
};

std::string rho_key(const std::vector<int>& rho, std::size_t from) {
  std::string s;
  for (std::size_t i = from; i < rho.size(); ++i) {
    if (i > from) s += ',';
    s += std::to_string(rho[i]);
  }
  return s;
}

mpz_class mn_rec(const Partition& lambda, const std::vector<int>& rho, std::size_t idx) {
  if (idx == rho.size()) return lambda.empty() ? 1 : 0;
  std::string key = lambda.str() + "|" + rho_key(rho, idx);
  mpz_class cached;
  if (chi_memo().find(key, cached)) return cached;

  const int r = rho[idx];
  const int len = lambda.length();
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 1; i <= len; ++i) beta[static_cast<std::size_t>(i - 1)] = lambda(i) + len - i;
  mpz_class total = 0;
  for (int i = 0; i < len; ++i) {
    const int b = beta[static_cast<std::size_t>(i)] - r;
    if (b < 0) continue;
    if (std::find(beta.begin(), beta.end(), b) != beta.end()) continue;
    int between = 0;
    for (int x : beta)
      if (x > b && x < beta[static_cast<std::size_t>(i)]) ++between;
    std::vector<int> nb = beta;
    nb[static_cast<std::size_t>(i)] = b;
    std::sort(nb.begin(), nb.end(), std::greater<int>());
    std::vector<int> parts;
    for (int t = 1; t <= len; ++t) parts.push_back(nb[static_cast<std::size_t>(t - 1)] - (len - t));
    mpz_class sub = mn_rec(Partition(parts), rho, idx + 1);
    if (between % 2) total -= sub;
    else total += sub;
  }
  chi_memo().insert(key, total);
  return total;
}

mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

void require_same_size(const Partition& a, const Partition& b, const Partition& c) {
  if (a.size() != b.size() || a.size() != c.size()) throw_invariant("partitions must have equal size");
}

}  // namespace

long long lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() != mu.size() + nu.size()) return 0;
  if (!contains(lambda, mu) || !contains(lambda, nu)) return 0;
  // c^lambda_{mu,nu} = c^lambda_{nu,mu}; count with the smaller content.
  const Partition& inner = (nu.size() < mu.size() || (nu.size() == mu.size() && nu < mu)) ? mu : nu;
  const Partition& content = (&inner == &mu) ? nu : mu;
  std::string key = lambda.str() + "|" + inner.str() + "|" + content.str();
  long long cached = 0;
  if (lr_memo().find(key, cached)) return cached;
  long long value = LrCounter(lambda, inner, content).run();
  lr_memo().insert(key, value);
  return value;
}

long long multi_lr(const std::vector<Partition>& eta, const Partition& lambda) {
  if (eta.empty()) return lambda.empty() ? 1 : 0;
  int total = 0;
  for (const auto& e : eta) total += e.size();
  if (total != lambda.size()) return 0;
  std::map<Partition, long long> cur;
  if (!contains(lambda, eta[0])) return 0;
  cur[eta[0]] = 1;
  int size = eta[0].size();
  for (std::size_t t = 1; t < eta.size(); ++t) {
    size += eta[t].size();
    std::map<Partition, long long> next;
    for (const auto& rho : subpartitions_of_size(lambda, size)) {
      long long c = 0;
      for (const auto& [kappa, mult] : cur) c += mult * lr_coeff(rho, kappa, eta[t]);
      if (c) next[rho] = c;
    }
    cur = std::move(next);
    if (cur.empty()) return 0;
  }
  auto it = cur.find(lambda);
  return it == cur.end() ? 0 : it->second;
}

CycleType::CycleType(Partition r) : rho(std::move(r)), zed(zee(rho)) {}

mpz_class zee(const Partition& rho) {
  mpz_class z = 1;
  std::map<int, int> mult;
  for (int p : rho.parts()) ++mult[p];
  for (auto [part, m] : mult) {
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(m));
    z *= pw * factorial(m);
  }
  return z;
}

mpz_class mn_character(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size()) throw_invariant("character arguments have different sizes");
  return mn_rec(lambda, rho.parts(), 0);
}

long long kron_characters(const Partition& lambda, const Partition& mu, const Partition& nu) {
  require_same_size(lambda, mu, nu);
  const int n = lambda.size();
  const mpz_class nfact = factorial(n);
  mpz_class sum = 0;
  for (const auto& rho : partitions_of(n)) {
    mpz_class term = mn_character(lambda, rho) * mn_character(mu, rho) * mn_character(nu, rho);
    if (sgn(term) == 0) continue;
    sum += term * (nfact / zee(rho));
  }
  if (!mpz_divisible_p(sum.get_mpz_t(), nfact.get_mpz_t())) {
    throw_invariant("character inner product is not an integer");
  }
  mpz_class g = sum / nfact;
  if (!g.fits_slong_p()) throw_invariant("Kronecker coefficient exceeds 64 bits");
  return g.get_si();
}

long long a_k(const Partition& mu, const Partition& nu, int k) {
  if (mu.size() != nu.size()) throw_invariant("a_k needs |mu| = |nu|");
  const int n = mu.size();
  if (k < 0 || k > n) return 0;
  const Partition box = intersection(mu, nu);
  const auto firsts = subpartitions_of_size(box, k);
  const auto seconds = subpartitions_of_size(box, n - k);
  long long total = 0;
  for (const auto& e1 : firsts) {
    for (const auto& e2 : seconds) {
      long long c = lr_coeff(mu, e1, e2);
      if (c) total += c * lr_coeff(nu, e1, e2);
    }
  }
  return total;
}

bool weyl_ok(const Partition& mu, const Partition& eta1, const Partition& eta2) {
  if (!contains(mu, eta1) || !contains(mu, eta2)) return false;
  const int l1 = eta1.length() + 1;
  const int l2 = eta2.length() + 1;
  for (int j = 1; j <= l1; ++j) {
    for (int k = 1; k <= l2; ++k) {
      if (mu(j + k - 1) > eta1(j) + eta2(k)) return false;
    }
  }
  return true;
}

long long kron_via_lr(const Partition& lambda, const Partition& mu, const Partition& nu, int m, bool prune) {
  require_same_size(lambda, mu, nu);
  if (m < 1) throw_invariant("kron_via_lr needs m >= 1");
  if (lambda.length() > m) throw_invariant("kron_via_lr needs length(lambda) <= m");
  const Partition box = intersection(mu, nu);
  std::vector<int> omega(static_cast<std::size_t>(m));
  std::iota(omega.begin(), omega.end(), 1);
  long long total = 0;
  do {
    int inversions = 0;
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        if (omega[static_cast<std::size_t>(a)] > omega[static_cast<std::size_t>(b)]) ++inversions;
    std::vector<std::vector<Partition>> choices;
    bool empty = false;
    for (int i = 1; i <= m; ++i) {
      const int s = lambda(i) - i + omega[static_cast<std::size_t>(i - 1)];
      if (s < 0) {
        empty = true;
        break;
      }
      choices.push_back(subpartitions_of_size(box, s));
      if (choices.back().empty()) {
        empty = true;
        break;
      }
    }
    if (empty) continue;
    long long term = 0;
    std::vector<std::size_t> pick(static_cast<std::size_t>(m), 0);
    std::vector<Partition> eta(static_cast<std::size_t>(m));
    while (true) {
      for (int i = 0; i < m; ++i) eta[static_cast<std::size_t>(i)] = choices[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]];
      bool skip = false;
      if (prune && m == 2) {
        skip = !weyl_ok(mu, eta[0], eta[1]) || !weyl_ok(nu, eta[0], eta[1]);
      }
      if (!skip) {
        long long cm = (m == 2) ? lr_coeff(mu, eta[0], eta[1]) : multi_lr(eta, mu);
        if (cm || !prune) {
          long long cn = (m == 2) ? lr_coeff(nu, eta[0], eta[1]) : multi_lr(eta, nu);
          term += cm * cn;
        }
      }
      int pos = m - 1;
      while (pos >= 0) {
        auto ps = static_cast<std::size_t>(pos);
        if (++pick[ps] < choices[ps].size()) break;
        pick[ps] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
    total += (inversions % 2) ? -term : term;
  } while (std::next_permutation(omega.begin(), omega.end()));
  return total;
}

bool horn_positive(const Partition& lambda, const Partition& mu, const Partition& nu, int m) {
  if (lambda.length() > m || mu.length() > m || nu.length() > m) {
    throw_invariant("horn_positive needs all lengths <= m");
  }
  if (lambda.size() != mu.size() + nu.size()) throw_invariant("horn_positive needs |lambda| = |mu| + |nu|");
  for (int r = 1; r < m; ++r) {
    // All r-subsets of {1..m}, stored decreasing.
    std::vector<std::vector<int>> subsets;
    std::vector<int> mask(static_cast<std::size_t>(m), 0);
    std::fill(mask.begin(), mask.begin() + r, 1);
    do {
      std::vector<int> s;
      for (int i = m; i >= 1; --i)
        if (mask[static_cast<std::size_t>(i - 1)]) s.push_back(i);
      subsets.push_back(std::move(s));
    } while (std::prev_permutation(mask.begin(), mask.end()));
    std::vector<Partition> shapes;
    std::vector<long long> lam_sum, mu_sum, nu_sum;
    for (const auto& s : subsets) {
      shapes.push_back(lambda_of_index_set(s));
      long long a = 0, b = 0, c = 0;
      for (int i : s) {
        a += lambda(i);
        b += mu(i);
        c += nu(i);
      }
      lam_sum.push_back(a);
      mu_sum.push_back(b);
      nu_sum.push_back(c);
    }
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      for (std::size_t j = 0; j < subsets.size(); ++j) {
        for (std::size_t k = 0; k < subsets.size(); ++k) {
          if (lam_sum[i] <= mu_sum[j] + nu_sum[k]) continue;
          if (lr_coeff(shapes[i], shapes[j], shapes[k]) == 1) return false;
        }
      }
    }
  }
  return true;
}

SchurExpansion::SchurExpansion(Map coeffs) : coeffs_(std::move(coeffs)) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second == 0) it = coeffs_.erase(it);
    else ++it;
  }
}

void SchurExpansion::add(const Partition& p, long long c) {
  if (c == 0) return;
  long long& v = coeffs_[p];
  v += c;
  if (v == 0) coeffs_.erase(p);
}

long long SchurExpansion::coeff(const Partition& p) const {
  auto it = coeffs_.find(p);
  return it == coeffs_.end() ? 0 : it->second;
}

std::optional<int> SchurExpansion::homogeneous_degree() const {
  if (coeffs_.empty()) return std::nullopt;
  const int n = coeffs_.begin()->first.size();
  for (const auto& [p, c] : coeffs_)
    if (p.size() != n) return std::nullopt;
  return n;
}

std::string SchurExpansion::to_json() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [p, c] : coeffs_) {
    if (!first) s += ',';
    first = false;
    s += "\"" + p.paren() + "\":" + std::to_string(c);
  }
  return s + "}";
}

std::string SchurExpansion::to_text() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [p, c] : coeffs_) {
    long long mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != 1) s += std::to_string(mag) + " ";
    s += "s[" + p.str() + "]";
  }
  return s;
}

SchurExpansion schur_from_weights(const std::vector<LambdaWeight>& weights) {
  std::map<std::pair<long long, long long>, long long> mult;
  for (const auto& w : weights) ++mult[{w.a, w.b}];
  auto get = [&](long long a, long long b) {
    auto it = mult.find({a, b});
    return it == mult.end() ? 0LL : it->second;
  };
  SchurExpansion out;
  std::map<std::pair<long long, long long>, long long> rebuilt;
  for (const auto& [w, m] : mult) {
    auto [a, b] = w;
    if (a < b) continue;
    long long c = m - get(a + 1, b - 1);
    if (c == 0) continue;
    if (c < 0 || b < 0) {
      throw_invariant("weight multiset is not a polynomial GL2 character (negative Schur coefficient at (" +
                      std::to_string(a) + "," + std::to_string(b) + "))");
    }
    out.add(Partition({static_cast<int>(a), static_cast<int>(b)}), c);
    for (long long t = 0; t <= a - b; ++t) rebuilt[{a - t, b + t}] += c;
  }
  if (rebuilt != mult) throw_invariant("weight multiset is not a polynomial GL2 character (not Weyl-symmetric)");
  return out;
}

MemoSnapshot snapshot_memo() {
  MemoSnapshot snap;
  snap.lr = lr_memo().items();
  for (auto& [k, v] : chi_memo().items()) snap.characters.emplace_back(k, v.get_str());
  return snap;
}

void preload_memo(const MemoSnapshot& snap) {
  for (const auto& [k, v] : snap.lr) lr_memo().insert(k, v);
  for (const auto& [k, v] : snap.characters) chi_memo().insert(k, mpz_class(v));
}

void clear_memo() {
  lr_memo().clear();
  chi_memo().clear();
}

}  // namespace kron
