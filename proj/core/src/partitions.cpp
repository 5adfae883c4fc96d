#include "kron/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "kron/error.hpp"

namespace kron {

namespace {

long long parse_integer(std::string_view tok, std::string_view context) {
  while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
  while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
  if (tok.empty()) throw_parse("empty entry in '" + std::string(context) + "'");
  if (tok.front() == '+') tok.remove_prefix(1);
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw_parse("not an integer: '" + std::string(tok) + "' in '" + std::string(context) + "'");
  }
  return value;
}

std::vector<long long> parse_list(std::string_view text, std::string_view context) {
  std::vector<long long> out;
  std::string_view rest = text;
  while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
  while (!rest.empty() && rest.back() == ' ') rest.remove_suffix(1);
  if (rest.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = rest.find(',', pos);
    out.push_back(parse_integer(rest.substr(pos, comma == std::string_view::npos ? rest.npos : comma - pos), context));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string join(const std::vector<long long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

void gen_partitions(int n, int max_len, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  if (max_len == 0) return;
  for (int p = std::min(n, max_part); p >= 1; --p) {
    if (static_cast<long long>(p) * max_len < n) break;
    cur.push_back(p);
    gen_partitions(n - p, max_len - 1, p, cur, out);
    cur.pop_back();
  }
}

void gen_sub(const Partition& outer, int row, int remaining, int cap, std::vector<int>& cur,
             std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (row > outer.length()) return;
  int hi = std::min({cap, outer(row), remaining});
  int tail = 0;
  for (int r = row; r <= outer.length(); ++r) tail += std::min(outer(r), hi);
  if (tail < remaining) return;
  for (int p = hi; p >= 1; --p) {
    cur.push_back(p);
    gen_sub(outer, row + 1, remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw_invariant("partition parts must be positive");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
      throw_invariant("partition parts must be weakly decreasing");
    }
    size_ += parts_[i];
  }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

std::string Partition::str() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::string Partition::paren() const { return "(" + str() + ")"; }

Partition Partition::parse(std::string_view text) {
  std::vector<long long> raw = parse_list(text, text);
  std::vector<int> parts;
  for (long long x : raw) {
    if (x < 0 || x > 1'000'000) throw_parse("partition entry out of range in '" + std::string(text) + "'");
    parts.push_back(static_cast<int>(x));
  }
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    if (parts[i] < parts[i + 1]) throw_parse("partition must be weakly decreasing: '" + std::string(text) + "'");
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (int p : parts) {
    if (p == 0) throw_parse("zero part before a positive part: '" + std::string(text) + "'");
  }
  return Partition(parts);
}

Weight::Weight(int l_, std::vector<long long> neg_, std::vector<long long> pos_)
    : l(l_), neg(std::move(neg_)), pos(std::move(pos_)) {
  if (l < 1) throw_invariant("weight needs l >= 1");
  if (static_cast<int>(neg.size()) != l || static_cast<int>(pos.size()) != l) {
    throw_invariant("weight arms must both have length l");
  }
}

Weight Weight::zero(int l) {
  return Weight(l, std::vector<long long>(static_cast<std::size_t>(l), 0),
                std::vector<long long>(static_cast<std::size_t>(l), 0));
}

long long Weight::at(int vertex) const {
  if (vertex == 0 || vertex > l || vertex < -l) throw_invariant("weight vertex out of range");
  return vertex > 0 ? pos[static_cast<std::size_t>(vertex - 1)] : neg[static_cast<std::size_t>(-vertex - 1)];
}

bool Weight::sign_valid() const {
  for (long long x : neg)
    if (x > 0) return false;
  for (long long x : pos)
    if (x < 0) return false;
  return true;
}

bool Weight::balanced() const {
  long long a = 0, b = 0;
  for (int i = 1; i <= l; ++i) {
    a += i * -neg[static_cast<std::size_t>(i - 1)];
    b += i * pos[static_cast<std::size_t>(i - 1)];
  }
  return a == b;
}

long long Weight::degree() const {
  long long b = 0;
  for (int i = 1; i <= l; ++i) b += i * pos[static_cast<std::size_t>(i - 1)];
  return b;
}

std::vector<long long> Weight::flat() const {
  std::vector<long long> v = neg;
  v.insert(v.end(), pos.begin(), pos.end());
  return v;
}

Weight Weight::from_flat(int l, const std::vector<long long>& v) {
  if (static_cast<int>(v.size()) != 2 * l) throw_invariant("flat weight has wrong length");
  return Weight(l, std::vector<long long>(v.begin(), v.begin() + l), std::vector<long long>(v.begin() + l, v.end()));
}

std::string Weight::str() const { return join(neg) + ";" + join(pos); }

Weight Weight::parse(std::string_view text) {
  std::size_t semi = text.find(';');
  if (semi == std::string_view::npos || text.find(';', semi + 1) != std::string_view::npos) {
    throw_parse("weight must have the form 'a,..;b,..': '" + std::string(text) + "'");
  }
  std::vector<long long> neg = parse_list(text.substr(0, semi), text);
  std::vector<long long> pos = parse_list(text.substr(semi + 1), text);
  if (neg.size() != pos.size() || neg.empty()) {
    throw_parse("weight arms must be nonempty and of equal length: '" + std::string(text) + "'");
  }
  const int l = static_cast<int>(neg.size());
  return Weight(l, std::move(neg), std::move(pos));
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out;
  int first = lambda(1);
  for (int i = 1; i <= first; ++i) {
    int c = 0;
    for (int p : lambda.parts())
      if (p >= i) ++c;
    out.push_back(c);
  }
  return Partition(out);
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int i = 1; i <= inner.length(); ++i)
    if (inner(i) > outer(i)) return false;
  return true;
}

Partition intersection(const Partition& a, const Partition& b) {
  std::vector<int> out;
  int n = std::min(a.length(), b.length());
  for (int i = 1; i <= n; ++i) out.push_back(std::min(a(i), b(i)));
  return Partition(out);
}

Partition lambda_of_index_set(const std::vector<int>& index_set) {
  const int r = static_cast<int>(index_set.size());
  for (int t = 0; t < r; ++t) {
    if (index_set[static_cast<std::size_t>(t)] <= 0) throw_invariant("index set entries must be positive");
    if (t + 1 < r && index_set[static_cast<std::size_t>(t)] <= index_set[static_cast<std::size_t>(t + 1)]) {
      throw_invariant("index set must be strictly decreasing");
    }
  }
  std::vector<int> parts;
  for (int t = 1; t <= r; ++t) parts.push_back(index_set[static_cast<std::size_t>(t - 1)] - (r - t + 1));
  return Partition(parts);
}

LambdaWeight lambda_omega(const Partition& lambda) {
  if (lambda.length() > 2) throw_invariant("lambda_omega needs a partition of length at most 2");
  return LambdaWeight{lambda(1) + 1LL, lambda(2) - 1LL};
}

Weight partitions_to_weight(const Partition& mu, const Partition& nu, int l) {
  if (l < 1) throw_invariant("l must be positive");
  if (mu.size() != nu.size()) throw_invariant("mu and nu must have the same size");
  if (mu.length() > l || nu.length() > l) throw_invariant("partition length exceeds l");
  Weight w = Weight::zero(l);
  for (int i = 1; i <= l; ++i) {
    w.neg[static_cast<std::size_t>(i - 1)] = -(mu(i) - mu(i + 1));
    w.pos[static_cast<std::size_t>(i - 1)] = nu(i) - nu(i + 1);
  }
  return w;
}

std::pair<Partition, Partition> weight_to_partitions(const Weight& sigma) {
  if (!sigma.sign_valid()) throw_invariant("weight has an invalid sign pattern: " + sigma.str());
  if (!sigma.balanced()) throw_invariant("weight is not balanced: " + sigma.str());
  std::vector<int> mu(static_cast<std::size_t>(sigma.l), 0), nu(static_cast<std::size_t>(sigma.l), 0);
  long long accm = 0, accn = 0;
  for (int i = sigma.l; i >= 1; --i) {
    accm += -sigma.at(-i);
    accn += sigma.at(i);
    mu[static_cast<std::size_t>(i - 1)] = static_cast<int>(accm);
    nu[static_cast<std::size_t>(i - 1)] = static_cast<int>(accn);
  }
  return {Partition(mu), Partition(nu)};
}

std::vector<Partition> partitions_of(int n, int max_len, int max_part) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  gen_partitions(n, max_len, max_part, cur, out);
  return out;
}

std::vector<Partition> subpartitions_of_size(const Partition& outer, int n) {
  std::vector<Partition> out;
  if (n < 0 || n > outer.size()) return out;
  std::vector<int> cur;
  gen_sub(outer, 1, n, outer(1), cur, out);
  return out;
}

}  // namespace kron
