#include "kron/cluster.hpp"

#include <algorithm>
#include <string>

#include "json.hpp"

#include "kron/error.hpp"

namespace kron {

IceQuiver::IceQuiver(std::vector<std::string> labels, int num_mutable,
                     const std::vector<std::pair<int, int>>& arrows)
    : labels_(std::move(labels)), num_mutable_(num_mutable) {
  const int q = size();
  if (num_mutable < 0 || num_mutable > q) throw_invariant("mutable count out of range");
  counts_.assign(static_cast<std::size_t>(q), std::vector<int>(static_cast<std::size_t>(q), 0));
  for (auto [u, v] : arrows) {
    if (u < 0 || v < 0 || u >= q || v >= q) throw_invariant("arrow endpoint out of range");
    if (u == v) throw_invariant("quiver loops are not allowed");
    ++counts_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
  }
  cancel_two_cycles(false);
}

void IceQuiver::cancel_two_cycles(bool include_frozen_pairs) {
  const int q = size();
  for (int u = 0; u < q; ++u) {
    for (int v = u + 1; v < q; ++v) {
      if (!include_frozen_pairs && !is_mutable(u) && !is_mutable(v)) continue;
      int& a = counts_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
      int& b = counts_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
      int m = std::min(a, b);
      a -= m;
      b -= m;
    }
  }
}

int IceQuiver::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

std::vector<std::pair<int, int>> IceQuiver::arrows() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size(); ++u)
    for (int v = 0; v < size(); ++v)
      for (int c = 0; c < arrow_count(u, v); ++c) out.emplace_back(u, v);
  return out;
}

std::size_t IceQuiver::num_arrows() const {
  std::size_t n = 0;
  for (const auto& row : counts_)
    for (int c : row) n += static_cast<std::size_t>(c);
  return n;
}

IntMatrix IceQuiver::b_matrix() const {
  IntMatrix b(static_cast<std::size_t>(num_mutable_), IntVec(static_cast<std::size_t>(size()), 0));
  for (int u = 0; u < num_mutable_; ++u)
    for (int v = 0; v < size(); ++v) b[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = arrow_count(u, v) - arrow_count(v, u);
  return b;
}

std::string IceQuiver::to_json() const {
  nlohmann::ordered_json j;
  j["mutable"] = std::vector<std::string>(labels_.begin(), labels_.begin() + num_mutable_);
  j["frozen"] = std::vector<std::string>(labels_.begin() + num_mutable_, labels_.end());
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (auto [u, v] : arrows()) arr.push_back({labels_[static_cast<std::size_t>(u)], labels_[static_cast<std::size_t>(v)]});
  j["arrows"] = arr;
  return j.dump();
}

namespace {

template <class T>
T checked_madd(T acc, T a, T b, const char* what) {
  T prod, sum;
  if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(acc, prod, &sum))
    throw_invariant(std::string("integer overflow in ") + what);
  return sum;
}

}  // namespace

IceQuiver mutate_quiver(const IceQuiver& q, int u) {
  if (!q.is_mutable(u)) throw_invariant("mutation at a frozen vertex: " + (u >= 0 && u < q.size() ? q.labels()[static_cast<std::size_t>(u)] : std::to_string(u)));
  IceQuiver out = q;
  const int n = q.size();
  auto& c = out.counts_;
  for (int v = 0; v < n; ++v) {
    const int in = q.arrow_count(v, u);
    if (in == 0) continue;
    for (int w = 0; w < n; ++w) {
      const int outc = q.arrow_count(u, w);
      if (outc == 0 || v == w) continue;
      if (!q.is_mutable(v) && !q.is_mutable(w)) continue;
      auto& cell = c[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
      cell = checked_madd(cell, in, outc, "arrow multiplicities");
    }
  }
  for (int v = 0; v < n; ++v) {
    std::swap(c[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)], c[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]);
  }
  out.cancel_two_cycles(true);
  return out;
}

IntMatrix mutate_b_matrix(const IntMatrix& b, int u) {
  const auto us = static_cast<std::size_t>(u);
  IntMatrix out = b;
  auto pos = [](long long x) { return x > 0 ? x : 0; };
  for (std::size_t x = 0; x < b.size(); ++x) {
    for (std::size_t y = 0; y < b[x].size(); ++y) {
      if (x == us || y == us) {
        out[x][y] = -b[x][y];
      } else {
        out[x][y] = checked_madd(checked_madd(b[x][y], pos(b[x][us]), pos(b[us][y]), "exchange matrix"),
                                 -pos(-b[x][us]), pos(-b[us][y]), "exchange matrix");
      }
    }
  }
  return out;
}

bool WeightConfiguration::valid_for(const IceQuiver& q) const {
  if (static_cast<int>(rows.size()) != q.size()) return false;
  const IntMatrix b = q.b_matrix();
  const std::size_t d = dim();
  for (const auto& brow : b) {
    for (std::size_t c = 0; c < d; ++c) {
      long long s = 0;
      for (std::size_t v = 0; v < rows.size(); ++v) s = checked_madd(s, brow[v], rows[v][c], "weight configuration");
      if (s != 0) return false;
    }
  }
  return true;
}

WeightConfiguration mutate_weight_config(const IceQuiver& q, const WeightConfiguration& sigma, int u) {
  if (!q.is_mutable(u)) throw_invariant("mutation at a frozen vertex");
  if (!sigma.valid_for(q)) throw_invariant("weight configuration violates B . sigma = 0");
  WeightConfiguration out = sigma;
  const auto us = static_cast<std::size_t>(u);
  IntVec next(sigma.dim(), 0);
  for (int w = 0; w < q.size(); ++w) {
    const long long c = q.arrow_count(u, w);
    for (std::size_t k = 0; k < next.size(); ++k)
      next[k] = checked_madd(next[k], c, sigma.rows[static_cast<std::size_t>(w)][k], "weight configuration");
  }
  for (std::size_t k = 0; k < next.size(); ++k) next[k] -= sigma.rows[us][k];
  out.rows[us] = next;
  return out;
}

LaurentPoly y_monomial(const IceQuiver& q, int u) {
  if (!q.is_mutable(u)) throw_invariant("y-variables exist only at mutable vertices");
  const IntMatrix b = q.b_matrix();
  LaurentPoly::Exponent e(static_cast<std::size_t>(q.size()));
  for (std::size_t v = 0; v < e.size(); ++v) e[v] = static_cast<int>(-b[static_cast<std::size_t>(u)][v]);
  return LaurentPoly::monomial(e, 1);
}

}  // namespace kron
