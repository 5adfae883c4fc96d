#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kron {

// Weakly decreasing sequence of positive integers. Trailing zeros are
// stripped on construction so equal partitions compare equal.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // 1-based part access; parts beyond the length are 0.
  int operator()(int i) const {
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }

  // "2,1"; the empty partition prints as "".
  std::string str() const;
  // "(2,1)"; the empty partition prints as "()".
  std::string paren() const;
  static Partition parse(std::string_view text);

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// A T-weight of GL2; entries may be negative.
struct LambdaWeight {
  long long a = 0;
  long long b = 0;
  friend auto operator<=>(const LambdaWeight&, const LambdaWeight&) = default;
};

// Weight of the flagged Kronecker quiver with arms of length l.
// neg[i-1] = sigma(-i), pos[i-1] = sigma(i).
struct Weight {
  int l = 0;
  std::vector<long long> neg;
  std::vector<long long> pos;

  Weight() = default;
  Weight(int l_, std::vector<long long> neg_, std::vector<long long> pos_);
  static Weight zero(int l);

  long long at(int vertex) const;  // vertex in -l..-1, 1..l
  bool sign_valid() const;
  bool balanced() const;
  long long degree() const;  // sum_i i * sigma(i)

  // Flat vector sigma(-1..-l), sigma(1..l).
  std::vector<long long> flat() const;
  static Weight from_flat(int l, const std::vector<long long>& v);

  // "s(-1),...,s(-l);s(1),...,s(l)".
  std::string str() const;
  static Weight parse(std::string_view text);

  friend bool operator==(const Weight&, const Weight&) = default;
};

Partition conjugate(const Partition& lambda);
bool contains(const Partition& outer, const Partition& inner);
Partition intersection(const Partition& a, const Partition& b);

// I strictly decreasing positive: result(t) = i_t - (r - t + 1).
Partition lambda_of_index_set(const std::vector<int>& index_set);

LambdaWeight lambda_omega(const Partition& lambda);

Weight partitions_to_weight(const Partition& mu, const Partition& nu, int l);
std::pair<Partition, Partition> weight_to_partitions(const Weight& sigma);

// All partitions of n with at most max_len parts each at most max_part,
// in lexicographically decreasing order.
std::vector<Partition> partitions_of(int n, int max_len = std::numeric_limits<int>::max(),
                                     int max_part = std::numeric_limits<int>::max());
// Partitions of n contained in the shape `outer`.
std::vector<Partition> subpartitions_of_size(const Partition& outer, int n);

}  // namespace kron

template <>
struct std::hash<kron::Partition> {
  std::size_t operator()(const kron::Partition& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int x : p.parts()) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};
