#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kron/laurent.hpp"
#include "kron/linalg.hpp"

namespace kron {

// Ice quiver with mutable vertices 0..p-1 followed by frozen vertices.
// Arrows form a multiset stored as a count matrix.
class IceQuiver {
 public:
  IceQuiver() = default;
  IceQuiver(std::vector<std::string> labels, int num_mutable, const std::vector<std::pair<int, int>>& arrows);

  int size() const { return static_cast<int>(labels_.size()); }
  int num_mutable() const { return num_mutable_; }
  bool is_mutable(int v) const { return v >= 0 && v < num_mutable_; }
  const std::vector<std::string>& labels() const { return labels_; }
  int index_of(const std::string& label) const;  // -1 when absent

  int arrow_count(int u, int v) const { return counts_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]; }
  // Expanded multiset, sorted by (source, target).
  std::vector<std::pair<int, int>> arrows() const;
  std::size_t num_arrows() const;

  // b_{u,v} = #(u->v) - #(v->u) for mutable u; p x q.
  IntMatrix b_matrix() const;

  std::string to_json() const;

  friend bool operator==(const IceQuiver&, const IceQuiver&) = default;

 private:
  friend IceQuiver mutate_quiver(const IceQuiver& q, int u);
  void cancel_two_cycles(bool include_frozen_pairs);

  std::vector<std::string> labels_;
  int num_mutable_ = 0;
  std::vector<std::vector<int>> counts_;
};

IceQuiver mutate_quiver(const IceQuiver& q, int u);

// Standard matrix mutation of an exchange matrix (used as an independent
// check of quiver mutation).
IntMatrix mutate_b_matrix(const IntMatrix& b, int u);

// One integer weight vector per quiver vertex.
struct WeightConfiguration {
  IntMatrix rows;

  std::size_t dim() const { return rows.empty() ? 0 : rows[0].size(); }
  // B . sigma = 0.
  bool valid_for(const IceQuiver& q) const;
};

WeightConfiguration mutate_weight_config(const IceQuiver& q, const WeightConfiguration& sigma, int u);

// y_u = x^{-b_u}.
LaurentPoly y_monomial(const IceQuiver& q, int u);

}  // namespace kron
