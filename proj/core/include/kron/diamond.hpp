#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kron/cluster.hpp"
#include "kron/hrep.hpp"
#include "kron/linalg.hpp"
#include "kron/partitions.hpp"

namespace kron {

// Vertex +-(i;j,k) of the diamond quiver, i = j + k. Horizontal vertices
// (j = 0 or k = 0) are identified across signs and always carry sign +1.
struct DiamondVertex {
  int sign = 1;
  int i = 0;
  int j = 0;
  int k = 0;

  // Canonical vertex, or nullopt when the triple is out of range.
  static std::optional<DiamondVertex> make(int sign, int i, int j, int k);

  bool horizontal() const { return j == 0 || k == 0; }
  // "(2;1,1)+", "(2;1,1)-", "(2;2,0)+"
  std::string label() const;
  static DiamondVertex parse(std::string_view text);

  friend auto operator<=>(const DiamondVertex&, const DiamondVertex&) = default;
};

enum class ArrowType : char { A = 'A', B = 'B', C = 'C' };

struct DiamondArrow {
  int src = 0;
  int dst = 0;
  ArrowType type = ArrowType::A;
};

class Diamond {
 public:
  explicit Diamond(int l);

  int l() const { return l_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  int num_mutable() const { return size() - 2 * l_; }
  const std::vector<DiamondVertex>& vertices() const { return vertices_; }
  const DiamondVertex& vertex(int idx) const { return vertices_[static_cast<std::size_t>(idx)]; }
  int index_of(const DiamondVertex& v) const;  // -1 when absent
  int index_of(int sign, int i, int j, int k) const;
  bool frozen(int idx) const { return vertex(idx).i == l_; }

  const std::vector<DiamondArrow>& arrows() const { return arrows_; }
  const IceQuiver& quiver() const { return quiver_; }

  // sigma~_l: rows per vertex with columns sigma(-1..-l), sigma(1..l), j, k.
  const WeightConfiguration& sigma_tilde() const { return sigma_; }
  // Flag part f_v (2l entries) and lambda part (j, k).
  IntVec flag_weight(int idx) const;
  LambdaWeight lambda_weight(int idx) const;

  // Weight and lambda-weight of a coordinate vector g.
  Weight sigma_of(const IntVec& g) const;
  LambdaWeight lambda_of(const IntVec& g) const;

  std::vector<std::string> labels() const;
  // Label followed by the alias " [n]" when l = 2.
  std::string display_label(int idx) const;

 private:
  int l_;
  std::vector<DiamondVertex> vertices_;
  std::vector<DiamondArrow> arrows_;
  IceQuiver quiver_;
  WeightConfiguration sigma_;
};

// Memoized construction; the reference stays valid for the process lifetime.
const Diamond& build_diamond(int l);

// Alias numbering 1..6 of the l = 2 quiver: 1=(1;1,0), 2=(1;0,1),
// 3=(2;1,1)+, 4=(2;1,1)-, 5=(2;2,0), 6=(2;0,2). Returns canonical index.
int diamond2_index_of_alias(int alias);
int diamond2_alias_of_index(int idx);

struct PathStep {
  ArrowType type = ArrowType::A;
  // For the doubled C arrow (1;0,1) -> (1;1,0): which copy (+1 or -1);
  // otherwise 0.
  int c_group = 0;
};

struct VertexPath {
  std::vector<int> vertices;  // canonical indices, repetitions allowed
  std::vector<PathStep> steps;  // steps[t] joins vertices[t] -> vertices[t+1]
};

// tp^sign_{l;j,k} for j, k >= 1 with j + k = l; tp_{l;l,0} and tp_{l;0,l}
// when (j,k) = (l,0) or (0,l) (sign ignored).
VertexPath tri_broken_path(int l, int j, int k, int sign);

// Checks that every step of a path is an arrow of the quiver.
bool path_is_legal(const Diamond& d, const VertexPath& p);

struct ConeSystem {
  int l = 0;
  int dim = 0;
  IntMatrix rows;  // a.g >= 0
  std::vector<std::string> provenance;

  HRep to_hrep() const;
  std::string to_json() const;
  bool contains(const IntVec& g) const;
};

ConeSystem cone_inequalities(int l);

struct GVectorFamilyMember {
  std::string name;
  IntVec g;
};

// The U-invariant g-vector families: the l = 2 vector e(2;0,2)+2e(1;1,0)-e(1;0,1)
// and the two sign-symmetric families indexed by (i) and (i,j).
std::vector<GVectorFamilyMember> u_invariant_gvectors(int l);

}  // namespace kron
