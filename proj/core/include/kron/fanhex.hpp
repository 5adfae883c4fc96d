#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kron/hrep.hpp"
#include "kron/laurent.hpp"
#include "kron/linalg.hpp"

namespace kron {

struct UnimodularFan {
  int dim = 0;
  std::vector<IntVec> generators;
  // Maximal cones as indices into generators.
  std::vector<std::vector<int>> cones;
};

struct FanCheck {
  bool ok = true;
  std::vector<std::string> diagnostics;
};

// Every maximal cone has dim generators with determinant +-1, and any two
// cones meet in the cone spanned by their common generators.
FanCheck check_unimodular_fan(const UnimodularFan& fan);

// numerator / prod_w (1 - z^w). Variables are the ambient coordinates.
struct HilbertSeries {
  LaurentPoly numerator;
  std::vector<IntVec> denominator;

  // Cancels denominator factors dividing the numerator and sorts the rest.
  void canonicalize();
  // Equal as rational functions.
  bool equivalent(const HilbertSeries& other) const;
  // Coefficients of all monomials z^g with grading . g <= max_degree.
  // Every denominator vector must have positive grading.
  std::map<IntVec, mpz_class> expand(const IntVec& grading, long long max_degree) const;

  std::string str(const std::vector<std::string>& names = {}) const;
};

// Exact division of p by (1 - z^w), or nullopt when it does not divide.
std::optional<LaurentPoly> divide_one_minus(const LaurentPoly& p, const IntVec& w);

// Inclusion-exclusion over the cones of a checked fan.
HilbertSeries fan_hilbert(const UnimodularFan& fan);

// The four-cone fan of the l = 2 diamond, in canonical vertex coordinates.
UnimodularFan diamond2_fan();
// The closed form with the two numerator factors, in the same coordinates.
HilbertSeries diamond2_closed_form();

// V_l: |i|, |j|, |i+j| <= l without the five deleted points.
std::vector<std::pair<int, int>> hex_vertices(int l);
int hex_index(int l, int i, int j);  // -1 when absent

// Matrix of phi: rows indexed by V_l, columns by the diamond vertices.
IntMatrix phi_matrix(int l);
IntVec phi_apply(int l, const IntVec& g);

struct TuBlock {
  std::vector<int> rows;
  std::vector<int> cols;
  bool ok = true;
  std::vector<int> failing_cols;  // column subset without a valid splitting
};

struct TuReport {
  int l = 0;
  bool ok = true;
  std::vector<TuBlock> blocks;
  std::string to_json() const;
};

// Ghouila-Houri on column subsets, exhaustively.
bool ghouila_houri(const IntMatrix& m, std::vector<int>* failing_cols = nullptr);

// Splits phi into connected row/column blocks and checks each one.
TuReport check_tu_blocks(int l);

struct HexSystem {
  int l = 0;
  std::vector<std::pair<int, int>> points;
  IntMatrix rows;  // a.h >= 0
  std::vector<std::string> provenance;

  HRep to_hrep() const;
  bool contains(const IntVec& h) const;
};

HexSystem hex_system(int l);
bool hex_membership(int l, const IntVec& h);

// Coordinates: sigma(-1..-l), sigma(1..l) as in sigma~, then arm 2 at
// -1..-(l-1), 1..l-1, then arm 3 likewise.
int sigma_hat_dim(int l);
IntVec sigma_hat_point(int l, int i, int j);
IntVec sigma_hat_weight(int l, const IntVec& h);
// The first 2l coordinates.
IntVec restrict_to_flag(int l, const IntVec& w);

}  // namespace kron
