#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "kron/linalg.hpp"

namespace kron {

// H-representation: ineq rows a with a.g >= 0, equality rows a.g = b.
//
//   dim N
//   ineq M
//   a_1 ... a_N          (M lines)
//   eq K
//   a_1 ... a_N b        (K lines)
//
// '#' starts a comment that runs to the end of the line.
struct HRep {
  int dim = 0;
  IntMatrix ineq;
  IntMatrix eq;
  IntVec eq_rhs;
  // Optional per-row comments emitted after the row ("# ...").
  std::vector<std::string> ineq_notes;

  std::string emit() const;
  static HRep parse(std::string_view text);
};

// One point per line, N integers, in the given order.
std::string emit_points(const std::vector<IntVec>& points);

}  // namespace kron
