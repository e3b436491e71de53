#pragma once

// Bounds and obstructions read off a polynomial's monomials. All of them are
// necessary conditions only.

#include <cstdint>
#include <optional>
#include <string>

#include "arrowpoly/poly.hpp"

namespace arrowpoly {

/// Virtual genus lower bound: per monomial, m = number of distinct index
/// vectors; m if m <= 1, else ceil(m/3 + 1). Maximum over monomials.
int genus_lower_bound(const HArrowPoly& p);

/// Crossing number lower bound: per monomial, s = total |entries| counted with
/// multiplicity; ceil(s/2). Maximum over monomials.
int crossing_lower_bound(const HArrowPoly& p);

struct CheckerboardVerdict {
  bool obstructed = false;
  /// The offending monomial and the violated condition when obstructed.
  std::optional<Monomial> monomial;
  std::string reason;
};

/// For a checkerboard colorable link every nonconstant monomial
/// X_{i_1}...X_{i_k} (i_j >= 1) has sum i_j = 0 mod 4, k >= 2, and largest
/// index at most the sum of the rest. Throws InvariantError on multi-slot
/// index vectors.
CheckerboardVerdict checkerboard_obstruction(const HArrowPoly& p);

struct NullhomologyReport {
  /// The polynomial lies in Z[A^+-1].
  bool arrow_trivial = true;
  /// gcd of all indices; 0 when there are none.
  int64_t index_gcd = 0;
  /// Whether Z/nZ-nullhomology (n == 0: Z) is not excluded.
  bool allows(int64_t n) const;
  /// Largest n >= 1 not excluded, or 0 when nothing is excluded.
  int64_t largest_modulus() const { return index_gcd; }
};

NullhomologyReport nullhomology_necessary(const HArrowPoly& p);

struct BoundReport {
  int genus_lb = 0;
  int crossing_lb = 0;
  CheckerboardVerdict checkerboard;
  bool arrow_trivial = true;
};

/// All of the above on a single-label polynomial.
BoundReport bound_report(const HArrowPoly& p);

}  // namespace arrowpoly
