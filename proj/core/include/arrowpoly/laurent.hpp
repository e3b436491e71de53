#pragma once

// Laurent polynomials in A with exact (overflow-checked) integer coefficients.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace arrowpoly {

/// Thrown when an integer coefficient leaves the int64 range.
class OverflowError : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

namespace checked {

inline int64_t add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coefficient overflow in addition");
  return r;
}

inline int64_t mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("coefficient overflow in multiplication");
  return r;
}

inline int64_t neg(int64_t a) {
  if (a == INT64_MIN) throw OverflowError("coefficient overflow in negation");
  return -a;
}

}  // namespace checked

/// Dense Laurent polynomial sum_k c_k A^(low + k).
///
/// Stored trimmed: the first and last coefficients are nonzero, and the zero
/// polynomial has no coefficients at all.
class LaurentZ {
public:
  LaurentZ() = default;
  LaurentZ(int64_t constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) coeffs_.push_back(constant);
  }

  static LaurentZ monomial(int64_t coeff, int exponent);
  /// -A^2 - A^-2, the value of a trivial loop.
  static LaurentZ delta();
  static LaurentZ from_terms(const std::vector<std::pair<int, int64_t>>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  int min_degree() const;
  int max_degree() const;
  int64_t coeff(int exponent) const;
  /// (exponent, coefficient) pairs in ascending exponent order, zeros skipped.
  std::vector<std::pair<int, int64_t>> terms() const;
  std::size_t term_count() const;

  LaurentZ& operator+=(const LaurentZ& o);
  LaurentZ& operator-=(const LaurentZ& o);
  LaurentZ& operator*=(const LaurentZ& o);
  LaurentZ operator-() const;

  friend LaurentZ operator+(LaurentZ a, const LaurentZ& b) { return a += b; }
  friend LaurentZ operator-(LaurentZ a, const LaurentZ& b) { return a -= b; }
  friend LaurentZ operator*(const LaurentZ& a, const LaurentZ& b);

  /// Multiply by A^k in place.
  void shift(int k) {
    if (!coeffs_.empty()) low_ += k;
  }
  LaurentZ shifted(int k) const {
    LaurentZ r = *this;
    r.shift(k);
    return r;
  }
  /// A -> A^-1.
  LaurentZ mirrored() const;
  LaurentZ pow(unsigned n) const;

  friend bool operator==(const LaurentZ& a, const LaurentZ& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LaurentZ& a, const LaurentZ& b) { return !(a == b); }
  /// Arbitrary but fixed total order, used for containers.
  friend bool operator<(const LaurentZ& a, const LaurentZ& b);

  std::size_t hash() const;

  /// Render as e.g. "-A^-2 - A^2"; the variable name can be overridden.
  std::string to_string(const std::string& var = "A") const;

private:
  void trim();

  int low_ = 0;
  std::vector<int64_t> coeffs_;
};

}  // namespace arrowpoly
