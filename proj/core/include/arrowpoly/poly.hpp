#pragma once

// The homological arrow polynomial ring: Z[A^+-1] combinations of monomials in
// the variables X_{+-v}, v a nonzero integer vector. The scalar arrow
// polynomial lives in the same ring with 1-entry vectors, K_n == X[2n].

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "arrowpoly/laurent.hpp"

namespace arrowpoly {

/// Raised when a value would break a ring invariant (odd index sum, etc).
class InvariantError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Integer vector over label slots 1..n, trailing zeros trimmed and the first
/// nonzero entry positive. The empty vector is X_0 = 1.
class IndexVector {
public:
  IndexVector() = default;
  /// Sign-normalizes and trims.
  explicit IndexVector(std::vector<int> entries);

  const std::vector<int>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  int entry_sum() const;
  int abs_sum() const;

  auto operator<=>(const IndexVector&) const = default;

private:
  std::vector<int> entries_;
};

/// Canonically sorted multiset of nonzero index vectors.
class Monomial {
public:
  Monomial() = default;
  /// Zero vectors are dropped; the rest are sorted.
  explicit Monomial(std::vector<IndexVector> factors);

  const std::vector<IndexVector>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }
  Monomial operator*(const Monomial& o) const;

  auto operator<=>(const Monomial&) const = default;

private:
  std::vector<IndexVector> factors_;
};

/// Finite sum of LaurentZ-weighted monomials. Every stored index vector has an
/// even entry sum and no stored coefficient is zero.
class HArrowPoly {
public:
  using TermMap = std::map<Monomial, LaurentZ>;

  HArrowPoly() = default;
  HArrowPoly(LaurentZ constant);  // NOLINT(google-explicit-constructor)
  HArrowPoly(int64_t constant) : HArrowPoly(LaurentZ(constant)) {}  // NOLINT(google-explicit-constructor)

  /// Single term c*m. Throws InvariantError on an odd index sum.
  static HArrowPoly term(const LaurentZ& c, const Monomial& m);
  /// X[v] with coefficient 1 (v need not be normalized).
  static HArrowPoly x(std::vector<int> v);
  /// K[n] == X[2n].
  static HArrowPoly k(int n) { return x({2 * n}); }

  /// Accumulate c*m, dropping the term if it cancels.
  void add_term(const Monomial& m, const LaurentZ& c);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when every monomial is the unit, i.e. p lies in Z[A^+-1].
  bool is_scalar() const;
  LaurentZ coeff(const Monomial& m) const;

  HArrowPoly& operator+=(const HArrowPoly& o);
  HArrowPoly& operator-=(const HArrowPoly& o);
  HArrowPoly operator-() const;
  friend HArrowPoly operator+(HArrowPoly a, const HArrowPoly& b) { return a += b; }
  friend HArrowPoly operator-(HArrowPoly a, const HArrowPoly& b) { return a -= b; }
  friend HArrowPoly operator*(const HArrowPoly& a, const HArrowPoly& b);
  HArrowPoly& operator*=(const HArrowPoly& o) { return *this = *this * o; }
  HArrowPoly scaled(const LaurentZ& c) const;

  friend bool operator==(const HArrowPoly& a, const HArrowPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const HArrowPoly& a, const HArrowPoly& b) { return !(a == b); }

private:
  TermMap terms_;
};

/// Convenience alias: the scalar arrow polynomial uses the same representation.
using ArrowPoly = HArrowPoly;

// ---- ring operations ----------------------------------------------------

inline HArrowPoly poly_add(const HArrowPoly& p, const HArrowPoly& q) { return p + q; }
inline HArrowPoly poly_mul(const HArrowPoly& p, const HArrowPoly& q) { return p * q; }

/// maxdeg_A - mindeg_A over all terms. Throws std::domain_error on zero.
int breadth_a(const HArrowPoly& p);

/// A -> A^-1.
HArrowPoly mirror_subst(const HArrowPoly& p);

/// (-A^3)^(-w) * p.
HArrowPoly writhe_normalize(const HArrowPoly& p, int w);

using IntMatrix = std::vector<std::vector<int>>;

/// Label pushforward X[v] -> X[M v]. M is given row-major, m rows by n
/// columns; factors longer than n raise std::invalid_argument.
HArrowPoly pushforward(const HArrowPoly& p, const IntMatrix& m);

/// Negate label slot `slot` (1-based) in every factor, then renormalize.
HArrowPoly negate_slot(const HArrowPoly& p, int slot);

// ---- specializations ----------------------------------------------------

/// K_n = 1 for all n: the Kauffman bracket.
LaurentZ specialize_bracket(const HArrowPoly& p);

/// A = t^(-1/4) applied to the bracket. The result is a Laurent polynomial in
/// u = t^(1/4).
LaurentZ specialize_jones_t(const HArrowPoly& p);

/// Multisets of K-indices. Empty key is the constant monomial.
using KPoly = std::map<std::vector<int>, LaurentZ>;

/// Re-express X[2n] as K_n. Throws InvariantError on multi-slot or odd indices.
KPoly specialize_arrow_k(const HArrowPoly& p);

/// Checks whether every factor is a single even entry.
bool is_arrow_form(const HArrowPoly& p);

// ---- text and structured forms -----------------------------------------

enum class VarStyle { X, K };

/// Deterministic rendering, e.g. "A^-2 + (1 - A^4)*K[1]". VarStyle::K requires
/// arrow form.
std::string canonical_string(const HArrowPoly& p, VarStyle style = VarStyle::X);
std::string monomial_string(const Monomial& m, VarStyle style = VarStyle::X);

/// Parses the canonical grammar, and more generally any sum/product of
/// integers, A^e, K[n]^k, X[v,...]^k and parenthesized sub-expressions.
HArrowPoly parse_poly(std::string_view text);

/// {"<monomial>": {"<A exponent>": coefficient, ...}, ...}
nlohmann::json to_json(const HArrowPoly& p, VarStyle style = VarStyle::X);

}  // namespace arrowpoly
