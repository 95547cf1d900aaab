// Exact polynomials in the two deformation parameters s1, s2.
//
// These are the coefficient objects that appear in the connection matrices
// of the direct-image system: every entry is a rational-coefficient
// polynomial in (s1, s2), and the discriminant is an exact determinant of
// such a matrix.  Everything here is exact GMP rational arithmetic; no
// floating point.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gms/rational.hpp"

namespace gms {

// A polynomial in s1, s2 with rational coefficients.  Terms are kept in a
// map ordered lexicographically by (s1-exponent, s2-exponent), largest
// first, so begin() is the leading term used by the exact division
// algorithm and by to_string().
class BivariatePoly {
 public:
  using Exponents = std::pair<long, long>;  // (a, b) for s1^a s2^b
  using TermMap = std::map<Exponents, Rat, std::greater<Exponents>>;

  BivariatePoly() = default;
  explicit BivariatePoly(const Rat& constant);

  // c * s1^a * s2^b.  Exponents must be non-negative.
  static BivariatePoly monomial(long a, long b, const Rat& c);

  bool is_zero() const { return terms_.empty(); }
  // Exactly one term.
  bool is_monomial() const { return terms_.size() == 1; }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // Leading term under the (a, b)-lex order; throws std::logic_error on the
  // zero polynomial.
  std::pair<Exponents, Rat> leading() const;

  Rat coeff(long a, long b) const;

  BivariatePoly& operator+=(const BivariatePoly& o);
  BivariatePoly& operator-=(const BivariatePoly& o);
  BivariatePoly operator+(const BivariatePoly& o) const;
  BivariatePoly operator-(const BivariatePoly& o) const;
  BivariatePoly operator-() const;
  BivariatePoly operator*(const BivariatePoly& o) const;
  BivariatePoly operator*(const Rat& c) const;
  bool operator==(const BivariatePoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const BivariatePoly& o) const { return !(*this == o); }

  // Multiplication by s1^a s2^b (exponent shift); a, b >= 0.
  BivariatePoly shifted(long a, long b) const;

  BivariatePoly pow(long e) const;

  // Exact quotient *this / d.  Throws std::domain_error if d is zero or the
  // division leaves a remainder.  Used by the fraction-free determinant.
  BivariatePoly divide_exact(const BivariatePoly& d) const;

  // If every term has the same weight a*p1 + b*p2, returns it.
  std::optional<long> quasihomogeneous_weight(long p1, long p2) const;

  // Largest (a0, b0) with s1^a0 s2^b0 dividing every term; (0,0) for the
  // zero polynomial.
  Exponents monomial_content() const;

  // "s1^2 s2 - 4 * s2^4" style: terms from the leading one down, unit
  // coefficients omitted, negative coefficients rendered with " - ".
  std::string to_string() const;

 private:
  void add_term(long a, long b, const Rat& c);

  TermMap terms_;
};

inline BivariatePoly operator*(const Rat& c, const BivariatePoly& p) {
  return p * c;
}

// Parses expressions such as
//   "s2^2 (s1^2 - 4 s2^3)^3"
//   "3^3 4^4 s1^7 - 7^7 s2^12"
//   "1/4 s1^2 - s2^2"
// Adjacent factors multiply; '^' binds to the factor on its left; numeric
// factors may themselves carry integer powers, and may be rationals p/q.
// Throws std::invalid_argument with a position hint on malformed input.
BivariatePoly parse_bivariate(const std::string& text);

// Exact determinant by the Bareiss fraction-free elimination (row pivoting
// with sign tracking, exact interior divisions).  The primary determinant
// routine.
BivariatePoly det_bareiss(const std::vector<std::vector<BivariatePoly>>& m);

// Exact determinant by cofactor expansion memoised on the set of remaining
// columns.  Cheap on the sparse matrices produced here; used to cross-check
// det_bareiss on small systems.
BivariatePoly det_cofactor(const std::vector<std::vector<BivariatePoly>>& m);

// If a == c * b for a nonzero rational c, returns c.  Returns 1 when both
// are zero; nullopt when exactly one is zero or the supports/ratios differ.
std::optional<Rat> proportional_scalar(const BivariatePoly& a,
                                       const BivariatePoly& b);

}  // namespace gms
