#ifndef LGMF_POLY_HPP
#define LGMF_POLY_HPP

#include <complex>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lgmf/cyclo.hpp"
#include "lgmf/ring.hpp"

namespace lgmf {

struct Term {
  Monomial mono;
  CycloNumber coeff;
};

/// Sparse polynomial over Q(zeta_n) in the variables of a RingSpec.
///
/// Terms are kept strictly decreasing in graded-lex order with no zero
/// coefficients, so structural equality is value equality.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(Ring ring);

  static MultiPoly constant(const Ring& ring, const CycloNumber& c);
  static MultiPoly constant(const Ring& ring, const Rational& c);
  static MultiPoly variable(const Ring& ring, std::size_t index);
  static MultiPoly variable(const Ring& ring, std::string_view name);
  static MultiPoly monomial(const Ring& ring, const Monomial& m, const CycloNumber& c);
  /// Builds from arbitrary (unsorted, possibly repeated or zero) terms.
  static MultiPoly from_terms(const Ring& ring, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant coefficient (zero if absent).
  CycloNumber constant_term() const;
  CycloNumber coefficient(const Monomial& m) const;

  const Term& leading_term() const { return terms_.front(); }
  /// Weighted degree of the leading term (in |x| = 2q units).
  Rational degree() const;
  bool is_homogeneous() const;
  std::optional<Rational> homogeneous_degree() const;
  /// Terms of exactly this scaled degree.
  MultiPoly homogeneous_part(long long scaled_deg) const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly scaled(const CycloNumber& c) const;
  MultiPoly times_monomial(const Monomial& m, const CycloNumber& c) const;
  MultiPoly pow(unsigned e) const;
  MultiPoly derivative(std::size_t var) const;
  /// Leading coefficient made one.
  MultiPoly monic() const;
  /// Removes the leading term in place.
  void drop_leading();

  /// Same polynomial in a ring whose variables include all used ones (by name).
  MultiPoly to_ring(const Ring& target) const;
  /// Set of variable indices that actually occur.
  std::vector<std::size_t> support_vars() const;

  /// Splits into sum_u u * p_u where u ranges over monomials in `vars`
  /// (exponents restricted to those variables) and p_u has no `vars`.
  std::map<std::vector<std::uint16_t>, MultiPoly> split(const std::vector<std::size_t>& vars) const;

  /// Replaces variable `var` by `value`.
  MultiPoly substitute(std::size_t var, const MultiPoly& value) const;

  std::complex<double> evaluate(std::span<const std::complex<double>> point) const;

  /// Text in the polynomial grammar with canonical term ordering.
  std::string to_string() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

 private:
  Ring ring_;
  std::vector<Term> terms_;

  void check_ring(const MultiPoly& o) const;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

/// Parses the polynomial grammar over `ring`: integers, '/', variables, `z`
/// for zeta_n, + - * ^ ( ); whitespace insignificant.
MultiPoly parse_poly(std::string_view text, const Ring& ring);

/// Variable identifiers in order of first appearance (excluding `z`).
std::vector<std::string> scan_variables(std::string_view text);

/// Solves for weights q_i making every term of degree 2 (|x| = 2q). Variables
/// the equations leave free are tied together. Throws if no positive solution.
std::vector<Rational> infer_weights(const MultiPoly& p);

/// Parses a polynomial whose ring is inferred: weights from quasi-homogeneity,
/// cyclotomic order given.
MultiPoly parse_with_inferred_ring(std::string_view text, int cyclo_order = 1);

}  // namespace lgmf

#endif  // LGMF_POLY_HPP
