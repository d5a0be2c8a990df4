#ifndef LGMF_CYCLO_HPP
#define LGMF_CYCLO_HPP

#include <complex>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "lgmf/rational.hpp"

namespace lgmf {

/// Precomputed data for Q(zeta_n) = Q[t]/Phi_n(t).
struct CycloField {
  int order = 1;
  int degree = 1;                        // phi(n)
  std::vector<long long> phi_poly;       // Phi_n, low degree first, monic
  // reduction of t^k for k in [degree, 2*degree-2], each of length `degree`
  std::vector<std::vector<long long>> high_powers;
};

/// Shared, immutable field data for Q(zeta_n). Thread-safe.
const CycloField& cyclo_field(int order);

/// Integer coefficients of the n-th cyclotomic polynomial, low degree first.
std::vector<long long> cyclotomic_polynomial(int n);

/// Exact element of Q(zeta_n), stored as coefficients of 1, t, ..., t^(phi(n)-1).
///
/// Binary operations on elements of different orders first lift both operands
/// into Q(zeta_lcm).
class CycloNumber {
 public:
  using Coeffs = boost::container::small_vector<Rational, 4>;

  CycloNumber();  // zero in Q
  explicit CycloNumber(int order);
  CycloNumber(int order, const Rational& value);
  CycloNumber(int order, Coeffs coeffs);

  /// zeta_order^power (power taken modulo order).
  static CycloNumber zeta(int order, long long power = 1);

  int order() const { return field_->order; }
  const CycloField& field() const { return *field_; }
  std::span<const Rational> coeffs() const { return {coeffs_.data(), coeffs_.size()}; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Rational value; only meaningful when is_rational().
  const Rational& rational_part() const { return coeffs_[0]; }

  /// Same value expressed in Q(zeta_m); requires order() | m.
  CycloNumber lift(int m) const;

  CycloNumber inverse() const;
  CycloNumber operator-() const;

  friend CycloNumber operator+(const CycloNumber& a, const CycloNumber& b);
  friend CycloNumber operator-(const CycloNumber& a, const CycloNumber& b);
  friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b);
  friend CycloNumber operator/(const CycloNumber& a, const CycloNumber& b);
  CycloNumber& operator+=(const CycloNumber& o);
  CycloNumber& operator-=(const CycloNumber& o);
  CycloNumber& operator*=(const CycloNumber& o) { return *this = *this * o; }
  CycloNumber& operator/=(const CycloNumber& o) { return *this = *this / o; }

  CycloNumber scaled(const Rational& r) const;
  CycloNumber pow(long long e) const;

  friend bool operator==(const CycloNumber& a, const CycloNumber& b);
  friend bool operator!=(const CycloNumber& a, const CycloNumber& b) { return !(a == b); }

  /// Evaluates at zeta_n = exp(2 pi i / n).
  std::complex<double> embed() const;

  /// Text in the polynomial grammar, e.g. "1/2", "z", "(1 - 2*z^3)".
  std::string to_string() const;

 private:
  const CycloField* field_;
  Coeffs coeffs_;

  void reduce_in_place(std::vector<Rational>& wide);
};

std::complex<double> embed_numeric(const CycloNumber& a);

std::ostream& operator<<(std::ostream& os, const CycloNumber& c);

}  // namespace lgmf

#endif  // LGMF_CYCLO_HPP
