#ifndef LGMF_RING_HPP
#define LGMF_RING_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "lgmf/rational.hpp"

namespace lgmf {

/// Ordered variables with rational weights q_i and a cyclotomic coefficient order.
///
/// The grading used for homogeneity is |x_i| = 2 q_i, so a potential has
/// degree 2 and twisted differentials have degree 1. The symbol `z` is
/// reserved for zeta_n and cannot name a variable.
struct RingSpec {
  std::vector<std::string> names;
  std::vector<Rational> weights;
  int cyclo_order = 1;

  // |x_i| * degree_scale, integral
  std::vector<long long> scaled_degree;
  long long degree_scale = 1;

  std::size_t size() const { return names.size(); }
  int index_of(std::string_view name) const;
  Rational var_degree(std::size_t i) const { return weights[i] * Rational(2); }
  Rational unscale(long long scaled) const { return Rational(scaled, degree_scale); }
  /// Degree in scaled units; throws if not representable.
  long long scale(const Rational& degree) const;
  /// "x:1/5 y:1/5 cyclo 5"
  std::string describe() const;
};

using Ring = std::shared_ptr<const RingSpec>;

Ring make_ring(std::vector<std::string> names, std::vector<Rational> weights, int cyclo_order = 1);
bool same_ring(const Ring& a, const Ring& b);
/// Same variables and weights, possibly different cyclotomic order.
bool same_variables(const Ring& a, const Ring& b);
/// Ring with the same variables and a different cyclotomic order.
Ring with_order(const Ring& r, int cyclo_order);
/// Variables of `a` followed by those of `b` not already present; orders combined by lcm.
Ring union_ring(const Ring& a, const Ring& b);
/// Keeps the listed variables, in the order of `r`.
Ring sub_ring(const Ring& r, const std::vector<std::string>& keep);

using Exponents = boost::container::small_vector<std::uint16_t, 6>;

struct Monomial {
  Exponents exps;
  long long deg = 0;  // scaled weighted degree

  bool is_one() const;
  bool divides(const Monomial& other) const;
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
};

Monomial monomial_one(const RingSpec& r);
Monomial make_monomial(const RingSpec& r, Exponents exps);
Monomial mono_mul(const Monomial& a, const Monomial& b);
/// a / b, requires b | a.
Monomial mono_div(const Monomial& a, const Monomial& b);
Monomial mono_lcm(const RingSpec& r, const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

/// Graded-lex comparison: weighted degree first, then lex in variable order.
/// Returns <0, 0, >0.
int mono_compare(const Monomial& a, const Monomial& b);

/// All monomials of the given scaled degree (variables of zero weight excluded).
std::vector<Monomial> monomials_of_degree(const RingSpec& r, long long scaled_deg);

}  // namespace lgmf

#endif  // LGMF_RING_HPP
