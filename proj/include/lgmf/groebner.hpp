#ifndef LGMF_GROEBNER_HPP
#define LGMF_GROEBNER_HPP

#include <vector>

#include "lgmf/poly.hpp"

namespace lgmf {

/// Reduced Groebner basis (monic, sorted by leading monomial ascending).
struct GroebnerBasis {
  Ring ring;
  std::vector<MultiPoly> polys;

  bool is_unit_ideal() const { return polys.size() == 1 && polys[0].is_constant() && !polys[0].is_zero(); }
};

/// Buchberger with the product and chain criteria. Zero generators are dropped.
GroebnerBasis groebner_basis(const std::vector<MultiPoly>& generators);

/// Remainder of full reduction by a Groebner basis.
MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& gb);
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& generators);

struct Division {
  std::vector<MultiPoly> quotients;
  MultiPoly remainder;
};

/// Multivariate division by an ordered list: f = sum q_i g_i + r with no term
/// of r divisible by any leading term.
Division divide(const MultiPoly& f, const std::vector<MultiPoly>& divisors);

struct QuotientBasis {
  bool finite = false;
  std::vector<Monomial> monomials;  // ascending; empty if infinite
};

/// Standard monomials of S / <generators>.
QuotientBasis quotient_basis(const std::vector<MultiPoly>& generators);
QuotientBasis quotient_basis(const GroebnerBasis& gb);

/// Whether the monomial is divisible by no leading monomial of gb.
bool is_standard(const Monomial& m, const GroebnerBasis& gb);

}  // namespace lgmf

#endif  // LGMF_GROEBNER_HPP
