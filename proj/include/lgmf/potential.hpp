#ifndef LGMF_POTENTIAL_HPP
#define LGMF_POTENTIAL_HPP

#include <string>
#include <vector>

#include "lgmf/groebner.hpp"
#include "lgmf/poly.hpp"

namespace lgmf {

/// Quasi-homogeneous polynomial of degree 2 (or the zero polynomial, used as
/// the right potential of one-sided factorizations).
struct Potential {
  MultiPoly poly;
  std::string name;

  const Ring& ring() const { return poly.ring(); }
  bool is_zero() const { return poly.is_zero(); }
};

/// Wraps a polynomial, checking it is zero or homogeneous of degree 2.
Potential make_potential(MultiPoly poly, std::string name = {});

std::vector<MultiPoly> jacobian(const Potential& w);
GroebnerBasis jacobian_basis(const Potential& w);
bool is_potential(const Potential& w);
/// Throws DomainError for non-potentials.
std::size_t milnor_number(const Potential& w);
Rational central_charge(const Potential& w);
MultiPoly hessian(const Potential& w);

/// Determinant by cofactor expansion; fine for the handful of variables used here.
MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m);

/// Grothendieck residue of f dx / (d_1 W, ..., d_n W), normalized so that
/// residue(hessian(W), W) = milnor_number(W).
CycloNumber residue(const MultiPoly& f, const Potential& w);

/// Catalog names: A:n, D:n, E:6, E:6p (x^3+y^3), E:7, E:8; variables x, y.
Potential catalog_potential(const std::string& name);
/// Catalog name or polynomial text with inferred weights; "0" gives the zero
/// potential in no variables.
Potential potential_from_text(const std::string& text);

/// Same polynomial with variables renamed positionally.
MultiPoly rename_variables(const MultiPoly& p, const std::vector<std::string>& names);
Potential rename_variables(const Potential& w, const std::vector<std::string>& names);

}  // namespace lgmf

#endif  // LGMF_POTENTIAL_HPP
