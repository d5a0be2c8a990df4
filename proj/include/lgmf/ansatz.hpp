#ifndef LGMF_ANSATZ_HPP
#define LGMF_ANSATZ_HPP

#include <string>
#include <vector>

#include "lgmf/mf.hpp"
#include "lgmf/potential.hpp"

namespace lgmf {

/// Polynomial system for a matrix factorization of V - W with unknown
/// coefficients. The unknowns are ring variables of weight zero; they show
/// up as internal variables of `mf`.
struct AnsatzSystem {
  MatrixFactorization mf;              // template over outer variables + unknowns
  std::vector<std::string> unknowns;   // a0, a1, ...
  std::vector<Rational> ladder;        // generator degrees
  std::vector<MultiPoly> residuals;    // nonzero entries of d^2 - (V - W), row-major
  std::vector<MultiPoly> equations;    // distinct outer-monomial coefficients of the residuals, in `unknown_ring`
  Ring unknown_ring;

  std::size_t unknown_count() const { return unknowns.size(); }
  std::size_t equation_count() const { return equations.size(); }
};

/// First rank/2 generators even, the rest odd, degrees from the ladder. Each
/// odd slot gets the general homogeneous polynomial of the degree homogeneity
/// forces. Unless `gauge` is off, the rescaling freedom of the generators is
/// fixed by setting one leading coefficient per generator to 1 (lowest-degree
/// slots first). W is renamed onto fresh variables if it shares names with V.
AnsatzSystem make_ansatz(const Potential& v, const Potential& w, int rank, const std::vector<Rational>& ladder,
                         bool gauge = true);

/// Recomputes residuals and equations of a template.
void rebuild_equations(AnsatzSystem& s);

/// Substitutes values for the unknowns (in order) and drops them from the ring.
MatrixFactorization substitute_unknowns(const AnsatzSystem& s, const std::vector<CycloNumber>& values);

/// "system v1" text: unknowns, ladder, one residual per line, then the template.
std::string export_system(const AnsatzSystem& s);
void export_system(const AnsatzSystem& s, const std::string& path);
AnsatzSystem import_system(const std::string& text);
AnsatzSystem import_system_file(const std::string& path);

}  // namespace lgmf

#endif  // LGMF_ANSATZ_HPP
