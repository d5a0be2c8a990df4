#ifndef LGMF_QDIM_HPP
#define LGMF_QDIM_HPP

#include <string>

#include "lgmf/mf.hpp"
#include "lgmf/potential.hpp"

namespace lgmf {

/// Left and right quantum dimensions. Signs follow the (-1)^{n(n+1)/2}
/// prefactor with variables in ring order; only |value| and nonvanishing are
/// convention-free.
struct QdimPair {
  CycloNumber left, right;
  bool both_nonzero = false;
};

/// Supertrace of d_{x1} d ... d_{xm} d d_{y1} d ... d_{yn} d (partials of the
/// differential, left variables then right ones).
MultiPoly qdim_supertrace(const MatrixFactorization& m);

/// Quantum dimensions as polynomials in the internal variables of `m`, which
/// are treated as parameters (zero-weight unknowns of an ansatz). For an MF
/// without internal variables these are constants.
std::pair<MultiPoly, MultiPoly> qdim_parametric(const MatrixFactorization& m);

/// Requires a valid MF without internal variables.
QdimPair qdim(const MatrixFactorization& m);

struct OrbifoldReport {
  bool valid = false;    // validate ok and potentials are V, W
  QdimPair qdims;        // zero unless valid
  bool witness = false;  // valid and both qdims nonzero
  std::string message;
};

/// V must be written in the left variables of M and W in the right ones.
OrbifoldReport verify_orbifold(const MatrixFactorization& m, const Potential& v, const Potential& w);

std::string orbifold_report_json(const OrbifoldReport& r);

}  // namespace lgmf

#endif  // LGMF_QDIM_HPP
