#ifndef LGMF_REDUCE_HPP
#define LGMF_REDUCE_HPP

#include <string>
#include <vector>

#include "lgmf/mf.hpp"

namespace lgmf {

struct ReduceResult {
  MatrixFactorization mf;
  Rational cutoff;       // cutoff at which the result stabilized
  std::size_t pivots = 0;
};

/// Finite-rank factorization over the outer variables homotopy equivalent to
/// `m`, eliminating the listed internal variables (all of them if empty).
///
/// Internal monomials are expanded up to weighted degree `cutoff` above the
/// lowest generator, unit entries are split off as contractible pairs, and
/// only generators below the truncation margin are kept. The computation is
/// repeated one degree higher; if the two disagree the cutoff is doubled up
/// to `max_cutoff`, after which CutoffError is thrown.
ReduceResult reduce_detailed(const MatrixFactorization& m, std::vector<std::string> eliminate = {},
                             const Rational& cutoff = Rational(4), const Rational& max_cutoff = Rational(64));

MatrixFactorization reduce(const MatrixFactorization& m, std::vector<std::string> eliminate = {},
                           const Rational& cutoff = Rational(4));

/// Sorts generators by (parity, degree), rescales odd generators so the first
/// nonzero entry of their column has leading coefficient 1.
MatrixFactorization canonicalize(const MatrixFactorization& m);

/// Unit-pivot elimination only (no internal variables involved).
MatrixFactorization split_units(const MatrixFactorization& m, std::size_t* pivots = nullptr);

}  // namespace lgmf

#endif  // LGMF_REDUCE_HPP
