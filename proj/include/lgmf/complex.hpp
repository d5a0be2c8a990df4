#ifndef LGMF_COMPLEX_HPP
#define LGMF_COMPLEX_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lgmf/groebner.hpp"
#include "lgmf/mf.hpp"

namespace lgmf {

/// Free graded module over ring/quotient with an odd differential of degree 1
/// squaring to zero. As a vector space each weighted-degree slice is finite.
struct GradedComplex {
  Ring ring;
  std::vector<Generator> gens;
  PolyMatrix diff;  // column j is the image of generator j
  std::optional<GroebnerBasis> quotient;
};

struct CohomologyDims {
  std::size_t even = 0;
  std::size_t odd = 0;
  bool stabilized = false;
  Rational cutoff;
  /// (even, odd) per weighted degree, nonzero slices only.
  std::map<Rational, std::pair<std::size_t, std::size_t>> by_degree;

  friend bool operator==(const CohomologyDims& a, const CohomologyDims& b) {
    return a.even == b.even && a.odd == b.odd;
  }
};

/// Complex of module maps M -> N with delta f = d_N f - (-1)^|f| f d_M. The
/// source must have no internal variables; the target may (its internal
/// monomials become part of the payload).
GradedComplex hom_complex(const MatrixFactorization& m, const MatrixFactorization& n);

/// Quasi-isomorphic model of hom_complex(k, x) for a rank-2 Koszul source with
/// generators (even, odd): x/ax, a = k.diff(0, 1), parities arranged so the
/// cohomology dims are those of Hom(k, x).
GradedComplex koszul_hom_complex(const MatrixFactorization& k, const MatrixFactorization& x);

/// Cohomology by exact elimination on slices of weighted degree up to
/// max generator degree + cutoff; recomputed one degree higher to set the
/// stabilization flag.
CohomologyDims cohomology_dims(const GradedComplex& c, const Rational& cutoff = Rational(4));

/// Dimension counts for one truncation (no stabilization check).
CohomologyDims cohomology_dims_at(const GradedComplex& c, const Rational& cutoff);

/// Hom dims in the homotopy category; uses the Koszul model when the source
/// is rank-2 Koszul, otherwise the full hom complex.
CohomologyDims hom_dims(const MatrixFactorization& m, const MatrixFactorization& n,
                        const Rational& cutoff = Rational(4));

/// Process-wide count of computations (reduce, decompose) that did not
/// stabilize at their starting cutoff and were retried with a larger one.
std::size_t cutoff_escalations();
void note_cutoff_escalation();

/// Checks delta^2 = 0 symbolically (modulo the quotient).
bool check_square_zero(const GradedComplex& c);

/// Sizes of the slice bases (even, odd) at one weighted degree (zero off the
/// degree lattice).
std::pair<std::size_t, std::size_t> slice_dims(const GradedComplex& c, const Rational& degree);

}  // namespace lgmf

#endif  // LGMF_COMPLEX_HPP
