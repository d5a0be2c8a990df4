#ifndef LGMF_DECOMPOSE_HPP
#define LGMF_DECOMPOSE_HPP

#include <map>
#include <string>
#include <vector>

#include "lgmf/complex.hpp"
#include "lgmf/mf.hpp"

namespace lgmf {

/// Multiset of permutation-type labels. Odd shifts need no separate sector:
/// P_J[1] is isomorphic to P_{J^c} up to a degree shift, and J^c is again a
/// consecutive label.
struct Decomposition {
  int d = 0;
  std::map<PermLabel, long long> mult;

  std::size_t rank() const;  // sum of multiplicities times 2
  std::string to_string() const;  // "P[1:0] + P[0:2]", "0" if empty
  friend bool operator==(const Decomposition& a, const Decomposition& b) { return a.d == b.d && a.mult == b.mult; }
};

Decomposition operator+(const Decomposition& a, const Decomposition& b);

/// Graded Hom dims between all simples of x^d - y^d, indexed like all_labels(d).
/// Computed once per d and cached.
const std::vector<std::vector<CohomologyDims>>& gram(int d);

/// Multiplicities of the simples in a finite-rank factorization of x^d - y^d
/// (outer variables x, y). Solves the graded Gram system exactly over Q with
/// candidate shifts read off the even generator degrees of X; throws
/// DomainError if the system is singular, the solution is not a nonnegative
/// integer vector, or the rank accounting fails.
Decomposition decompose(const MatrixFactorization& x, int d);

/// reduce(tensor(P_a, P_b)) with outer variables renamed back to x, y.
MatrixFactorization fuse_mf(const PermLabel& a, const PermLabel& b);

/// decompose(fuse_mf(a, b)), memoized per pair.
Decomposition fuse_decompose(const PermLabel& a, const PermLabel& b);

/// The closed-form rule: sum over k from |l-l'| to min(l+l', 2d-4-l-l') step 2
/// of P_{m+m'-(l+l'-k)/2 : k}.
Decomposition fusion_rule(const PermLabel& a, const PermLabel& b);

/// Same k-range with the label anchored at the top endpoint of J, which
/// reads P_{m+m'+(l+l'-k)/2 : k} for the bottom-anchored (m:l) used here.
Decomposition fusion_rule_bottom_anchored(const PermLabel& a, const PermLabel& b);

struct FusionRow {
  PermLabel a, b;
  Decomposition computed;
  Decomposition expected;
  bool match = false;
};

/// All ordered pairs of simples at d, computed via fuse_decompose and compared
/// with `rule`. Rows sorted by (a, b) lexicographically on (m, l).
std::vector<FusionRow> fusion_table(int d, Decomposition (*rule)(const PermLabel&, const PermLabel&) = fusion_rule);

std::string fusion_table_tsv(const std::vector<FusionRow>& rows);
std::string fusion_table_json(const std::vector<FusionRow>& rows);

}  // namespace lgmf

#endif  // LGMF_DECOMPOSE_HPP
