#ifndef LGMF_MF_HPP
#define LGMF_MF_HPP

#include <string>
#include <tuple>
#include <vector>

#include "lgmf/poly_matrix.hpp"
#include "lgmf/potential.hpp"

namespace lgmf {

struct Generator {
  int parity = 0;
  Rational degree;

  friend bool operator==(const Generator& a, const Generator& b) {
    return a.parity == b.parity && a.degree == b.degree;
  }
};

/// Z2-graded free module over `ring` with an odd twisted differential squaring
/// to (W_left - W_right) id. Variables of the ring that belong to neither
/// potential are internal (e.g. the middle variables of a tensor product).
struct MatrixFactorization {
  Ring ring;
  MultiPoly w_left, w_right;  // in `ring`
  std::vector<std::string> left_vars, right_vars;
  std::vector<Generator> gens;
  PolyMatrix diff;

  std::size_t rank() const { return gens.size(); }
  std::vector<std::string> internal_vars() const;
  Potential left_potential() const;
  Potential right_potential() const;
  /// W_left - W_right in `ring`.
  MultiPoly potential() const { return w_left - w_right; }

  friend bool operator==(const MatrixFactorization& a, const MatrixFactorization& b);
};

struct ValidationReport {
  bool ok = true;
  std::string kind;  // "shape", "parity", "homogeneity", "square"
  std::size_t row = 0, col = 0;
  std::string message;
};

ValidationReport validate(const MatrixFactorization& m);

/// Consecutive label (m:l): J = {m, ..., m+l} mod d.
struct PermLabel {
  int d = 0;
  int m = 0;
  int l = 0;

  std::vector<int> J() const;
  std::string to_string() const;  // "m:l"
  friend bool operator==(const PermLabel& a, const PermLabel& b) { return a.d == b.d && a.m == b.m && a.l == b.l; }
  friend bool operator<(const PermLabel& a, const PermLabel& b) {
    return std::tie(a.d, a.l, a.m) < std::tie(b.d, b.l, b.m);
  }
};

/// (m:l) with m reduced mod d; requires 0 <= l <= d-2 unless allow_full.
PermLabel make_label(int d, int m, int l);
/// All d(d-1) labels with 0 <= m < d, 0 <= l <= d-2.
std::vector<PermLabel> all_labels(int d);

/// P_J for x^d - y^d over the ring x:1/d y:1/d cyclo d.
MatrixFactorization make_permutation_mf(int d, const std::vector<int>& J);
MatrixFactorization make_permutation_mf(const PermLabel& label);
Ring permutation_ring(int d);

/// Rank-2 factorization with entry (0,1) = a and (1,0) = b of W = a*b.
MatrixFactorization koszul_mf(const MultiPoly& a, const MultiPoly& b);
/// Same with an explicit potential pair; requires a*b = w_left - w_right.
MatrixFactorization koszul_mf(const MultiPoly& a, const MultiPoly& b, const Potential& w_left, const Potential& w_right);

MatrixFactorization direct_sum(const MatrixFactorization& m, const MatrixFactorization& n);
/// Parity flip and negated differential.
MatrixFactorization shift(const MatrixFactorization& m);
/// Transpose with parity signs; factorizes W_right - W_left.
MatrixFactorization dual(const MatrixFactorization& m);

/// M over (W1, W2) tensored with N over (W2, W3). N's left variables are
/// identified positionally with M's right ones and kept as internal
/// variables; N's right variables are renamed if they clash.
MatrixFactorization tensor(const MatrixFactorization& m, const MatrixFactorization& n);

/// Renames the outer variables positionally (internal ones untouched).
MatrixFactorization rename_outer(const MatrixFactorization& m, const std::vector<std::string>& left,
                                 const std::vector<std::string>& right);

/// Conjugates by the diagonal sign matrix (-1)^parity; dual(dual(M)) maps back to M.
MatrixFactorization parity_conjugate(const MatrixFactorization& m);

}  // namespace lgmf

#endif  // LGMF_MF_HPP
