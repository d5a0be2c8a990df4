#ifndef LGMF_LINALG_HPP
#define LGMF_LINALG_HPP

#include <map>
#include <utility>
#include <vector>

#include "lgmf/cyclo.hpp"

namespace lgmf {

/// Sparse row: (column, value) pairs, columns strictly increasing, no zeros.
using SparseRow = std::vector<std::pair<int, CycloNumber>>;

/// Incremental row echelon form; rows are normalized to leading coefficient 1.
class RowEchelon {
 public:
  /// Reduces `row` against the stored pivots; returns true and stores it if it
  /// is independent.
  bool add(SparseRow row);
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<int, SparseRow> pivots_;
};

std::size_t rank(const std::vector<SparseRow>& rows);

/// a + c * b on sparse rows.
SparseRow axpy(const SparseRow& a, const CycloNumber& c, const SparseRow& b);

using DenseMatrix = std::vector<std::vector<CycloNumber>>;

struct LinearSolution {
  bool consistent = false;
  std::size_t rank = 0;
  std::vector<CycloNumber> x;  // a particular solution, free variables zero
};

/// Solves A x = b exactly by Gauss-Jordan elimination.
LinearSolution solve(const DenseMatrix& a, const std::vector<CycloNumber>& b);

}  // namespace lgmf

#endif  // LGMF_LINALG_HPP
