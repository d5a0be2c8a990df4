#ifndef LGMF_POLY_MATRIX_HPP
#define LGMF_POLY_MATRIX_HPP

#include <string>
#include <vector>

#include "lgmf/poly.hpp"

namespace lgmf {

/// Dense matrix of polynomials over one ring.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(Ring ring, std::size_t rows, std::size_t cols);
  static PolyMatrix identity(const Ring& ring, std::size_t n);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  MultiPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const MultiPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  PolyMatrix operator-() const;
  PolyMatrix scaled(const MultiPoly& p) const;

  PolyMatrix transpose() const;
  PolyMatrix derivative(std::size_t var) const;
  PolyMatrix to_ring(const Ring& target) const;
  bool is_zero() const;
  std::size_t nonzeros() const;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

 private:
  Ring ring_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<MultiPoly> data_;
};

}  // namespace lgmf

#endif  // LGMF_POLY_MATRIX_HPP
