#include "lgmf/poly_matrix.hpp"

#include "lgmf/errors.hpp"

namespace lgmf {

PolyMatrix::PolyMatrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, MultiPoly(ring_)) {}

PolyMatrix PolyMatrix::identity(const Ring& ring, std::size_t n) {
  PolyMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = MultiPoly::constant(ring, Rational(1));
  return m;
}

namespace {
void check_shapes(const PolyMatrix& a, const PolyMatrix& b, bool product) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch("'" + a.ring()->describe() + "' vs '" + b.ring()->describe() + "'");
  bool ok = product ? a.cols() == b.rows() : (a.rows() == b.rows() && a.cols() == b.cols());
  if (!ok) throw DomainError("matrix shape mismatch");
}
}  // namespace

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  check_shapes(a, b, true);
  PolyMatrix c(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
    }
  return c;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  check_shapes(a, b, false);
  PolyMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  check_shapes(a, b, false);
  PolyMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix c = *this;
  for (auto& e : c.data_) e = -e;
  return c;
}

PolyMatrix PolyMatrix::scaled(const MultiPoly& p) const {
  PolyMatrix c = *this;
  for (auto& e : c.data_)
    if (!e.is_zero()) e = e * p;
  return c;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

PolyMatrix PolyMatrix::derivative(std::size_t var) const {
  PolyMatrix c = *this;
  for (auto& e : c.data_) e = e.derivative(var);
  return c;
}

PolyMatrix PolyMatrix::to_ring(const Ring& target) const {
  PolyMatrix c(target, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) c.data_[i] = data_[i].to_ring(target);
  return c;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

std::size_t PolyMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& e : data_) n += !e.is_zero();
  return n;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    if (a.data_[i] != b.data_[i]) return false;
  return true;
}

}  // namespace lgmf
