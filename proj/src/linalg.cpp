#include "lgmf/linalg.hpp"

#include "lgmf/errors.hpp"

namespace lgmf {

SparseRow axpy(const SparseRow& a, const CycloNumber& c, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, c * b[j].second);
      ++j;
    } else {
      CycloNumber v = a[i].second + c * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

bool RowEchelon::add(SparseRow row) {
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) {
      CycloNumber inv = row.front().second.inverse();
      for (auto& [col, v] : row) v = v * inv;
      pivots_.emplace(row.front().first, std::move(row));
      return true;
    }
    row = axpy(row, -row.front().second, it->second);
  }
  return false;
}

std::size_t rank(const std::vector<SparseRow>& rows) {
  RowEchelon e;
  for (const auto& r : rows) e.add(r);
  return e.rank();
}

LinearSolution solve(const DenseMatrix& a, const std::vector<CycloNumber>& b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw DomainError("solve: right-hand side has wrong length");
  const std::size_t n = m ? a[0].size() : 0;
  DenseMatrix aug = a;
  for (std::size_t i = 0; i < m; ++i) {
    if (aug[i].size() != n) throw DomainError("solve: ragged matrix");
    aug[i].push_back(b[i]);
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < m; ++c) {
    std::size_t p = row;
    while (p < m && aug[p][c].is_zero()) ++p;
    if (p == m) continue;
    std::swap(aug[p], aug[row]);
    CycloNumber inv = aug[row][c].inverse();
    for (auto& v : aug[row]) v = v * inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || aug[i][c].is_zero()) continue;
      CycloNumber f = aug[i][c];
      for (std::size_t k = c; k <= n; ++k) aug[i][k] -= f * aug[row][k];
    }
    pivot_cols.push_back(c);
    ++row;
  }
  LinearSolution s;
  s.rank = pivot_cols.size();
  for (std::size_t i = s.rank; i < m; ++i)
    if (!aug[i][n].is_zero()) return s;
  s.consistent = true;
  s.x.assign(n, CycloNumber());
  for (std::size_t r = 0; r < s.rank; ++r) s.x[pivot_cols[r]] = aug[r][n];
  return s;
}

}  // namespace lgmf
