#pragma once

#include <gact/lattice.hpp>

#include <vector>

namespace gact {
namespace linalg {

using Mat = std::vector<std::vector<Q>>;

inline Mat from_rows(const std::vector<LatVec>& rows, size_t n) {
  Mat m;
  for (auto& r : rows) {
    std::vector<Q> row(n, Q(0));
    for (size_t i = 0; i < n; ++i) row[i] = Q(r.c[i]);
    m.push_back(row);
  }
  return m;
}

// In-place reduced row echelon form; returns pivot column per pivot row.
inline std::vector<size_t> rref(Mat& m) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Q inv = Q(1) / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Q f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline size_t rank(const std::vector<LatVec>& rows, size_t n) {
  Mat m = from_rows(rows, n);
  return rref(m).size();
}

// Basis of { x : <row, x> = 0 for every row }, as primitive integer vectors.
inline std::vector<LatVec> kernel_basis(const std::vector<LatVec>& rows, size_t n) {
  Mat m = from_rows(rows, n);
  auto pivots = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<LatVec> basis;
  for (size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    QVec v(n);
    v.c[c] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v.c[pivots[r]] = -m[r][c];
    basis.push_back(v.primitive_direction());
  }
  return basis;
}

// One rational solution x of A x = b, if the system is consistent.
inline std::optional<QVec> solve(const Mat& A, const std::vector<Q>& b) {
  if (A.empty()) return QVec(0);
  size_t rows = A.size(), cols = A[0].size();
  Mat aug = A;
  for (size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  auto pivots = rref(aug);
  QVec x(cols);
  for (size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == cols) return std::nullopt;  // pivot in the constant column
    x.c[pivots[r]] = aug[r][cols];
  }
  return x;
}

// Independent spanning subset (indices) of the given vectors.
inline std::vector<size_t> independent_subset(const std::vector<LatVec>& vecs, size_t n) {
  std::vector<size_t> keep;
  std::vector<LatVec> acc;
  for (size_t i = 0; i < vecs.size(); ++i) {
    acc.push_back(vecs[i]);
    if (rank(acc, n) == acc.size())
      keep.push_back(i);
    else
      acc.pop_back();
  }
  return keep;
}

}  // namespace linalg
}  // namespace gact
