#include "wmac/linalg.hpp"

#include <stdexcept>

namespace wmac {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(ScalarMatrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t best = a.size();
    for (std::size_t r = row; r < a.size(); ++r) {
      if (a[r][col].is_zero()) continue;
      if (best == a.size() || a[r][col].weight() < a[best][col].weight()) best = r;
    }
    if (best == a.size()) continue;
    std::swap(a[best], a[row]);
    Scalar inv = a[row][col].inverse();
    for (std::size_t j = col; j < cols; ++j)
      if (!a[row][j].is_zero()) a[row][j] *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      Scalar f = a[r][col];
      for (std::size_t j = col; j < cols; ++j)
        if (!a[row][j].is_zero()) a[r][j] -= f * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

void check_shape(const ScalarMatrix& a, std::size_t cols) {
  for (const auto& r : a)
    if (r.size() != cols) throw std::invalid_argument("ragged matrix");
}

}  // namespace

std::vector<std::vector<Scalar>> nullspace(ScalarMatrix a, std::size_t cols) {
  check_shape(a, cols);
  std::vector<std::size_t> pivots = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols);
    v[free] = Scalar(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Scalar> solve(ScalarMatrix a, std::vector<Scalar> b, std::size_t cols) {
  check_shape(a, cols);
  if (b.size() != a.size()) throw std::invalid_argument("right-hand side length differs from row count");
  for (std::size_t r = 0; r < a.size(); ++r) a[r].push_back(b[r]);
  std::vector<std::size_t> pivots = rref(a, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) throw std::domain_error("inconsistent system");
  if (pivots.size() != cols) throw std::domain_error("solution not unique");
  std::vector<Scalar> x(cols);
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = a[k][cols];
  return x;
}

std::size_t rank(ScalarMatrix a, std::size_t cols) {
  check_shape(a, cols);
  return rref(a, cols).size();
}

std::size_t rank_at(const ScalarMatrix& a, std::size_t cols, const Rational& s0, const Rational& w0) {
  check_shape(a, cols);
  std::vector<std::vector<Rational>> m;
  for (const auto& r : a) {
    std::vector<Rational> row;
    for (const auto& x : r) row.push_back(x.specialize(s0, w0));
    m.push_back(std::move(row));
  }
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    for (std::size_t r = row + 1; r < m.size(); ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[row][col];
      for (std::size_t j = col; j < cols; ++j) m[r][j] -= f * m[row][j];
    }
    ++row;
  }
  return row;
}

ScalarMatrix multiply(const ScalarMatrix& x, const ScalarMatrix& y) {
  if (x.empty()) return {};
  const std::size_t inner = y.size();
  const std::size_t cols = inner ? y[0].size() : 0;
  ScalarMatrix out(x.size(), std::vector<Scalar>(cols));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].size() != inner) throw std::invalid_argument("matrix shapes do not match");
    for (std::size_t k = 0; k < inner; ++k) {
      if (x[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (!y[k][j].is_zero()) out[i][j] += x[i][k] * y[k][j];
    }
  }
  return out;
}

ScalarMatrix identity_matrix(std::size_t n) {
  ScalarMatrix out(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = Scalar(1);
  return out;
}

}  // namespace wmac
