#include "weilbench/linalg.hpp"

#include "weilbench/errors.hpp"

namespace weilbench {

void Matrix::append_row(const std::vector<Elem>& row) {
  if (rows == 0 && cols == 0) cols = row.size();
  if (row.size() != cols) fail(Errc::DimensionMismatch, "row length differs from column count");
  data.insert(data.end(), row.begin(), row.end());
  ++rows;
}

std::vector<std::size_t> rref(const Field& F, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && m.at(piv, c).code == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    const Elem inv = F.inv(m.at(r, c));
    for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = F.mul(m.at(r, j), inv);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      const Elem f = m.at(i, c);
      if (f.code == 0) continue;
      for (std::size_t j = c; j < m.cols; ++j)
        if (m.at(r, j).code) m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const Field& F, Matrix m) { return rref(F, m).size(); }

std::vector<std::vector<Elem>> nullspace(const Field& F, Matrix m) {
  const auto pivots = rref(F, m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Elem>> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(m.cols, F.zero());
    v[free] = F.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(m.at(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Elem>> solve(const Field& F, const Matrix& m, const std::vector<Elem>& b) {
  if (b.size() != m.rows) fail(Errc::DimensionMismatch, "right-hand side length differs from row count");
  Matrix aug(m.rows, m.cols + 1);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  const auto pivots = rref(F, aug);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
  std::vector<Elem> x(m.cols, F.zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, m.cols);
  return x;
}

}  // namespace weilbench
