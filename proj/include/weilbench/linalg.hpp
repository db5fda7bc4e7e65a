#pragma once

#include <optional>
#include <vector>

#include "weilbench/gf.hpp"

namespace weilbench {

struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Elem> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, Elem{0}) {}
  Elem& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  Elem at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  void append_row(const std::vector<Elem>& row);
};

// Reduced row echelon form in place; the pivot of each column is the first
// row (in row order) with a nonzero entry. Returns the pivot columns.
std::vector<std::size_t> rref(const Field& F, Matrix& m);
std::size_t rank(const Field& F, Matrix m);
// Basis of {x : m x = 0}, one vector per free column, free entry set to 1.
std::vector<std::vector<Elem>> nullspace(const Field& F, Matrix m);
// A solution of m x = b with free variables set to zero, or nullopt.
std::optional<std::vector<Elem>> solve(const Field& F, const Matrix& m, const std::vector<Elem>& b);

}  // namespace weilbench
