#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "toricss/gf.hpp"

namespace toricss::linalg {

using gf::Element;
using gf::GaloisField;

// Dense row-major matrix of field elements.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Element at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<Element> column(std::size_t c) const;
  Matrix select_columns(std::span<const std::size_t> columns) const;
  Matrix transposed() const;
  void append_row(std::span<const Element> values);

  const std::vector<Element>& data() const { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

// In-place Gauss-Jordan elimination to reduced row echelon form. Returns the
// pivot column of each nonzero row, in order.
std::vector<std::size_t> reduce_rows(Matrix& m, const GaloisField& field);

std::size_t rank(Matrix m, const GaloisField& field);

// Nonzero rows of the reduced row echelon form: a canonical basis of the row space.
Matrix row_basis(Matrix m, const GaloisField& field);

bool same_row_space(const Matrix& a, const Matrix& b, const GaloisField& field);

// Some x with a * x = b, or nullopt when b is outside the column space.
std::optional<std::vector<Element>> solve(const Matrix& a, std::span<const Element> b, const GaloisField& field);

// Basis (as rows) of { x : a * x = 0 }.
Matrix nullspace(const Matrix& a, const GaloisField& field);

// a * b^T, i.e. all pairwise row inner products.
Matrix multiply_transposed(const Matrix& a, const Matrix& b, const GaloisField& field);

bool is_zero(const Matrix& m);

}  // namespace toricss::linalg
