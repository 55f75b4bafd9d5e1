#include "toricss/linalg.hpp"

#include <algorithm>

#include "toricss/error.hpp"

namespace toricss::linalg {

std::vector<Element> Matrix::column(std::size_t c) const {
  std::vector<Element> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

Matrix Matrix::select_columns(std::span<const std::size_t> columns) const {
  Matrix out(rows_, columns.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < columns.size(); ++j) out.at(r, j) = at(r, columns[j]);
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

void Matrix::append_row(std::span<const Element> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw Error(ErrorCode::RankMismatch, "row length does not match matrix width");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

std::vector<std::size_t> reduce_rows(Matrix& m, const GaloisField& field) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m.at(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row) {
      auto a = m.row(pivot);
      auto b = m.row(lead_row);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    auto prow = m.row(lead_row);
    const Element scale = field.inv(prow[c]);
    for (std::size_t j = c; j < m.cols(); ++j) prow[j] = field.mul(prow[j], scale);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row) continue;
      const Element factor = m.at(r, c);
      if (factor == 0) continue;
      auto row = m.row(r);
      const Element neg_factor = field.neg(factor);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (prow[j] != 0) row[j] = field.add(row[j], field.mul(neg_factor, prow[j]));
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return pivots;
}

std::size_t rank(Matrix m, const GaloisField& field) { return reduce_rows(m, field).size(); }

Matrix row_basis(Matrix m, const GaloisField& field) {
  const auto pivots = reduce_rows(m, field);
  Matrix out(pivots.size(), m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) std::ranges::copy(m.row(r), out.row(r).begin());
  return out;
}

bool same_row_space(const Matrix& a, const Matrix& b, const GaloisField& field) {
  if (a.cols() != b.cols()) return false;
  return row_basis(a, field) == row_basis(b, field);
}

std::optional<std::vector<Element>> solve(const Matrix& a, std::span<const Element> b, const GaloisField& field) {
  if (b.size() != a.rows()) throw Error(ErrorCode::RankMismatch, "right-hand side length does not match rows");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::ranges::copy(a.row(r), aug.row(r).begin());
    aug.at(r, a.cols()) = b[r];
  }
  const auto pivots = reduce_rows(aug, field);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<Element> x(a.cols(), 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols());
  return x;
}

Matrix nullspace(const Matrix& a, const GaloisField& field) {
  Matrix m = a;
  const auto pivots = reduce_rows(m, field);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix basis(0, a.cols());
  std::vector<Element> v(a.cols());
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::ranges::fill(v, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = field.neg(m.at(r, free));
    basis.append_row(v);
  }
  return basis;
}

Matrix multiply_transposed(const Matrix& a, const Matrix& b, const GaloisField& field) {
  if (a.cols() != b.cols()) throw Error(ErrorCode::RankMismatch, "inner dimensions differ");
  Matrix out(a.rows(), b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.rows(); ++j) {
      Element acc = 0;
      for (std::size_t c = 0; c < a.cols(); ++c) acc = field.add(acc, field.mul(a.at(i, c), b.at(j, c)));
      out.at(i, j) = acc;
    }
  return out;
}

bool is_zero(const Matrix& m) {
  return std::ranges::all_of(m.data(), [](Element e) { return e == 0; });
}

}  // namespace toricss::linalg
