#include "wph/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace wph {

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

std::size_t QMatrix::rank() const {
  QMatrix m = *this;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && m.at(pivot, col) == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank)
      for (std::size_t j = col; j < cols_; ++j)
        std::swap(m.at(pivot, j), m.at(rank, j));
    const Rational diag = m.at(rank, col);
    for (std::size_t i = rank + 1; i < rows_; ++i) {
      if (m.at(i, col) == 0) continue;
      const Rational factor = m.at(i, col) / diag;
      for (std::size_t j = col; j < cols_; ++j)
        m.at(i, j) -= factor * m.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

Rational QMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square");
  QMatrix m = *this;
  Rational det(1);
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t pivot = col;
    while (pivot < rows_ && m.at(pivot, col) == 0) ++pivot;
    if (pivot == rows_) return Rational(0);
    if (pivot != col) {
      for (std::size_t j = col; j < cols_; ++j)
        std::swap(m.at(pivot, j), m.at(col, j));
      det = -det;
    }
    const Rational diag = m.at(col, col);
    det *= diag;
    for (std::size_t i = col + 1; i < rows_; ++i) {
      if (m.at(i, col) == 0) continue;
      const Rational factor = m.at(i, col) / diag;
      for (std::size_t j = col; j < cols_; ++j)
        m.at(i, j) -= factor * m.at(col, j);
    }
  }
  return det;
}

}  // namespace wph
