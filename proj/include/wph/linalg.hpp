#pragma once

#include <cstddef>
#include <vector>

#include "wph/rational.hpp"

namespace wph {

// Dense rational matrix with exact elimination.
class QMatrix {
 public:
  QMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::size_t rank() const;
  std::size_t kernel_dimension() const { return cols_ - rank(); }
  Rational determinant() const;  // square matrices only

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

}  // namespace wph
