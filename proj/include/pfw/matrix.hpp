// Dense rectangular matrices of polynomials; just enough for coefficient
// matrices and 2x2 minors.
#pragma once

#include <vector>

#include "pfw/ring.hpp"

namespace pfw {

class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols),
        data_(rows * cols, Polynomial::zero(ring_)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const RingPtr& ring() const { return ring_; }

  Polynomial& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Polynomial& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Polynomial minor2(std::size_t r1, std::size_t r2, std::size_t c1, std::size_t c2) const {
    return at(r1, c1) * at(r2, c2) - at(r1, c2) * at(r2, c1);
  }

  /// All 2x2 minors, rows and columns in lexicographic order.
  std::vector<Polynomial> minors2() const {
    std::vector<Polynomial> out;
    for (std::size_t r1 = 0; r1 < rows_; ++r1)
      for (std::size_t r2 = r1 + 1; r2 < rows_; ++r2)
        for (std::size_t c1 = 0; c1 < cols_; ++c1)
          for (std::size_t c2 = c1 + 1; c2 < cols_; ++c2)
            out.push_back(minor2(r1, r2, c1, c2));
    return out;
  }

 private:
  RingPtr ring_;
  std::size_t rows_, cols_;
  std::vector<Polynomial> data_;
};

}  // namespace pfw
