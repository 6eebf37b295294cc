// Skew-symmetric matrices of polynomials and their Pfaffians.
#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "pfw/ring.hpp"

namespace pfw {

/// Antisymmetric matrix stored as its strict upper triangle; absent entries
/// are zero, entry (j,i) is implicitly -entry(i,j) and the diagonal is zero.
/// Indices are 1-based throughout, matching the usual matrix displays.
class SkewMatrix {
 public:
  SkewMatrix(RingPtr ring, std::size_t size);

  std::size_t size() const { return size_; }
  const RingPtr& ring() const { return ring_; }

  /// Sets the upper-triangle entry (i,j), 1 <= i < j <= size.
  void set(std::size_t i, std::size_t j, Polynomial value);
  /// Signed entry at any position (antisymmetry applied; diagonal zero).
  Polynomial at(std::size_t i, std::size_t j) const;
  const std::map<std::pair<std::size_t, std::size_t>, Polynomial>& upper() const { return upper_; }

  SkewMatrix substitute(const VarMap& map) const;
  bool operator==(const SkewMatrix& other) const;

 private:
  RingPtr ring_;
  std::size_t size_;
  std::map<std::pair<std::size_t, std::size_t>, Polynomial> upper_;
};

/// Principal submatrix obtained by deleting the given rows/columns.
SkewMatrix delete_rows(const SkewMatrix& m, const std::vector<std::size_t>& rows);

/// Pfaffian of an even-size skew matrix, first-row expansion convention:
/// Pf([[0,a],[-a,0]]) = a and Pf(M) = sum_{j>=2} (-1)^j m_1j Pf(M_{1j}).
Polynomial pfaffian(const SkewMatrix& m);

/// For odd size 2k+1: the Pfaffians of the submatrices deleting one
/// row/column, listed as (deleted index, value); no sign twist attached.
std::vector<std::pair<std::size_t, Polynomial>> maximal_pfaffians(const SkewMatrix& m);

/// All 15 principal 4x4 Pfaffians of a 6x6 skew matrix, listed with their
/// index quadruples in lexicographic order.
std::vector<std::pair<std::vector<std::size_t>, Polynomial>> sub_pfaffians_4of6(
    const SkewMatrix& m);

}  // namespace pfw
