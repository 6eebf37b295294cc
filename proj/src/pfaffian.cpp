#include "pfw/pfaffian.hpp"

#include <algorithm>

namespace pfw {

SkewMatrix::SkewMatrix(RingPtr ring, std::size_t size) : ring_(std::move(ring)), size_(size) {}

void SkewMatrix::set(std::size_t i, std::size_t j, Polynomial value) {
  if (i < 1 || j < 1 || i > size_ || j > size_) throw Error("skew matrix index out of range");
  if (i >= j) throw Error("skew matrix entries must be given above the diagonal");
  require_same_ring(ring_, value.ring());
  if (value.is_zero())
    upper_.erase({i, j});
  else
    upper_[{i, j}] = std::move(value);
}

Polynomial SkewMatrix::at(std::size_t i, std::size_t j) const {
  if (i < 1 || j < 1 || i > size_ || j > size_) throw Error("skew matrix index out of range");
  if (i == j) return Polynomial::zero(ring_);
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = upper_.find({i, j});
  if (it == upper_.end()) return Polynomial::zero(ring_);
  return flip ? -it->second : it->second;
}

SkewMatrix SkewMatrix::substitute(const VarMap& map) const {
  SkewMatrix out(ring_, size_);
  for (const auto& [ij, p] : upper_) out.set(ij.first, ij.second, p.substitute(map));
  return out;
}

bool SkewMatrix::operator==(const SkewMatrix& other) const {
  if (size_ != other.size_) return false;
  for (std::size_t i = 1; i < size_; ++i)
    for (std::size_t j = i + 1; j <= size_; ++j)
      if (at(i, j) != other.at(i, j)) return false;
  return true;
}

SkewMatrix delete_rows(const SkewMatrix& m, const std::vector<std::size_t>& rows) {
  std::vector<std::size_t> sorted = rows;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error("delete: duplicate index");
  for (auto r : sorted)
    if (r < 1 || r > m.size()) throw Error("delete: index out of range");
  if (sorted.size() > m.size()) throw Error("delete: too many indices");

  std::vector<std::size_t> keep;
  for (std::size_t i = 1; i <= m.size(); ++i)
    if (!std::binary_search(sorted.begin(), sorted.end(), i)) keep.push_back(i);
  SkewMatrix out(m.ring(), keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = a + 1; b < keep.size(); ++b) {
      Polynomial v = m.at(keep[a], keep[b]);
      if (!v.is_zero()) out.set(a + 1, b + 1, std::move(v));
    }
  return out;
}

namespace {

// Recursive first-row expansion over an index subset of the matrix.
Polynomial pf_on(const SkewMatrix& m, std::vector<std::size_t> idx) {
  if (idx.empty()) return Polynomial::constant(m.ring(), 1);
  if (idx.size() == 2) return m.at(idx[0], idx[1]);
  Polynomial acc = Polynomial::zero(m.ring());
  for (std::size_t j = 1; j < idx.size(); ++j) {
    Polynomial entry = m.at(idx[0], idx[j]);
    if (entry.is_zero()) continue;
    std::vector<std::size_t> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t k = 1; k < idx.size(); ++k)
      if (k != j) rest.push_back(idx[k]);
    Polynomial sub = pf_on(m, std::move(rest));
    // Local column j of the expansion carries sign (-1)^(j+1) with 1-based
    // positions 2..n, i.e. (-1)^j for 0-based j here being position j+1.
    if (j % 2 == 0) entry = -entry;
    acc += entry * sub;
  }
  return acc;
}

}  // namespace

Polynomial pfaffian(const SkewMatrix& m) {
  if (m.size() % 2 != 0) throw Error("pfaffian: size must be even");
  std::vector<std::size_t> idx(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) idx[i] = i + 1;
  return pf_on(m, std::move(idx));
}

std::vector<std::pair<std::size_t, Polynomial>> maximal_pfaffians(const SkewMatrix& m) {
  if (m.size() % 2 != 1) throw Error("maximal_pfaffians: size must be odd");
  std::vector<std::pair<std::size_t, Polynomial>> out;
  for (std::size_t drop = 1; drop <= m.size(); ++drop) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 1; i <= m.size(); ++i)
      if (i != drop) idx.push_back(i);
    out.emplace_back(drop, pf_on(m, std::move(idx)));
  }
  return out;
}

std::vector<std::pair<std::vector<std::size_t>, Polynomial>> sub_pfaffians_4of6(
    const SkewMatrix& m) {
  if (m.size() != 6) throw Error("sub_pfaffians_4of6: size must be 6");
  std::vector<std::pair<std::vector<std::size_t>, Polynomial>> out;
  for (std::size_t i = 1; i <= 6; ++i)
    for (std::size_t j = i + 1; j <= 6; ++j)
      for (std::size_t k = j + 1; k <= 6; ++k)
        for (std::size_t l = k + 1; l <= 6; ++l) {
          std::vector<std::size_t> q{i, j, k, l};
          out.emplace_back(q, pf_on(m, q));
        }
  return out;
}

}  // namespace pfw
