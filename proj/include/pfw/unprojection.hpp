// Bilinear splitting, Cramer-rule unprojection, the long equation, and
// equation-set symmetry checks.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pfw/groebner.hpp"
#include "pfw/matrix.hpp"
#include "pfw/ring.hpp"

namespace pfw {

/// Two forms, each linear in the chosen variables with no variable-free
/// terms (the codimension 2 complete intersection of a double Jerry).
struct BilinearPair {
  Polynomial m1, m2;
  std::array<std::size_t, 3> xvars;
};

BilinearPair make_bilinear_pair(Polynomial m1, Polynomial m2,
                                const std::array<std::string, 3>& xvars);

/// 3x2 matrix C with (x1 x2 x3) . C = (m1, m2); throws if a term of m1/m2
/// contains no xvar or is nonlinear in them.
PolyMatrix bilinear_coefficient_matrix(const BilinearPair& pair);

struct UnprojectionResult {
  std::size_t variable;                 // the adjoined unprojection variable
  std::vector<Polynomial> equations;    // s*x_i - cofactor_i, i = 1..3
  PolyMatrix cofactor_matrix;           // the 3x2 coefficient matrix
};

/// Cramer-rule unprojection: equations s*x_i = (-1)^(i+1) * (2x2 minor of C
/// omitting row i); substituting the cofactors for s*x_i annihilates s*m1
/// and s*m2 identically.
UnprojectionResult cramer_unproject(const BilinearPair& pair, std::string_view new_variable);

struct LongEquation {
  Polynomial value;
  /// Set when plain elimination left s or t in the remainder and the
  /// result was obtained after saturating by this variable.
  std::optional<std::size_t> saturated_by;
};

/// The extra relation s*t = P tying the two unprojection variables
/// together. P is the elimination-order normal form of s*t; when the plain
/// ideal does not eliminate s and t, the ideal is saturated by each other
/// variable in ring order until one succeeds.
LongEquation long_equation(const std::vector<Polynomial>& equations, std::string_view s,
                           std::string_view t, Deadline deadline = {});

struct NoLongEquation : Error {
  NoLongEquation() : Error("no long equation: elimination cannot remove the unprojection variables") {}
};

/// True iff the canonical-sign multiset of the equations is fixed by the
/// substitution.
bool equation_set_symmetry(const std::vector<Polynomial>& equations, const VarMap& map);

}  // namespace pfw
