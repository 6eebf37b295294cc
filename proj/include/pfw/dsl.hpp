// Workspace text format: ring declarations, named polynomials, ideals,
// skew matrices and variable maps, with a round-tripping serializer.
//
//   ring a b c : weights 6 6 6;
//   poly P = a*c - b^2;
//   ideal I = a*c - b^2, x*b - c^2;
//   skew 5 M {
//     (1,3) = c;
//   }
//   varmap phi {
//     mu = -mu;
//   }
//
// '#' starts a comment. '^' binds tighter than '*', which binds tighter
// than '+'/'-'; juxtaposition is not multiplication.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pfw/pfaffian.hpp"
#include "pfw/ring.hpp"

namespace pfw {

struct ParseError : Error {
  int line;
  int column;
  ParseError(int line, int column, const std::string& message)
      : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        line(line),
        column(column) {}
};

class Workspace {
 public:
  RingPtr ring;
  std::vector<std::pair<std::string, Polynomial>> polynomials;
  std::vector<std::pair<std::string, std::vector<Polynomial>>> ideals;
  std::vector<std::pair<std::string, SkewMatrix>> matrices;
  std::vector<std::pair<std::string, VarMap>> varmaps;

  const Polynomial& polynomial(std::string_view name) const;
  const std::vector<Polynomial>& ideal(std::string_view name) const;
  const SkewMatrix& matrix(std::string_view name) const;
  const VarMap& varmap(std::string_view name) const;
  bool has_name(std::string_view name) const;
};

Workspace parse_workspace(std::string_view text);
Workspace load_workspace(const std::string& path);

std::string serialize_workspace(const Workspace& w);

/// Parses a single expression in an existing ring (used by the CLI).
Polynomial parse_expression(const RingPtr& ring, std::string_view text);

}  // namespace pfw
