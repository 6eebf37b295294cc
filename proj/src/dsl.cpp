#include "pfw/dsl.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace pfw {

const Polynomial& Workspace::polynomial(std::string_view name) const {
  for (const auto& [n, p] : polynomials)
    if (n == name) return p;
  throw Error("no polynomial named '" + std::string(name) + "'");
}

const std::vector<Polynomial>& Workspace::ideal(std::string_view name) const {
  for (const auto& [n, g] : ideals)
    if (n == name) return g;
  throw Error("no ideal named '" + std::string(name) + "'");
}

const SkewMatrix& Workspace::matrix(std::string_view name) const {
  for (const auto& [n, m] : matrices)
    if (n == name) return m;
  throw Error("no matrix named '" + std::string(name) + "'");
}

const VarMap& Workspace::varmap(std::string_view name) const {
  for (const auto& [n, m] : varmaps)
    if (n == name) return m;
  throw Error("no varmap named '" + std::string(name) + "'");
}

bool Workspace::has_name(std::string_view name) const {
  for (const auto& [n, _] : polynomials)
    if (n == name) return true;
  for (const auto& [n, _] : ideals)
    if (n == name) return true;
  for (const auto& [n, _] : matrices)
    if (n == name) return true;
  for (const auto& [n, _] : varmaps)
    if (n == name) return true;
  return false;
}

namespace {

enum class Tok { Ident, Integer, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    int l = line_, c = column_;
    if (pos_ >= text_.size()) return {Tok::End, "", l, c};
    char ch = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::string ident;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ident += advance();
      return {Tok::Ident, std::move(ident), l, c};
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string num;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        num += advance();
      return {Tok::Integer, std::move(num), l, c};
    }
    static const std::string punct = "+-*^/(),;={}:";
    if (punct.find(ch) != std::string::npos) {
      advance();
      return {Tok::Punct, std::string(1, ch), l, c};
    }
    throw ParseError(l, c, std::string("unexpected character '") + ch + "'");
  }

 private:
  char advance() {
    char ch = text_[pos_++];
    if (ch == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return ch;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char ch = text_[pos_];
      if (ch == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { shift(); }

  Workspace workspace() {
    Workspace w;
    while (cur_.kind != Tok::End) {
      if (cur_.kind != Tok::Ident)
        throw ParseError(cur_.line, cur_.column, "expected a statement keyword");
      if (cur_.text == "ring") {
        parse_ring(w);
      } else if (cur_.text == "poly") {
        parse_poly(w);
      } else if (cur_.text == "ideal") {
        parse_ideal(w);
      } else if (cur_.text == "skew") {
        parse_skew(w);
      } else if (cur_.text == "varmap") {
        parse_varmap(w);
      } else {
        throw ParseError(cur_.line, cur_.column, "unknown statement '" + cur_.text + "'");
      }
    }
    if (!w.ring) throw ParseError(cur_.line, cur_.column, "missing ring declaration");
    return w;
  }

  Polynomial expression_in(const RingPtr& ring) {
    ring_ = ring;
    Polynomial p = expr();
    expect_end();
    return p;
  }

 private:
  void shift() { cur_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(cur_.line, cur_.column, message);
  }

  bool at_punct(std::string_view p) const { return cur_.kind == Tok::Punct && cur_.text == p; }

  void expect_punct(std::string_view p) {
    if (!at_punct(p)) fail("expected '" + std::string(p) + "'");
    shift();
  }

  std::string expect_ident(const char* what) {
    if (cur_.kind != Tok::Ident) fail(std::string("expected ") + what);
    std::string s = cur_.text;
    shift();
    return s;
  }

  long expect_integer(const char* what) {
    if (cur_.kind != Tok::Integer) fail(std::string("expected ") + what);
    long v = std::stol(cur_.text);
    shift();
    return v;
  }

  void expect_end() {
    if (cur_.kind != Tok::End) fail("unexpected trailing input");
  }

  void require_ring(const Workspace& w) {
    if (!w.ring) fail("a ring must be declared first");
    ring_ = w.ring;
  }

  std::string fresh_name(Workspace& w) {
    std::string name = expect_ident("a name");
    if (w.has_name(name)) fail("duplicate name '" + name + "'");
    return name;
  }

  void parse_ring(Workspace& w) {
    if (w.ring) fail("ring already declared");
    shift();
    std::vector<std::string> names;
    while (cur_.kind == Tok::Ident) {
      names.push_back(cur_.text);
      shift();
    }
    if (names.empty()) fail("ring needs at least one variable");
    std::vector<long> weights(names.size(), 1);
    if (at_punct(":")) {
      shift();
      std::string kw = expect_ident("'weights'");
      if (kw != "weights") fail("expected 'weights'");
      weights.clear();
      while (cur_.kind == Tok::Integer || at_punct("-")) {
        bool neg = at_punct("-");
        if (neg) shift();
        long v = expect_integer("a weight");
        weights.push_back(neg ? -v : v);
      }
      if (weights.size() != names.size()) fail("one weight per variable required");
    }
    try {
      w.ring = make_ring(std::move(names), std::move(weights));
    } catch (const Error& e) {
      fail(e.what());
    }
    expect_punct(";");
  }

  void parse_poly(Workspace& w) {
    shift();
    require_ring(w);
    std::string name = fresh_name(w);
    expect_punct("=");
    Polynomial p = expr();
    expect_punct(";");
    w.polynomials.emplace_back(std::move(name), std::move(p));
  }

  void parse_ideal(Workspace& w) {
    shift();
    require_ring(w);
    std::string name = fresh_name(w);
    expect_punct("=");
    std::vector<Polynomial> gens;
    if (!at_punct(";")) {
      gens.push_back(expr());
      while (at_punct(",")) {
        shift();
        gens.push_back(expr());
      }
    }
    expect_punct(";");
    w.ideals.emplace_back(std::move(name), std::move(gens));
  }

  void parse_skew(Workspace& w) {
    shift();
    require_ring(w);
    long n = expect_integer("matrix size");
    if (n < 1) fail("matrix size must be positive");
    std::string name = fresh_name(w);
    SkewMatrix m(ring_, static_cast<std::size_t>(n));
    expect_punct("{");
    while (!at_punct("}")) {
      int eline = cur_.line, ecol = cur_.column;
      expect_punct("(");
      long i = expect_integer("row index");
      expect_punct(",");
      long j = expect_integer("column index");
      expect_punct(")");
      expect_punct("=");
      Polynomial p = expr();
      expect_punct(";");
      if (i < 1 || j < 1 || i > n || j > n)
        throw ParseError(eline, ecol, "matrix entry index out of range");
      if (i >= j)
        throw ParseError(eline, ecol, "matrix entries must lie above the diagonal (i < j)");
      m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), std::move(p));
    }
    shift();
    w.matrices.emplace_back(std::move(name), std::move(m));
  }

  void parse_varmap(Workspace& w) {
    shift();
    require_ring(w);
    std::string name = fresh_name(w);
    VarMap m(ring_);
    expect_punct("{");
    while (!at_punct("}")) {
      int vline = cur_.line, vcol = cur_.column;
      std::string var = expect_ident("a variable name");
      if (!ring_->index(var)) throw ParseError(vline, vcol, "unknown variable '" + var + "'");
      expect_punct("=");
      Polynomial p = expr();
      expect_punct(";");
      m.set(var, std::move(p));
    }
    shift();
    w.varmaps.emplace_back(std::move(name), std::move(m));
  }

  // expr := term (('+' | '-') term)*
  Polynomial expr() {
    Polynomial acc = term();
    while (at_punct("+") || at_punct("-")) {
      bool plus = cur_.text == "+";
      shift();
      Polynomial rhs = term();
      acc = plus ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  // term := factor ('*' factor)*
  Polynomial term() {
    Polynomial acc = factor();
    while (at_punct("*")) {
      shift();
      acc *= factor();
    }
    return acc;
  }

  // factor := '-' factor | atom ('^' INT)?
  Polynomial factor() {
    if (at_punct("-")) {
      shift();
      return -factor();
    }
    Polynomial base = atom();
    if (at_punct("^")) {
      shift();
      if (cur_.kind != Tok::Integer) fail("expected a nonnegative integer exponent");
      long e = std::stol(cur_.text);
      shift();
      return base.pow(static_cast<unsigned long>(e));
    }
    return base;
  }

  // atom := IDENT | INT ('/' INT)? | '(' expr ')'
  Polynomial atom() {
    if (cur_.kind == Tok::Ident) {
      if (!ring_->index(cur_.text)) fail("unknown variable '" + cur_.text + "'");
      Polynomial v = Polynomial::variable(ring_, cur_.text);
      shift();
      return v;
    }
    if (cur_.kind == Tok::Integer) {
      Rational value(cur_.text);
      shift();
      if (at_punct("/")) {
        shift();
        if (cur_.kind != Tok::Integer) fail("expected a denominator");
        Rational den(cur_.text);
        if (den == 0) fail("zero denominator");
        shift();
        value /= den;
      }
      value.canonicalize();
      return Polynomial::constant(ring_, std::move(value));
    }
    if (at_punct("(")) {
      shift();
      Polynomial inner = expr();
      expect_punct(")");
      return inner;
    }
    fail("expected a variable, number, or parenthesized expression");
  }

  Lexer lexer_;
  Token cur_{Tok::End, "", 0, 0};
  RingPtr ring_;
};

}  // namespace

Workspace parse_workspace(std::string_view text) { return Parser(text).workspace(); }

Workspace load_workspace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_workspace(buf.str());
}

Polynomial parse_expression(const RingPtr& ring, std::string_view text) {
  return Parser(text).expression_in(ring);
}

std::string serialize_workspace(const Workspace& w) {
  std::ostringstream os;
  os << "ring";
  for (std::size_t i = 0; i < w.ring->size(); ++i) os << " " << w.ring->name(i);
  os << " : weights";
  for (std::size_t i = 0; i < w.ring->size(); ++i) os << " " << w.ring->weight(i);
  os << ";\n";
  for (const auto& [name, p] : w.polynomials) os << "poly " << name << " = " << p.to_string() << ";\n";
  for (const auto& [name, gens] : w.ideals) {
    os << "ideal " << name << " =";
    for (std::size_t i = 0; i < gens.size(); ++i)
      os << (i ? ", " : " ") << gens[i].to_string();
    os << ";\n";
  }
  for (const auto& [name, m] : w.matrices) {
    os << "skew " << m.size() << " " << name << " {\n";
    for (const auto& [ij, p] : m.upper())
      os << "  (" << ij.first << "," << ij.second << ") = " << p.to_string() << ";\n";
    os << "}\n";
  }
  for (const auto& [name, vm] : w.varmaps) {
    os << "varmap " << name << " {\n";
    for (const auto& [var, image] : vm.images())
      os << "  " << w.ring->name(var) << " = " << image.to_string() << ";\n";
    os << "}\n";
  }
  return os.str();
}

}  // namespace pfw
