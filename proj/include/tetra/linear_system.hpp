#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tetra/rational.hpp"

namespace tetra {

enum class Relation { GreaterEqual, LessEqual, Equal };

// One linear constraint over named variables. Zero coefficients are omitted
// from the map. `strict` marks a strict inequality; it never comes from the
// text format and is used internally by redundancy/feasibility queries.
struct LinearConstraint {
  std::map<std::string, Rational> coeffs;
  Relation rel = Relation::GreaterEqual;
  Rational rhs;
  bool strict = false;

  Rational coeff(const std::string& var) const {
    auto it = coeffs.find(var);
    return it == coeffs.end() ? Rational(0) : it->second;
  }
  void set_coeff(const std::string& var, const Rational& value) {
    if (value.is_zero())
      coeffs.erase(var);
    else
      coeffs[var] = value;
  }
  bool is_ground() const { return coeffs.empty(); }

  friend bool operator==(const LinearConstraint& a, const LinearConstraint& b) {
    return a.coeffs == b.coeffs && a.rel == b.rel && a.rhs == b.rhs && a.strict == b.strict;
  }
};

struct LinearSystem {
  std::vector<std::string> variables;
  std::vector<LinearConstraint> constraints;

  bool has_variable(const std::string& name) const {
    return std::find(variables.begin(), variables.end(), name) != variables.end();
  }

  friend bool operator==(const LinearSystem& a, const LinearSystem& b) {
    return a.variables == b.variables && a.constraints == b.constraints;
  }
};

inline Rational constraint_lhs(const LinearConstraint& c,
                               const std::map<std::string, Rational>& point) {
  Rational lhs = 0;
  for (const auto& [var, coeff] : c.coeffs) {
    auto it = point.find(var);
    if (it == point.end()) throw std::invalid_argument("constraint_lhs: unbound variable " + var);
    lhs += coeff * it->second;
  }
  return lhs;
}

inline bool satisfies(const LinearConstraint& c, const std::map<std::string, Rational>& point) {
  Rational lhs = constraint_lhs(c, point);
  switch (c.rel) {
    case Relation::GreaterEqual:
      return c.strict ? lhs > c.rhs : lhs >= c.rhs;
    case Relation::LessEqual:
      return c.strict ? lhs < c.rhs : lhs <= c.rhs;
    case Relation::Equal:
      return lhs == c.rhs;
  }
  return false;
}

inline bool satisfies(const LinearSystem& sys, const std::map<std::string, Rational>& point) {
  for (const LinearConstraint& c : sys.constraints)
    if (!satisfies(c, point)) return false;
  return true;
}

struct ParseError : std::runtime_error {
  ParseError(int line_number, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
        line(line_number) {}
  int line;
};

inline Rational parse_rational(const std::string& token, int line_number) {
  auto parse_int = [&](const std::string& s) -> long long {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &pos);
    } catch (const std::exception&) {
      throw ParseError(line_number, "bad number '" + token + "'");
    }
    if (pos != s.size()) throw ParseError(line_number, "bad number '" + token + "'");
    return v;
  };
  std::size_t slash = token.find('/');
  if (slash == std::string::npos) return Rational(parse_int(token));
  long long num = parse_int(token.substr(0, slash));
  long long den = parse_int(token.substr(slash + 1));
  if (den == 0) throw ParseError(line_number, "zero denominator in '" + token + "'");
  return Rational(num, den);
}

// Text format: the first content line declares the variable names; every
// following line is `<c1> ... <cn> <rel> <rhs>` with rationals written as
// `p/q` or plain integers and <rel> one of >=, <=, =. Lines whose first
// non-blank character is '#' are comments.
inline LinearSystem parse_system(std::istream& in) {
  LinearSystem sys;
  std::string line;
  int line_number = 0;
  bool have_variables = false;
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    if (!have_variables) {
      for (const std::string& name : tokens) {
        if (sys.has_variable(name)) throw ParseError(line_number, "duplicate variable " + name);
        sys.variables.push_back(name);
      }
      have_variables = true;
      continue;
    }
    const std::size_t n = sys.variables.size();
    if (tokens.size() != n + 2)
      throw ParseError(line_number, "expected " + std::to_string(n + 2) + " tokens, got " +
                                        std::to_string(tokens.size()));
    LinearConstraint c;
    for (std::size_t i = 0; i < n; ++i)
      c.set_coeff(sys.variables[i], parse_rational(tokens[i], line_number));
    const std::string& rel = tokens[n];
    if (rel == ">=")
      c.rel = Relation::GreaterEqual;
    else if (rel == "<=")
      c.rel = Relation::LessEqual;
    else if (rel == "=")
      c.rel = Relation::Equal;
    else
      throw ParseError(line_number, "bad relation '" + rel + "'");
    c.rhs = parse_rational(tokens[n + 1], line_number);
    sys.constraints.push_back(std::move(c));
  }
  return sys;
}

inline LinearSystem parse_system(const std::string& text) {
  std::istringstream in(text);
  return parse_system(in);
}

inline std::string to_text(const LinearSystem& sys) {
  std::string out;
  for (std::size_t i = 0; i < sys.variables.size(); ++i) {
    if (i) out += " ";
    out += sys.variables[i];
  }
  out += "\n";
  for (const LinearConstraint& c : sys.constraints) {
    for (const std::string& var : sys.variables) {
      out += c.coeff(var).str();
      out += " ";
    }
    switch (c.rel) {
      case Relation::GreaterEqual:
        out += c.strict ? ">" : ">=";
        break;
      case Relation::LessEqual:
        out += c.strict ? "<" : "<=";
        break;
      case Relation::Equal:
        out += "=";
        break;
    }
    out += " " + c.rhs.str() + "\n";
  }
  return out;
}

}  // namespace tetra
