#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tetra/exponent.hpp"
#include "tetra/linear_system.hpp"

namespace tetra {

// Rewrites every constraint as >= : an equality becomes a >= / <= pair, and
// <= rows are negated. Idempotent; preserves the solution set exactly.
inline LinearSystem normalize(const LinearSystem& sys) {
  LinearSystem out;
  out.variables = sys.variables;
  auto negated = [](const LinearConstraint& c) {
    LinearConstraint n;
    for (const auto& [var, coeff] : c.coeffs) n.set_coeff(var, -coeff);
    n.rhs = -c.rhs;
    n.rel = Relation::GreaterEqual;
    n.strict = c.strict;
    return n;
  };
  for (const LinearConstraint& c : sys.constraints) {
    switch (c.rel) {
      case Relation::GreaterEqual:
        out.constraints.push_back(c);
        break;
      case Relation::LessEqual:
        out.constraints.push_back(negated(c));
        break;
      case Relation::Equal: {
        LinearConstraint ge = c;
        ge.rel = Relation::GreaterEqual;
        out.constraints.push_back(ge);
        out.constraints.push_back(negated(c));
        break;
      }
    }
  }
  return out;
}

namespace detail {

inline void require_normalized(const LinearSystem& sys, const char* where) {
  for (const LinearConstraint& c : sys.constraints)
    if (c.rel != Relation::GreaterEqual)
      throw std::invalid_argument(std::string(where) + ": system not normalized");
}

}  // namespace detail

// One Fourier-Motzkin projection step. Constraints are divided by the
// absolute value of the coefficient of `var`, partitioned into lower bounds,
// upper bounds and var-free rows; every lower/upper pair is combined and the
// var-free rows are kept verbatim. The output's real solution set is exactly
// the projection of the input's along `var`.
inline LinearSystem eliminate(const LinearSystem& sys, const std::string& var) {
  detail::require_normalized(sys, "eliminate");
  if (!sys.has_variable(var)) throw std::invalid_argument("eliminate: unknown variable " + var);

  // After division, a lower bound reads  var + rest >= rhs  (var >= rhs - rest)
  // and an upper bound reads  -var + rest >= rhs  (var <= rest - rhs).
  std::vector<LinearConstraint> lowers, uppers;
  LinearSystem out;
  for (const std::string& v : sys.variables)
    if (v != var) out.variables.push_back(v);

  for (const LinearConstraint& c : sys.constraints) {
    Rational a = c.coeff(var);
    if (a.is_zero()) {
      out.constraints.push_back(c);
      continue;
    }
    LinearConstraint scaled;
    Rational abs_a = a.is_negative() ? -a : a;
    for (const auto& [v, coeff] : c.coeffs) scaled.set_coeff(v, coeff / abs_a);
    scaled.rhs = c.rhs / abs_a;
    scaled.strict = c.strict;
    (a.is_negative() ? uppers : lowers).push_back(std::move(scaled));
  }

  for (const LinearConstraint& lo : lowers) {
    for (const LinearConstraint& up : uppers) {
      // (rest_up - rhs_up) >= var >= (rhs_lo - rest_lo)
      LinearConstraint combined;
      for (const std::string& v : out.variables)
        combined.set_coeff(v, lo.coeff(v) + up.coeff(v));
      combined.rhs = lo.rhs + up.rhs;
      combined.strict = lo.strict || up.strict;
      out.constraints.push_back(std::move(combined));
    }
  }
  return out;
}

// Decides rational feasibility by eliminating every variable (last declared
// first) and checking the resulting ground constraints.
inline bool is_feasible_rational(const LinearSystem& sys) {
  LinearSystem cur = normalize(sys);
  while (!cur.variables.empty()) cur = eliminate(cur, cur.variables.back());
  for (const LinearConstraint& c : cur.constraints) {
    bool ok = c.strict ? Rational(0) > c.rhs : Rational(0) >= c.rhs;
    if (!ok) return false;
  }
  return true;
}

namespace detail {

// The negation of a >= constraint: lhs >= rhs becomes -lhs > -rhs (and the
// negation of a strict one is non-strict).
inline LinearConstraint negation(const LinearConstraint& c) {
  LinearConstraint n;
  for (const auto& [var, coeff] : c.coeffs) n.set_coeff(var, -coeff);
  n.rhs = -c.rhs;
  n.rel = Relation::GreaterEqual;
  n.strict = !c.strict;
  return n;
}

}  // namespace detail

// True when the system forces the constraint: {sys, not c} is infeasible.
// An equality is implied iff both of its halves are.
inline bool system_implies(const LinearSystem& sys, const LinearConstraint& c) {
  LinearSystem wrapper;
  wrapper.constraints.push_back(c);
  for (const LinearConstraint& half : normalize(wrapper).constraints) {
    LinearSystem query = normalize(sys);
    LinearConstraint neg = detail::negation(half);
    for (const auto& [var, coeff] : neg.coeffs)
      if (!query.has_variable(var)) query.variables.push_back(var);
    query.constraints.push_back(neg);
    if (is_feasible_rational(query)) return false;
  }
  return true;
}

// Drops every constraint implied by the remaining ones, deciding implication
// exactly by a feasibility query on the negation. The result has the same
// real solution set as the input.
inline LinearSystem remove_redundant(const LinearSystem& sys) {
  detail::require_normalized(sys, "remove_redundant");
  LinearSystem out = sys;
  std::size_t i = 0;
  while (i < out.constraints.size()) {
    LinearSystem rest = out;
    rest.constraints.erase(rest.constraints.begin() + static_cast<long>(i));
    if (system_implies(rest, out.constraints[i]))
      out.constraints.erase(out.constraints.begin() + static_cast<long>(i));
    else
      ++i;
  }
  return out;
}

// Mutual implication of two systems (equality of real solution sets).
inline bool systems_equivalent(const LinearSystem& a, const LinearSystem& b) {
  for (const LinearConstraint& c : normalize(b).constraints)
    if (!system_implies(a, c)) return false;
  for (const LinearConstraint& c : normalize(a).constraints)
    if (!system_implies(b, c)) return false;
  return true;
}

namespace detail {

struct Bounds {
  std::optional<long long> lower;  // greatest integer lower bound
  std::optional<long long> upper;  // least integer upper bound
  bool ground_ok = true;
};

// Integer bounds on `var` implied by the single-variable rows of `sys` once
// the variables in `fixed` are substituted.
inline Bounds stage_bounds(const LinearSystem& sys, const std::string& var,
                           const std::map<std::string, Rational>& fixed) {
  Bounds b;
  for (const LinearConstraint& c : sys.constraints) {
    Rational a = c.coeff(var);
    Rational rest = 0;
    for (const auto& [v, coeff] : c.coeffs) {
      if (v == var) continue;
      auto it = fixed.find(v);
      if (it == fixed.end())
        throw std::invalid_argument("stage_bounds: unsubstituted variable " + v);
      rest += coeff * it->second;
    }
    if (a.is_zero()) {
      bool ok = c.strict ? rest > c.rhs : rest >= c.rhs;
      if (!ok) b.ground_ok = false;
      continue;
    }
    Rational bound = (c.rhs - rest) / a;
    if (a.is_negative()) {
      // var <= bound
      long long ub = c.strict ? (bound.is_integer() ? bound.floor() - 1 : bound.floor())
                              : bound.floor();
      if (!b.upper || ub < *b.upper) b.upper = ub;
    } else {
      // var >= bound
      long long lb = c.strict ? (bound.is_integer() ? bound.ceil() + 1 : bound.ceil())
                              : bound.ceil();
      if (!b.lower || lb > *b.lower) b.lower = lb;
    }
  }
  return b;
}

}  // namespace detail

// Searches for an integer solution. Variables are eliminated last-declared
// first; back-substitution then assigns them in declared order, setting each
// to the ceiling of its greatest lower bound and checking the upper bounds.
// If a check fails, an exhaustive search over the box cut out by the
// single-variable consequences of full elimination decides the question; if
// that box is unbounded the input is unsupported.
inline std::optional<Exponent> integer_point(const LinearSystem& sys) {
  LinearSystem normal = normalize(sys);
  const std::size_t n = normal.variables.size();

  // chain[k] is the system on the first k declared variables
  std::vector<LinearSystem> chain(n + 1);
  chain[n] = normal;
  for (std::size_t k = n; k > 0; --k) chain[k - 1] = eliminate(chain[k], normal.variables[k - 1]);

  for (const LinearConstraint& c : chain[0].constraints) {
    bool ok = c.strict ? Rational(0) > c.rhs : Rational(0) >= c.rhs;
    if (!ok) return std::nullopt;  // rationally infeasible
  }

  // primary route: greatest-lower-bound assignment in declared order
  {
    std::map<std::string, Rational> fixed;
    Exponent point;
    bool ok = true;
    for (std::size_t k = 1; k <= n && ok; ++k) {
      const std::string& var = normal.variables[k - 1];
      detail::Bounds b = detail::stage_bounds(chain[k], var, fixed);
      if (!b.ground_ok || !b.lower || (b.upper && *b.lower > *b.upper)) {
        ok = false;
        break;
      }
      fixed[var] = Rational(*b.lower);
      point.push_back(static_cast<int>(*b.lower));
    }
    if (ok && satisfies(normal, fixed)) return point;
  }

  // fallback: per-variable integer box from single-variable consequences
  std::vector<long long> lo(n), hi(n);
  for (std::size_t k = 0; k < n; ++k) {
    LinearSystem single = normal;
    for (std::size_t j = n; j > 0; --j) {
      if (j - 1 == k) continue;
      single = eliminate(single, normal.variables[j - 1]);
    }
    detail::Bounds b = detail::stage_bounds(single, normal.variables[k], {});
    if (!b.lower || !b.upper)
      throw std::domain_error("integer_point: variable " + normal.variables[k] +
                              " has no finite search range");
    lo[k] = *b.lower;
    hi[k] = *b.upper;
    if (lo[k] > hi[k]) return std::nullopt;
  }

  Exponent point(n);
  std::map<std::string, Rational> candidate;
  std::size_t k = 0;
  std::vector<long long> cur(lo);
  while (true) {
    for (std::size_t j = 0; j < n; ++j) {
      point[j] = static_cast<int>(cur[j]);
      candidate[normal.variables[j]] = Rational(cur[j]);
    }
    if (satisfies(normal, candidate)) return point;
    // odometer increment
    k = 0;
    while (k < n && cur[k] == hi[k]) {
      cur[k] = lo[k];
      ++k;
    }
    if (k == n) break;
    ++cur[k];
  }
  return std::nullopt;
}

}  // namespace tetra
