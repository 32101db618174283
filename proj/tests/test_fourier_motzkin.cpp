#include "tetra/fourier_motzkin.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "tetra/support_module.hpp"

using namespace tetra;

namespace {

// The three-inequality, one-equality example whose y1-projection is worked
// out by hand; see also tests/data/worked_example.txt.
LinearSystem worked_example() {
  return parse_system(
      "y1 y2 y3\n"
      "1 2 -1 >= -4\n"
      "-2 1 3 >= 2\n"
      "0 2 -1 >= 0\n"
      "1 -1 -1 = 0\n");
}

// Its hand-reduced projection onto (y2, y3).
LinearSystem worked_example_projection() {
  return parse_system(
      "y2 y3\n"
      "-1/2 1/2 >= 1\n"
      "3 0 >= -4\n"
      "2 -1 >= 0\n");
}

LinearConstraint ge(std::map<std::string, Rational> coeffs, Rational rhs) {
  LinearConstraint c;
  for (auto& [v, r] : coeffs) c.set_coeff(v, r);
  c.rhs = rhs;
  return c;
}

std::map<std::string, Rational> point2(Rational u, Rational v) {
  return {{"u", u}, {"v", v}};
}

LinearSystem random_system(std::mt19937& rng, int num_constraints) {
  std::uniform_int_distribution<int> coeff(-2, 2), rhs(-3, 3);
  LinearSystem sys;
  sys.variables = {"u", "v"};
  for (int i = 0; i < num_constraints; ++i) {
    LinearConstraint c;
    c.set_coeff("u", coeff(rng));
    c.set_coeff("v", coeff(rng));
    c.rhs = rhs(rng);
    sys.constraints.push_back(c);
  }
  return sys;
}

}  // namespace

TEST(Normalize, SplitsEqualities) {
  LinearSystem sys = parse_system("y1 y2 y3\n1 -1 -1 = 0\n");
  LinearSystem norm = normalize(sys);
  ASSERT_EQ(norm.constraints.size(), 2u);
  EXPECT_EQ(norm.constraints[0], ge({{"y1", 1}, {"y2", -1}, {"y3", -1}}, 0));
  EXPECT_EQ(norm.constraints[1], ge({{"y1", -1}, {"y2", 1}, {"y3", 1}}, 0));
}

TEST(Normalize, IdempotentAndEmpty) {
  LinearSystem sys = normalize(worked_example());
  EXPECT_EQ(normalize(sys), sys);
  LinearSystem empty;
  EXPECT_EQ(normalize(empty), empty);
}

TEST(Eliminate, WorkedExampleProducesFiveConstraints) {
  LinearSystem projected = eliminate(normalize(worked_example()), "y1");
  EXPECT_EQ(projected.variables, (std::vector<std::string>{"y2", "y3"}));
  // two lower bounds times two upper bounds, plus the y1-free row
  EXPECT_EQ(projected.constraints.size(), 5u);
  EXPECT_TRUE(systems_equivalent(projected, worked_example_projection()));
}

TEST(Eliminate, AbsentVariable) {
  LinearSystem sys = parse_system("x y\n1 0 >= 2\n");
  LinearSystem out = eliminate(sys, "y");
  EXPECT_EQ(out.variables, (std::vector<std::string>{"x"}));
  ASSERT_EQ(out.constraints.size(), 1u);
  EXPECT_EQ(out.constraints[0], ge({{"x", 1}}, 2));
  EXPECT_THROW(eliminate(sys, "z"), std::invalid_argument);
}

TEST(Eliminate, TightPairLeavesTrivialGroundRow) {
  LinearSystem sys = parse_system("y\n1 >= 1\n-1 >= -1\n");
  LinearSystem out = eliminate(sys, "y");
  EXPECT_TRUE(out.variables.empty());
  ASSERT_EQ(out.constraints.size(), 1u);
  EXPECT_TRUE(out.constraints[0].is_ground());
  EXPECT_EQ(out.constraints[0].rhs, Rational(0));
}

TEST(Eliminate, RequiresNormalizedInput) {
  EXPECT_THROW(eliminate(worked_example(), "y1"), std::invalid_argument);
}

// Both directions of projection soundness, checked against a direct interval
// test on the original system over a rational grid with denominator 12.
TEST(Eliminate, ProjectionSoundnessOnGrid) {
  std::mt19937 rng(987123);
  for (int trial = 0; trial < 40; ++trial) {
    LinearSystem sys = normalize(random_system(rng, 4));
    LinearSystem projected = eliminate(sys, "v");
    for (long long k = -36; k <= 36; ++k) {
      Rational u(k, 12);
      // direct test: does some rational v extend u to a solution of sys?
      Rational best_lo = 0, best_hi = 0;
      bool has_lo = false, has_hi = false, ground_ok = true;
      for (const LinearConstraint& c : sys.constraints) {
        Rational a = c.coeff("v");
        Rational rest = c.coeff("u") * u;
        if (a.is_zero()) {
          if (!(rest >= c.rhs)) ground_ok = false;
        } else if (a.is_negative()) {
          Rational bound = (c.rhs - rest) / a;
          if (!has_hi || bound < best_hi) best_hi = bound;
          has_hi = true;
        } else {
          Rational bound = (c.rhs - rest) / a;
          if (!has_lo || bound > best_lo) best_lo = bound;
          has_lo = true;
        }
      }
      bool extendable = ground_ok && (!has_lo || !has_hi || best_lo <= best_hi);
      bool in_projection = satisfies(projected, {{"u", u}});
      EXPECT_EQ(extendable, in_projection) << "trial " << trial << " u=" << u.str();
    }
  }
}

TEST(RemoveRedundant, WorkedExampleReduction) {
  LinearSystem projected = eliminate(normalize(worked_example()), "y1");
  LinearSystem pruned = remove_redundant(projected);
  EXPECT_TRUE(systems_equivalent(pruned, worked_example_projection()));
  EXPECT_TRUE(systems_equivalent(pruned, projected));
  // The hand reduction keeps three rows; the exact pass also drops 3y2 >= -4,
  // which the remaining two rows imply.
  EXPECT_EQ(pruned.constraints.size(), 2u);
  for (const LinearConstraint& kept : pruned.constraints) {
    LinearSystem rest = pruned;
    rest.constraints.erase(
        std::find(rest.constraints.begin(), rest.constraints.end(), kept));
    EXPECT_FALSE(system_implies(rest, kept));
  }
}

TEST(RemoveRedundant, DropsDuplicates) {
  LinearSystem sys = parse_system("x\n1 >= 0\n1 >= 0\n");
  EXPECT_EQ(remove_redundant(sys).constraints.size(), 1u);
}

TEST(RemoveRedundant, KeepsIrredundantSystem) {
  LinearSystem sys = parse_system("u v\n1 0 >= 0\n0 1 >= 0\n-1 -1 >= -3\n");
  LinearSystem pruned = remove_redundant(sys);
  EXPECT_EQ(pruned, sys);
  for (std::size_t i = 0; i < sys.constraints.size(); ++i) {
    LinearSystem rest = sys;
    rest.constraints.erase(rest.constraints.begin() + static_cast<long>(i));
    EXPECT_FALSE(system_implies(rest, sys.constraints[i]));
  }
}

TEST(RemoveRedundant, PreservesSolutionSetOnGrid) {
  std::mt19937 rng(5551);
  for (int trial = 0; trial < 40; ++trial) {
    LinearSystem sys = normalize(random_system(rng, 5));
    LinearSystem pruned = remove_redundant(sys);
    EXPECT_EQ(is_feasible_rational(sys), is_feasible_rational(pruned));
    for (long long i = -8; i <= 8; ++i)
      for (long long j = -8; j <= 8; ++j) {
        auto p = point2(Rational(i, 2), Rational(j, 2));
        EXPECT_EQ(satisfies(sys, p), satisfies(pruned, p));
      }
  }
}

TEST(Feasibility, SupportSystemInstances) {
  EXPECT_TRUE(is_feasible_rational(support_system(TetraCurve(1, 0, 0, 0, 0, 1), 0)));
  EXPECT_FALSE(is_feasible_rational(support_system(TetraCurve(1, 1, 1, 1, 1, 1), 0)));
  EXPECT_FALSE(is_feasible_rational(parse_system("y\n1 >= 1\n-1 >= 0\n")));
}

TEST(IntegerPoint, SupportSystemInstances) {
  auto p = integer_point(support_system(TetraCurve(1, 0, 0, 0, 0, 1), 0));
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(*p, (Exponent{0, 0, 0, 0}));

  auto q = integer_point(support_system(TetraCurve(2, 0, 1, 1, 0, 2), 2));
  ASSERT_TRUE(q.has_value());
  EXPECT_TRUE(*q == (Exponent{1, 0, 1, 0}) || *q == (Exponent{0, 1, 0, 1}));

  EXPECT_FALSE(integer_point(parse_system("y\n1 >= 1\n-1 >= 0\n")).has_value());
}

TEST(IntegerPoint, RationallyFeasibleButIntegerInfeasible) {
  // 2y = 1 has the rational solution 1/2 and no integer one
  EXPECT_FALSE(integer_point(parse_system("y\n2 = 1\n")).has_value());
}

TEST(IntegerPoint, UnboundedVariableIsRejected) {
  EXPECT_THROW(integer_point(parse_system("y\n-1 >= -5\n")), std::domain_error);
}

TEST(IntegerPoint, EmptySystem) {
  LinearSystem empty;
  auto p = integer_point(empty);
  ASSERT_TRUE(p.has_value());
  EXPECT_TRUE(p->empty());
  EXPECT_TRUE(is_feasible_rational(empty));
}

TEST(IntegerPoint, OutputSatisfiesSystemExactly) {
  for (int a1 = 1; a1 <= 2; ++a1)
    for (int a6 = 1; a6 <= 2; ++a6)
      for (int a2 = 0; a2 <= 2; ++a2)
        for (int a4 = 0; a4 <= 2; ++a4) {
          TetraCurve c(a1, a2, 0, a4, 0, a6);
          if (!is_normalized(c)) continue;
          for (int d = 0; d <= a1 + a6; ++d) {
            LinearSystem sys = support_system(c, d);
            auto p = integer_point(sys);
            if (!p) continue;
            std::map<std::string, Rational> values;
            for (std::size_t i = 0; i < sys.variables.size(); ++i)
              values[sys.variables[i]] = Rational((*p)[i]);
            EXPECT_TRUE(satisfies(sys, values)) << c.str() << " d=" << d;
          }
        }
}

// Agreement of integer feasibility with the closed form and brute force over
// a small exhaustive family; the acceptance suite widens the bound.
TEST(IntegerPoint, ThreeWayAgreementSmall) {
  for (const TetraCurve& c : {TetraCurve(2, 0, 0, 0, 0, 2), TetraCurve(1, 0, 0, 0, 0, 1),
                              TetraCurve(2, 1, 1, 1, 1, 2), TetraCurve(2, 0, 1, 1, 0, 2),
                              TetraCurve(1, 1, 1, 1, 1, 1), TetraCurve(3, 1, 0, 0, 1, 3)}) {
    DegreeInterval interval = feasible_degrees(c);
    SupportSet s = enumerate_support(c);
    for (int d = 0; d <= c.a[0] + c.a[5]; ++d) {
      bool fm = integer_point(support_system(c, d)).has_value();
      EXPECT_EQ(fm, interval.contains(d)) << c.str() << " d=" << d;
      EXPECT_EQ(fm, s.by_degree().count(d) > 0) << c.str() << " d=" << d;
    }
  }
}

TEST(Parsing, RoundTrip) {
  LinearSystem sys = worked_example();
  EXPECT_EQ(parse_system(to_text(sys)), sys);
  EXPECT_EQ(sys.variables, (std::vector<std::string>{"y1", "y2", "y3"}));
  ASSERT_EQ(sys.constraints.size(), 4u);
  EXPECT_EQ(sys.constraints[3].rel, Relation::Equal);
}

TEST(Parsing, AcceptsRationalsAndComments) {
  LinearSystem sys = parse_system("# header\nx y\n\n1/2 -3/2 >= -7/3\n");
  ASSERT_EQ(sys.constraints.size(), 1u);
  EXPECT_EQ(sys.constraints[0].coeff("x"), Rational(1, 2));
  EXPECT_EQ(sys.constraints[0].coeff("y"), Rational(-3, 2));
  EXPECT_EQ(sys.constraints[0].rhs, Rational(-7, 3));
}

TEST(Parsing, EmptyInputGivesEmptySystem) {
  LinearSystem sys = parse_system(std::string("# only a comment\n"));
  EXPECT_TRUE(sys.variables.empty());
  EXPECT_TRUE(sys.constraints.empty());
  EXPECT_TRUE(is_feasible_rational(sys));
}

TEST(Parsing, ReportsLineNumbers) {
  try {
    parse_system(std::string("x y\n1 0 >= 1\n1 bad >= 0\n"));
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line, 3);
  }
  try {
    parse_system(std::string("x y\n1 0 ~ 1\n"));
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line, 2);
  }
  try {
    parse_system(std::string("x y\n1 0 1 0 >= 1\n"));
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line, 2);
  }
}
