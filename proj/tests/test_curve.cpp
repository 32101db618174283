#include "tetra/curve.hpp"

#include <gtest/gtest.h>

#include "tetra/support_module.hpp"
#include "tetra/takayama.hpp"

using namespace tetra;

namespace {

std::vector<TetraCurve> all_curves(int max_a) {
  std::vector<TetraCurve> out;
  std::array<int, 6> a{};
  while (true) {
    if (std::any_of(a.begin(), a.end(), [](int v) { return v != 0; })) out.push_back(TetraCurve(a));
    int k = 5;
    while (k >= 0 && a[k] == max_a) a[k--] = 0;
    if (k < 0) break;
    ++a[k];
  }
  return out;
}

}  // namespace

TEST(TetraCurve, Validation) {
  EXPECT_THROW(TetraCurve(0, 0, 0, 0, 0, 0), std::invalid_argument);
  EXPECT_THROW(TetraCurve(1, -1, 0, 0, 0, 0), std::invalid_argument);
  EXPECT_EQ(TetraCurve(1, 0, 0, 0, 0, 1).str(), "(1,0,0,0,0,1)");
}

// The induced edge action, pinned on the three adjacent transpositions.
TEST(Permutations, DefiningTranspositions) {
  const std::array<int, 6> a = {1, 2, 3, 4, 5, 6};
  EXPECT_EQ(permute_edges(a, {2, 1, 3, 4}), (std::array<int, 6>{1, 4, 5, 2, 3, 6}));  // (1 2)
  EXPECT_EQ(permute_edges(a, {1, 3, 2, 4}), (std::array<int, 6>{2, 1, 3, 4, 6, 5}));  // (2 3)
  EXPECT_EQ(permute_edges(a, {1, 2, 4, 3}), (std::array<int, 6>{1, 3, 2, 5, 4, 6}));  // (3 4)
}

TEST(Permutations, GroupActionOnEdges) {
  EXPECT_EQ(vertex_permutations().size(), 24u);
  EXPECT_EQ(vertex_permutations()[0], kIdentityPermutation);
  const std::array<int, 6> a = {1, 2, 3, 4, 5, 6};
  // composing the action: apply(q, apply(p, a)) == apply(q . p, a)
  for (const VertexPermutation& p : vertex_permutations())
    for (const VertexPermutation& q : vertex_permutations()) {
      VertexPermutation composed;
      for (int v = 0; v < 4; ++v) composed[v] = q[p[v] - 1];
      EXPECT_EQ(permute_edges(permute_edges(a, p), q), permute_edges(a, composed));
    }
}

TEST(Normalization, Examples) {
  NormalizedCurve same = normalize(TetraCurve(1, 1, 1, 1, 1, 1));
  EXPECT_EQ(same.permutation, kIdentityPermutation);
  EXPECT_EQ(same.curve, TetraCurve(1, 1, 1, 1, 1, 1));

  NormalizedCurve swapped = normalize(TetraCurve(0, 2, 0, 0, 2, 0));
  EXPECT_EQ(swapped.permutation, (VertexPermutation{1, 3, 2, 4}));
  EXPECT_EQ(swapped.curve, TetraCurve(2, 0, 0, 0, 0, 2));

  EXPECT_EQ(normalize(TetraCurve(1, 0, 0, 0, 0, 1)).permutation, kIdentityPermutation);
}

TEST(Normalization, AlwaysReachesDominantPairViaReportedPermutation) {
  for (const TetraCurve& c : all_curves(2)) {
    NormalizedCurve n = normalize(c);
    EXPECT_TRUE(is_normalized(n.curve));
    EXPECT_EQ(permute_edges(c.a, n.permutation), n.curve.a);
  }
}

TEST(ClosedForms, ScriptA) {
  EXPECT_EQ(script_a(TetraCurve(1, 0, 0, 0, 0, 1)), 0);
  EXPECT_EQ(script_a(TetraCurve(2, 0, 1, 1, 0, 2)), 2);
  EXPECT_EQ(script_a(TetraCurve(2, 1, 0, 0, 1, 3)), 2);
}

TEST(ClosedForms, FeasibleDegrees) {
  EXPECT_EQ(feasible_degrees(TetraCurve(1, 0, 0, 0, 0, 1)), DegreeInterval::closed(0, 0));
  EXPECT_TRUE(feasible_degrees(TetraCurve(1, 1, 1, 1, 1, 1)).is_empty());
  EXPECT_EQ(feasible_degrees(TetraCurve(2, 0, 0, 0, 0, 2)), DegreeInterval::closed(0, 2));
  EXPECT_THROW(feasible_degrees(TetraCurve(0, 2, 0, 0, 2, 0)), std::invalid_argument);
}

TEST(ClosedForms, ParityObstruction) {
  EXPECT_FALSE(parity_obstruction(TetraCurve(2, 0, 1, 1, 0, 2), 2));
  EXPECT_THROW(parity_obstruction(TetraCurve(2, 0, 1, 1, 0, 2), 5), std::invalid_argument);

  // the obstruction fires exactly on the even-parity boundary tuples, and
  // such tuples exist
  int fired = 0;
  for (const TetraCurve& c : all_curves(4)) {
    const auto& a = c.a;
    int lo = std::max(a[1] + a[4], a[2] + a[3]);
    for (int d = lo; d <= a[0] + a[5] - 2; ++d) {
      bool expected = (a[1] + a[2] - a[5]) % 2 == 0 && a[0] + a[5] - 2 == a[1] + a[4] &&
                      a[1] + a[4] == a[2] + a[3];
      EXPECT_EQ(parity_obstruction(c, d), expected) << c.str() << " d=" << d;
      if (expected) ++fired;
    }
  }
  EXPECT_GT(fired, 0);
}

TEST(ClosedForms, AcmExamples) {
  EXPECT_TRUE(is_acm(TetraCurve(1, 1, 1, 1, 1, 1)));
  EXPECT_FALSE(is_acm(TetraCurve(1, 0, 0, 0, 0, 1)));
  EXPECT_TRUE(is_acm(TetraCurve(3, 0, 0, 0, 0, 0)));
  EXPECT_THROW(is_acm(TetraCurve(0, 2, 0, 0, 2, 0)), std::invalid_argument);
}

TEST(ClosedForms, FranciscoAgreesOnExamplesAndSmallSweep) {
  EXPECT_TRUE(is_acm_francisco(TetraCurve(1, 1, 1, 1, 1, 1)));
  EXPECT_FALSE(is_acm_francisco(TetraCurve(1, 0, 0, 0, 0, 1)));
  for (const TetraCurve& c : all_curves(3))
    if (is_normalized(c)) EXPECT_EQ(is_acm(c), is_acm_francisco(c)) << c.str();
}

TEST(ClosedForms, Diameter) {
  EXPECT_EQ(diameter(TetraCurve(1, 0, 0, 0, 0, 1)), 1);
  EXPECT_EQ(diameter(TetraCurve(2, 1, 0, 0, 1, 3)), 2);
  EXPECT_EQ(diameter(TetraCurve(1, 1, 1, 1, 1, 1)), 0);
}

TEST(ClosedForms, Buchsbaum) {
  EXPECT_TRUE(is_buchsbaum(TetraCurve(1, 0, 0, 0, 0, 1)));
  EXPECT_TRUE(is_buchsbaum(TetraCurve(2, 0, 1, 1, 0, 2)));
  EXPECT_FALSE(is_buchsbaum(TetraCurve(2, 1, 0, 0, 1, 3)));
  // ACM curves count as Buchsbaum (k = 0)
  EXPECT_TRUE(is_buchsbaum(TetraCurve(1, 1, 1, 1, 1, 1)));
}

TEST(ClosedForms, BuchsbaumThresholdFormDisagreesSomewhere) {
  // the a2 = 0 clause of the threshold form misclassifies wide curves
  TetraCurve wide(5, 0, 0, 0, 0, 5);
  EXPECT_TRUE(is_buchsbaum_threshold_form(wide));
  EXPECT_FALSE(is_buchsbaum(wide));
}

TEST(ClosedForms, MinimalCurves) {
  EXPECT_TRUE(is_minimal(TetraCurve(2, 0, 1, 1, 0, 2)));
  EXPECT_FALSE(is_minimal(TetraCurve(1, 1, 1, 1, 1, 1)));
  EXPECT_TRUE(is_minimal(TetraCurve(1, 0, 0, 0, 0, 1)));
  EXPECT_THROW(is_minimal(TetraCurve(3, 0, 0, 0, 0, 1)), std::invalid_argument);
}

TEST(ClosedForms, DiameterTwoFamilies) {
  EXPECT_TRUE(in_diameter_two_family(TetraCurve(2, 1, 0, 0, 1, 3)));
  EXPECT_TRUE(in_diameter_two_family(TetraCurve(3, 1, 0, 0, 2, 3)));
  EXPECT_FALSE(in_diameter_two_family(TetraCurve(2, 0, 1, 1, 0, 2)));
  EXPECT_THROW(in_diameter_two_family(TetraCurve(1, 1, 1, 1, 1, 1)), std::invalid_argument);
}

TEST(ClosedForms, InvariantUnderVertexPermutations) {
  for (const TetraCurve& c : all_curves(2)) {
    TetraCurve base = normalize(c).curve;
    for (const VertexPermutation& perm : vertex_permutations()) {
      TetraCurve image = normalize(TetraCurve(permute_edges(c.a, perm))).curve;
      EXPECT_EQ(is_acm(base), is_acm(image)) << c.str();
      EXPECT_EQ(is_buchsbaum(base), is_buchsbaum(image)) << c.str();
      EXPECT_EQ(diameter(base), diameter(image)) << c.str();
    }
  }
}

TEST(Classification, FieldInvariants) {
  for (const TetraCurve& c : all_curves(3)) {
    Classification r = classify(c);
    EXPECT_EQ(r.acm, r.diam == 0);
    EXPECT_EQ(r.acm, r.feasible.is_empty());
    EXPECT_EQ(r.buchsbaum, r.k <= 1);
    if (!r.acm) {
      ASSERT_TRUE(r.beg && r.end);
      EXPECT_EQ(*r.beg, r.script_a);
      EXPECT_EQ(*r.end, r.normalized.a[0] + r.normalized.a[5] - 2);
      EXPECT_EQ(r.diam, *r.end - *r.beg + 1);
      EXPECT_EQ(r.feasible, DegreeInterval::closed(*r.beg, *r.end));
    }
  }
}

// Closed forms against the graded-piece oracle on a small exhaustive family.
TEST(Classification, MatchesOracleOnSmallSweep) {
  for (const TetraCurve& c : all_curves(2)) {
    TetraCurve n = normalize(c).curve;
    GradedPieceTable table = h1_table(tetra_ideal(n.a));
    EXPECT_EQ(table.empty(), is_acm(n)) << n.str();
    if (table.empty()) continue;
    std::vector<int> degrees = table.degrees();
    EXPECT_EQ(degrees.front(), script_a(n)) << n.str();
    EXPECT_EQ(degrees.back(), support_end(n)) << n.str();
    EXPECT_EQ(static_cast<int>(degrees.size()), diameter(n)) << n.str();
    for (std::size_t i = 1; i < degrees.size(); ++i)
      EXPECT_EQ(degrees[i], degrees[i - 1] + 1) << n.str();
  }
}
