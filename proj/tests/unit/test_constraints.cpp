#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <numbers>

#include "qgates/constraints.hpp"

using namespace qgates;

namespace {

bool contains(const std::vector<EqualityPattern>& patterns, const EqualityPattern& p) {
  return std::find(patterns.begin(), patterns.end(), p) != patterns.end();
}

}  // namespace

TEST(IdentityResidual, VanishesForUnitPsi) {
  for (GateKind kind : all_gate_kinds()) {
    for (double q : {0.5, 1.0, 2.0}) {
      const auto r = identity_residual(GateSpec(kind, 0.3), DeformationParams(q));
      EXPECT_LT(r.strict, 1e-14) << to_string(kind);
      EXPECT_LT(r.collinear, 1e-14);
    }
  }
}

TEST(IdentityResidual, NotOracle) {
  // |LHS - RHS| = |sqrt(b(psi3, psi4)) - sqrt(b(psi1, psi2))| for either input
  const double q = 2.0;
  const auto params = DeformationParams(q).with_pair(1, {2.0, 1.0}).with_pair(2, {1.0, 1.0});
  const double b12 = (q * 2.0 - 1.0 / q) / (q - 1.0 / q);
  const double b34 = 1.0;
  const auto r = identity_residual(GateSpec(GateKind::Not), params);
  EXPECT_NEAR(r.strict, std::abs(std::sqrt(b12) - std::sqrt(b34)), 1e-14);
  // both sides are multiples of the same basis vector
  EXPECT_LT(r.collinear, 1e-14);
}

TEST(IdentityResidual, PhaseShiftHoldsForAnyPsi) {
  const auto params = DeformationParams(2.0).with_pair(1, {4.0, 0.5}).with_pair(2, {2.0, 1.0});
  EXPECT_LT(identity_residual(GateSpec::phase_shift(1.1), params).strict, 1e-14);
}

TEST(HadamardRatio, ValuesAsWritten) {
  for (double q : {0.5, 2.0, 3.0}) {
    EXPECT_NEAR(hadamard_ratio(0, q), 1.0, 1e-15);
    EXPECT_NEAR(hadamard_ratio(1, q), q * q, 1e-13);
  }
  EXPECT_THROW(hadamard_ratio(2, 2.0), std::invalid_argument);
}

TEST(PublishedClaim, IndicesAreConsistent) {
  for (GateKind kind : all_gate_kinds()) {
    const auto c = published_claim(kind);
    for (const auto& e : c.claimed) {
      EXPECT_NE(std::find(c.relevant.begin(), c.relevant.end(), e.lhs), c.relevant.end());
      EXPECT_NE(std::find(c.relevant.begin(), c.relevant.end(), e.rhs), c.relevant.end());
    }
    EXPECT_EQ(c.no_restriction, c.claimed.empty());
  }
  EXPECT_EQ(to_string(published_claim(GateKind::Not).claimed), "{psi1=psi2}");
}

TEST(Discover, UnrestrictedGatesAreConfirmed) {
  for (GateKind kind : {GateKind::PhaseShift, GateKind::Swap, GateKind::Fredkin}) {
    const GateSpec gate(kind, std::numbers::pi / 4);
    const auto r = discover_constraints(gate, 2.0);
    EXPECT_EQ(r.verdict, Verdict::Confirmed) << r.summary();
    EXPECT_EQ(r.strict.minimal_patterns.size(), 1u);
    EXPECT_TRUE(r.strict.minimal_patterns[0].empty());
  }
}

TEST(Discover, RestrictedClaimsAreSufficientButNotNecessary) {
  for (GateKind kind : {GateKind::Hadamard, GateKind::Not, GateKind::CNot, GateKind::Toffoli}) {
    const auto r = discover_constraints(GateSpec(kind), 2.0);
    EXPECT_TRUE(r.strict.sufficient) << r.summary();
    EXPECT_FALSE(r.strict.necessary) << r.summary();
    EXPECT_EQ(r.verdict, Verdict::Refuted);
    EXPECT_GT(r.strict.supporting_samples, 0u);
  }
}

TEST(Discover, NotMinimalPatternIsTheAssumptionPair) {
  const auto r = discover_constraints(GateSpec(GateKind::Not), 2.0);
  EXPECT_TRUE(contains(r.strict.minimal_patterns, {{1, 3}, {2, 4}})) << r.summary();
  for (const auto& p : r.strict.minimal_patterns) EXPECT_EQ(p.size(), 2u);
}

TEST(Discover, SkipsInadmissiblePoints) {
  const auto r = discover_constraints(GateSpec(GateKind::Not), 2.0);
  EXPECT_EQ(r.samples.size(), 256u);
  EXPECT_GT(r.skipped, 0u);
  std::size_t flagged = 0;
  for (const auto& s : r.samples) flagged += s.admissible ? 0 : 1;
  EXPECT_EQ(flagged, r.skipped);
}

TEST(Discover, SampleOrderIsLexicographic) {
  DiscoveryOptions opts;
  opts.grid = {1.0, 2.0};
  const auto r = discover_constraints(GateSpec(GateKind::Not), 2.0, {}, opts);
  ASSERT_EQ(r.samples.size(), 16u);
  EXPECT_EQ(r.samples[1].values, (std::vector<double>{1.0, 1.0, 1.0, 2.0}));
  EXPECT_EQ(r.samples[8].values, (std::vector<double>{2.0, 1.0, 1.0, 1.0}));
}

TEST(Discover, DeterministicAcrossRuns) {
  const auto a = discover_constraints(GateSpec(GateKind::CNot), 0.5);
  const auto b = discover_constraints(GateSpec(GateKind::CNot), 0.5);
  EXPECT_EQ(a.summary(), b.summary());
  for (std::size_t i = 0; i < a.samples.size(); ++i) EXPECT_EQ(a.samples[i].strict, b.samples[i].strict);
}

TEST(Discover, EmptyGridRejected) {
  DiscoveryOptions opts;
  opts.grid.clear();
  EXPECT_THROW(discover_constraints(GateSpec(GateKind::Not), 2.0, {}, opts), std::invalid_argument);
}

TEST(Discover, LargestSweepFinishesQuickly) {
  const auto start = std::chrono::steady_clock::now();
  const auto r = discover_constraints(GateSpec(GateKind::Fredkin), 2.0);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_EQ(r.samples.size(), 65536u);
  EXPECT_LT(seconds, 30.0);
  RecordProperty("fredkin_sweep_seconds", std::to_string(seconds));
}

TEST(IdentityResidual, ScalesWithTheRootOfAGlobalPsiFactor) {
  // Every ket picks up sqrt(c) when all psi scale by c, so the norm-matched
  // residual depends only on psi ratios.
  const double q = 2.0;
  const auto base = DeformationParams(q).with_pair(1, {1.0, 1.0}).with_pair(2, {2.0, 2.0});
  const auto doubled = DeformationParams(q, [] {
    std::array<double, 12> v{};
    v.fill(2.0);
    v[2] = v[3] = 4.0;
    return v;
  }());
  for (GateKind kind : {GateKind::Hadamard, GateKind::Not}) {
    const auto a = identity_residual(GateSpec(kind), base);
    const auto b = identity_residual(GateSpec(kind), doubled);
    EXPECT_GT(a.strict, 0.1);
    EXPECT_NEAR(b.strict / std::sqrt(2.0), a.strict, 1e-14);
    EXPECT_NEAR(b.collinear / std::sqrt(2.0), a.collinear, 1e-14);
  }
}

TEST(Discover, PermutingGatesIgnoreOperatorConvention) {
  DiscoveryOptions opts;
  opts.grid = {0.5, 1.0, 2.0};
  for (auto convention : {OperatorConvention::MatrixElement, OperatorConvention::LeftScaling}) {
    const auto r = discover_constraints(GateSpec(GateKind::Swap), 2.0, {convention, ExponentConvention::EigenvalueOfResult}, opts);
    for (const auto& s : r.samples) {
      if (s.admissible) EXPECT_EQ(s.strict, 0.0);
    }
    EXPECT_EQ(r.verdict, Verdict::Confirmed);
  }
}
