#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qgates/schwinger.hpp"

using namespace qgates;

TEST(Embedding, OccupationsFollowTheEncoding) {
  const QubitEmbedding e(2);
  EXPECT_EQ(e.occupations({1, 0}), (Occupation{1, 0, 0, 1}));
  EXPECT_EQ(e.decode({0, 1, 1, 0}), (BitString{0, 1}));
  EXPECT_THROW(e.decode({1, 1, 0, 1}), std::invalid_argument);
  EXPECT_THROW(e.decode({0, 0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(e.occupations({2, 0}), std::invalid_argument);
}

TEST(Embedding, RoundTripAllStrings) {
  for (int k = 1; k <= 3; ++k) {
    const QubitEmbedding e(k);
    for (const auto& bits : e.basis()) EXPECT_EQ(e.decode(e.occupations(bits)), bits);
    EXPECT_EQ(e.basis().size(), std::size_t{1} << k);
  }
}

TEST(Embedding, BasisStatesAreOrthonormal) {
  const QubitEmbedding e(3);
  const auto basis = e.basis();
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      const Complex overlap = e.encode(x).amplitudes().dot(e.encode(y).amplitudes());
      EXPECT_EQ(overlap, Complex(x == y ? 1.0 : 0.0));
    }
  }
}

TEST(Embedding, ProjectorHasRankTwoToTheK) {
  const Matrix p = QubitEmbedding(2).valid_projector();
  EXPECT_NEAR(p.trace().real(), 4.0, 1e-15);
  EXPECT_EQ(max_norm(Matrix(p * p - p)), 0.0);
}

TEST(Embedding, RejectsOutOfRangeSizes) {
  EXPECT_THROW(QubitEmbedding(0), std::invalid_argument);
  EXPECT_THROW(QubitEmbedding(4), std::invalid_argument);
  EXPECT_THROW(QubitEmbedding(1, 1), std::invalid_argument);
}

TEST(DeformedQubit, AmplitudeIsRootOfFirstBracket) {
  std::array<double, 12> psi{};
  psi.fill(1.0);
  psi[0] = 2.0;  // psi_1
  psi[3] = 0.5;  // psi_4
  const DeformationParams params(2.0, psi);
  const auto deformation = KetDeformation::general(params);
  // (2 * 2 - 1 / 2) / 1.5 and (2 * 1 - 0.5 / 2) / 1.5
  const double one = std::sqrt((2.0 * 2.0 - 0.5) / 1.5);
  const double zero = std::sqrt((2.0 - 0.25) / 1.5);
  const auto s1 = deformed_qubit_state({{1}, deformation});
  const auto s0 = deformed_qubit_state({{0}, deformation});
  EXPECT_NEAR(s1.amplitude({1, 0}).real(), one, 1e-14);
  EXPECT_NEAR(s0.amplitude({0, 1}).real(), zero, 1e-14);
  EXPECT_NEAR(s1.norm(), one, 1e-14);
  EXPECT_NEAR(deformed_qubit_amplitude(deformation, 1, 1), one, 1e-14);
}

TEST(DeformedQubit, UnitPsiQubitsAreUndeformed) {
  for (double q : {0.5, 2.0}) {
    const auto deformation = KetDeformation::general(DeformationParams(q));
    for (const auto& bits : QubitEmbedding(3).basis()) {
      const auto state = deformed_qubit_state({bits, deformation});
      EXPECT_LT(max_norm(Vector(state.amplitudes() - encode_basis(bits).amplitudes())), 1e-15);
    }
  }
}

TEST(DeformedQubit, FixedRuleEigenvalueOfResultGivesUnitNorm) {
  for (double q : {0.3, 0.5, 2.0, 7.0}) {
    const auto deformation = KetDeformation::fixed(q, ExponentConvention::EigenvalueOfResult);
    for (const auto& bits : QubitEmbedding(3).basis()) {
      EXPECT_NEAR(deformed_qubit_state({bits, deformation}).norm(), 1.0, 1e-14);
    }
  }
}

TEST(DeformedQubit, FixedRuleEigenvalueOfVacuumScalesExcitedQubit) {
  const double q = 2.0;
  const auto deformation = KetDeformation::fixed(q, ExponentConvention::EigenvalueOfVacuum);
  EXPECT_NEAR(deformed_qubit_state({{1}, deformation}).norm(), std::sqrt(q), 1e-14);
  EXPECT_NEAR(deformed_qubit_state({{0}, deformation}).norm(), 1.0, 1e-14);
  EXPECT_NEAR(deformed_qubit_state({{1, 1}, deformation}).norm(), q, 1e-14);
}

TEST(DeformedQubit, NegativeRadicandPropagates) {
  const auto params = DeformationParams(2.0).with_pair(1, {0.5, 4.0});
  EXPECT_THROW(deformed_qubit_state({{1}, KetDeformation::general(params)}), NegativeRadicand);
  EXPECT_NO_THROW(deformed_qubit_state({{0}, KetDeformation::general(params)}));
}

TEST(DeformedQubit, LargerCutoffMatchesTwo) {
  const auto deformation = KetDeformation::general(DeformationParams(1.5).with_pair(3, {2.0, 1.0}));
  const auto small = deformed_qubit_state({{1, 1}, deformation, OperatorConvention::MatrixElement, 2});
  const auto big = deformed_qubit_state({{1, 1}, deformation, OperatorConvention::MatrixElement, 3});
  EXPECT_NEAR(small.amplitude({1, 0, 1, 0}).real(), big.amplitude({1, 0, 1, 0}).real(), 1e-15);
}

TEST(ExponentNames, RoundTrip) {
  for (auto c : {ExponentConvention::EigenvalueOfResult, ExponentConvention::EigenvalueOfVacuum}) {
    EXPECT_EQ(parse_exponent_convention(to_string(c)), c);
  }
  EXPECT_THROW(parse_exponent_convention("x"), std::invalid_argument);
}

TEST(JmState, HalfSpinMatchesQubitEncoding) {
  const auto up = jm_state(HalfInteger::from_twice(1), HalfInteger::from_twice(1), 2);
  const auto down = jm_state(HalfInteger::from_twice(1), HalfInteger::from_twice(-1), 2);
  EXPECT_EQ(up.amplitudes(), encode_basis({1}).amplitudes());
  EXPECT_EQ(down.amplitudes(), encode_basis({0}).amplitudes());
}

TEST(JmState, NormalizedForHigherSpin) {
  for (int twice_j = 0; twice_j <= 6; ++twice_j) {
    for (int twice_m = -twice_j; twice_m <= twice_j; twice_m += 2) {
      const auto s = jm_state(HalfInteger::from_twice(twice_j), HalfInteger::from_twice(twice_m), 7);
      EXPECT_NEAR(s.norm(), 1.0, 1e-14);
      EXPECT_NEAR(std::abs(s.amplitude({(twice_j + twice_m) / 2, (twice_j - twice_m) / 2})), 1.0, 1e-14);
    }
  }
}

TEST(JmState, RejectsBadQuantumNumbers) {
  EXPECT_THROW(jm_state(HalfInteger::from_int(2), HalfInteger::from_int(0), 2), std::out_of_range);
  EXPECT_THROW(jm_state(HalfInteger::from_int(1), HalfInteger::from_int(2), 4), std::invalid_argument);
  EXPECT_THROW(jm_state(HalfInteger::from_int(1), HalfInteger::from_twice(1), 4), std::invalid_argument);
}

TEST(DeformedQubit, CollinearWithUndeformedEncoding) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> psi(0.3, 3.0);
  std::uniform_real_distribution<double> log_q(-1.0, 1.0);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::array<double, 12> values{};
    for (auto& v : values) v = psi(rng);
    const DeformationParams params(std::exp(log_q(rng)), values);
    const BitString bits{static_cast<int>(rng() % 2), static_cast<int>(rng() % 2), static_cast<int>(rng() % 2)};
    try {
      const Vector s = deformed_qubit_state({bits, KetDeformation::general(params)}).amplitudes();
      const Vector e = encode_basis(bits).amplitudes();
      const Complex c = e.dot(s);
      EXPECT_LT(max_norm(Vector(s - c * e)), 1e-14);
      ++checked;
    } catch (const NegativeRadicand&) {
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(DeformedQubit, NormSquaredIsPsiForEqualPairs) {
  for (double q : {0.5, 1.0, 1.7, 3.0}) {
    for (double psi : {0.5, 1.0, 2.5}) {
      const auto params = DeformationParams(q).with_pair(1, {psi, psi}).with_pair(2, {2 * psi, 2 * psi});
      const auto deformation = KetDeformation::general(params);
      EXPECT_NEAR(std::pow(deformed_qubit_state({{1}, deformation}).norm(), 2), psi, 1e-13);
      EXPECT_NEAR(std::pow(deformed_qubit_state({{0}, deformation}).norm(), 2), 2 * psi, 1e-13);
    }
  }
}
