#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qgates/qnum.hpp"

using namespace qgates;

namespace {

// Independent oracle: the bracket exactly as a ratio of powers.
double literal_psi_bracket(int n, double q, double a, double b) {
  return (std::pow(q, n) * a - std::pow(q, -n) * b) / (q - 1.0 / q);
}

double literal_bracket(int n, double q) { return literal_psi_bracket(n, q, 1.0, 1.0); }

}  // namespace

TEST(QBracket, Examples) {
  EXPECT_EQ(q_bracket(0, 2.0), 0.0);
  EXPECT_EQ(q_bracket(3, 1.0), 3.0);
  // (q^2 - q^-2) / (q - q^-1) = q + q^-1
  EXPECT_NEAR(q_bracket(2, 2.0), 2.5, 1e-15);
  EXPECT_NEAR(q_bracket(2, 2.0), literal_bracket(2, 2.0), 1e-15);
}

TEST(QBracket, MatchesLiteralRatioAwayFromOne) {
  for (double q : {0.3, 0.5, 0.9, 1.1, 2.0, 3.7}) {
    for (int n = 0; n <= 10; ++n) {
      const double expected = literal_bracket(n, q);
      EXPECT_NEAR(q_bracket(n, q), expected, 1e-13 * std::max(1.0, std::abs(expected))) << n << " " << q;
    }
  }
}

TEST(QBracket, RejectsInvalidArguments) {
  EXPECT_THROW(q_bracket(-1, 2.0), std::invalid_argument);
  EXPECT_THROW(q_bracket(1, 0.0), std::invalid_argument);
  EXPECT_THROW(q_bracket(1, -2.0), std::invalid_argument);
  EXPECT_THROW(q_bracket(1, std::nan("")), std::invalid_argument);
}

TEST(QBracket, SymmetricUnderInversion) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> log_q(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double q = std::exp(log_q(rng));
    const int n = static_cast<int>(rng() % 12);
    const double a = q_bracket(n, q);
    EXPECT_NEAR(a, q_bracket(n, 1.0 / q), 1e-12 * std::max(1.0, a));
  }
}

TEST(QBracket, ClassicalLimitErrorShrinks) {
  for (int n = 2; n <= 7; ++n) {
    const double coarse = std::abs(q_bracket(n, 1.0 + 1e-3) - n);
    const double fine = std::abs(q_bracket(n, 1.0 + 1e-6) - n);
    ASSERT_GT(coarse, 0.0);
    EXPECT_GE(coarse / fine, 1e2 * 0.9) << n;
  }
}

TEST(QBracket, ScalarShadowOfQCommutation) {
  for (double q : {0.25, 0.5, 0.9, 1.0, 1.1, 2.0, 5.0}) {
    for (int n = 1; n <= 10; ++n) {
      const double lhs = q_bracket(n + 1, q) - q * q_bracket(n, q);
      EXPECT_NEAR(lhs, std::pow(q, -n), 1e-12 * std::max(1.0, q_bracket(n + 1, q))) << n << " " << q;
    }
  }
}

TEST(PsiBracket, Examples) {
  EXPECT_EQ(psi_bracket(1, 2.0, 1.0, 1.0), 1.0);
  for (double psi : {0.5, 2.0}) {
    const double expected = psi * (2.0 - 0.5) / (2.0 - 0.5);
    EXPECT_NEAR(psi_bracket(1, 2.0, psi, psi), expected, 1e-15);
  }
  // (4 * 1 - 0.25 * 4) / 1.5
  const double oracle = literal_psi_bracket(2, 2.0, 1.0, 4.0);
  EXPECT_DOUBLE_EQ(oracle, 2.0);
  EXPECT_NEAR(psi_bracket(2, 2.0, 1.0, 4.0), oracle, 1e-14);
}

TEST(PsiBracket, ReducesToQBracketExactly) {
  for (double q : {0.2, 0.7, 1.0, 1.3, 2.0, 9.0}) {
    for (int n = 0; n <= 12; ++n) EXPECT_EQ(psi_bracket(n, q, 1.0, 1.0), q_bracket(n, q));
  }
}

TEST(PsiBracket, MatchesLiteralFormula) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> log_q(-1.5, 1.5);
  std::uniform_real_distribution<double> psi(0.1, 5.0);
  for (int trial = 0; trial < 500; ++trial) {
    double q = std::exp(log_q(rng));
    if (std::abs(q - 1.0) < 1e-3) q = 1.5;
    const double a = psi(rng);
    const double b = psi(rng);
    const int n = static_cast<int>(rng() % 9);
    const double expected = literal_psi_bracket(n, q, a, b);
    const double scale = (std::pow(q, n) * a + std::pow(q, -n) * b) / std::abs(q - 1.0 / q);
    EXPECT_NEAR(psi_bracket(n, q, a, b), expected, 1e-13 * scale);
  }
}

TEST(PsiBracket, GeneralizedShadowIdentity) {
  for (auto [q, b] : {std::pair{2.0, 1.0}, {2.0, 3.0}, {0.5, 0.7}}) {
    for (int n = 0; n <= 6; ++n) {
      const double lhs = literal_psi_bracket(n + 1, q, 1.0, b) - q * literal_psi_bracket(n, q, 1.0, b);
      EXPECT_NEAR(lhs, b * std::pow(q, -n), 1e-12);
      const double implemented = psi_bracket(n + 1, q, 1.0, b) - q * psi_bracket(n, q, 1.0, b);
      EXPECT_NEAR(implemented, b * std::pow(q, -n), 1e-12);
    }
  }
}

TEST(PsiBracket, ClassicalLimitOnlyForEqualPsi) {
  EXPECT_THROW(psi_bracket(2, 1.0, 1.0, 2.0), std::domain_error);
  EXPECT_EQ(psi_bracket(3, 1.0, 2.0, 2.0), 6.0);
}

TEST(PsiBracket, InversionSwapsThePair) {
  for (double q : {0.5, 2.0, 3.0}) {
    for (int n = 0; n <= 6; ++n) {
      EXPECT_NEAR(psi_bracket(n, 1.0 / q, 1.5, 0.5), psi_bracket(n, q, 0.5, 1.5), 1e-12 * std::pow(q, n));
    }
  }
}

TEST(QFactorial, Examples) {
  EXPECT_EQ(q_factorial(0, 3.0), 1.0);
  EXPECT_EQ(q_factorial(1, 3.0), 1.0);
  const double oracle = literal_bracket(1, 2.0) * literal_bracket(2, 2.0) * literal_bracket(3, 2.0);
  EXPECT_NEAR(oracle, 13.125, 1e-13);
  EXPECT_NEAR(q_factorial(3, 2.0), oracle, 1e-13);
}

TEST(QFactorial, ClassicalLimitIsFactorial) {
  EXPECT_EQ(q_factorial(5, 1.0), 120.0);
  EXPECT_THROW(q_factorial(2, 0.0), std::invalid_argument);
}

TEST(DeformationParams, ModePairMapping) {
  std::array<double, 12> psi{};
  for (int i = 0; i < 12; ++i) psi[static_cast<std::size_t>(i)] = i + 1;
  const DeformationParams params(2.0, psi);
  for (int mode = 1; mode <= 6; ++mode) {
    EXPECT_EQ(params.pair(mode).a, 2 * mode - 1);
    EXPECT_EQ(params.pair(mode).b, 2 * mode);
  }
  EXPECT_EQ(params.s(), std::log(2.0));
  EXPECT_THROW(params.pair(7), std::out_of_range);
  EXPECT_THROW(params.psi(0), std::out_of_range);
  EXPECT_THROW(DeformationParams(0.0), std::invalid_argument);
  EXPECT_EQ(params.with_pair(2, {9.0, 8.0}).psi(4), 8.0);
}
