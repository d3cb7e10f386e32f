#include "qgates/qnum.hpp"

#include <stdexcept>
#include <string>

namespace qgates {

namespace {

void require_valid_q(double q) {
  if (!(q > 0.0) || !std::isfinite(q)) {
    throw std::invalid_argument("deformation parameter q must be positive and finite, got " +
                                std::to_string(q));
  }
}

void require_valid_level(int n) {
  if (n < 0) throw std::invalid_argument("occupation number must be nonnegative");
}

}  // namespace

DeformationParams::DeformationParams(double q) : q_(q) {
  require_valid_q(q);
  psi_.fill(1.0);
}

DeformationParams::DeformationParams(double q, const std::array<double, kPsiCount>& psi)
    : q_(q), psi_(psi) {
  require_valid_q(q);
  for (double v : psi_) {
    if (!std::isfinite(v)) throw std::invalid_argument("psi values must be finite");
  }
}

double DeformationParams::psi(int index) const {
  if (index < 1 || index > kPsiCount) {
    throw std::out_of_range("psi index " + std::to_string(index) + " outside 1..12");
  }
  return psi_[static_cast<std::size_t>(index - 1)];
}

PsiPair DeformationParams::pair(int mode) const {
  if (mode < 1 || mode > kModes) {
    throw std::out_of_range("mode index " + std::to_string(mode) + " outside 1..6");
  }
  return {psi(2 * mode - 1), psi(2 * mode)};
}

DeformationParams DeformationParams::with_psi(int index, double value) const {
  (void)psi(index);
  auto values = psi_;
  values[static_cast<std::size_t>(index - 1)] = value;
  return DeformationParams(q_, values);
}

DeformationParams DeformationParams::with_pair(int mode, PsiPair p) const {
  (void)pair(mode);
  return with_psi(2 * mode - 1, p.a).with_psi(2 * mode, p.b);
}

// Evaluated as sinh(n s) / sinh(s), which is the same ratio without the
// cancellation in q^n - q^-n near q = 1.
double q_bracket(int n, double q) {
  require_valid_level(n);
  require_valid_q(q);
  if (q == 1.0) return static_cast<double>(n);
  const double s = std::log(q);
  return std::sinh(n * s) / std::sinh(s);
}

// q^n a - q^-n b = (a+b)/2 (q^n - q^-n) + (a-b)/2 (q^n + q^-n), so the
// bracket splits into a symmetric part times [n]_q and an antisymmetric part.
double psi_bracket(int n, double q, double psi_a, double psi_b) {
  require_valid_level(n);
  require_valid_q(q);
  if (q == 1.0) {
    if (psi_a != psi_b) {
      throw std::domain_error("psi bracket has no q = 1 limit when psi_a != psi_b");
    }
    return psi_a * n;
  }
  const double mean = 0.5 * (psi_a + psi_b);
  const double half_diff = 0.5 * (psi_a - psi_b);
  const double bracket = q_bracket(n, q);
  if (half_diff == 0.0) return mean * bracket;
  const double s = std::log(q);
  return mean * bracket + half_diff * std::cosh(n * s) / std::sinh(s);
}

double q_factorial(int n, double q) {
  require_valid_level(n);
  require_valid_q(q);
  double result = 1.0;
  for (int k = 1; k <= n; ++k) result *= q_bracket(k, q);
  return result;
}

}  // namespace qgates
