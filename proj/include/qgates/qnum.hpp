#pragma once

#include <array>
#include <cmath>

namespace qgates {

/// A (psi_a, psi_b) pair attached to one oscillator mode.
struct PsiPair {
  double a = 1.0;
  double b = 1.0;

  bool operator==(const PsiPair&) const = default;
};

/// Deformation parameter q together with the twelve psi values of up to six
/// modes (three qubits). Mode k owns psi_{2k-1} and psi_{2k}.
class DeformationParams {
 public:
  static constexpr int kModes = 6;
  static constexpr int kPsiCount = 2 * kModes;

  /// All psi set to 1.
  explicit DeformationParams(double q);
  DeformationParams(double q, const std::array<double, kPsiCount>& psi);

  double q() const { return q_; }
  /// s = ln q, recomputed on every call.
  double s() const { return std::log(q_); }

  /// 1-based psi index.
  double psi(int index) const;
  /// 1-based mode index.
  PsiPair pair(int mode) const;

  DeformationParams with_psi(int index, double value) const;
  DeformationParams with_pair(int mode, PsiPair pair) const;

  const std::array<double, kPsiCount>& psi_values() const { return psi_; }

 private:
  double q_;
  std::array<double, kPsiCount> psi_;
};

/// [n]_q = (q^n - q^-n) / (q - q^-1); exactly n at q = 1.
double q_bracket(int n, double q);

/// (q^n psi_a - q^-n psi_b) / (q - q^-1). At q = 1 only psi_a == psi_b is
/// accepted, where the value is the limit psi_a * n.
double psi_bracket(int n, double q, double psi_a, double psi_b);

inline double psi_bracket(int n, double q, PsiPair psi) { return psi_bracket(n, q, psi.a, psi.b); }

/// [n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1.
double q_factorial(int n, double q);

}  // namespace qgates
