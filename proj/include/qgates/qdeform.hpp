#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>

#include "qgates/fock.hpp"
#include "qgates/qnum.hpp"

namespace qgates {

/// How the deformed ladder operators are realized on the Fock basis.
///
/// MatrixElement sets a_q|n> = sqrt(psi_bracket(n)) |n-1> and
/// a_q^dag|n> = sqrt(psi_bracket(n+1)) |n+1>. LeftScaling multiplies the
/// undeformed operators from the left by f(N) = sqrt(psi_bracket(N) / N);
/// f is singular at N = 0 and that entry is set to zero.
enum class OperatorConvention { MatrixElement, LeftScaling };

std::string_view to_string(OperatorConvention convention);
OperatorConvention parse_operator_convention(std::string_view name);

/// A square root of a negative psi bracket was requested at level n.
class NegativeRadicand : public std::domain_error {
 public:
  NegativeRadicand(int level, double value);
  int level() const { return level_; }
  double value() const { return value_; }

 private:
  int level_;
  double value_;
};

struct DeformedModeOperators {
  ModeOperators base;
  double q = 1.0;
  PsiPair psi;
  OperatorConvention convention = OperatorConvention::MatrixElement;
  Matrix a_q;
  Matrix a_q_dag;
  /// N - (ln psi_b / ln q) I; absent when q = 1 or psi_b <= 0.
  std::optional<Matrix> number_q;
};

/// psi_bracket(n) checked for use under a square root: values that are zero
/// up to rounding come back as 0, genuinely negative ones throw
/// NegativeRadicand.
double psi_radicand(int n, double q, PsiPair psi);

/// Throws NegativeRadicand if psi_bracket(n) < 0 for some 1 <= n <= d-1.
DeformedModeOperators make_deformed_ops(const ModeOperators& mode, double q, PsiPair psi,
                                        OperatorConvention convention = OperatorConvention::MatrixElement);

/// N - (ln psi_b / ln q) I. Rejects psi_b <= 0 and q = 1.
Matrix deformed_number_op(const DeformedModeOperators& ops);

/// Max-norm residuals of the deformed algebra, each restricted to the
/// truncation-safe block n <= d-2.
struct AlgebraResiduals {
  /// a_q a_q^dag - q a_q^dag a_q - psi_b q^-N
  double q_commutation = 0.0;
  /// Same as q_commutation but skipping the vacuum row/column (1 <= n <= d-2).
  double q_commutation_excited = 0.0;
  /// [a_q, N] - a_q
  double lowering_commutator = 0.0;
  /// [a_q^dag, N] + a_q^dag
  double raising_commutator = 0.0;
  /// a_q^dag a_q - diag(psi_bracket(n))
  double lowering_product = 0.0;
  /// a_q a_q^dag - diag(psi_bracket(n+1))
  double raising_product = 0.0;
  /// Number of basis levels the residuals were evaluated on.
  int sub_basis_dim = 0;
  OperatorConvention convention = OperatorConvention::MatrixElement;

  double max() const;
};

AlgebraResiduals algebra_residuals(const DeformedModeOperators& ops);

/// Top-left (d-1) x (d-1) block: the levels where no identity is broken by
/// truncation.
Matrix truncation_safe_block(const Matrix& m);

}  // namespace qgates
