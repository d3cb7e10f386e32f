#include "qgates/qdeform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace qgates {

namespace {

Matrix diagonal(const Eigen::VectorXd& entries) {
  return entries.cast<Complex>().asDiagonal();
}

}  // namespace

double psi_radicand(int n, double q, PsiPair psi) {
  const double value = psi_bracket(n, q, psi);
  if (value >= 0.0) return value;
  double scale = std::abs(psi.a) * n + std::abs(psi.b) * n;
  if (q != 1.0) {
    scale = (std::pow(q, n) * std::abs(psi.a) + std::pow(q, -n) * std::abs(psi.b)) /
            std::abs(q - 1.0 / q);
  }
  if (value > -16.0 * std::numeric_limits<double>::epsilon() * scale) return 0.0;
  throw NegativeRadicand(n, value);
}

std::string_view to_string(OperatorConvention convention) {
  switch (convention) {
    case OperatorConvention::MatrixElement: return "matrix-element";
    case OperatorConvention::LeftScaling: return "left-scaling";
  }
  return "unknown";
}

OperatorConvention parse_operator_convention(std::string_view name) {
  if (name == "matrix-element") return OperatorConvention::MatrixElement;
  if (name == "left-scaling") return OperatorConvention::LeftScaling;
  throw std::invalid_argument("unknown operator convention '" + std::string(name) + "'");
}

NegativeRadicand::NegativeRadicand(int level, double value)
    : std::domain_error("negative psi bracket " + std::to_string(value) + " at level " +
                        std::to_string(level) + ": inadmissible psi for this q"),
      level_(level),
      value_(value) {}

DeformedModeOperators make_deformed_ops(const ModeOperators& mode, double q, PsiPair psi,
                                        OperatorConvention convention) {
  const int d = mode.cutoff;
  Eigen::VectorXd radicand = Eigen::VectorXd::Zero(d);
  for (int n = 1; n < d; ++n) radicand(n) = psi_radicand(n, q, psi);

  DeformedModeOperators ops;
  ops.base = mode;
  ops.q = q;
  ops.psi = psi;
  ops.convention = convention;

  switch (convention) {
    case OperatorConvention::MatrixElement: {
      ops.a_q = Matrix::Zero(d, d);
      for (int n = 1; n < d; ++n) ops.a_q(n - 1, n) = std::sqrt(radicand(n));
      ops.a_q_dag = ops.a_q.adjoint();
      break;
    }
    case OperatorConvention::LeftScaling: {
      Eigen::VectorXd f = Eigen::VectorXd::Zero(d);
      for (int n = 1; n < d; ++n) f(n) = std::sqrt(radicand(n) / n);
      const Matrix scale = diagonal(f);
      ops.a_q = scale * mode.a;
      ops.a_q_dag = scale * mode.a_dag;
      break;
    }
  }

  if (q != 1.0 && psi.b > 0.0) ops.number_q = deformed_number_op(ops);
  return ops;
}

Matrix deformed_number_op(const DeformedModeOperators& ops) {
  if (!(ops.psi.b > 0.0)) {
    throw std::domain_error("deformed number operator needs psi_b > 0 for the logarithm");
  }
  if (ops.q == 1.0) throw std::domain_error("deformed number operator undefined at q = 1 (s = 0)");
  const double shift = std::log(ops.psi.b) / std::log(ops.q);
  const auto d = ops.base.cutoff;
  return ops.base.number - Matrix::Identity(d, d) * shift;
}

Matrix truncation_safe_block(const Matrix& m) {
  const auto n = std::max<Eigen::Index>(0, m.rows() - 1);
  return m.topLeftCorner(n, n);
}

double AlgebraResiduals::max() const {
  return std::max({q_commutation, lowering_commutator, raising_commutator, lowering_product,
                   raising_product});
}

AlgebraResiduals algebra_residuals(const DeformedModeOperators& ops) {
  const int d = ops.base.cutoff;
  const Matrix& n_op = ops.base.number;
  const Matrix& a = ops.a_q;
  const Matrix& ad = ops.a_q_dag;

  Eigen::VectorXd q_power(d);
  Eigen::VectorXd lower(d);
  Eigen::VectorXd raise(d);
  for (int n = 0; n < d; ++n) {
    q_power(n) = std::pow(ops.q, -n);
    lower(n) = psi_bracket(n, ops.q, ops.psi);
    raise(n) = psi_bracket(n + 1, ops.q, ops.psi);
  }

  const Matrix q_comm = a * ad - ops.q * (ad * a) - ops.psi.b * diagonal(q_power);
  const Matrix safe_q_comm = truncation_safe_block(q_comm);

  AlgebraResiduals r;
  r.convention = ops.convention;
  r.sub_basis_dim = d - 1;
  r.q_commutation = max_norm(safe_q_comm);
  r.q_commutation_excited =
      d > 2 ? max_norm(Matrix(safe_q_comm.bottomRightCorner(d - 2, d - 2))) : 0.0;
  r.lowering_commutator = max_norm(truncation_safe_block(a * n_op - n_op * a - a));
  r.raising_commutator = max_norm(truncation_safe_block(ad * n_op - n_op * ad + ad));
  r.lowering_product = max_norm(truncation_safe_block(ad * a - diagonal(lower)));
  r.raising_product = max_norm(truncation_safe_block(a * ad - diagonal(raise)));
  return r;
}

}  // namespace qgates
