#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qgates/gates.hpp"
#include "qgates/qdeform.hpp"
#include "qgates/qnum.hpp"
#include "qgates/schwinger.hpp"

namespace qgates {

/// psi_lhs = psi_rhs (1-based psi indices).
struct PsiEquality {
  int lhs = 0;
  int rhs = 0;

  bool operator==(const PsiEquality&) const = default;
};

using EqualityPattern = std::vector<PsiEquality>;

std::string to_string(const EqualityPattern& pattern);

/// The published restriction for one gate: either "no restriction", or the
/// `claimed` equalities under the auxiliary `assumptions`.
struct ConstraintClaim {
  GateKind gate = GateKind::Not;
  bool no_restriction = false;
  EqualityPattern claimed;
  EqualityPattern assumptions;
  /// psi indices swept by the lab for this gate; all others are held at 1.
  std::vector<int> relevant;
  std::string statement;
};

ConstraintClaim published_claim(GateKind gate);

struct LabConventions {
  OperatorConvention convention = OperatorConvention::MatrixElement;
  ExponentConvention exponent = ExponentConvention::EigenvalueOfResult;
};

struct IdentityResidual {
  /// max over inputs of |LHS - RHS|_inf
  double strict = 0.0;
  /// max over inputs of the part of LHS outside span(RHS); 0 when RHS = 0
  double collinear = 0.0;
};

/// Applies the undeformed gate to each deformed input ket (LHS) and compares
/// with the deformed-ket combination of the gate's action (RHS). Output kets
/// carry the psi parameters of the qubit slot their value came from, so a
/// permuting gate moves whole deformed kets. Propagates NegativeRadicand.
IdentityResidual identity_residual(const GateSpec& gate, const DeformationParams& params,
                                   const LabConventions& conventions = {});

/// ((1-n1) q^-n1 - n1 q^(n1+1)) / ((1-n1) q^n1 - n1 q^(n1-1)) evaluated as
/// written, n1 in {0, 1}.
double hadamard_ratio(int n1, double q);

enum class Verdict { Confirmed, Refuted, ConventionDependent };
std::string_view to_string(Verdict verdict);

struct DiscoveryOptions {
  std::vector<double> grid{0.5, 1.0, 2.0, 4.0};
  double threshold = 1e-12;
  int max_pattern_size = 2;
};

struct ConstraintSample {
  /// Values of the claim's relevant psi indices, in order.
  std::vector<double> values;
  bool admissible = true;
  double strict = 0.0;
  double collinear = 0.0;
};

struct ClaimAssessment {
  Verdict verdict = Verdict::Refuted;
  /// The claimed equalities make the identity hold on every tested point.
  bool sufficient = false;
  /// The identity fails on every tested point violating the claim.
  bool necessary = false;
  std::size_t supporting_samples = 0;
  double max_supporting_residual = 0.0;
  /// Smallest equality patterns under which the residual vanishes; empty
  /// when none exists up to DiscoveryOptions::max_pattern_size.
  std::vector<EqualityPattern> minimal_patterns;
};

struct ConstraintReport {
  GateSpec gate;
  double q = 1.0;
  LabConventions conventions;
  DiscoveryOptions options;
  ConstraintClaim claim;
  std::vector<ConstraintSample> samples;
  std::size_t skipped = 0;
  ClaimAssessment strict;
  ClaimAssessment collinear;
  Verdict verdict = Verdict::Refuted;

  std::string summary() const;
};

/// Sweeps every combination of grid values over the claim's relevant psi
/// indices, evaluates identity_residual, and judges the published claim.
/// Inadmissible points are counted in `skipped`.
ConstraintReport discover_constraints(const GateSpec& gate, double q,
                                      const LabConventions& conventions = {},
                                      const DiscoveryOptions& options = {});

}  // namespace qgates
