#include "qgates/constraints.hpp"

#include <Eigen/SparseCore>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qgates {

namespace {

using SparseMatrix = Eigen::SparseMatrix<Complex>;

// Slot whose value (and psi parameters) ends up in each output slot.
std::vector<int> carried_sources(GateKind kind, const BitString& in) {
  switch (kind) {
    case GateKind::Swap: return {2, 1};
    case GateKind::Fredkin: return in[0] == 1 ? std::vector<int>{1, 3, 2} : std::vector<int>{1, 2, 3};
    default: break;
  }
  std::vector<int> identity(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) identity[i] = static_cast<int>(i) + 1;
  return identity;
}

DeformationParams carried_params(const DeformationParams& params, const std::vector<int>& sources) {
  DeformationParams out = params;
  for (std::size_t slot = 0; slot < sources.size(); ++slot) {
    const int from = sources[slot];
    for (int j = 1; j <= 4; ++j) {
      out = out.with_psi(4 * static_cast<int>(slot) + j, params.psi(4 * (from - 1) + j));
    }
  }
  return out;
}

// Holds the gate matrix so a sweep does not rebuild it per sample.
class IdentityEvaluator {
 public:
  IdentityEvaluator(const GateSpec& gate, const LabConventions& conventions)
      : gate_(gate),
        conventions_(conventions),
        embedding_(gate.arity(), 2),
        matrix_(gate_matrix(gate, embedding_).sparseView()) {}

  IdentityResidual operator()(const DeformationParams& params) const {
    IdentityResidual result;
    for (const auto& in : embedding_.basis()) {
      const Vector lhs = matrix_ * ket(in, params);
      Vector rhs = Vector::Zero(lhs.size());
      for (const auto& term : gate_action(gate_, in)) {
        const auto moved = carried_params(params, carried_sources(gate_.kind(), in));
        rhs += term.coefficient * ket(term.bits, moved);
      }
      result.strict = std::max(result.strict, max_norm(Vector(lhs - rhs)));
      result.collinear = std::max(result.collinear, non_collinear_part(lhs, rhs));
    }
    return result;
  }

 private:
  Vector ket(const BitString& bits, const DeformationParams& params) const {
    const DeformedQubitSpec spec{bits, KetDeformation::general(params), conventions_.convention, 2};
    return deformed_qubit_state(spec).amplitudes();
  }

  // A zero vector is linearly dependent on anything.
  static double non_collinear_part(const Vector& lhs, const Vector& rhs) {
    const double rr = rhs.squaredNorm();
    if (rr == 0.0) return 0.0;
    const Complex c = rhs.dot(lhs) / rr;
    return max_norm(Vector(lhs - c * rhs));
  }

  GateSpec gate_;
  LabConventions conventions_;
  QubitEmbedding embedding_;
  SparseMatrix matrix_;
};

bool satisfies(const ConstraintSample& sample, const std::vector<int>& relevant,
               const EqualityPattern& pattern) {
  auto value_of = [&](int index) {
    const auto it = std::find(relevant.begin(), relevant.end(), index);
    return it == relevant.end() ? 1.0 : sample.values[static_cast<std::size_t>(it - relevant.begin())];
  };
  return std::all_of(pattern.begin(), pattern.end(),
                     [&](const PsiEquality& e) { return value_of(e.lhs) == value_of(e.rhs); });
}

// Unordered pairs of pairwise equalities, size <= max_size, in a fixed order.
std::vector<EqualityPattern> candidate_patterns(const std::vector<int>& relevant, int size) {
  std::vector<PsiEquality> pairs;
  for (std::size_t i = 0; i < relevant.size(); ++i) {
    for (std::size_t j = i + 1; j < relevant.size(); ++j) pairs.push_back({relevant[i], relevant[j]});
  }
  std::vector<EqualityPattern> out;
  std::vector<std::size_t> pick;
  auto recurse = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<int>(pick.size()) == size) {
      EqualityPattern p;
      for (auto k : pick) p.push_back(pairs[k]);
      out.push_back(std::move(p));
      return;
    }
    for (std::size_t k = start; k < pairs.size(); ++k) {
      pick.push_back(k);
      self(self, k + 1);
      pick.pop_back();
    }
  };
  recurse(recurse, 0);
  return out;
}

template <typename Residual>
std::vector<EqualityPattern> minimal_patterns(const std::vector<ConstraintSample>& samples,
                                              const std::vector<int>& relevant, double threshold,
                                              int max_size, Residual residual) {
  for (int size = 0; size <= max_size; ++size) {
    std::vector<EqualityPattern> found;
    for (auto& pattern : candidate_patterns(relevant, size)) {
      bool any = false;
      bool holds = true;
      for (const auto& s : samples) {
        if (!s.admissible || !satisfies(s, relevant, pattern)) continue;
        any = true;
        if (residual(s) > threshold) {
          holds = false;
          break;
        }
      }
      if (any && holds) found.push_back(std::move(pattern));
    }
    if (!found.empty()) return found;
  }
  return {};
}

template <typename Residual>
ClaimAssessment assess(const ConstraintClaim& claim, const std::vector<ConstraintSample>& samples,
                       const DiscoveryOptions& options, Residual residual) {
  ClaimAssessment a;
  a.sufficient = true;
  a.necessary = true;
  for (const auto& s : samples) {
    if (!s.admissible || !satisfies(s, claim.relevant, claim.assumptions)) continue;
    const double r = residual(s);
    if (claim.no_restriction || satisfies(s, claim.relevant, claim.claimed)) {
      ++a.supporting_samples;
      a.max_supporting_residual = std::max(a.max_supporting_residual, r);
      if (r > options.threshold) a.sufficient = false;
    } else {
      if (r <= options.threshold) a.necessary = false;
    }
  }
  if (a.supporting_samples == 0) a.sufficient = false;
  a.verdict = a.sufficient && a.necessary ? Verdict::Confirmed : Verdict::Refuted;
  a.minimal_patterns =
      minimal_patterns(samples, claim.relevant, options.threshold, options.max_pattern_size, residual);
  return a;
}

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

std::string to_string(const EqualityPattern& pattern) {
  if (pattern.empty()) return "{}";
  std::string out = "{";
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (i) out += ", ";
    out += "psi" + std::to_string(pattern[i].lhs) + "=psi" + std::to_string(pattern[i].rhs);
  }
  return out + "}";
}

ConstraintClaim published_claim(GateKind gate) {
  ConstraintClaim c;
  c.gate = gate;
  switch (gate) {
    case GateKind::PhaseShift:
      c.no_restriction = true;
      c.relevant = {1, 2, 3, 4};
      c.statement = "no restriction on psi1, psi2";
      break;
    case GateKind::Hadamard:
    case GateKind::Not:
      c.claimed = {{1, 2}};
      c.assumptions = {{1, 3}, {2, 4}};
      c.relevant = {1, 2, 3, 4};
      c.statement = "psi1=psi2 assuming psi1=psi3, psi2=psi4";
      break;
    case GateKind::CNot:
      c.claimed = {{5, 6}};
      c.assumptions = {{5, 7}, {6, 8}};
      c.relevant = {5, 6, 7, 8};
      c.statement = "psi5=psi6 assuming psi5=psi7, psi6=psi8";
      break;
    case GateKind::Swap:
      c.no_restriction = true;
      c.relevant = {1, 2, 3, 4, 5, 6, 7, 8};
      c.statement = "no restriction on psi1..psi8";
      break;
    case GateKind::Fredkin:
      c.no_restriction = true;
      c.relevant = {5, 6, 7, 8, 9, 10, 11, 12};
      c.statement = "no restriction on psi1..psi12";
      break;
    case GateKind::Toffoli:
      c.claimed = {{9, 10}};
      c.assumptions = {{9, 11}, {10, 12}};
      c.relevant = {9, 10, 11, 12};
      c.statement = "psi9=psi10 assuming psi9=psi11, psi10=psi12";
      break;
  }
  return c;
}

IdentityResidual identity_residual(const GateSpec& gate, const DeformationParams& params,
                                   const LabConventions& conventions) {
  return IdentityEvaluator(gate, conventions)(params);
}

double hadamard_ratio(int n1, double q) {
  if (n1 != 0 && n1 != 1) throw std::invalid_argument("n1 must be 0 or 1");
  if (!(q > 0.0)) throw std::invalid_argument("q must be positive");
  const double numerator = (1 - n1) * std::pow(q, -n1) - n1 * std::pow(q, n1 + 1);
  const double denominator = (1 - n1) * std::pow(q, n1) - n1 * std::pow(q, n1 - 1);
  return numerator / denominator;
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Confirmed: return "confirmed";
    case Verdict::Refuted: return "refuted";
    case Verdict::ConventionDependent: return "convention-dependent";
  }
  return "unknown";
}

std::string ConstraintReport::summary() const {
  std::ostringstream out;
  out << gate.name() << " q=" << format_value(q) << ": claim '" << claim.statement << "' "
      << to_string(verdict) << " (strict " << to_string(strict.verdict) << ", sufficient="
      << (strict.sufficient ? "yes" : "no") << ", necessary=" << (strict.necessary ? "yes" : "no")
      << "; collinear " << to_string(collinear.verdict) << ")";
  auto patterns = [](const ClaimAssessment& a) {
    if (a.minimal_patterns.empty()) return std::string("none up to size limit");
    std::string s;
    for (std::size_t i = 0; i < a.minimal_patterns.size(); ++i) {
      if (i) s += " | ";
      s += to_string(a.minimal_patterns[i]);
    }
    return s;
  };
  out << "; minimal strict pattern " << patterns(strict) << "; minimal collinear pattern "
      << patterns(collinear) << "; samples " << samples.size() - skipped << " admissible, "
      << skipped << " skipped";
  return out.str();
}

ConstraintReport discover_constraints(const GateSpec& gate, double q,
                                      const LabConventions& conventions,
                                      const DiscoveryOptions& options) {
  if (options.grid.empty()) throw std::invalid_argument("psi grid must not be empty");
  ConstraintReport report{gate, q, conventions, options, published_claim(gate.kind()), {}, 0, {}, {}, {}};
  const auto& relevant = report.claim.relevant;
  const IdentityEvaluator evaluate(gate, conventions);

  const std::size_t g = options.grid.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < relevant.size(); ++i) total *= g;
  report.samples.reserve(total);

  std::vector<std::size_t> digits(relevant.size(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    ConstraintSample sample;
    DeformationParams params(q);
    for (std::size_t i = 0; i < relevant.size(); ++i) {
      const double v = options.grid[digits[i]];
      sample.values.push_back(v);
      params = params.with_psi(relevant[i], v);
    }
    try {
      const auto r = evaluate(params);
      sample.strict = r.strict;
      sample.collinear = r.collinear;
    } catch (const std::domain_error&) {
      sample.admissible = false;
      ++report.skipped;
    }
    report.samples.push_back(std::move(sample));
    for (std::size_t i = relevant.size(); i-- > 0;) {
      if (++digits[i] < g) break;
      digits[i] = 0;
    }
  }

  report.strict = assess(report.claim, report.samples, options,
                         [](const ConstraintSample& s) { return s.strict; });
  report.collinear = assess(report.claim, report.samples, options,
                            [](const ConstraintSample& s) { return s.collinear; });
  report.verdict = report.strict.verdict == report.collinear.verdict ? report.strict.verdict
                                                                      : Verdict::ConventionDependent;
  return report;
}

}  // namespace qgates
