#include "qgates/schwinger.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qgates {

QubitEmbedding::QubitEmbedding(int qubit_count, int cutoff)
    : qubit_count_(qubit_count), cutoff_(cutoff) {
  if (qubit_count < 1 || qubit_count > 3) {
    throw std::invalid_argument("qubit count must be 1, 2 or 3");
  }
  if (cutoff < 2) throw std::invalid_argument("cutoff must be at least 2");
}

void QubitEmbedding::check_bits(const BitString& bits) const {
  if (static_cast<int>(bits.size()) != qubit_count_) {
    throw std::invalid_argument("expected " + std::to_string(qubit_count_) + " bits, got " +
                                std::to_string(bits.size()));
  }
  for (int b : bits) {
    if (b != 0 && b != 1) throw std::invalid_argument("bit value must be 0 or 1, got " + std::to_string(b));
  }
}

Occupation QubitEmbedding::occupations(const BitString& bits) const {
  check_bits(bits);
  Occupation occ;
  occ.reserve(static_cast<std::size_t>(mode_count()));
  for (int b : bits) {
    occ.push_back(b);
    occ.push_back(1 - b);
  }
  return occ;
}

BitString QubitEmbedding::decode(const Occupation& occupation) const {
  if (static_cast<int>(occupation.size()) != mode_count()) {
    throw std::invalid_argument("occupation tuple length must be twice the qubit count");
  }
  BitString bits;
  for (int i = 0; i < qubit_count_; ++i) {
    const int n1 = occupation[static_cast<std::size_t>(2 * i)];
    const int n2 = occupation[static_cast<std::size_t>(2 * i + 1)];
    if (n1 < 0 || n2 < 0 || n1 + n2 != 1) {
      throw std::invalid_argument("qubit " + std::to_string(i + 1) +
                                  " occupations do not satisfy n1 + n2 = 1");
    }
    bits.push_back(n1);
  }
  return bits;
}

MultiModeState QubitEmbedding::encode(const BitString& bits) const {
  MultiModeState state(mode_count(), cutoff_);
  state.set_amplitude(occupations(bits), 1.0);
  return state;
}

std::size_t QubitEmbedding::index(const BitString& bits) const {
  return MultiModeState(mode_count(), cutoff_).index_of(occupations(bits));
}

std::vector<BitString> QubitEmbedding::basis() const {
  std::vector<BitString> out;
  const int count = 1 << qubit_count_;
  for (int v = 0; v < count; ++v) {
    BitString bits(static_cast<std::size_t>(qubit_count_));
    for (int i = 0; i < qubit_count_; ++i) {
      bits[static_cast<std::size_t>(i)] = (v >> (qubit_count_ - 1 - i)) & 1;
    }
    out.push_back(std::move(bits));
  }
  return out;
}

Matrix QubitEmbedding::valid_projector() const {
  const auto dim = static_cast<Eigen::Index>(dimension());
  Matrix p = Matrix::Zero(dim, dim);
  for (const auto& bits : basis()) {
    const auto i = static_cast<Eigen::Index>(index(bits));
    p(i, i) = 1.0;
  }
  return p;
}

MultiModeState encode_basis(const BitString& bits, int cutoff) {
  return QubitEmbedding(static_cast<int>(bits.size()), cutoff).encode(bits);
}

std::string_view to_string(ExponentConvention convention) {
  switch (convention) {
    case ExponentConvention::EigenvalueOfResult: return "eigenvalue-of-result";
    case ExponentConvention::EigenvalueOfVacuum: return "eigenvalue-of-vacuum";
  }
  return "unknown";
}

ExponentConvention parse_exponent_convention(std::string_view name) {
  if (name == "eigenvalue-of-result") return ExponentConvention::EigenvalueOfResult;
  if (name == "eigenvalue-of-vacuum") return ExponentConvention::EigenvalueOfVacuum;
  throw std::invalid_argument("unknown exponent convention '" + std::string(name) + "'");
}

KetDeformation KetDeformation::general(const DeformationParams& params) {
  return KetDeformation(params);
}

KetDeformation KetDeformation::fixed(double q, ExponentConvention exponent) {
  if (!(q > 0.0) || !std::isfinite(q)) throw std::invalid_argument("q must be positive");
  return KetDeformation(FixedParameterRule{q, exponent});
}

double KetDeformation::q() const {
  if (const auto* p = params()) return p->q();
  return fixed_rule()->q;
}

PsiPair KetDeformation::pair(int qubit, int local_mode, int bit) const {
  if (local_mode != 1 && local_mode != 2) throw std::invalid_argument("local mode must be 1 or 2");
  if (const auto* p = params()) return p->pair(2 * (qubit - 1) + local_mode);
  const auto& rule = *fixed_rule();
  const int n1 = rule.exponent == ExponentConvention::EigenvalueOfResult ? bit : 0;
  const double psi = local_mode == 1 ? std::pow(rule.q, 1 - n1) : std::pow(rule.q, n1);
  return {psi, psi};
}

double deformed_qubit_amplitude(const KetDeformation& deformation, int qubit, int bit) {
  const int local_mode = bit == 1 ? 1 : 2;
  return std::sqrt(psi_radicand(1, deformation.q(), deformation.pair(qubit, local_mode, bit)));
}

MultiModeState deformed_qubit_state(const DeformedQubitSpec& spec) {
  const QubitEmbedding embedding(static_cast<int>(spec.bits.size()), spec.cutoff);
  (void)embedding.occupations(spec.bits);
  const ModeOperators mode = make_mode_ops(spec.cutoff);
  MultiModeState state = vacuum(embedding.mode_count(), spec.cutoff);
  for (int i = 1; i <= embedding.qubit_count(); ++i) {
    const int bit = spec.bits[static_cast<std::size_t>(i - 1)];
    const int local_mode = bit == 1 ? 1 : 2;
    const PsiPair psi = spec.deformation.pair(i, local_mode, bit);
    const auto ops = make_deformed_ops(mode, spec.deformation.q(), psi, spec.convention);
    state = state.apply_on_mode(ops.a_q_dag, 2 * (i - 1) + local_mode);
  }
  return state;
}

MultiModeState jm_state(HalfInteger j, HalfInteger m, int cutoff) {
  if (j.twice < 0) throw std::invalid_argument("j must be nonnegative");
  if (std::abs(m.twice) > j.twice) throw std::invalid_argument("|m| must not exceed j");
  if ((j.twice + m.twice) % 2 != 0) throw std::invalid_argument("j + m must be an integer");
  const int n1 = (j.twice + m.twice) / 2;
  const int n2 = (j.twice - m.twice) / 2;
  if (n1 >= cutoff || n2 >= cutoff) {
    throw std::out_of_range("cutoff " + std::to_string(cutoff) + " too small for occupations (" +
                            std::to_string(n1) + ", " + std::to_string(n2) + ")");
  }
  const ModeOperators mode = make_mode_ops(cutoff);
  MultiModeState state = vacuum(2, cutoff);
  double factorials = 1.0;
  for (int k = 1; k <= n1; ++k) {
    state = state.apply_on_mode(mode.a_dag, 1);
    factorials *= k;
  }
  for (int k = 1; k <= n2; ++k) {
    state = state.apply_on_mode(mode.a_dag, 2);
    factorials *= k;
  }
  state *= 1.0 / std::sqrt(factorials);
  return state;
}

}  // namespace qgates
