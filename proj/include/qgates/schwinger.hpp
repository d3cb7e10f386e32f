#pragma once

#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qgates/fock.hpp"
#include "qgates/qdeform.hpp"
#include "qgates/qnum.hpp"

namespace qgates {

/// Computational basis string (x_1, ..., x_k), each entry 0 or 1.
using BitString = std::vector<int>;

/// Qubit i lives on modes (2i-1, 2i) with occupations (x_i, 1 - x_i), so
/// |0> = |0,1> and |1> = |1,0> on that pair.
class QubitEmbedding {
 public:
  explicit QubitEmbedding(int qubit_count, int cutoff = 2);

  int qubit_count() const { return qubit_count_; }
  int cutoff() const { return cutoff_; }
  int mode_count() const { return 2 * qubit_count_; }
  std::size_t dimension() const { return space_dimension(mode_count(), cutoff_); }

  Occupation occupations(const BitString& bits) const;
  /// Inverse of occupations(); rejects tuples with n_1 + n_2 != 1 on a qubit.
  BitString decode(const Occupation& occupation) const;

  MultiModeState encode(const BitString& bits) const;
  std::size_t index(const BitString& bits) const;

  /// All 2^k bit strings in lexicographic order (qubit 1 most significant).
  std::vector<BitString> basis() const;

  /// Orthogonal projector onto the span of valid encodings.
  Matrix valid_projector() const;

 private:
  void check_bits(const BitString& bits) const;

  int qubit_count_;
  int cutoff_;
};

/// Encodes bits on the default d = 2 embedding (or the given cutoff).
MultiModeState encode_basis(const BitString& bits, int cutoff = 2);

/// Which eigenvalue the n_1 exponents of the fixed-parameter qubits are read
/// at: the created state's (n_1 = x) or the vacuum's (n_1 = 0).
enum class ExponentConvention { EigenvalueOfResult, EigenvalueOfVacuum };

std::string_view to_string(ExponentConvention convention);
ExponentConvention parse_exponent_convention(std::string_view name);

/// Fixed-parameter rule: psi_1 = psi_2 = q^(1 - n_1) on the first mode and
/// psi_3 = psi_4 = q^(n_1) on the second mode of every qubit.
struct FixedParameterRule {
  double q = 1.0;
  ExponentConvention exponent = ExponentConvention::EigenvalueOfResult;
};

/// Source of the psi pair used when a deformed ket is created: either a
/// free psi table or the state-dependent fixed-parameter rule.
class KetDeformation {
 public:
  static KetDeformation general(const DeformationParams& params);
  static KetDeformation fixed(double q, ExponentConvention exponent);

  double q() const;
  bool is_fixed() const { return std::holds_alternative<FixedParameterRule>(rule_); }
  const DeformationParams* params() const { return std::get_if<DeformationParams>(&rule_); }
  const FixedParameterRule* fixed_rule() const { return std::get_if<FixedParameterRule>(&rule_); }

  /// psi pair of `local_mode` (1 or 2) of `qubit` (1-based) when that qubit
  /// is being prepared in state `bit`.
  PsiPair pair(int qubit, int local_mode, int bit) const;

 private:
  explicit KetDeformation(std::variant<DeformationParams, FixedParameterRule> rule)
      : rule_(std::move(rule)) {}

  std::variant<DeformationParams, FixedParameterRule> rule_;
};

struct DeformedQubitSpec {
  BitString bits;
  KetDeformation deformation;
  OperatorConvention convention = OperatorConvention::MatrixElement;
  int cutoff = 2;
};

/// Applies the deformed creation operators of each qubit's excited mode to
/// the vacuum. Propagates NegativeRadicand.
MultiModeState deformed_qubit_state(const DeformedQubitSpec& spec);

/// Scalar amplitude of one deformed qubit factor: sqrt(psi_bracket(1)) of the
/// excited mode's pair.
double deformed_qubit_amplitude(const KetDeformation& deformation, int qubit, int bit);

/// Half-integer stored as twice its value.
struct HalfInteger {
  int twice = 0;

  static HalfInteger from_twice(int value) { return HalfInteger{value}; }
  static HalfInteger from_int(int value) { return HalfInteger{2 * value}; }
  double value() const { return twice / 2.0; }
};

/// Two-mode state (a_1^dag)^(j+m) (a_2^dag)^(j-m) / sqrt((j+m)!(j-m)!) |0,0>.
MultiModeState jm_state(HalfInteger j, HalfInteger m, int cutoff);

}  // namespace qgates
