#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "qgates/fock.hpp"
#include "qgates/qdeform.hpp"
#include "qgates/schwinger.hpp"

namespace qgates {

enum class GateKind { PhaseShift, Hadamard, Not, CNot, Swap, Fredkin, Toffoli };

std::string_view to_string(GateKind kind);
GateKind parse_gate_kind(std::string_view name);
const std::array<GateKind, 7>& all_gate_kinds();
int arity(GateKind kind);

class GateSpec {
 public:
  /// Any kind; phi is only read by PhaseShift and must be finite.
  explicit GateSpec(GateKind kind, double phi = 0.0);

  static GateSpec phase_shift(double phi) { return GateSpec(GateKind::PhaseShift, phi); }

  GateKind kind() const { return kind_; }
  double phi() const { return phi_; }
  int arity() const { return qgates::arity(kind_); }
  std::string name() const;

 private:
  GateKind kind_;
  double phi_;
};

/// One term c |bits> of a formal linear combination.
struct Term {
  Complex coefficient;
  BitString bits;
};

/// Gate action on a computational basis string, zero-coefficient terms dropped:
///   PS      e^{i x phi} |x>
///   Had     (-1)^x |x> + |1-x>
///   Not     |1-x>
///   CNot    (1-x) |x y> + x |x, 1-y>
///   Swap    |y x>
///   Fredkin (1-x) |x y z> + x |x z y>
///   Toffoli x y |x y 1-z> + [(1-x)y + (1-y)x + (1-y)(1-x)] |x y z>
std::vector<Term> gate_action(const GateSpec& gate, const BitString& bits);

/// Sum of gate_action dyads over the computational basis, lifted through the
/// embedding. Zero on the complement of the valid-encoding subspace.
Matrix gate_matrix(const GateSpec& gate, const QubitEmbedding& embedding);

/// Number operator of `mode` lifted to the full 2k-mode space.
Matrix number_on_mode(int mode, int mode_count, int cutoff);

/// Order in which the qubits of a printed bra are read. The printed bras list
/// qubits last-to-first (<y x|, <z y x|); KetOrder reads them as <x y z|,
/// AsPrinted reads the printed sequence slot by slot.
enum class BraOrder { KetOrder, AsPrinted };

/// TruthTable builds the deformed Toffoli so that its action reproduces the
/// undeformed truth table on deformed kets; Literal follows the printed
/// coefficient brackets, where both dyad groups target |x y 1-z>.
enum class ToffoliForm { TruthTable, Literal };

std::string_view to_string(BraOrder order);
std::string_view to_string(ToffoliForm form);

struct DeformedGateOptions {
  OperatorConvention convention = OperatorConvention::MatrixElement;
  BraOrder bra_order = BraOrder::KetOrder;
  ToffoliForm toffoli = ToffoliForm::TruthTable;
  int cutoff = 2;
};

struct DeformedGateOperator {
  GateSpec gate;
  KetDeformation deformation;
  DeformedGateOptions options;
  Matrix matrix;
  /// Human-readable list of the dyad sums and operator terms used.
  std::vector<std::string> trace;
};

/// Deformed gate as a sum of dyads |out>_q <in|_q over deformed kets plus the
/// number-operator terms: mode-1 parity for Had, (1 - N_1) and a trailing N_1
/// for CNot and Fredkin, N_1/M_1 brackets for Toffoli. Operator terms are
/// projected onto the valid subspace. Propagates NegativeRadicand.
DeformedGateOperator deformed_gate_matrix(const GateSpec& gate, const KetDeformation& deformation,
                                          const DeformedGateOptions& options = {});

}  // namespace qgates
