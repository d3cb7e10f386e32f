#include "qgates/gates.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace qgates {

namespace {

BitString reversed(BitString bits) {
  std::reverse(bits.begin(), bits.end());
  return bits;
}

void check_arity(const GateSpec& gate, const BitString& bits) {
  if (static_cast<int>(bits.size()) != gate.arity()) {
    throw std::invalid_argument(gate.name() + " expects " + std::to_string(gate.arity()) +
                                " bits, got " + std::to_string(bits.size()));
  }
  for (int b : bits) {
    if (b != 0 && b != 1) throw std::invalid_argument("bit value must be 0 or 1");
  }
}

// Builds dyads |out>_q <bra|_q from deformed kets, caching each ket.
class DyadBuilder {
 public:
  DyadBuilder(const KetDeformation& deformation, const DeformedGateOptions& options, int qubits)
      : deformation_(deformation), options_(options), embedding_(qubits, options.cutoff) {}

  const QubitEmbedding& embedding() const { return embedding_; }

  const Vector& ket(const BitString& bits) {
    const std::size_t key = embedding_.index(bits);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      const DeformedQubitSpec spec{bits, deformation_, options_.convention, options_.cutoff};
      it = cache_.emplace(key, deformed_qubit_state(spec).amplitudes()).first;
    }
    return it->second;
  }

  Matrix dyad(const BitString& out, const BitString& in) {
    const BitString bra = options_.bra_order == BraOrder::KetOrder ? in : reversed(in);
    return ket(out) * ket(bra).adjoint();
  }

 private:
  const KetDeformation& deformation_;
  const DeformedGateOptions& options_;
  QubitEmbedding embedding_;
  std::map<std::size_t, Vector> cache_;
};

std::string bra_note(const DeformedGateOptions& options) {
  return options.bra_order == BraOrder::KetOrder ? "bras read in ket order"
                                                 : "bras read as printed (reversed qubit order)";
}

}  // namespace

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::PhaseShift: return "PS";
    case GateKind::Hadamard: return "Had";
    case GateKind::Not: return "Not";
    case GateKind::CNot: return "CNot";
    case GateKind::Swap: return "Swap";
    case GateKind::Fredkin: return "Fredkin";
    case GateKind::Toffoli: return "Toffoli";
  }
  return "unknown";
}

GateKind parse_gate_kind(std::string_view name) {
  for (GateKind kind : all_gate_kinds()) {
    if (to_string(kind) == name) return kind;
  }
  throw std::invalid_argument("unknown gate '" + std::string(name) + "'");
}

const std::array<GateKind, 7>& all_gate_kinds() {
  static constexpr std::array<GateKind, 7> kinds{GateKind::PhaseShift, GateKind::Hadamard,
                                                 GateKind::Not,        GateKind::CNot,
                                                 GateKind::Swap,       GateKind::Fredkin,
                                                 GateKind::Toffoli};
  return kinds;
}

int arity(GateKind kind) {
  switch (kind) {
    case GateKind::PhaseShift:
    case GateKind::Hadamard:
    case GateKind::Not: return 1;
    case GateKind::CNot:
    case GateKind::Swap: return 2;
    case GateKind::Fredkin:
    case GateKind::Toffoli: return 3;
  }
  return 0;
}

GateSpec::GateSpec(GateKind kind, double phi) : kind_(kind), phi_(phi) {
  if (!std::isfinite(phi)) throw std::invalid_argument("phase must be finite");
}

std::string GateSpec::name() const { return std::string(to_string(kind_)); }

std::vector<Term> gate_action(const GateSpec& gate, const BitString& bits) {
  check_arity(gate, bits);
  std::vector<Term> terms;
  auto add = [&terms](Complex c, BitString b) {
    if (c != Complex{}) terms.push_back({c, std::move(b)});
  };
  const int x = bits[0];
  switch (gate.kind()) {
    case GateKind::PhaseShift:
      add(std::exp(Complex(0.0, x * gate.phi())), {x});
      break;
    case GateKind::Hadamard:
      add(x == 0 ? 1.0 : -1.0, {x});
      add(1.0, {1 - x});
      break;
    case GateKind::Not:
      add(1.0, {1 - x});
      break;
    case GateKind::CNot: {
      const int y = bits[1];
      add(static_cast<double>(1 - x), {x, y});
      add(static_cast<double>(x), {x, 1 - y});
      break;
    }
    case GateKind::Swap:
      add(1.0, {bits[1], bits[0]});
      break;
    case GateKind::Fredkin: {
      const int y = bits[1];
      const int z = bits[2];
      add(static_cast<double>(1 - x), {x, y, z});
      add(static_cast<double>(x), {x, z, y});
      break;
    }
    case GateKind::Toffoli: {
      const int y = bits[1];
      const int z = bits[2];
      add(static_cast<double>(x * y), {x, y, 1 - z});
      add(static_cast<double>((1 - x) * y + (1 - y) * x + (1 - y) * (1 - x)), {x, y, z});
      break;
    }
  }
  return terms;
}

Matrix gate_matrix(const GateSpec& gate, const QubitEmbedding& embedding) {
  if (embedding.qubit_count() != gate.arity()) {
    throw std::invalid_argument(gate.name() + " needs a " + std::to_string(gate.arity()) +
                                "-qubit embedding");
  }
  const auto dim = static_cast<Eigen::Index>(embedding.dimension());
  Matrix m = Matrix::Zero(dim, dim);
  for (const auto& in : embedding.basis()) {
    const auto col = static_cast<Eigen::Index>(embedding.index(in));
    for (const auto& term : gate_action(gate, in)) {
      m(static_cast<Eigen::Index>(embedding.index(term.bits)), col) += term.coefficient;
    }
  }
  return m;
}

Matrix number_on_mode(int mode, int mode_count, int cutoff) {
  return lift(make_mode_ops(cutoff).number, mode, mode_count);
}

std::string_view to_string(BraOrder order) {
  return order == BraOrder::KetOrder ? "ket-order" : "as-printed";
}

std::string_view to_string(ToffoliForm form) {
  return form == ToffoliForm::TruthTable ? "truth-table" : "literal";
}

DeformedGateOperator deformed_gate_matrix(const GateSpec& gate, const KetDeformation& deformation,
                                          const DeformedGateOptions& options) {
  DyadBuilder dyads(deformation, options, gate.arity());
  const QubitEmbedding& embedding = dyads.embedding();
  const int modes = embedding.mode_count();
  const int d = options.cutoff;
  const auto dim = static_cast<Eigen::Index>(embedding.dimension());
  const Matrix identity = Matrix::Identity(dim, dim);
  const Matrix projector = embedding.valid_projector();

  DeformedGateOperator op{gate, deformation, options, Matrix::Zero(dim, dim), {}};
  Matrix& m = op.matrix;
  auto& trace = op.trace;

  switch (gate.kind()) {
    case GateKind::PhaseShift:
      for (int x = 0; x <= 1; ++x) {
        m += std::exp(Complex(0.0, x * gate.phi())) * dyads.dyad({x}, {x});
      }
      trace.push_back("sum_x e^{i x phi} |x>_q <x|_q");
      break;
    case GateKind::Not:
      for (int x = 0; x <= 1; ++x) m += dyads.dyad({1 - x}, {x});
      trace.push_back("sum_x |1-x>_q <x|_q");
      break;
    case GateKind::Hadamard: {
      Eigen::VectorXd parity(d);
      for (int n = 0; n < d; ++n) parity(n) = n % 2 == 0 ? 1.0 : -1.0;
      const Matrix parity_1 = lift(parity.cast<Complex>().asDiagonal(), 1, modes);
      m += projector * parity_1 * projector;
      for (int x = 0; x <= 1; ++x) m += dyads.dyad({1 - x}, {x});
      trace.push_back("P (-1)^{N_1} P (mode-1 parity operator)");
      trace.push_back("sum_x |1-x>_q <x|_q");
      break;
    }
    case GateKind::Swap:
      for (int x = 0; x <= 1; ++x) {
        for (int y = 0; y <= 1; ++y) m += dyads.dyad({y, x}, {x, y});
      }
      trace.push_back("sum_{x,y} |y x>_q <x y|_q");
      trace.push_back(bra_note(options));
      break;
    case GateKind::CNot: {
      const Matrix n1 = number_on_mode(1, modes, d);
      m += projector * (identity - n1) * projector;
      Matrix sum = Matrix::Zero(dim, dim);
      for (int x = 0; x <= 1; ++x) {
        for (int y = 0; y <= 1; ++y) sum += dyads.dyad({x, 1 - y}, {x, y});
      }
      m += sum * n1;
      trace.push_back("P (1 - N_1) P");
      trace.push_back("sum_{x,y} |x 1-y>_q <x y|_q N_1");
      trace.push_back(bra_note(options));
      break;
    }
    case GateKind::Fredkin: {
      const Matrix n1 = number_on_mode(1, modes, d);
      m += projector * (identity - n1) * projector;
      Matrix sum = Matrix::Zero(dim, dim);
      for (const auto& in : embedding.basis()) sum += dyads.dyad({in[0], in[2], in[1]}, in);
      m += sum * n1;
      trace.push_back("P (1 - N_1) P");
      trace.push_back("sum_{x,y,z} |x z y>_q <x y z|_q N_1");
      trace.push_back(bra_note(options));
      break;
    }
    case GateKind::Toffoli: {
      const Matrix n1 = number_on_mode(1, modes, d);
      const Matrix m1 = number_on_mode(3, modes, d);
      Matrix flip = Matrix::Zero(dim, dim);
      Matrix keep = Matrix::Zero(dim, dim);
      for (const auto& in : embedding.basis()) {
        flip += dyads.dyad({in[0], in[1], 1 - in[2]}, in);
        keep += dyads.dyad(in, in);
      }
      if (options.toffoli == ToffoliForm::TruthTable) {
        m += flip * (n1 * m1);
        m += keep * ((identity - n1) * m1 + n1 * (identity - m1) + (identity - n1) * (identity - m1));
        trace.push_back("sum_{x,y,z} |x y 1-z>_q <x y z|_q N_1 M_1");
        trace.push_back(
            "sum_{x,y,z} |x y z>_q <x y z|_q [(1-N_1)M_1 + N_1(1-M_1) + (1-N_1)(1-M_1)]");
      } else {
        m += flip * (n1 * m1 + (identity - n1) * m1);
        m += flip * ((identity - n1) * m1 + (identity - n1) * (identity - m1));
        trace.push_back("sum_{x,y,z} |x y 1-z>_q <x y z|_q [N_1 M_1 + (1-N_1) M_1]");
        trace.push_back("sum_{x,y,z} |x y 1-z>_q <x y z|_q [(1-N_1) M_1 + (1-N_1)(1-M_1)]");
      }
      trace.push_back(bra_note(options));
      break;
    }
  }
  return op;
}

}  // namespace qgates
