#include "qgates/fock.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace qgates {

namespace {

void require_cutoff(int cutoff) {
  if (cutoff < 2) {
    throw std::invalid_argument("cutoff must be at least 2 to host a qubit occupation, got " +
                                std::to_string(cutoff));
  }
}

void require_mode(int mode, int mode_count) {
  if (mode < 1 || mode > mode_count) {
    throw std::out_of_range("mode index " + std::to_string(mode) + " outside 1.." +
                            std::to_string(mode_count));
  }
}

std::size_t ipow(std::size_t base, int exponent) {
  std::size_t result = 1;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace

ModeOperators make_mode_ops(int cutoff) {
  require_cutoff(cutoff);
  ModeOperators ops;
  ops.cutoff = cutoff;
  ops.a = Matrix::Zero(cutoff, cutoff);
  for (int n = 1; n < cutoff; ++n) ops.a(n - 1, n) = std::sqrt(static_cast<double>(n));
  ops.a_dag = ops.a.adjoint();
  ops.number = ops.a_dag * ops.a;
  return ops;
}

std::size_t space_dimension(int mode_count, int cutoff) {
  if (mode_count < 1) throw std::invalid_argument("mode count must be positive");
  require_cutoff(cutoff);
  return ipow(static_cast<std::size_t>(cutoff), mode_count);
}

Matrix lift(const Matrix& op, int mode, int mode_count) {
  if (op.rows() != op.cols()) throw std::invalid_argument("lift expects a square operator");
  require_mode(mode, mode_count);
  const auto d = static_cast<std::size_t>(op.rows());
  const std::size_t outer = ipow(d, mode - 1);
  const std::size_t inner = ipow(d, mode_count - mode);
  const std::size_t dim = outer * d * inner;
  Matrix result = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        const Complex value = op(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        if (value == Complex{}) continue;
        for (std::size_t i = 0; i < inner; ++i) {
          const auto row = static_cast<Eigen::Index>((o * d + r) * inner + i);
          const auto col = static_cast<Eigen::Index>((o * d + c) * inner + i);
          result(row, col) = value;
        }
      }
    }
  }
  return result;
}

Matrix mode_permutation(const std::vector<int>& perm, int cutoff) {
  const int k = static_cast<int>(perm.size());
  std::vector<int> sorted(perm);
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < k; ++i) {
    if (sorted[static_cast<std::size_t>(i)] != i + 1) {
      throw std::invalid_argument("mode_permutation expects a permutation of 1..k");
    }
  }
  const MultiModeState shape(k, cutoff);
  const auto dim = static_cast<Eigen::Index>(shape.dimension());
  Matrix result = Matrix::Zero(dim, dim);
  for (std::size_t col = 0; col < shape.dimension(); ++col) {
    const Occupation in = shape.occupation_of(col);
    Occupation out(in.size());
    for (int i = 0; i < k; ++i) {
      out[static_cast<std::size_t>(i)] = in[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)] - 1)];
    }
    result(static_cast<Eigen::Index>(shape.index_of(out)), static_cast<Eigen::Index>(col)) = 1.0;
  }
  return result;
}

double max_norm(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double max_norm(const Vector& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

MultiModeState::MultiModeState(int mode_count, int cutoff)
    : mode_count_(mode_count),
      cutoff_(cutoff),
      amplitudes_(Vector::Zero(static_cast<Eigen::Index>(space_dimension(mode_count, cutoff)))) {}

MultiModeState::MultiModeState(int mode_count, int cutoff, Vector amplitudes)
    : mode_count_(mode_count), cutoff_(cutoff), amplitudes_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amplitudes_.size()) != space_dimension(mode_count, cutoff)) {
    throw std::invalid_argument("amplitude vector length must equal cutoff^mode_count");
  }
  if (!amplitudes_.allFinite()) throw std::invalid_argument("amplitudes must be finite");
}

std::size_t MultiModeState::index_of(const Occupation& occupation) const {
  if (static_cast<int>(occupation.size()) != mode_count_) {
    throw std::invalid_argument("occupation tuple length must equal the mode count");
  }
  std::size_t index = 0;
  for (int n : occupation) {
    if (n < 0 || n >= cutoff_) {
      throw std::out_of_range("occupation " + std::to_string(n) + " exceeds cutoff " +
                              std::to_string(cutoff_));
    }
    index = index * static_cast<std::size_t>(cutoff_) + static_cast<std::size_t>(n);
  }
  return index;
}

Occupation MultiModeState::occupation_of(std::size_t index) const {
  if (index >= dimension()) throw std::out_of_range("basis index out of range");
  Occupation occupation(static_cast<std::size_t>(mode_count_));
  for (int m = mode_count_ - 1; m >= 0; --m) {
    occupation[static_cast<std::size_t>(m)] = static_cast<int>(index % static_cast<std::size_t>(cutoff_));
    index /= static_cast<std::size_t>(cutoff_);
  }
  return occupation;
}

Complex MultiModeState::amplitude(const Occupation& occupation) const {
  return amplitudes_(static_cast<Eigen::Index>(index_of(occupation)));
}

void MultiModeState::set_amplitude(const Occupation& occupation, Complex value) {
  amplitudes_(static_cast<Eigen::Index>(index_of(occupation))) = value;
}

MultiModeState MultiModeState::apply(const Matrix& op) const {
  if (op.rows() != amplitudes_.size() || op.cols() != amplitudes_.size()) {
    throw std::invalid_argument("operator dimension does not match the state");
  }
  return MultiModeState(mode_count_, cutoff_, op * amplitudes_);
}

MultiModeState MultiModeState::apply_on_mode(const Matrix& op, int mode) const {
  require_mode(mode, mode_count_);
  if (op.rows() != cutoff_ || op.cols() != cutoff_) {
    throw std::invalid_argument("single-mode operator must be cutoff x cutoff");
  }
  const auto d = static_cast<std::size_t>(cutoff_);
  const std::size_t outer = ipow(d, mode - 1);
  const std::size_t inner = ipow(d, mode_count_ - mode);
  Vector out = Vector::Zero(amplitudes_.size());
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t c = 0; c < d; ++c) {
      for (std::size_t i = 0; i < inner; ++i) {
        const Complex in = amplitudes_(static_cast<Eigen::Index>((o * d + c) * inner + i));
        if (in == Complex{}) continue;
        for (std::size_t r = 0; r < d; ++r) {
          out(static_cast<Eigen::Index>((o * d + r) * inner + i)) +=
              op(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * in;
        }
      }
    }
  }
  return MultiModeState(mode_count_, cutoff_, std::move(out));
}

void MultiModeState::check_compatible(const MultiModeState& other) const {
  if (other.mode_count_ != mode_count_ || other.cutoff_ != cutoff_) {
    throw std::invalid_argument("states live in different Fock spaces");
  }
}

MultiModeState& MultiModeState::operator+=(const MultiModeState& other) {
  check_compatible(other);
  amplitudes_ += other.amplitudes_;
  return *this;
}

MultiModeState& MultiModeState::operator*=(Complex factor) {
  amplitudes_ *= factor;
  return *this;
}

MultiModeState operator+(MultiModeState lhs, const MultiModeState& rhs) {
  lhs += rhs;
  return lhs;
}

MultiModeState operator-(MultiModeState lhs, const MultiModeState& rhs) {
  lhs += Complex(-1.0) * rhs;
  return lhs;
}

MultiModeState operator*(Complex factor, MultiModeState state) {
  state *= factor;
  return state;
}

MultiModeState vacuum(int mode_count, int cutoff) {
  MultiModeState state(mode_count, cutoff);
  state.set_amplitude(Occupation(static_cast<std::size_t>(mode_count), 0), 1.0);
  return state;
}

}  // namespace qgates
