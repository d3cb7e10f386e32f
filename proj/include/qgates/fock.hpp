#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <vector>

namespace qgates {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Occupation numbers (n_1, ..., n_k), one entry per mode.
using Occupation = std::vector<int>;

/// Ladder operators on the truncated single-mode space |0>..|d-1>.
struct ModeOperators {
  int cutoff = 0;
  Matrix a;
  Matrix a_dag;
  Matrix number;
};

/// Builds a, a^dag and N = a^dag a for cutoff d >= 2. a^dag|d-1> = 0.
ModeOperators make_mode_ops(int cutoff);

/// Total dimension d^k of k modes with cutoff d.
std::size_t space_dimension(int mode_count, int cutoff);

/// I (x) ... (x) op (x) ... (x) I with op acting on `mode` (1-based, mode 1
/// slowest in the row-major basis ordering).
Matrix lift(const Matrix& op, int mode, int mode_count);

/// Operator that moves the occupation of mode `perm[i]` into mode i+1
/// (perm is a 1-based permutation of 1..k).
Matrix mode_permutation(const std::vector<int>& perm, int cutoff);

/// Largest absolute entry; the norm used for every residual in this library.
double max_norm(const Matrix& m);
double max_norm(const Vector& v);

/// Amplitudes over the d^k occupation basis. Norms are reported, never
/// renormalized: deformed states are intentionally not unit vectors.
class MultiModeState {
 public:
  MultiModeState(int mode_count, int cutoff);
  MultiModeState(int mode_count, int cutoff, Vector amplitudes);

  int mode_count() const { return mode_count_; }
  int cutoff() const { return cutoff_; }
  std::size_t dimension() const { return static_cast<std::size_t>(amplitudes_.size()); }

  const Vector& amplitudes() const { return amplitudes_; }
  Complex amplitude(const Occupation& occupation) const;
  void set_amplitude(const Occupation& occupation, Complex value);

  std::size_t index_of(const Occupation& occupation) const;
  Occupation occupation_of(std::size_t index) const;

  double norm() const { return amplitudes_.norm(); }

  /// Applies a full-space operator.
  MultiModeState apply(const Matrix& op) const;
  /// Applies a single-mode operator to one mode without forming the lift.
  MultiModeState apply_on_mode(const Matrix& op, int mode) const;

  MultiModeState& operator+=(const MultiModeState& other);
  MultiModeState& operator*=(Complex factor);

 private:
  void check_compatible(const MultiModeState& other) const;

  int mode_count_;
  int cutoff_;
  Vector amplitudes_;
};

MultiModeState operator+(MultiModeState lhs, const MultiModeState& rhs);
MultiModeState operator-(MultiModeState lhs, const MultiModeState& rhs);
MultiModeState operator*(Complex factor, MultiModeState state);

/// |0,...,0>.
MultiModeState vacuum(int mode_count, int cutoff);

}  // namespace qgates
