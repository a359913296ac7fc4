#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace djsim {

using Complex = std::complex<double>;

// Dense operators are capped well below the state-vector cap; a 2^12 x 2^12
// complex matrix is already 256 MB of doubles.
constexpr int kMaxDenseQubits = 12;
constexpr int kMaxStateQubits = 20;

constexpr double kUnitaryTol = 1e-12;
constexpr double kSchmidtTol = 1e-10;

/// 2^n complex amplitudes. Index x encodes |x_{n-1} ... x_0> with x_0 the
/// least significant bit.
struct StateVector {
  int n_qubits = 0;
  Eigen::VectorXcd amps;

  static StateVector basis(int n_qubits, std::uint64_t index);

  double norm_sq() const { return amps.squaredNorm(); }
  std::uint64_t dim() const { return std::uint64_t{1} << n_qubits; }
};

struct DenseOperator {
  int n_qubits = 0;
  Eigen::MatrixXcd mat;

  static DenseOperator identity(int n_qubits);

  bool is_unitary(double tol = kUnitaryTol) const;
  std::uint64_t dim() const { return std::uint64_t{1} << n_qubits; }
};

/// Bipartition of qubit indices {0, ..., n-1} into two non-empty sides.
struct QubitCut {
  std::vector<int> side_a;
  std::vector<int> side_b;

  QubitCut(std::vector<int> a, std::vector<int> b);

  /// {qubit} on side A, everything else on side B.
  static QubitCut single(int qubit, int n_qubits);

  int n_qubits() const { return static_cast<int>(side_a.size() + side_b.size()); }
};

/// Kronecker product; the left factor acts on the higher-significance qubits.
DenseOperator kron(const DenseOperator& a, const DenseOperator& b);

/// H^{(x)n}: all entries +-2^{-n/2}. Rejects n < 1 and n > kMaxDenseQubits.
DenseOperator hadamard(int n);

StateVector apply(const DenseOperator& op, const StateVector& s);

/// In-place single-qubit Hadamard butterfly; usable beyond the dense cap.
void apply_hadamard_qubit(StateVector& s, int qubit);
void apply_hadamard_all(StateVector& s);

/// |<0...0|s>|^2.
double prob_zero(const StateVector& s);

/// Number of singular values above tol after reshaping the amplitudes across
/// the cut. Rank 1 means product state.
int schmidt_rank(const StateVector& s, const QubitCut& cut, double tol = kSchmidtTol);

}  // namespace djsim
