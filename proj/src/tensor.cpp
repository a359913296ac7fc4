#include "djsim/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/SVD>

namespace djsim {

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
  if (n_qubits < 0 || n_qubits > kMaxStateQubits) {
    throw std::invalid_argument("StateVector::basis: qubit count out of range");
  }
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  if (index >= dim) {
    throw std::invalid_argument("StateVector::basis: index out of range");
  }
  StateVector s;
  s.n_qubits = n_qubits;
  s.amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
  s.amps[static_cast<Eigen::Index>(index)] = Complex{1.0, 0.0};
  return s;
}

DenseOperator DenseOperator::identity(int n_qubits) {
  if (n_qubits < 0 || n_qubits > kMaxDenseQubits) {
    throw std::invalid_argument("DenseOperator::identity: qubit count out of range");
  }
  DenseOperator op;
  op.n_qubits = n_qubits;
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << n_qubits);
  op.mat = Eigen::MatrixXcd::Identity(dim, dim);
  return op;
}

bool DenseOperator::is_unitary(double tol) const {
  const Eigen::MatrixXcd gram = mat.adjoint() * mat;
  const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(gram.rows(), gram.cols());
  return (gram - eye).cwiseAbs().maxCoeff() < tol;
}

QubitCut::QubitCut(std::vector<int> a, std::vector<int> b)
    : side_a(std::move(a)), side_b(std::move(b)) {
  if (side_a.empty() || side_b.empty()) {
    throw std::invalid_argument("QubitCut: both sides must be non-empty");
  }
  std::sort(side_a.begin(), side_a.end());
  std::sort(side_b.begin(), side_b.end());
  std::vector<int> all(side_a);
  all.insert(all.end(), side_b.begin(), side_b.end());
  std::sort(all.begin(), all.end());
  const int n = static_cast<int>(all.size());
  for (int i = 0; i < n; ++i) {
    if (all[i] != i) {
      throw std::invalid_argument("QubitCut: sides must partition {0,...,n-1}");
    }
  }
}

QubitCut QubitCut::single(int qubit, int n_qubits) {
  if (qubit < 0 || qubit >= n_qubits) {
    throw std::invalid_argument("QubitCut::single: qubit out of range");
  }
  std::vector<int> rest;
  rest.reserve(static_cast<std::size_t>(n_qubits) - 1);
  for (int q = 0; q < n_qubits; ++q) {
    if (q != qubit) rest.push_back(q);
  }
  return QubitCut({qubit}, std::move(rest));
}

DenseOperator kron(const DenseOperator& a, const DenseOperator& b) {
  if (a.n_qubits + b.n_qubits > kMaxDenseQubits) {
    throw std::invalid_argument("kron: combined operator exceeds dense cap");
  }
  DenseOperator out;
  out.n_qubits = a.n_qubits + b.n_qubits;
  const auto da = a.mat.rows();
  const auto db = b.mat.rows();
  out.mat.resize(da * db, da * db);
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < da; ++j) {
      out.mat.block(i * db, j * db, db, db) = a.mat(i, j) * b.mat;
    }
  }
  return out;
}

DenseOperator hadamard(int n) {
  if (n < 1) throw std::invalid_argument("hadamard: need at least one qubit");
  if (n > kMaxDenseQubits) throw std::invalid_argument("hadamard: exceeds dense cap");
  DenseOperator h1;
  h1.n_qubits = 1;
  const double r = 1.0 / std::sqrt(2.0);
  h1.mat.resize(2, 2);
  h1.mat << r, r, r, -r;
  DenseOperator out = h1;
  for (int k = 1; k < n; ++k) out = kron(out, h1);
  return out;
}

StateVector apply(const DenseOperator& op, const StateVector& s) {
  if (op.n_qubits != s.n_qubits) {
    throw std::invalid_argument("apply: operator/state dimension mismatch");
  }
  StateVector out;
  out.n_qubits = s.n_qubits;
  out.amps = op.mat * s.amps;
  return out;
}

void apply_hadamard_qubit(StateVector& s, int qubit) {
  if (qubit < 0 || qubit >= s.n_qubits) {
    throw std::invalid_argument("apply_hadamard_qubit: qubit out of range");
  }
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  const double r = 1.0 / std::sqrt(2.0);
  const std::uint64_t dim = s.dim();
  for (std::uint64_t x = 0; x < dim; ++x) {
    if (x & bit) continue;
    const auto lo = static_cast<Eigen::Index>(x);
    const auto hi = static_cast<Eigen::Index>(x | bit);
    const Complex a = s.amps[lo];
    const Complex b = s.amps[hi];
    s.amps[lo] = r * (a + b);
    s.amps[hi] = r * (a - b);
  }
}

void apply_hadamard_all(StateVector& s) {
  for (int q = 0; q < s.n_qubits; ++q) apply_hadamard_qubit(s, q);
}

double prob_zero(const StateVector& s) {
  return std::norm(s.amps[0]);
}

namespace {

std::uint64_t gather_bits(std::uint64_t x, const std::vector<int>& qubits) {
  std::uint64_t packed = 0;
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    packed |= ((x >> qubits[i]) & 1u) << i;
  }
  return packed;
}

}  // namespace

int schmidt_rank(const StateVector& s, const QubitCut& cut, double tol) {
  if (cut.n_qubits() != s.n_qubits) {
    throw std::invalid_argument("schmidt_rank: cut does not match state size");
  }
  if (tol <= 0.0) throw std::invalid_argument("schmidt_rank: tolerance must be positive");
  const auto rows = static_cast<Eigen::Index>(std::uint64_t{1} << cut.side_a.size());
  const auto cols = static_cast<Eigen::Index>(std::uint64_t{1} << cut.side_b.size());
  Eigen::MatrixXcd reshaped(rows, cols);
  for (std::uint64_t x = 0; x < s.dim(); ++x) {
    const auto r = static_cast<Eigen::Index>(gather_bits(x, cut.side_a));
    const auto c = static_cast<Eigen::Index>(gather_bits(x, cut.side_b));
    reshaped(r, c) = s.amps[static_cast<Eigen::Index>(x)];
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(reshaped);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()[i] > tol) ++rank;
  }
  return rank;
}

}  // namespace djsim
