#include "djsim/algorithms.hpp"

#include <cmath>
#include <stdexcept>

namespace djsim {

const char* method_name(Method m) {
  switch (m) {
    case Method::Refined: return "refined";
    case Method::Existing: return "existing";
    case Method::ClassicalNaive: return "naive";
    case Method::ClassicalParity: return "parity";
  }
  return "unknown";
}

const char* decision_name(Decision d) {
  switch (d) {
    case Decision::Constant: return "constant";
    case Decision::Balanced: return "balanced";
    case Decision::PromiseViolated: return "promise_violated";
  }
  return "unknown";
}

namespace {

Decision decide_from_p_zero(double p_zero, bool strict) {
  if (strict && std::abs(p_zero) > kStrictPromiseTol &&
      std::abs(p_zero - 1.0) > kStrictPromiseTol) {
    return Decision::PromiseViolated;
  }
  return p_zero > 0.5 ? Decision::Constant : Decision::Balanced;
}

}  // namespace

RunReport refined_dj(const TruthTable& tt, bool strict) {
  if (tt.n > kMaxStateQubits) throw std::invalid_argument("refined_dj: exceeds state cap");
  const SignDiagonal d = phase_oracle(tt);

  StateVector s = StateVector::basis(tt.n, 0);
  apply_hadamard_all(s);
  for (std::uint64_t x = 0; x < d.size(); ++x) {
    s.amps[static_cast<Eigen::Index>(x)] *= static_cast<double>(d.signs[x]);
  }
  apply_hadamard_all(s);

  RunReport r;
  r.method = Method::Refined;
  r.p_zero = prob_zero(s);
  r.value_queries = 1;
  r.decision = decide_from_p_zero(*r.p_zero, strict);
  return r;
}

RunReport existing_dj(const TruthTable& tt, bool strict) {
  if (tt.n + 1 > kMaxDenseQubits) {
    throw std::invalid_argument("existing_dj: exceeds dense cap");
  }
  const int n_tot = tt.n + 1;

  // |0...0>_c |1>_f; the function qubit is qubit 0.
  StateVector s = StateVector::basis(n_tot, 1);
  s = apply(hadamard(n_tot), s);
  s = apply(fcn_operator(tt), s);

  // Control/function cut right after the function evaluation.
  const QubitCut cut = QubitCut::single(0, n_tot);
  const int rank = schmidt_rank(s, cut);

  // Hadamard on the control qubits only.
  for (int q = 1; q < n_tot; ++q) apply_hadamard_qubit(s, q);

  // Projector |0...0><0...0| on the control register: sum over the function
  // qubit instead of tracing matrices.
  const double p_zero = std::norm(s.amps[0]) + std::norm(s.amps[1]);

  RunReport r;
  r.method = Method::Existing;
  r.p_zero = p_zero;
  r.value_queries = 1;
  r.product_check = rank;
  r.decision = decide_from_p_zero(p_zero, strict);
  return r;
}

ExactProbability refined_dj_exact(const TruthTable& tt) {
  ExactProbability p;
  for (auto v : tt.values) p.sign_sum += v ? -1 : +1;
  p.numerator = p.sign_sum * p.sign_sum;
  p.denominator = std::int64_t{1} << (2 * tt.n);
  return p;
}

RunReport classical_naive(const TruthTable& tt) {
  RunReport r;
  r.method = Method::ClassicalNaive;
  const std::uint64_t needed = tt.size() / 2 + 1;
  const std::uint8_t first = tt.values[0];
  r.value_queries = 1;
  for (std::uint64_t x = 1; x < needed; ++x) {
    ++r.value_queries;
    if (tt.values[x] != first) {
      r.decision = Decision::Balanced;
      return r;
    }
  }
  r.decision = Decision::Constant;
  return r;
}

RunReport classical_parity(const TruthTable& tt) {
  RunReport r;
  r.method = Method::ClassicalParity;
  const std::uint64_t checks = tt.size() / 2;
  for (std::uint64_t k = 1; k <= checks; ++k) {
    ++r.parity_queries;
    if ((tt.values[0] + tt.values[k]) % 2 == 1) {
      r.decision = Decision::Balanced;
      return r;
    }
  }
  r.decision = Decision::Constant;
  return r;
}

}  // namespace djsim
