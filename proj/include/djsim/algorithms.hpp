#pragma once

#include <cstdint>
#include <optional>

#include "djsim/oracle.hpp"

namespace djsim {

enum class Method { Refined, Existing, ClassicalNaive, ClassicalParity };
enum class Decision { Constant, Balanced, PromiseViolated };

const char* method_name(Method m);
const char* decision_name(Decision d);

struct RunReport {
  Method method;
  Decision decision;
  std::optional<double> p_zero;        // quantum methods only
  int value_queries = 0;
  int parity_queries = 0;
  std::optional<int> product_check;    // Schmidt rank across the
                                       // control/function cut (Existing only)
};

/// p_zero = (S / 2^N)^2 with S = sum_x (-1)^{f(x)}, in integer arithmetic.
struct ExactProbability {
  std::int64_t sign_sum = 0;     // S
  std::int64_t numerator = 0;    // S^2
  std::int64_t denominator = 1;  // 4^N

  double value() const {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }
};

/// One-query pipeline on N qubits: H^{(x)N}, phase oracle, H^{(x)N}, then the
/// probability of |0...0>. In strict mode a p_zero away from {0,1} by more
/// than 1e-10 is reported as PromiseViolated instead of a decision.
RunReport refined_dj(const TruthTable& tt, bool strict = false);

/// (N+1)-qubit pipeline with the f-controlled-NOT gate and an explicit
/// function register. Also records the Schmidt rank across the
/// control/function cut immediately after the gate.
RunReport existing_dj(const TruthTable& tt, bool strict = false);

ExactProbability refined_dj_exact(const TruthTable& tt);

/// Queries f(0), f(1), ... in order; Balanced at the first disagreement,
/// Constant after 2^{N-1}+1 equal values.
RunReport classical_naive(const TruthTable& tt);

/// Queries the parities of f(0)+f(k) for k = 1 ... 2^{N-1}; Balanced at the
/// first odd parity, Constant if all are even.
RunReport classical_parity(const TruthTable& tt);

constexpr double kStrictPromiseTol = 1e-10;

}  // namespace djsim
