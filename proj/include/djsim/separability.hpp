#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "djsim/oracle.hpp"
#include "djsim/tensor.hpp"

namespace djsim {

/// Outcome of a tensor-factorization test across one cut. When separable the
/// outer product of the factors reproduces the diagonal exactly; the global
/// sign is folded into the factor on the side containing qubit 0. When
/// entangled, witness = (a, a', b, b') with d_(a,b) d_(a',b') != d_(a,b') d_(a',b).
struct FactorResult {
  bool separable = false;
  std::vector<int> factor_a;
  std::vector<int> factor_b;
  std::array<std::uint64_t, 4> witness{};
};

FactorResult factor_cut(const SignDiagonal& d, const QubitCut& cut);

/// Single-qubit sign diagonals for the N=2 closed form: u1 acts on qubit 1,
/// u0 on qubit 0 and carries the global sign (-1)^{f(0)}.
struct N2Factors {
  std::array<int, 2> u1;
  std::array<int, 2> u0;
};

/// u1 = diag(1, (-1)^{f(0)+f(2)}), u0 = (-1)^{f(0)} diag(1, (-1)^{f(0)+f(1)}).
/// Requires n = 2 and a balanced table.
N2Factors n2_closed_form(const TruthTable& tt);

/// d_x = c * prod_m s_m^{x_m} when it exists; otherwise the first single-qubit
/// cut (lowest m) that fails.
struct FullFactorization {
  bool product = false;
  int global_sign = +1;            // c, valid when product
  std::vector<int> qubit_signs;    // s_m, valid when product
  int failing_qubit = -1;          // valid when !product
};

FullFactorization full_factorization(const SignDiagonal& d);

/// (-1)^{f(3)} == (-1)^{f(0)+f(1)+f(2)}, the balanced-function relation at n=2.
bool eq10_check(const TruthTable& tt);

struct CensusReport {
  int n = 0;
  std::uint64_t total_balanced = 0;
  std::vector<std::uint64_t> per_qubit_separable;  // indexed by qubit
  std::uint64_t fully_product = 0;
  std::vector<int> always_unentangled_qubits;

  bool operator==(const CensusReport&) const = default;
};

/// Exhaustive separability census over all balanced tables on n bits.
/// Aggregation is commutative, so the report is independent of worker count.
CensusReport census(int n, int workers = 1);

/// Lexicographically first balanced table whose oracle is entangled across
/// the {qubit}|rest cut; nullopt when none exists (n <= 2).
std::optional<TruthTable> find_witness(int n, int qubit);

}  // namespace djsim
