#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "djsim/tensor.hpp"

namespace djsim {

constexpr int kMaxExhaustiveQubits = 4;  // C(16,8) = 12870 balanced tables

/// Boolean function on n-bit arguments; values[x] = f(x).
struct TruthTable {
  int n = 0;
  std::vector<std::uint8_t> values;

  std::uint64_t size() const { return std::uint64_t{1} << n; }
  bool operator==(const TruthTable&) const = default;
};

enum class FunctionClass { Constant0, Constant1, Balanced, Neither };

/// The diagonal of the phase oracle: signs[x] = (-1)^{f(x)}.
struct SignDiagonal {
  int n = 0;
  std::vector<int> signs;

  std::uint64_t size() const { return std::uint64_t{1} << n; }
};

FunctionClass classify(const TruthTable& tt);
const char* function_class_name(FunctionClass c);

TruthTable constant_table(int n, int value);

SignDiagonal phase_oracle(const TruthTable& tt);

/// The phase oracle as an explicit diagonal unitary on n qubits.
DenseOperator phase_oracle_operator(const TruthTable& tt);

/// Permutation gate on n+1 qubits mapping |x>_c |y>_f -> |x>_c |y (+) f(x)>_f.
/// The function qubit is qubit 0 of the combined index.
DenseOperator fcn_operator(const TruthTable& tt);

/// Every balanced table on n bits, ordered by lexicographic combinations of
/// one-positions. Rejects n > kMaxExhaustiveQubits.
std::vector<TruthTable> enumerate_balanced(int n);

/// Uniform balanced table via a seeded Fisher-Yates shuffle; same seed, same
/// table, on every platform.
TruthTable sample_balanced(int n, std::uint64_t seed);

/// Accepts a '0'/'1' string (f(0) first) or "0x"-prefixed hex with the same
/// bit content, most significant hex bit = f(0). Length must be a power of
/// two >= 2. When expect_n is given the parsed size must match it.
TruthTable parse_truth_table(const std::string& text, std::optional<int> expect_n = {});
std::string format_truth_table(const TruthTable& tt);

}  // namespace djsim
