#include "djsim/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <random>
#include <stdexcept>

namespace djsim {

namespace {

void check_table(const TruthTable& tt) {
  if (tt.n < 1) throw std::invalid_argument("TruthTable: need at least one input bit");
  if (tt.values.size() != tt.size()) {
    throw std::invalid_argument("TruthTable: value count must be 2^n");
  }
  for (auto v : tt.values) {
    if (v > 1) throw std::invalid_argument("TruthTable: entries must be 0 or 1");
  }
}

}  // namespace

FunctionClass classify(const TruthTable& tt) {
  check_table(tt);
  const std::uint64_t ones =
      std::accumulate(tt.values.begin(), tt.values.end(), std::uint64_t{0});
  if (ones == 0) return FunctionClass::Constant0;
  if (ones == tt.size()) return FunctionClass::Constant1;
  if (ones == tt.size() / 2) return FunctionClass::Balanced;
  return FunctionClass::Neither;
}

const char* function_class_name(FunctionClass c) {
  switch (c) {
    case FunctionClass::Constant0: return "constant0";
    case FunctionClass::Constant1: return "constant1";
    case FunctionClass::Balanced: return "balanced";
    case FunctionClass::Neither: return "neither";
  }
  return "unknown";
}

TruthTable constant_table(int n, int value) {
  if (n < 1) throw std::invalid_argument("constant_table: need at least one input bit");
  if (value != 0 && value != 1) throw std::invalid_argument("constant_table: value must be 0 or 1");
  TruthTable tt;
  tt.n = n;
  tt.values.assign(std::size_t{1} << n, static_cast<std::uint8_t>(value));
  return tt;
}

SignDiagonal phase_oracle(const TruthTable& tt) {
  check_table(tt);
  SignDiagonal d;
  d.n = tt.n;
  d.signs.reserve(tt.values.size());
  for (auto v : tt.values) d.signs.push_back(v ? -1 : +1);
  return d;
}

DenseOperator phase_oracle_operator(const TruthTable& tt) {
  if (tt.n > kMaxDenseQubits) {
    throw std::invalid_argument("phase_oracle_operator: exceeds dense cap");
  }
  const SignDiagonal d = phase_oracle(tt);
  DenseOperator op = DenseOperator::identity(tt.n);
  for (std::uint64_t x = 0; x < d.size(); ++x) {
    const auto i = static_cast<Eigen::Index>(x);
    op.mat(i, i) = static_cast<double>(d.signs[x]);
  }
  return op;
}

DenseOperator fcn_operator(const TruthTable& tt) {
  check_table(tt);
  if (tt.n + 1 > kMaxDenseQubits) {
    throw std::invalid_argument("fcn_operator: exceeds dense cap");
  }
  DenseOperator op;
  op.n_qubits = tt.n + 1;
  const auto dim = static_cast<Eigen::Index>(op.dim());
  op.mat = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::uint64_t x = 0; x < tt.size(); ++x) {
    for (std::uint64_t y = 0; y <= 1; ++y) {
      const std::uint64_t in = (x << 1) | y;
      const std::uint64_t out = (x << 1) | (y ^ tt.values[x]);
      op.mat(static_cast<Eigen::Index>(out), static_cast<Eigen::Index>(in)) = 1.0;
    }
  }
  return op;
}

std::vector<TruthTable> enumerate_balanced(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_balanced: need at least one input bit");
  if (n > kMaxExhaustiveQubits) {
    throw std::invalid_argument("enumerate_balanced: exhaustive mode capped at n = 4");
  }
  const int slots = 1 << n;
  const int ones = slots / 2;
  std::vector<TruthTable> out;
  std::vector<int> pos(ones);
  std::iota(pos.begin(), pos.end(), 0);
  while (true) {
    TruthTable tt;
    tt.n = n;
    tt.values.assign(slots, 0);
    for (int p : pos) tt.values[p] = 1;
    out.push_back(std::move(tt));
    // next combination in lexicographic order
    int i = ones - 1;
    while (i >= 0 && pos[i] == slots - ones + i) --i;
    if (i < 0) break;
    ++pos[i];
    for (int j = i + 1; j < ones; ++j) pos[j] = pos[j - 1] + 1;
  }
  return out;
}

TruthTable sample_balanced(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_balanced: need at least one input bit");
  if (n > kMaxStateQubits) throw std::invalid_argument("sample_balanced: exceeds state cap");
  const std::uint64_t slots = std::uint64_t{1} << n;
  TruthTable tt;
  tt.n = n;
  tt.values.assign(slots, 0);
  std::fill(tt.values.begin(), tt.values.begin() + slots / 2, std::uint8_t{1});
  // Fisher-Yates with an explicit modulo draw so the sequence is identical
  // across standard library implementations.
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = slots - 1; i > 0; --i) {
    const std::uint64_t j = rng() % (i + 1);
    std::swap(tt.values[i], tt.values[j]);
  }
  return tt;
}

namespace {

std::vector<std::uint8_t> hex_to_bits(const std::string& digits) {
  std::vector<std::uint8_t> bits;
  bits.reserve(digits.size() * 4);
  for (char c : digits) {
    int v;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
    else throw std::invalid_argument("parse_truth_table: illegal hex digit");
    for (int b = 3; b >= 0; --b) bits.push_back((v >> b) & 1);
  }
  return bits;
}

}  // namespace

TruthTable parse_truth_table(const std::string& text, std::optional<int> expect_n) {
  std::vector<std::uint8_t> bits;
  if (text.rfind("0x", 0) == 0 || text.rfind("0X", 0) == 0) {
    if (text.size() == 2) throw std::invalid_argument("parse_truth_table: empty hex literal");
    bits = hex_to_bits(text.substr(2));
  } else {
    bits.reserve(text.size());
    for (char c : text) {
      if (c != '0' && c != '1') {
        throw std::invalid_argument("parse_truth_table: illegal character");
      }
      bits.push_back(c == '1');
    }
  }
  const std::size_t len = bits.size();
  if (len < 2 || !std::has_single_bit(len)) {
    throw std::invalid_argument("parse_truth_table: length must be a power of two >= 2");
  }
  TruthTable tt;
  tt.n = std::countr_zero(len);
  tt.values = std::move(bits);
  if (expect_n && *expect_n != tt.n) {
    throw std::invalid_argument("parse_truth_table: declared size does not match text");
  }
  return tt;
}

std::string format_truth_table(const TruthTable& tt) {
  check_table(tt);
  std::string out;
  out.reserve(tt.values.size());
  for (auto v : tt.values) out.push_back(v ? '1' : '0');
  return out;
}

}  // namespace djsim
