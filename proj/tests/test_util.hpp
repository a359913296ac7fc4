#pragma once

#include <cstdint>
#include <random>

#include "djsim/oracle.hpp"
#include "djsim/separability.hpp"
#include "djsim/tensor.hpp"

namespace djsim::testutil {

inline std::uint64_t scatter(std::uint64_t packed, const std::vector<int>& qubits) {
  std::uint64_t x = 0;
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    x |= ((packed >> i) & 1u) << qubits[i];
  }
  return x;
}

// Independent separability oracle: exhaustive search over every sign-factor
// assignment (u fixed to +1 at index 0, the global sign lives in v).
inline bool brute_force_separable(const SignDiagonal& d, const QubitCut& cut) {
  const std::uint64_t dim_a = std::uint64_t{1} << cut.side_a.size();
  const std::uint64_t dim_b = std::uint64_t{1} << cut.side_b.size();
  for (std::uint64_t ua = 0; ua < (std::uint64_t{1} << (dim_a - 1)); ++ua) {
    for (std::uint64_t vb = 0; vb < (std::uint64_t{1} << dim_b); ++vb) {
      bool ok = true;
      for (std::uint64_t a = 0; a < dim_a && ok; ++a) {
        const int u = (a == 0) ? 1 : (((ua >> (a - 1)) & 1u) ? -1 : 1);
        for (std::uint64_t b = 0; b < dim_b && ok; ++b) {
          const int v = ((vb >> b) & 1u) ? -1 : 1;
          ok = u * v == d.signs[scatter(a, cut.side_a) | scatter(b, cut.side_b)];
        }
      }
      if (ok) return true;
    }
  }
  return false;
}

// Arbitrary (not necessarily balanced) table with seeded bits.
inline TruthTable random_table(int n, std::mt19937_64& rng) {
  TruthTable tt;
  tt.n = n;
  tt.values.resize(std::size_t{1} << n);
  for (auto& v : tt.values) v = static_cast<std::uint8_t>(rng() & 1u);
  return tt;
}

}  // namespace djsim::testutil
