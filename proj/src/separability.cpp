#include "djsim/separability.hpp"

#include <stdexcept>
#include <thread>

namespace djsim {

namespace {

std::uint64_t scatter_bits(std::uint64_t packed, const std::vector<int>& qubits) {
  std::uint64_t x = 0;
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    x |= ((packed >> i) & 1u) << qubits[i];
  }
  return x;
}

void check_diag(const SignDiagonal& d) {
  if (d.n < 1 || d.signs.size() != d.size()) {
    throw std::invalid_argument("SignDiagonal: sign count must be 2^n");
  }
  for (int s : d.signs) {
    if (s != 1 && s != -1) throw std::invalid_argument("SignDiagonal: entries must be +-1");
  }
}

}  // namespace

FactorResult factor_cut(const SignDiagonal& d, const QubitCut& cut) {
  check_diag(d);
  if (cut.n_qubits() != d.n) {
    throw std::invalid_argument("factor_cut: cut does not match diagonal size");
  }
  const std::uint64_t dim_a = std::uint64_t{1} << cut.side_a.size();
  const std::uint64_t dim_b = std::uint64_t{1} << cut.side_b.size();
  const auto at = [&](std::uint64_t a, std::uint64_t b) {
    return d.signs[scatter_bits(a, cut.side_a) | scatter_bits(b, cut.side_b)];
  };

  // Rank-1 test against the reference row/column (a=0, b=0); signs are never
  // zero so the reference is always valid.
  const int d00 = at(0, 0);
  for (std::uint64_t a = 1; a < dim_a; ++a) {
    for (std::uint64_t b = 1; b < dim_b; ++b) {
      if (at(a, b) * d00 != at(a, 0) * at(0, b)) {
        FactorResult r;
        r.separable = false;
        r.witness = {0, a, 0, b};
        return r;
      }
    }
  }

  FactorResult r;
  r.separable = true;
  r.factor_a.reserve(dim_a);
  r.factor_b.reserve(dim_b);
  const bool sign_on_a = cut.side_a.front() == 0;  // qubit 0's side gets d00
  for (std::uint64_t a = 0; a < dim_a; ++a) {
    r.factor_a.push_back(sign_on_a ? at(a, 0) : at(a, 0) * d00);
  }
  for (std::uint64_t b = 0; b < dim_b; ++b) {
    r.factor_b.push_back(sign_on_a ? at(0, b) * d00 : at(0, b));
  }
  return r;
}

N2Factors n2_closed_form(const TruthTable& tt) {
  if (tt.n != 2) throw std::invalid_argument("n2_closed_form: requires n = 2");
  if (classify(tt) != FunctionClass::Balanced) {
    throw std::invalid_argument("n2_closed_form: requires a balanced table");
  }
  const auto sign = [&](int parity) { return parity % 2 ? -1 : +1; };
  N2Factors f;
  f.u1 = {1, sign(tt.values[0] + tt.values[2])};
  const int global = sign(tt.values[0]);
  f.u0 = {global, global * sign(tt.values[0] + tt.values[1])};
  return f;
}

FullFactorization full_factorization(const SignDiagonal& d) {
  check_diag(d);
  FullFactorization r;
  if (d.n == 1) {
    r.product = true;
    r.global_sign = d.signs[0];
    r.qubit_signs = {d.signs[0] * d.signs[1]};
    return r;
  }
  for (int m = 0; m < d.n; ++m) {
    if (!factor_cut(d, QubitCut::single(m, d.n)).separable) {
      r.product = false;
      r.failing_qubit = m;
      return r;
    }
  }
  // All single-qubit cuts separable, so the diagonal telescopes into
  // per-qubit signs.
  r.product = true;
  r.global_sign = d.signs[0];
  r.qubit_signs.reserve(d.n);
  for (int m = 0; m < d.n; ++m) {
    r.qubit_signs.push_back(d.signs[std::uint64_t{1} << m] * d.signs[0]);
  }
  // Reconstruction is exact by construction; verify anyway.
  for (std::uint64_t x = 0; x < d.size(); ++x) {
    int v = r.global_sign;
    for (int m = 0; m < d.n; ++m) {
      if ((x >> m) & 1u) v *= r.qubit_signs[m];
    }
    if (v != d.signs[x]) {
      throw std::logic_error("full_factorization: reconstruction mismatch");
    }
  }
  return r;
}

bool eq10_check(const TruthTable& tt) {
  if (tt.n != 2) throw std::invalid_argument("eq10_check: requires n = 2");
  return (tt.values[3] % 2) == ((tt.values[0] + tt.values[1] + tt.values[2]) % 2);
}

namespace {

struct CensusPartial {
  std::uint64_t total = 0;
  std::vector<std::uint64_t> per_qubit;
  std::uint64_t fully_product = 0;
};

CensusPartial census_chunk(const std::vector<TruthTable>& tables, std::size_t begin,
                           std::size_t end, int n) {
  CensusPartial p;
  p.per_qubit.assign(n, 0);
  for (std::size_t i = begin; i < end; ++i) {
    const SignDiagonal d = phase_oracle(tables[i]);
    ++p.total;
    bool all_cuts = true;
    for (int m = 0; m < n; ++m) {
      if (factor_cut(d, QubitCut::single(m, n)).separable) {
        ++p.per_qubit[m];
      } else {
        all_cuts = false;
      }
    }
    if (all_cuts && full_factorization(d).product) ++p.fully_product;
  }
  return p;
}

}  // namespace

CensusReport census(int n, int workers) {
  if (n < 2) throw std::invalid_argument("census: needs at least two qubits to cut");
  if (n > kMaxExhaustiveQubits) throw std::invalid_argument("census: capped at n = 4");
  if (workers < 1) throw std::invalid_argument("census: need at least one worker");

  const std::vector<TruthTable> tables = enumerate_balanced(n);
  const std::size_t per_worker = (tables.size() + workers - 1) / workers;

  std::vector<CensusPartial> partials(workers);
  std::vector<std::thread> threads;
  for (int w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(tables.size(), w * per_worker);
    const std::size_t end = std::min(tables.size(), begin + per_worker);
    threads.emplace_back(
        [&, w, begin, end] { partials[w] = census_chunk(tables, begin, end, n); });
  }
  for (auto& t : threads) t.join();

  CensusReport report;
  report.n = n;
  report.per_qubit_separable.assign(n, 0);
  for (const auto& p : partials) {
    report.total_balanced += p.total;
    report.fully_product += p.fully_product;
    for (int m = 0; m < n; ++m) report.per_qubit_separable[m] += p.per_qubit[m];
  }
  for (int m = 0; m < n; ++m) {
    if (report.per_qubit_separable[m] == report.total_balanced) {
      report.always_unentangled_qubits.push_back(m);
    }
  }
  return report;
}

std::optional<TruthTable> find_witness(int n, int qubit) {
  if (qubit < 0 || qubit >= n) throw std::invalid_argument("find_witness: qubit out of range");
  if (n <= 2) return std::nullopt;
  for (const TruthTable& tt : enumerate_balanced(n)) {
    if (!factor_cut(phase_oracle(tt), QubitCut::single(qubit, n)).separable) {
      return tt;
    }
  }
  return std::nullopt;
}

}  // namespace djsim
