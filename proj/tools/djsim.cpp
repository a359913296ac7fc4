#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "djsim/algorithms.hpp"
#include "djsim/oracle.hpp"
#include "djsim/separability.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;
constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitPromiseViolation = 3;

// "random:N:seed", "constant:N:v", or truth-table text.
djsim::TruthTable parse_oracle_spec(const std::string& spec) {
  if (spec.rfind("random:", 0) == 0 || spec.rfind("constant:", 0) == 0) {
    std::stringstream ss(spec);
    std::string kind, n_str, arg_str;
    std::getline(ss, kind, ':');
    std::getline(ss, n_str, ':');
    std::getline(ss, arg_str, ':');
    if (n_str.empty() || arg_str.empty()) {
      throw std::invalid_argument("oracle: expected " + kind + ":N:" +
                                  (kind == "random" ? "seed" : "v"));
    }
    const int n = std::stoi(n_str);
    if (kind == "random") {
      return djsim::sample_balanced(n, std::stoull(arg_str));
    }
    return djsim::constant_table(n, std::stoi(arg_str));
  }
  return djsim::parse_truth_table(spec);
}

json report_to_json(const djsim::RunReport& r) {
  json j;
  j["method"] = djsim::method_name(r.method);
  j["decision"] = djsim::decision_name(r.decision);
  if (r.p_zero) j["p_zero"] = *r.p_zero;
  j["value_queries"] = r.value_queries;
  j["parity_queries"] = r.parity_queries;
  if (r.product_check) j["product_check"] = *r.product_check;
  return j;
}

void print_report_text(const djsim::RunReport& r, std::ostream& os) {
  os << djsim::method_name(r.method) << ": " << djsim::decision_name(r.decision);
  if (r.p_zero) os << "  p_zero=" << *r.p_zero;
  if (r.value_queries) os << "  value_queries=" << r.value_queries;
  if (r.parity_queries) os << "  parity_queries=" << r.parity_queries;
  if (r.product_check) os << "  product_check=" << *r.product_check;
  os << "\n";
}

std::string opt_to_csv(const std::optional<double>& v) {
  return v ? std::to_string(*v) : "";
}

int cmd_run(const std::string& oracle_spec, const std::string& method, bool strict,
            const std::string& format) {
  const djsim::TruthTable tt = parse_oracle_spec(oracle_spec);

  std::vector<djsim::RunReport> reports;
  if (method == "refined" || method == "all") reports.push_back(djsim::refined_dj(tt, strict));
  if (method == "existing" || method == "all") reports.push_back(djsim::existing_dj(tt, strict));
  if (method == "naive" || method == "all") reports.push_back(djsim::classical_naive(tt));
  if (method == "parity" || method == "all") reports.push_back(djsim::classical_parity(tt));

  bool violated = false;
  for (const auto& r : reports) {
    violated = violated || r.decision == djsim::Decision::PromiseViolated;
  }

  if (format == "json") {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "run";
    j["oracle"] = djsim::format_truth_table(tt);
    j["n"] = tt.n;
    j["class"] = djsim::function_class_name(djsim::classify(tt));
    j["strict"] = strict;
    j["reports"] = json::array();
    for (const auto& r : reports) j["reports"].push_back(report_to_json(r));
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "method,decision,p_zero,value_queries,parity_queries,product_check\n";
    for (const auto& r : reports) {
      std::cout << djsim::method_name(r.method) << ',' << djsim::decision_name(r.decision)
                << ',' << opt_to_csv(r.p_zero) << ',' << r.value_queries << ','
                << r.parity_queries << ','
                << (r.product_check ? std::to_string(*r.product_check) : "") << "\n";
    }
  } else {
    std::cout << "oracle " << djsim::format_truth_table(tt) << " (n=" << tt.n << ", "
              << djsim::function_class_name(djsim::classify(tt)) << ")\n";
    for (const auto& r : reports) print_report_text(r, std::cout);
  }
  return violated ? kExitPromiseViolation : kExitOk;
}

int cmd_census(int n, int workers, const std::string& format) {
  const djsim::CensusReport rep = djsim::census(n, workers);

  if (format == "json") {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "census";
    j["n"] = rep.n;
    j["total_balanced"] = rep.total_balanced;
    j["per_qubit_separable"] = rep.per_qubit_separable;
    j["fully_product"] = rep.fully_product;
    j["always_unentangled_qubits"] = rep.always_unentangled_qubits;
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "n,qubit,separable_balanced,total_balanced,fully_product\n";
    for (int m = 0; m < rep.n; ++m) {
      std::cout << rep.n << ',' << m << ',' << rep.per_qubit_separable[m] << ','
                << rep.total_balanced << ",\n";
    }
    std::cout << rep.n << ",all,," << rep.total_balanced << ',' << rep.fully_product << "\n";
  } else {
    std::cout << "census n=" << rep.n << ": " << rep.total_balanced << " balanced tables\n";
    for (int m = 0; m < rep.n; ++m) {
      std::cout << "  qubit " << m << " separable for " << rep.per_qubit_separable[m]
                << "/" << rep.total_balanced << "\n";
    }
    std::cout << "  fully product: " << rep.fully_product << "\n";
    std::cout << "  always unentangled qubits:";
    if (rep.always_unentangled_qubits.empty()) std::cout << " none";
    for (int m : rep.always_unentangled_qubits) std::cout << ' ' << m;
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_factor(const std::string& oracle_spec, const std::vector<int>& cut_qubits,
               const std::string& format) {
  const djsim::TruthTable tt = parse_oracle_spec(oracle_spec);
  const djsim::SignDiagonal d = djsim::phase_oracle(tt);

  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "factor";
  j["oracle"] = djsim::format_truth_table(tt);
  j["n"] = tt.n;

  std::ostringstream text;
  text << "oracle " << djsim::format_truth_table(tt) << " (n=" << tt.n << ")\n";

  if (!cut_qubits.empty()) {
    std::vector<int> rest;
    for (int q = 0; q < tt.n; ++q) {
      if (std::find(cut_qubits.begin(), cut_qubits.end(), q) == cut_qubits.end()) {
        rest.push_back(q);
      }
    }
    const djsim::QubitCut cut(cut_qubits, rest);  // throws on malformed cut
    const djsim::FactorResult r = djsim::factor_cut(d, cut);
    j["cut"] = cut_qubits;
    j["separable"] = r.separable;
    if (r.separable) {
      j["factor_a"] = r.factor_a;
      j["factor_b"] = r.factor_b;
      text << "cut: separable\n";
    } else {
      j["witness"] = r.witness;
      text << "cut: entangled, witness (" << r.witness[0] << ',' << r.witness[1] << ','
           << r.witness[2] << ',' << r.witness[3] << ")\n";
    }
  } else {
    const djsim::FullFactorization f = djsim::full_factorization(d);
    j["fully_product"] = f.product;
    if (f.product) {
      j["global_sign"] = f.global_sign;
      j["qubit_signs"] = f.qubit_signs;
      text << "fully product, global sign " << (f.global_sign > 0 ? "+1" : "-1") << "\n";
    } else {
      j["failing_qubit"] = f.failing_qubit;
      text << "not a product; first failing cut at qubit " << f.failing_qubit << "\n";
    }
    if (tt.n == 2 && djsim::classify(tt) == djsim::FunctionClass::Balanced) {
      const djsim::N2Factors cf = djsim::n2_closed_form(tt);
      // Closed-form factors must reproduce the oracle diagonal entrywise.
      bool agrees = true;
      for (std::uint64_t x = 0; x < d.size(); ++x) {
        agrees = agrees && d.signs[x] == cf.u1[(x >> 1) & 1] * cf.u0[x & 1];
      }
      j["closed_form"] = {{"u1", cf.u1}, {"u0", cf.u0}};
      j["closed_form_agrees"] = agrees;
      if (!agrees) {
        std::cerr << "closed-form factors disagree with oracle diagonal\n";
        return kExitInvalidInput;
      }
      text << "closed form: u1=(" << cf.u1[0] << ',' << cf.u1[1] << ") u0=(" << cf.u0[0]
           << ',' << cf.u0[1] << ") agrees\n";
    }
  }

  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "key,value\n";
    for (const auto& [k, v] : j.items()) std::cout << k << ',' << v.dump() << "\n";
  } else {
    std::cout << text.str();
  }
  return kExitOk;
}

int cmd_witness(int n, int qubit, const std::string& format) {
  const std::optional<djsim::TruthTable> w = djsim::find_witness(n, qubit);

  if (format == "json") {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "witness";
    j["n"] = n;
    j["qubit"] = qubit;
    j["witness_exists"] = w.has_value();
    j["witness"] = w ? json(djsim::format_truth_table(*w)) : json(nullptr);
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "n,qubit,witness_exists,witness\n";
    std::cout << n << ',' << qubit << ',' << (w ? "true" : "false") << ','
              << (w ? djsim::format_truth_table(*w) : "") << "\n";
  } else {
    if (w) {
      std::cout << "n=" << n << " qubit " << qubit << ": entangling balanced oracle "
                << djsim::format_truth_table(*w) << "\n";
    } else {
      std::cout << "n=" << n << " qubit " << qubit
                << ": no witness exists; every balanced oracle is separable\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deutsch problem simulator and oracle separability analyzer"};
  app.require_subcommand(1);

  std::string format = "json";

  auto* run = app.add_subcommand("run", "Run decision procedures on one oracle");
  std::string run_method = "all";
  std::string run_oracle;
  bool run_strict = false;
  run->add_option("--method", run_method, "refined|existing|naive|parity|all")
      ->check(CLI::IsMember({"refined", "existing", "naive", "parity", "all"}));
  run->add_option("--oracle", run_oracle,
                  "truth-table text, random:N:seed, or constant:N:v")
      ->required();
  run->add_flag("--strict", run_strict, "reject promise violations (exit 3)");
  run->add_option("--format", format, "json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  auto* cen = app.add_subcommand("census", "Separability census over balanced tables");
  int cen_n = 3;
  int cen_workers = 1;
  cen->add_option("--n", cen_n, "register size (2..4)")->required();
  cen->add_option("--workers", cen_workers, "worker thread count");
  cen->add_option("--format", format, "json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  auto* fac = app.add_subcommand("factor", "Tensor-factor a phase oracle");
  std::string fac_oracle;
  std::vector<int> fac_cut;
  fac->add_option("--oracle", fac_oracle, "truth-table text")->required();
  fac->add_option("--cut", fac_cut, "qubits on side A of the cut");
  fac->add_option("--format", format, "json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  auto* wit = app.add_subcommand("witness", "Find an entangling balanced oracle");
  int wit_n = 3;
  int wit_qubit = 0;
  wit->add_option("--n", wit_n, "register size")->required();
  wit->add_option("--qubit", wit_qubit, "qubit to test")->required();
  wit->add_option("--format", format, "json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  try {
    app.parse(argc, argv);
    if (run->parsed()) return cmd_run(run_oracle, run_method, run_strict, format);
    if (cen->parsed()) return cmd_census(cen_n, cen_workers, format);
    if (fac->parsed()) return cmd_factor(fac_oracle, fac_cut, format);
    if (wit->parsed()) return cmd_witness(wit_n, wit_qubit, format);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}
