#pragma once

// Verification suites shared by the CLI and the acceptance runner. Each one
// collects violations instead of stopping at the first.

#include <cstdint>
#include <string>
#include <vector>

namespace sylow {

struct VerifyResult {
  std::string name;
  std::uint64_t checks = 0;
  std::vector<std::string> violations;
  /// One-line human summary.
  std::string summary;

  bool ok() const { return violations.empty(); }
};

VerifyResult verify_suite_lemma_div(std::uint64_t x_max = 200, std::uint64_t f_max = 64, std::uint64_t l_max = 19);
VerifyResult verify_suite_divcyclo(std::uint64_t q_max = 50, int e_max = 60, std::uint64_t l_max = 19);
VerifyResult verify_suite_reduction(const std::vector<int>& moduli = {3, 4, 5, 6, 7, 8, 9}, bool parallel = true);
/// Enumerated orders of the oracle catalog against the generic order.
VerifyResult verify_suite_order_oracle(bool parallel = true);
/// Sylow orders, abelian verdicts and invariants against the oracle, l <= l_max.
VerifyResult verify_suite_sylow_oracle(std::uint64_t l_max = 13);
/// Eigenspace maxima, |N/C| and W-conjugacy of witness kernels for every type
/// with |W| <= w_max.
VerifyResult verify_suite_coset(std::uint64_t w_max = 1152);
/// The descent examples, including x^2 + 4 -> x^4 + 4.
VerifyResult verify_suite_descent();
/// Cyclic torus structure on every cyclotomic factor at rank <= max_rank and
/// the mod-m kernel configurations.
VerifyResult verify_suite_lattice(int max_rank = 4);
/// check_valuation_identity over all types of rank <= max_rank.
VerifyResult verify_suite_valuation(int max_rank = 8, std::uint64_t l_max = 100);
/// Faithful action of Sylow subgroups of W_Phi on the torus l-part.
VerifyResult verify_suite_faithful();

/// Names accepted by run_suite.
const std::vector<std::string>& suite_names();
VerifyResult run_suite(const std::string& name);

} // namespace sylow
