#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "sylow/oracle.hpp"
#include "sylow/order_engine.hpp"
#include "sylow/sylow_analyzer.hpp"
#include "sylow/verify.hpp"

using namespace sylow;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

void note(Outcome& o, bool ok, const std::string& what) {
  if (!ok) {
    o.pass = false;
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("mismatch: ") + what;
  }
}

void suite(Outcome& o, const VerifyResult& r) {
  o.detail += (o.detail.empty() ? "" : "; ") + r.name + " " + r.summary;
  if (!r.ok()) {
    o.pass = false;
    o.detail += " [first: " + r.violations.front() + "]";
  }
}

std::string degrees_text(const SimpleFactor& f) {
  std::string s = "{";
  for (const auto& g : generalized_degrees(f))
    s += (s.size() > 1 ? "," : "") + std::string("(") + std::to_string(g.d) + "," + (g.eps.is_one() ? "1" : "-1") + ")";
  return s + "}";
}

Outcome criterion1() {
  Outcome o;
  suite(o, verify_suite_order_oracle(true));
  return o;
}

Outcome criterion2() {
  Outcome o;
  note(o, generic_order(parse_factor("3D4")).to_string() == "q^12 * P1^2 * P2^2 * P3^2 * P6^2 * P12", "3D4 order");
  note(o, degrees_text(parse_factor("2B2")) == "{(2,1),(4,-1)}", "2B2 degrees");
  note(o, degrees_text(parse_factor("2G2")) == "{(2,1),(6,-1)}", "2G2 degrees");
  note(o, degrees_text(parse_factor("2F4")) == "{(2,1),(6,-1),(8,1),(12,-1)}", "2F4 degrees");
  note(o, generic_order(parse_factor("2F4")).to_string() ==
              "q^24 * P2,1^2 * P2,2^2 * P'2,4^2 * P''2,4^2 * P2,6 * P'2,12 * P''2,12",
       "2F4 order");
  note(o, generic_order(parse_factor("2B2")).to_string() == "q^4 * P2,1 * P'2,4 * P''2,4", "2B2 order");
  note(o, generic_order(parse_factor("2G2")).to_string() == "q^6 * P2,1 * P2,2 * P'2,6 * P''2,6", "2G2 order");
  if (o.pass) o.detail = "3D4, 2B2, 2G2, 2F4 factorizations and degree tables reproduced";
  return o;
}

Outcome criterion3() {
  Outcome o;
  const BigInt a = evaluate_order(generic_order(parse_factor("2B2")), QSpec{2, 2, 3});
  const BigInt b = evaluate_order(generic_order(parse_factor("2G2")), QSpec{3, 2, 1});
  const BigInt c = evaluate_order(generic_order(parse_factor("2F4")), QSpec{2, 2, 1});
  note(o, a == 29120, "2B2 " + a.get_str());
  note(o, b == 1512, "2G2 " + b.get_str());
  note(o, c == 35942400, "2F4 " + c.get_str());
  if (o.pass) o.detail = "29120, 1512, 35942400";
  return o;
}

Outcome criterion4() {
  Outcome o;
  suite(o, verify_suite_sylow_oracle(13));
  struct Case {
    MatrixGroupSpec spec;
    std::uint64_t l;
    std::size_t order;
    bool abelian;
    std::vector<BigInt> inv;
  };
  const std::vector<Case> cases{{{Family::SL, 2, 3}, 2, 8, false, {}},
                                {{Family::SL, 3, 2}, 7, 7, true, {7}},
                                {{Family::SU, 3, 2}, 3, 27, false, {}},
                                {{Family::Sp, 4, 2}, 3, 9, true, {3, 3}}};
  for (const auto& c : cases) {
    const FiniteGroup g = enumerate_group(c.spec);
    const Subgroup p = sylow_subgroup(g, c.l);
    const SylowReport r = analyze(c.spec.lie_type(), c.spec.qspec(), c.l);
    const std::string tag = c.spec.to_string() + "/l=" + std::to_string(c.l);
    note(o, p.elements.size() == c.order && r.sylow_order == static_cast<unsigned long>(c.order), tag + " order");
    note(o, is_abelian(g, p) == c.abelian && r.abelian == c.abelian, tag + " abelian flag");
    if (c.abelian) note(o, abelian_invariants(g, p, c.l) == c.inv, tag + " invariants");
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  suite(o, verify_suite_valuation(8, 100));
  return o;
}

Outcome criterion6() {
  Outcome o;
  suite(o, verify_suite_lemma_div(200, 64, 19));
  suite(o, verify_suite_divcyclo(50, 60, 19));
  suite(o, verify_suite_reduction({3, 4, 5, 6, 7, 8, 9}, true));
  return o;
}

Outcome criterion7() {
  Outcome o;
  suite(o, verify_suite_coset(1152));
  return o;
}

Outcome criterion8() {
  Outcome o;
  suite(o, verify_suite_lattice(4));
  suite(o, verify_suite_descent());
  return o;
}

Outcome criterion9() {
  Outcome o;
  suite(o, verify_suite_faithful());
  return o;
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"order oracle equivalence", criterion1},  {"factorization strings", criterion2},
      {"very twisted orders", criterion3},       {"Sylow verdict cross-check", criterion4},
      {"valuation identity sweep", criterion5},  {"lemma, divisibility and reduction suites", criterion6},
      {"coset eigenspace suite", criterion7},    {"lattice structure suite", criterion8},
      {"faithfulness suite", criterion9}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failed;
    std::printf("criterion %zu %s: %s (%.2f s) %s\n", i + 1, criteria[i].first.c_str(), o.pass ? "PASS" : "FAIL", secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
