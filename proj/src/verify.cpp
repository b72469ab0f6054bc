#include "sylow/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "sylow/cyclotomic.hpp"
#include "sylow/lattice_engine.hpp"
#include "sylow/oracle.hpp"
#include "sylow/order_engine.hpp"
#include "sylow/sylow_analyzer.hpp"

namespace sylow {

namespace {

void absorb(VerifyResult& r, const SuiteReport& s) {
  r.checks += s.checks;
  r.violations.insert(r.violations.end(), s.violations.begin(), s.violations.end());
}

std::string join(const std::vector<BigInt>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + "]";
}

// Runs body, turning a thrown Error into a violation.
template <class F>
void guarded(VerifyResult& r, const std::string& what, F&& body) {
  try {
    body();
  } catch (const Error& e) {
    r.violations.push_back(what + ": " + e.what());
  }
}

} // namespace

VerifyResult verify_suite_lemma_div(std::uint64_t x_max, std::uint64_t f_max, std::uint64_t l_max) {
  VerifyResult r{"lemma-div", 0, {}, {}};
  absorb(r, verify_lemma_div(x_max, f_max, l_max));
  r.summary = std::to_string(r.checks) + " (x, f, l) triples";
  return r;
}

VerifyResult verify_suite_divcyclo(std::uint64_t q_max, int e_max, std::uint64_t l_max) {
  VerifyResult r{"divcyclo", 0, {}, {}};
  const SuiteReport s = verify_divcyclo(q_max, e_max, l_max);
  absorb(r, s);
  if (s.special_branch == 0) r.violations.push_back("the b = -1 branch (l = d = 2) was never exercised");
  r.summary = std::to_string(r.checks) + " (q, e, l) triples, " + std::to_string(s.special_branch) +
              " on the l = d = 2 branch";
  return r;
}

VerifyResult verify_suite_reduction(const std::vector<int>& moduli, bool parallel) {
  VerifyResult r{"reduction", 0, {}, {}};
  const auto samples = reduction_samples();
  for (int m : moduli) absorb(r, verify_reduction_lemma(m, samples, parallel));
  r.summary = std::to_string(samples.size()) + " sample matrices, " + std::to_string(moduli.size()) + " moduli";
  return r;
}

VerifyResult verify_suite_order_oracle(bool parallel) {
  VerifyResult r{"order-oracle", 0, {}, {}};
  for (const auto& spec : oracle_catalog()) {
    guarded(r, spec.to_string(), [&] {
      const FiniteGroup g = enumerate_group(spec, parallel);
      const BigInt predicted = evaluate_order(generic_order(GroupSpec{{spec.lie_type()}}), spec.qspec());
      ++r.checks;
      if (predicted != static_cast<unsigned long>(g.order()))
        r.violations.push_back(spec.to_string() + ": enumerated " + std::to_string(g.order()) + ", formula " +
                               predicted.get_str());
    });
  }
  r.summary = std::to_string(r.checks) + " groups enumerated";
  return r;
}

VerifyResult verify_suite_sylow_oracle(std::uint64_t l_max) {
  VerifyResult r{"sylow-oracle", 0, {}, {}};
  for (const auto& spec : oracle_catalog()) {
    guarded(r, spec.to_string(), [&] {
      const FiniteGroup g = enumerate_group(spec);
      const SimpleFactor f = spec.lie_type();
      const QSpec q = spec.qspec();
      for (std::uint64_t l : primes_up_to(l_max)) {
        if (l == q.p || g.order() % l != 0) continue;
        const std::string tag = spec.to_string() + ", l = " + std::to_string(l);
        const SylowReport rep = analyze(f, q, l);
        const Subgroup p = sylow_subgroup(g, l);
        const bool ab = is_abelian(g, p);
        ++r.checks;
        if (rep.sylow_order != static_cast<unsigned long>(p.elements.size()))
          r.violations.push_back(tag + ": Sylow order " + std::to_string(p.elements.size()) + ", predicted " +
                                 rep.sylow_order.get_str());
        if (rep.abelian != ab)
          r.violations.push_back(tag + ": oracle abelian = " + std::to_string(ab) + ", predicted " +
                                 std::to_string(rep.abelian));
        if (ab && rep.D_ell.size() == 1) {
          const auto inv = abelian_invariants(g, p, l);
          if (inv != rep.torus_part)
            r.violations.push_back(tag + ": invariants " + join(inv) + ", torus part " + join(rep.torus_part));
        }
      }
    });
  }
  r.summary = std::to_string(r.checks) + " (group, l) pairs";
  return r;
}

namespace {

// Roots whose eigenspaces are examined for a factor: the canonical roots of
// the order factors and, for integral q, zeta_d for every d dividing a degree.
std::vector<RootOfUnity> coset_roots(const SimpleFactor& f) {
  std::set<RootOfUnity> roots;
  for (const auto& of : generic_order(f).factors) roots.insert(of.id.root);
  if (!f.very_twisted)
    for (const auto& gd : generalized_degrees(f))
      for (int d = 1; d <= gd.d; ++d)
        if (gd.d % d == 0) roots.insert(RootOfUnity::primitive(d));
  return {roots.begin(), roots.end()};
}

} // namespace

VerifyResult verify_suite_coset(std::uint64_t w_max) {
  VerifyResult r{"coset", 0, {}, {}};
  std::uint64_t types = 0;
  for (const auto& f : all_factors(8)) {
    if (weyl_order(f) > static_cast<unsigned long>(w_max)) continue;
    ++types;
    const WeylGroup& w = weyl_group(f);
    const QSpec q = canonical_q(f);
    const LatticeRep rep = build_rep(f, q);
    for (const auto& zeta : coset_roots(f)) {
      const std::string tag = f.to_string() + ", zeta = " + zeta.to_string();
      const auto a = a_zeta(generalized_degrees(f), zeta);
      guarded(r, tag, [&] {
        if (a.empty()) {
          // No eigenvalue q*zeta anywhere in the coset.
          const ZPoly p = factor_for_root(f, zeta).normalized(q);
          const auto mults = eigenspace_multiplicities(w.elements, rep.fstar, p, true);
          ++r.checks;
          if (*std::max_element(mults.begin(), mults.end()) != 0)
            r.violations.push_back(tag + ": eigenvalue present although a(zeta) is empty");
          return;
        }
        const EigenspaceSearch es = max_eigenspace_search(f, zeta, q);
        const NormalizerQuotient nq = normalizer_quotient(f, zeta, es.witness, q);
        r.checks += 2;
        // Every witness kernel lies in the W-orbit of the first one.
        std::set<std::string> orbit;
        for (const auto& v : w.elements) orbit.insert(lattice_key(v.to_int() * nq.basis));
        for (int idx : es.witnesses) {
          const SmallMat m = w.elements[static_cast<std::size_t>(idx)] * rep.fstar;
          const IntMatrix b = saturated_kernel(es.normalized, m);
          ++r.checks;
          if (!orbit.contains(lattice_key(b)))
            r.violations.push_back(tag + ": witness " + w.words[static_cast<std::size_t>(idx)] +
                                   " has a kernel outside the W-orbit");
        }
      });
    }
  }
  r.summary = std::to_string(types) + " types, " + std::to_string(r.checks) + " checks";
  return r;
}

VerifyResult verify_suite_descent() {
  VerifyResult r{"descent", 0, {}, {}};
  guarded(r, "B2 descent", [&] {
    const SimpleFactor b2 = parse_factor("B2");
    const DescentCheck dc = descent_charpoly_check(b2, 2, "12", QSpec{2, 1, 1});
    r.checks += 3;
    if (!(dc.base == ZPoly{4, 0, 1})) r.violations.push_back("B2 Coxeter: base polynomial " + dc.base.to_string());
    if (!(dc.lifted == ZPoly{4, 0, 0, 0, 1})) r.violations.push_back("B2 descent: lifted " + dc.lifted.to_string());
    std::vector<ZPoly> fs;
    for (const auto& cf : dc.lifted_factors) fs.push_back(cf.poly);
    if (fs != std::vector<ZPoly>{ZPoly{2, -2, 1}, ZPoly{2, 2, 1}})
      r.violations.push_back("B2 descent: x^4 + 4 did not split as (x^2-2x+2)(x^2+2x+2)");
    // Torus on the two factor sublattices.
    const RootDatum rd = root_datum(b2);
    const SmallMat big = descent_lift(word_matrix(rd, "12"), 2) * descent_frobenius(frobenius_matrix(rd, {2, 1, 1}), 2);
    const auto t_plus = torus_fixed_points(big, saturated_kernel(ZPoly{2, 2, 1}, big));
    const auto t_minus = torus_fixed_points(big, saturated_kernel(ZPoly{2, -2, 1}, big));
    r.checks += 2;
    if (t_plus.invariants != std::vector<BigInt>{5}) r.violations.push_back("x^2+2x+2 torus " + join(t_plus.invariants));
    if (!t_minus.invariants.empty()) r.violations.push_back("x^2-2x+2 torus " + join(t_minus.invariants));
  });
  guarded(r, "A1 descent", [&] {
    const DescentCheck dc = descent_charpoly_check(parse_factor("A1"), 2, "", QSpec{3, 1, 1});
    ++r.checks;
    if (!(dc.lifted == ZPoly{-3, 0, 1})) r.violations.push_back("A1 descent: lifted " + dc.lifted.to_string());
  });
  guarded(r, "A2 descent", [&] {
    const DescentCheck dc = descent_charpoly_check(parse_factor("A2"), 3, "12", QSpec{2, 1, 1});
    ++r.checks;
    if (!(dc.base == ZPoly{4, 2, 1}) || !(dc.lifted == ZPoly{4, 0, 0, 2, 0, 0, 1}))
      r.violations.push_back("A2 descent: " + dc.base.to_string() + " -> " + dc.lifted.to_string());
  });
  // Every rank <= 3 element under descent n = 2, 3.
  for (const auto& f : all_factors(3)) {
    if (f.very_twisted) continue;
    const WeylGroup& w = weyl_group(f);
    for (int n : {2, 3})
      for (const auto& word : w.words)
        guarded(r, f.to_string() + " descent " + std::to_string(n), [&] {
          descent_charpoly_check(f, n, word, QSpec{2, 1, 1});
          ++r.checks;
        });
  }
  r.summary = std::to_string(r.checks) + " descent checks";
  return r;
}

VerifyResult verify_suite_lattice(int max_rank) {
  VerifyResult r{"lattice", 0, {}, {}};
  for (const auto& f : all_factors(max_rank)) {
    if (f.very_twisted) continue;
    const WeylGroup& w = weyl_group(f);
    for (std::uint64_t qv : {2, 3}) {
      const QSpec q{qv, 1, 1};
      const LatticeRep rep = build_rep(f, q);
      for (std::size_t i = 0; i < w.elements.size(); ++i) {
        const SmallMat m = w.elements[i] * rep.fstar;
        const std::string tag = f.to_string() + ", q = " + std::to_string(qv) + ", w = " + w.words[i];
        guarded(r, tag, [&] {
          const auto full = torus_fixed_points(m);
          ++r.checks;
          if (full.order() != abs(charpoly(m).eval(1)))
            r.violations.push_back(tag + ": torus order differs from |det(wF* - 1)|");
          for (const auto& cf : char_poly_factored(m, q)) {
            if (!cf.id || cf.id->is_named()) continue;
            const auto t = torus_fixed_points(m, saturated_kernel(cf.poly, m));
            std::vector<BigInt> expect;
            const BigInt v = cf.id->value(q);
            if (v > 1) expect.assign(static_cast<std::size_t>(cf.mult), v);
            ++r.checks;
            if (t.invariants != expect)
              r.violations.push_back(tag + ", " + cf.id->name() + ": invariants " + join(t.invariants) +
                                     ", expected " + join(expect));
          }
        });
      }
    }
  }
  struct Config {
    const char* type;
    QSpec q;
    const char* word;
    int d;
    std::uint64_t m;
    std::vector<BigInt> expect;
  };
  const std::vector<Config> configs{{"A1", {3, 1, 1}, "1", 2, 4, {4}},
                                    {"A2", {2, 1, 1}, "12", 3, 7, {7}},
                                    {"B2", {2, 1, 1}, "1212", 2, 3, {3, 3}}};
  for (const auto& c : configs) {
    const std::string tag = std::string("mod-m ") + c.type + ", m = " + std::to_string(c.m);
    guarded(r, tag, [&] {
      const LatticeRep rep = build_rep(parse_factor(c.type), c.q);
      const ModMCheck mc = mod_m_kernel_check(rep, c.word, CycFactorId::cyclo(c.d), c.m);
      ++r.checks;
      if (mc.quotient_invariants != c.expect)
        r.violations.push_back(tag + ": quotient " + join(mc.quotient_invariants));
    });
  }
  r.summary = std::to_string(r.checks) + " lattice checks";
  return r;
}

VerifyResult verify_suite_valuation(int max_rank, std::uint64_t l_max) {
  VerifyResult r{"valuation", 0, {}, {}};
  std::map<std::string, std::uint64_t> failing;
  for (const auto& f : all_factors(max_rank)) {
    std::vector<QSpec> qs;
    if (f.very_twisted) {
      for (int a = 1; a <= 5; a += 2) qs.push_back({f.forced_p(), 2, a});
    } else {
      for (std::uint64_t p : {2, 3, 5, 7})
        for (int a = 1; a <= 4; ++a) qs.push_back({p, 1, a});
    }
    for (const auto& q : qs)
      for (std::uint64_t l : primes_up_to(l_max)) {
        if (l == q.p) continue;
        ++r.checks;
        try {
          check_valuation_identity(f, q, l);
          const SylowReport rep = analyze(f, q, l);
          const BigInt order = evaluate_order(generic_order(f), q);
          if (order % rep.sylow_order != 0 || (order / rep.sylow_order) % static_cast<unsigned long>(l) == 0)
            throw VerificationFailure("sylow_order is not the l-part of the order");
          if (rep.divides && rep.exception != ExceptionClass::Ree2G2_l2 && rep.abelian != (rep.D_ell.size() == 1))
            throw VerificationFailure("abelian verdict disagrees with |D(l)|");
        } catch (const Error& e) {
          ++failing[f.to_string() + " l=" + std::to_string(l)];
          if (r.violations.size() < 50) r.violations.push_back(e.what());
        }
      }
  }
  std::string s = std::to_string(r.checks) + " (type, q, l) triples";
  if (!failing.empty()) {
    std::uint64_t total = 0;
    s += "; failing:";
    for (const auto& [k, v] : failing) {
      s += " " + k + " (x" + std::to_string(v) + ")";
      total += v;
    }
    s += "; " + std::to_string(total) + " failures";
  }
  r.summary = s;
  return r;
}

VerifyResult verify_suite_faithful() {
  VerifyResult r{"faithful", 0, {}, {}};
  struct Case {
    const char* type;
    QSpec q;
    std::uint64_t l;
  };
  const std::vector<Case> cases{{"2A2", {2, 1, 1}, 3}, {"A2", {2, 1, 1}, 3}, {"A2", {2, 1, 2}, 3},
                                {"B2", {3, 1, 1}, 2},  {"F4", {2, 1, 1}, 3}};
  std::ostringstream detail;
  for (const auto& c : cases) {
    const std::string tag = std::string(c.type) + ", q = " + c.q.to_string() + ", l = " + std::to_string(c.l);
    guarded(r, tag, [&] {
      const FaithfulnessResult fr = check_faithful_ell_action(parse_factor(c.type), c.q, c.l);
      ++r.checks;
      detail << " " << c.type << ":" << fr.sylow_order << "/" << fr.quotient_order;
      if (!fr.faithful) r.violations.push_back(tag + ": Sylow subgroup of N/C acts unfaithfully");
    });
  }
  ++r.checks;
  try {
    check_faithful_ell_action(parse_factor("2G2"), QSpec{3, 2, 1}, 2);
    r.violations.push_back("2G2, l = 2 was not refused");
  } catch (const VerificationFailure& e) {
    r.violations.push_back(std::string("2G2, l = 2: ") + e.what());
  } catch (const Error&) {
  }
  r.summary = std::to_string(r.checks) + " cases (|Sylow|/|N/C|:" + detail.str() + "), 2G2/l=2 refused";
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lemma-div", "divcyclo", "reduction", "order-oracle", "sylow-oracle",
                                              "coset",     "descent",  "lattice",   "valuation",    "faithful"};
  return names;
}

VerifyResult run_suite(const std::string& name) {
  if (name == "lemma-div") return verify_suite_lemma_div();
  if (name == "divcyclo") return verify_suite_divcyclo();
  if (name == "reduction") return verify_suite_reduction();
  if (name == "order-oracle") return verify_suite_order_oracle();
  if (name == "sylow-oracle") return verify_suite_sylow_oracle();
  if (name == "coset") return verify_suite_coset();
  if (name == "descent") return verify_suite_descent();
  if (name == "lattice") return verify_suite_lattice();
  if (name == "valuation") return verify_suite_valuation();
  if (name == "faithful") return verify_suite_faithful();
  throw Error("unknown suite '" + name + "'");
}

} // namespace sylow
