#include <doctest.h>

#include "sylow/lattice_engine.hpp"
#include "sylow/order_engine.hpp"

using namespace sylow;

namespace {
const QSpec q2{2, 1, 1};
const QSpec q3{3, 1, 1};

SmallMat wf(const SimpleFactor& f, const std::string& word, const QSpec& q) {
  const LatticeRep rep = build_rep(f, q);
  return word_matrix(rep.datum, word) * rep.fstar;
}

std::vector<ZPoly> polys(const std::vector<CharFactor>& cf) {
  std::vector<ZPoly> out;
  for (const auto& c : cf) out.push_back(c.poly);
  return out;
}
} // namespace

TEST_CASE("characteristic polynomial factors") {
  const auto b2 = char_poly_factored(wf(parse_factor("B2"), "12", q2), q2);
  REQUIRE(b2.size() == 1);
  CHECK(b2[0].poly == ZPoly{4, 0, 1});
  REQUIRE(b2[0].id.has_value());
  CHECK(b2[0].id->name() == "P4");
  const auto a1 = char_poly_factored(wf(parse_factor("A1"), "", q3), q3);
  REQUIRE(a1.size() == 1);
  CHECK(a1[0].poly == ZPoly{-3, 1});

  const DescentCheck d = descent_charpoly_check(parse_factor("B2"), 2, "12", q2);
  CHECK(d.base == ZPoly{4, 0, 1});
  CHECK(d.lifted == ZPoly{4, 0, 0, 0, 1});
  CHECK(polys(d.lifted_factors) == std::vector<ZPoly>{ZPoly{2, -2, 1}, ZPoly{2, 2, 1}});
}

TEST_CASE("descent of scalars on characteristic polynomials") {
  const DescentCheck a1 = descent_charpoly_check(parse_factor("A1"), 2, "", QSpec{3, 1, 2});
  CHECK(a1.lifted == ZPoly{-9, 0, 1});
  const DescentCheck a2 = descent_charpoly_check(parse_factor("A2"), 3, "12", q2);
  CHECK(a2.base == ZPoly{4, 2, 1});
  CHECK(a2.lifted == ZPoly{4, 2, 1}.compose_power(3));
}

TEST_CASE("torus fixed points") {
  CHECK(torus_fixed_points(wf(parse_factor("A1"), "", q3)).invariants == std::vector<BigInt>{2});
  CHECK(torus_fixed_points(wf(parse_factor("B2"), "12", q2)).invariants == std::vector<BigInt>{5});
  CHECK(torus_fixed_points(wf(parse_factor("A2"), "", q2)).invariants.empty());
  CHECK(torus_fixed_points(wf(parse_factor("A2"), "12", q2)).invariants == std::vector<BigInt>{7});
  CHECK(torus_fixed_points(wf(parse_factor("B2"), "1212", q3)).invariants == std::vector<BigInt>{4, 4});

  const RootDatum rd = root_datum(parse_factor("B2"));
  const SmallMat big = descent_lift(word_matrix(rd, "12"), 2) * descent_frobenius(frobenius_matrix(rd, q2), 2);
  const IntMatrix k1 = saturated_kernel(ZPoly{2, 2, 1}, big);
  const IntMatrix k2 = saturated_kernel(ZPoly{2, -2, 1}, big);
  CHECK(k1.cols() == 2);
  CHECK(k2.cols() == 2);
  CHECK(torus_fixed_points(big, k1).invariants == std::vector<BigInt>{5});
  CHECK(torus_fixed_points(big, k2).invariants.empty());
}

TEST_CASE("saturated kernels") {
  const SmallMat w0 = wf(parse_factor("B2"), "1212", q2);
  CHECK(saturated_kernel(ZPoly{2, 1}, w0).cols() == 2);
  CHECK(saturated_kernel(ZPoly{-2, 1}, wf(parse_factor("A2"), "", q2)).cols() == 2);
  const SmallMat cox = wf(parse_factor("A2"), "12", q2);
  const IntMatrix k = saturated_kernel(ZPoly{4, 2, 1}, cox);
  CHECK(k.cols() == 2);
  CHECK(is_saturated(k));
  CHECK_THROWS_AS(saturated_kernel(ZPoly{-2, 1}, cox), Error);
}

TEST_CASE("torus order equals the characteristic polynomial at 1") {
  for (const auto& f : all_factors(3)) {
    if (f.very_twisted) continue;
    for (const QSpec& q : {q2, q3}) {
      const LatticeRep rep = build_rep(f, q);
      for (const auto& w : weyl_group(f).elements) {
        const SmallMat m = w * rep.fstar;
        REQUIRE(torus_fixed_points(m).order() == abs(charpoly(m).eval(1)));
      }
    }
  }
}

TEST_CASE("maximal eigenspaces") {
  const SimpleFactor f4 = parse_factor("F4");
  CHECK(max_eigenspace_search(f4, RootOfUnity::primitive(12), canonical_q(f4)).max_dim == 1);
  CHECK(max_eigenspace_search(f4, RootOfUnity::primitive(4), canonical_q(f4)).max_dim == 2);
  const SimpleFactor b2 = parse_factor("B2");
  const auto es = max_eigenspace_search(b2, RootOfUnity::minus_one(), canonical_q(b2));
  CHECK(es.max_dim == 2);
  CHECK(es.witness == weyl_group(b2).longest);
  CHECK(es.witnesses.size() == 1);
  std::uint64_t total = 0;
  for (const auto& [dim, count] : es.histogram) total += count;
  CHECK(total == 8);
}

TEST_CASE("normalizer quotients") {
  auto nc = [](const char* name, RootOfUnity z) {
    const SimpleFactor f = parse_factor(name);
    const QSpec q = canonical_q(f);
    const auto es = max_eigenspace_search(f, z, q);
    return normalizer_quotient(f, z, es.witness, q);
  };
  const auto b2 = nc("B2", RootOfUnity::minus_one());
  CHECK(b2.order == 8);
  CHECK(b2.centralizer_size == 1);
  CHECK(b2.actions.front().is_identity());
  CHECK(nc("A2", RootOfUnity::primitive(3)).order == 3);
  CHECK(nc("G2", RootOfUnity::minus_one()).order == 12);
  CHECK(nc("2A2", RootOfUnity::minus_one()).order == 6);
  CHECK(nc("2B2", RootOfUnity(3, 8)).order == 4);
  CHECK(nc("F4", RootOfUnity::primitive(4)).order == 96);
}

TEST_CASE("factor_for_root") {
  CHECK(factor_for_root(parse_factor("2B2"), RootOfUnity(3, 8)).name() == "P'2,4");
  CHECK(factor_for_root(parse_factor("2B2"), RootOfUnity(1, 8)).name() == "P''2,4");
  CHECK(factor_for_root(parse_factor("B2"), RootOfUnity::primitive(4)).name() == "P4");
}

TEST_CASE("faithful l-action") {
  CHECK(check_faithful_ell_action(parse_factor("2A2"), q2, 3).faithful);
  CHECK(check_faithful_ell_action(parse_factor("A2"), q2, 3).faithful);
  CHECK(check_faithful_ell_action(parse_factor("A2"), QSpec{2, 1, 2}, 3).faithful);
  CHECK(check_faithful_ell_action(parse_factor("B2"), q3, 2).faithful);
  CHECK(check_faithful_ell_action(parse_factor("B2"), q2, 3).faithful);
  CHECK(check_faithful_ell_action(parse_factor("F4"), q2, 3).faithful);
  const auto u = check_faithful_ell_action(parse_factor("2A2"), q2, 3);
  CHECK(u.quotient_order == 6);
  CHECK(u.sylow_order == 3);
  CHECK(u.ell_invariants == std::vector<BigInt>{3, 3});
  CHECK_THROWS_AS(check_faithful_ell_action(parse_factor("2G2"), QSpec{3, 2, 1}, 2), Error);
}

TEST_CASE("mod m kernels") {
  const auto a1 = mod_m_kernel_check(build_rep(parse_factor("A1"), q3), "1", CycFactorId::cyclo(2), 4);
  CHECK(a1.quotient_invariants == std::vector<BigInt>{4});
  const auto a2 = mod_m_kernel_check(build_rep(parse_factor("A2"), q2), "12", CycFactorId::cyclo(3), 7);
  CHECK(a2.kernel_size == 7);
  const auto b2 = mod_m_kernel_check(build_rep(parse_factor("B2"), q2), "1212", CycFactorId::cyclo(2), 3);
  CHECK(b2.quotient_invariants == std::vector<BigInt>{3, 3});
  CHECK(b2.actions_checked > 0);
}

TEST_CASE("reduction mod m") {
  SmallMat minus(3);
  for (int i = 0; i < 3; ++i) minus(i, i) = -1;
  CHECK(verify_reduction_lemma(3, {minus}).ok());
  CHECK_THROWS_AS(verify_reduction_lemma(2, {minus}), Error);
  // companion matrix of Phi_5
  SmallMat c(4);
  for (int i = 1; i < 4; ++i) c(i, i - 1) = 1;
  for (int i = 0; i < 4; ++i) c(i, 3) = -1;
  CHECK(charpoly(c) == cyclotomic_poly(5));
  const auto r = verify_reduction_lemma(5, {c});
  CHECK(r.ok());
  CHECK(r.checks == 1);
}

TEST_CASE("lattice keys identify equal lattices") {
  const IntMatrix a = IntMatrix::from_rows({{1, 0}, {1, 1}, {0, 1}});
  const IntMatrix b = IntMatrix::from_rows({{1, 1}, {2, 1}, {1, 0}});
  CHECK(lattice_key(a) == lattice_key(b));
  CHECK(lattice_key(a) != lattice_key(IntMatrix::from_rows({{1, 0}, {0, 1}, {0, 0}})));
}
