#include <doctest.h>

#include "sylow/sylow_analyzer.hpp"

using namespace sylow;

namespace {
using Set = std::set<std::uint64_t>;
const QSpec q2{2, 1, 1};
const QSpec q3{3, 1, 1};
const QSpec s3{3, 2, 1};
} // namespace

TEST_CASE("D(l) examples") {
  CHECK(D_of_ell(parse_factor("A1"), q3, 2) == Set{1, 2});
  CHECK(D_of_ell(parse_factor("2A2"), q2, 3) == Set{2, 6});
  CHECK(D_of_ell(parse_factor("A2"), q2, 7) == Set{3});
  CHECK(D_of_ell(parse_factor("2G2"), s3, 2).size() == 2);
}

TEST_CASE("Ree group at l = 2") {
  const SylowReport r = analyze(parse_factor("2G2"), s3, 2);
  CHECK(r.abelian);
  CHECK(r.torus_part == std::vector<BigInt>{2, 2, 2});
  CHECK(r.torus_source == TorusSource::ReeTable);
  CHECK(r.D_ell.size() == 2);
  CHECK(r.w_phi_order == 6);
  CHECK(r.sylow_order == 8);
  CHECK(r.exception == ExceptionClass::Ree2G2_l2);
}

TEST_CASE("2F4 at l = 3") {
  const SylowReport r = analyze(parse_factor("2F4"), QSpec{2, 2, 1}, 3);
  CHECK(r.d_ell == 2);
  CHECK(r.chosen.id.name() == "P2,2");
  CHECK(r.n_phi == 2);
  CHECK(r.w_phi_order == 48);
  CHECK(r.sylow_order == 27);
  CHECK_FALSE(r.abelian);
}

TEST_CASE("2A2 at q = 2, l = 3") {
  const SylowReport r = analyze(parse_factor("2A2"), q2, 3);
  CHECK(r.d_ell == 2);
  CHECK(r.n_phi == 2);
  CHECK(r.w_phi_degrees == std::vector<int>{2, 3});
  CHECK(r.w_phi_order == 6);
  CHECK(r.sylow_order == 27);
  CHECK_FALSE(r.abelian);
}

TEST_CASE("abelian cases") {
  const SylowReport a = analyze(parse_factor("A2"), q2, 7);
  CHECK(a.abelian);
  CHECK(a.sylow_order == 7);
  CHECK(a.torus_part == std::vector<BigInt>{7});
  const SylowReport b = analyze(parse_factor("B2"), q2, 3);
  CHECK(b.abelian);
  CHECK(b.torus_part == std::vector<BigInt>{3, 3});
  CHECK(b.torus_source == TorusSource::Formula);
  const SylowReport c = analyze(parse_factor("2B2"), QSpec{2, 2, 3}, 13);
  CHECK(c.abelian);
  CHECK(c.torus_source == TorusSource::LatticeSnf);
  CHECK(c.torus_part == std::vector<BigInt>{13});
}

TEST_CASE("l not dividing the order") {
  const SylowReport r = analyze(parse_factor("A1"), q2, 5);
  CHECK_FALSE(r.divides);
  CHECK(r.sylow_order == 1);
  CHECK_THROWS_AS(analyze(parse_factor("A1"), q2, 2), Error);
  CHECK_THROWS_AS(analyze(parse_factor("A1"), q2, 4), Error);
}

TEST_CASE("valuation identity examples") {
  const auto a = check_valuation_identity(parse_factor("B2"), q2, 3);
  CHECK(a.lhs == 2);
  CHECK(a.holds());
  const auto b = check_valuation_identity(parse_factor("B2"), q2, 5);
  CHECK(b.lhs == 1);
  CHECK(b.holds());
  const auto c = check_valuation_identity(parse_factor("3D4"), q2, 3);
  CHECK(c.lhs == 4);
  CHECK(c.rhs == 4);
  const SylowReport r = analyze(parse_factor("3D4"), q2, 3);
  CHECK(r.exception == ExceptionClass::TriD4_l3);
  CHECK(r.correction_v == 3);
}

TEST_CASE("sylow order is the l-part of the order and D(l) contains d(l)") {
  for (const auto& f : all_factors(5)) {
    std::vector<QSpec> qs;
    if (f.very_twisted) qs = {QSpec{f.forced_p(), 2, 1}, QSpec{f.forced_p(), 2, 3}};
    else qs = {q2, q3, QSpec{5, 1, 1}, QSpec{2, 1, 2}};
    for (const QSpec& q : qs) {
      const BigInt order = evaluate_order(generic_order(f), q);
      for (std::uint64_t l : primes_up_to(31)) {
        if (l == q.p) continue;
        const SylowReport r = analyze(f, q, l);
        REQUIRE(r.sylow_order == l_part(order, l));
        if (!r.divides) continue;
        CHECK(r.D_ell.count(r.d_ell) == 1);
        if (r.exception == ExceptionClass::Ree2G2_l2) continue;
        CHECK(r.abelian == (r.D_ell.size() == 1));
        CHECK(static_cast<int>(r.w_phi_degrees.size()) == r.n_phi);
        BigInt w = 1;
        for (int d : r.w_phi_degrees) w *= d;
        CHECK(w == r.w_phi_order);
        BigInt t = 1;
        for (const auto& x : r.torus_part) t *= x;
        if (r.exception == ExceptionClass::None)
          CHECK(t == pow(BigInt(static_cast<unsigned long>(l)), r.v_torus));
      }
    }
  }
}

TEST_CASE("multi-factor groups merge orders only") {
  const GroupSylowReport g = analyze_group(parse_group("A1xB2"), q3, 2);
  REQUIRE(g.factors.size() == 2);
  CHECK(g.sylow_order == 1024);
  CHECK(g.order == 1244160);
  CHECK(g.factors[0].sylow_order * g.factors[1].sylow_order == g.sylow_order);
}

TEST_CASE("torus source names") {
  for (auto s : {TorusSource::None, TorusSource::Formula, TorusSource::LatticeSnf, TorusSource::ExceptionSnf,
                 TorusSource::ReeTable})
    CHECK(parse_torus_source(to_string(s)) == s);
}
