#include <doctest.h>

#include "sylow/cyclotomic.hpp"

using namespace sylow;

namespace {
ZPoly x_pow_minus_one(int n) { return ZPoly::monomial(1, static_cast<unsigned>(n)) - ZPoly{1}; }
} // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == ZPoly{-1, 1});
  CHECK(cyclotomic_poly(2) == ZPoly{1, 1});
  CHECK(cyclotomic_poly(12) == ZPoly{1, 0, -1, 0, 1});
}

TEST_CASE("product of Phi_d over d | n is x^n - 1") {
  for (int n = 1; n <= 120; ++n) {
    ZPoly prod{1};
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) prod = prod * cyclotomic_poly(d);
    REQUIRE(prod == x_pow_minus_one(n));
    REQUIRE(cyclotomic_poly(n).degree() == euler_phi(n));
  }
}

TEST_CASE("decompose_cyclo_power examples") {
  auto ds = [](const std::vector<CycFactorId>& v) {
    std::vector<int> out;
    for (const auto& f : v) out.push_back(f.d);
    return out;
  };
  CHECK(ds(decompose_cyclo_power(1, 2)) == std::vector<int>{1, 2});
  CHECK(ds(decompose_cyclo_power(2, 2)) == std::vector<int>{4});
  CHECK(ds(decompose_cyclo_power(3, 6)) == std::vector<int>{9, 18});
}

TEST_CASE("decompose_cyclo_power multiplies back to Phi_d(x^n)") {
  for (int d = 1; d <= 24; ++d)
    for (int n = 1; n <= 8; ++n) {
      ZPoly prod{1};
      for (const auto& f : decompose_cyclo_power(d, n)) prod = prod * cyclotomic_poly(f.d);
      REQUIRE(prod == cyclotomic_poly(d).compose_power(static_cast<unsigned>(n)));
    }
}

TEST_CASE("named q-cyclotomic factors") {
  const auto p24 = parse_factor_name("P'2,4", 2);
  CHECK(quad_to_string(p24.poly()) == quad_to_string({QuadVal(1), QuadVal(2, 0, 1), QuadVal(1)}));
  CHECK(quad_equal(p24.poly(), {QuadVal(1), QuadVal(2, 0, 1), QuadVal(1)}));
  CHECK(quad_equal(parse_factor_name("P'2,6", 3).poly(), {QuadVal(1), QuadVal(3, 0, 1), QuadVal(1)}));
  CHECK(quad_equal(parse_factor_name("P2,1", 2).poly(), {QuadVal(-1), QuadVal(0), QuadVal(1)}));
  CHECK(p24.name() == "P'2,4");
  CHECK(CycFactorId::cyclo(12).name() == "P12");
  CHECK_THROWS_AS(parse_factor_name("P'2,5", 2), Error);
}

TEST_CASE("named factors are roots of their tabulated root and split Phi_d(x^2)") {
  for (int u : {2, 3}) {
    const auto& table = qcyclo_table(u);
    REQUIRE_FALSE(table.empty());
    for (const auto& f : table) {
      CHECK(root_eval(f.poly(), f.root).is_zero());
      CHECK(parse_factor_name(f.name(), u) == f);
      if (f.variant == 1) {
        const auto other = CycFactorId::named(u, f.d, 2);
        CHECK(quad_equal(quad_mul(f.poly(), other.poly()), to_quad(cyclotomic_poly(f.d).compose_power(2))));
      }
    }
  }
}

TEST_CASE("d_of_ell examples") {
  CHECK(d_of_ell(QSpec{3, 1, 1}, 1, 2) == 2);
  CHECK(d_of_ell(QSpec{2, 2, 3}, 1, 5) == 4);
  CHECK(d_of_ell(QSpec{2, 1, 1}, 1, 7) == 3);
  CHECK(d_of_ell(QSpec{5, 1, 1}, 1, 2) == 1);
}

TEST_CASE("phi_val examples") {
  auto a = phi_val(4, 3, 2);
  CHECK(a.val == 1);
  CHECK(a.divides);
  CHECK(a.matches);
  auto b = phi_val(3, 2, 7);
  CHECK(b.val == 1);
  CHECK(b.divides);
  auto c = phi_val(5, 2, 7);
  CHECK(c.val == 0);
  CHECK_FALSE(c.divides);
  CHECK(c.matches);
}

TEST_CASE("phi_val agrees with exact evaluation") {
  for (long q = 2; q <= 30; ++q)
    for (int e = 1; e <= 30; ++e)
      for (std::uint64_t l : {2u, 3u, 5u, 7u, 11u, 13u}) {
        if (q % static_cast<long>(l) == 0) continue;
        const BigInt v = cyclotomic_poly(e).eval(q);
        const auto r = phi_val(e, q, l);
        REQUIRE(r.val == val_l(v, l));
        REQUIRE(r.matches);
      }
}

TEST_CASE("lemma on (x^f - 1)/(x - 1)") {
  auto lhs = [](long x, long f, std::uint64_t l) {
    const BigInt num = pow(BigInt(x), static_cast<unsigned long>(f)) - 1;
    return val_l(BigInt(num / (x - 1)), l);
  };
  CHECK(lhs(4, 3, 3) == 1);
  CHECK(val_l(3, 3) == 1);
  CHECK(lhs(5, 2, 2) == 1);
  CHECK(lhs(7, 1, 2) == 0);
  const auto rep = verify_lemma_div(60, 24, 13);
  CHECK(rep.ok());
  CHECK(rep.checks > 0);
  const auto dc = verify_divcyclo(20, 30, 13);
  CHECK(dc.ok());
  CHECK(dc.special_branch > 0);
}
