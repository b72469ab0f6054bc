#include <doctest.h>

#include "sylow/exact_arith.hpp"

using namespace sylow;

namespace {
QuadVal sq(int u, long a, long b) { return QuadVal(u, BigInt(a), BigInt(b)); }
} // namespace

TEST_CASE("val_l examples") {
  CHECK(val_l(720, 3) == 2);
  CHECK(val_l(7, 7) == 1);
  CHECK(val_l(5, 3) == 0);
  CHECK(val_l(-48, 2) == 4);
  CHECK_THROWS_AS(val_l(0, 2), Error);
}

TEST_CASE("val_l and l_part agree with trial division") {
  for (long n = 1; n <= 3000; ++n)
    for (std::uint64_t l : {2u, 3u, 5u, 7u, 11u}) {
      long m = n;
      unsigned v = 0;
      while (m % static_cast<long>(l) == 0) {
        m /= static_cast<long>(l);
        ++v;
      }
      REQUIRE(val_l(n, l) == v);
      REQUIRE(l_part(n, l) * m == n);
    }
}

TEST_CASE("primes") {
  CHECK(primes_up_to(30) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
  CHECK_FALSE(is_prime(1));
}

TEST_CASE("QSpec") {
  QSpec q{2, 2, 3};
  CHECK_NOTHROW(q.validate());
  CHECK(q.q_eta() == 8);
  CHECK(q.to_string() == "sqrt2^3");
  CHECK(q.pow(2) == QSpec{2, 1, 3});
  CHECK(q.pow(3) == QSpec{2, 2, 9});
  CHECK_THROWS_AS(q.integer_value(), Error);
  CHECK(QSpec{2, 1, 2}.integer_value() == 4);
  CHECK_THROWS_AS((QSpec{5, 2, 1}.validate()), Error);
  CHECK_THROWS_AS((QSpec{2, 2, 2}.validate()), Error);
  CHECK_THROWS_AS((QSpec{4, 1, 1}.validate()), Error);
}

TEST_CASE("quad_eval examples") {
  const std::vector<QuadVal> phi24p{sq(2, 1, 0), sq(2, 0, 1), sq(2, 1, 0)};
  CHECK(quad_eval(phi24p, QSpec{2, 2, 1}) == 5);
  const std::vector<QuadVal> phi26pp{sq(3, 1, 0), sq(3, 0, -1), sq(3, 1, 0)};
  CHECK(quad_eval(phi26pp, QSpec{3, 2, 1}) == 1);
  const std::vector<QuadVal> lin{QuadVal(-1), QuadVal(1)};
  CHECK(quad_eval(lin, QSpec{2, 1, 2}) == 3);
  const std::vector<QuadVal> odd{QuadVal(0), QuadVal(1)};
  CHECK_THROWS_AS(quad_eval(odd, QSpec{2, 2, 1}), Error);
}

TEST_CASE("quad_eval matches integer evaluation for integral q") {
  for (std::uint64_t p : {2u, 3u, 5u})
    for (int a = 1; a <= 4; ++a) {
      const QSpec q{p, 1, a};
      const BigInt x = q.integer_value();
      const std::vector<QuadVal> c{QuadVal(3), QuadVal(-2), QuadVal(0), QuadVal(1)};
      CHECK(quad_eval(c, q) == x * x * x - 2 * x + 3);
    }
}

TEST_CASE("mult_order examples") {
  CHECK(mult_order(2, 7) == 3);
  CHECK(mult_order(3, 4) == 2);
  CHECK(mult_order(1, 5) == 1);
  CHECK_THROWS_AS(mult_order(2, 4), Error);
}

TEST_CASE("roots of unity") {
  const RootOfUnity z(3, 8);
  CHECK(z.pow(4) == RootOfUnity::minus_one());
  CHECK(z.order() == 8);
  CHECK(RootOfUnity(2, 4) == RootOfUnity::minus_one());
  CHECK(RootOfUnity(5, 4) == RootOfUnity(1, 4));
  CHECK((RootOfUnity(1, 3) * RootOfUnity(1, 6)) == RootOfUnity::minus_one());
  CHECK(RootOfUnity::primitive(8).to_string() == "E(8)^1");
  CHECK(RootOfUnity::one().is_one());
}

TEST_CASE("root_eval examples") {
  const std::vector<QuadVal> a{sq(2, 1, 0), sq(2, 0, -1), sq(2, 1, 0)};
  CHECK(root_eval(a, RootOfUnity::primitive(8)).is_zero());
  const std::vector<QuadVal> b{QuadVal(-1), QuadVal(1)};
  CHECK(root_eval(b, RootOfUnity::one()).is_zero());
  const std::vector<QuadVal> c{QuadVal(1), QuadVal(0), QuadVal(1)};
  CHECK_FALSE(root_eval(c, RootOfUnity::primitive(8)).is_zero());
  const std::vector<QuadVal> s3{sq(3, 1, 0), sq(3, 0, -1), sq(3, 1, 0)};
  CHECK(root_eval(s3, RootOfUnity::primitive(12)).is_zero());
}

TEST_CASE("cyclotomic field arithmetic") {
  // zeta_12^6 = -1 and zeta_12^4 - zeta_12^2 + 1 = 0.
  const CycloFieldElem m1 = CycloFieldElem::from_powers(12, {{6, 1}});
  const CycloFieldElem neg = CycloFieldElem::from_powers(12, {{0, -1}});
  CHECK(m1 == neg);
  CHECK(CycloFieldElem::from_powers(12, {{4, 1}, {2, -1}, {0, 1}}).is_zero());
  const CycloFieldElem z = CycloFieldElem::from_powers(12, {{1, 1}});
  CycloFieldElem p = z;
  for (int i = 1; i < 12; ++i) p = p * z;
  CHECK(p == CycloFieldElem::from_powers(12, {{0, 1}}));
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(1) == 1);
}
