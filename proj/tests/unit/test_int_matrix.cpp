#include <doctest.h>

#include <random>

#include "sylow/cyclotomic.hpp"
#include "sylow/int_matrix.hpp"
#include "sylow/root_system.hpp"
#include "sylow/zfactor.hpp"

using namespace sylow;

namespace {
IntMatrix random_matrix(std::mt19937& rng, int r, int c, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}
} // namespace

TEST_CASE("determinant and characteristic polynomial") {
  const IntMatrix a = IntMatrix::from_rows({{2, 1}, {1, 3}});
  CHECK(det(a) == 5);
  CHECK(charpoly(a) == ZPoly{5, -5, 1});
  CHECK(det(IntMatrix::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 0);
  CHECK(charpoly(SmallMat::from(a)) == charpoly(a));
}

TEST_CASE("Cayley-Hamilton on random matrices") {
  std::mt19937 rng(7);
  for (int t = 0; t < 40; ++t) {
    const int n = 1 + t % 5;
    const IntMatrix a = random_matrix(rng, n, n, -4, 4);
    CHECK(poly_eval(charpoly(a), a).is_zero());
    CHECK(charpoly(a).coeff(0) == (n % 2 ? -det(a) : det(a)));
  }
}

TEST_CASE("Smith normal form properties") {
  std::mt19937 rng(11);
  for (int t = 0; t < 60; ++t) {
    const int r = 1 + t % 4, c = 1 + (t / 4) % 4;
    const IntMatrix a = random_matrix(rng, r, c, -6, 6);
    const SmithForm s = smith(a);
    CHECK(s.U * a * s.V == s.D);
    CHECK((s.U * s.Uinv).is_identity());
    CHECK(det(s.U) * det(s.U) == 1);
    CHECK(det(s.V) * det(s.V) == 1);
    for (std::size_t i = 0; i + 1 < s.diag.size(); ++i) CHECK(s.diag[i + 1] % s.diag[i] == 0);
    if (r == c) {
      BigInt prod = 1;
      for (const auto& d : s.diag) prod *= d;
      CHECK(abs(det(a)) == (s.rank == r ? prod : BigInt(0)));
    }
  }
  CHECK(elementary_divisors(IntMatrix::from_rows({{2, 0}, {0, 3}})) == std::vector<BigInt>{1, 6});
  CHECK(elementary_divisors(IntMatrix::from_rows({{-3, 0}, {0, -3}})) == std::vector<BigInt>{3, 3});
}

TEST_CASE("integer kernel, saturation and Hermite form") {
  std::mt19937 rng(5);
  for (int t = 0; t < 40; ++t) {
    const IntMatrix a = random_matrix(rng, 2, 4, -3, 3);
    const IntMatrix k = integer_kernel(a);
    CHECK((a * k).is_zero());
    CHECK(k.cols() == 4 - smith(a).rank);
    if (k.cols() > 0) {
      CHECK(is_saturated(k));
      CHECK((left_inverse(k) * k).is_identity());
    }
  }
  CHECK_FALSE(is_saturated(IntMatrix::from_rows({{2}, {0}})));
  const IntMatrix h1 = hnf_rows(IntMatrix::from_rows({{2, 4}, {1, 3}}));
  const IntMatrix h2 = hnf_rows(IntMatrix::from_rows({{1, 3}, {3, 7}}));
  CHECK(h1 == h2);
}

TEST_CASE("factor_monic") {
  const auto f = factor_monic(ZPoly{4, 0, 0, 0, 1});
  CHECK(f.complete);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].poly == ZPoly{2, -2, 1});
  CHECK(f.factors[1].poly == ZPoly{2, 2, 1});
  const auto g = factor_monic(ZPoly{4, 0, 1});
  REQUIRE(g.factors.size() == 1);
  CHECK(g.factors[0].poly == ZPoly{4, 0, 1});
  const auto h = factor_monic(ZPoly{-1, 1} * ZPoly{-1, 1} * ZPoly{1, 1, 1});
  REQUIRE(h.factors.size() == 2);
  CHECK(h.factors[0].mult == 2);
  CHECK(positive_divisors(12) == std::vector<BigInt>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("factor_monic multiplies back") {
  for (int d = 1; d <= 12; ++d) {
    const ZPoly p = cyclotomic_poly(d).compose_power(2) * ZPoly{-3, 1};
    const auto f = factor_monic(p);
    ZPoly prod{1};
    for (const auto& x : f.factors)
      for (int i = 0; i < x.mult; ++i) prod = prod * x.poly;
    CHECK(prod == p);
  }
}

TEST_CASE("root systems and Weyl groups") {
  CHECK(cartan_matrix(Series::B, 2) == IntMatrix::from_rows({{2, -1}, {-2, 2}}));
  CHECK(cartan_matrix(Series::G, 2) == IntMatrix::from_rows({{2, -3}, {-1, 2}}));
  const RootDatum a1 = root_datum(parse_factor("A1"));
  CHECK(a1.reflections[0].to_int() == IntMatrix::from_rows({{-1}}));
  CHECK(frobenius_matrix(a1, QSpec{3, 1, 1}).to_int() == IntMatrix::from_rows({{3}}));
  const RootDatum b2 = root_datum(parse_factor("B2"));
  CHECK(charpoly(word_matrix(b2, "12") * frobenius_matrix(b2, QSpec{2, 1, 1})) == ZPoly{4, 0, 1});
  CHECK(longest_element(b2).to_int() == IntMatrix::from_rows({{-1, 0}, {0, -1}}));
  for (const auto& f : all_factors(4)) {
    const WeylGroup& w = weyl_group(f);
    CHECK(BigInt(static_cast<unsigned long>(w.elements.size())) == weyl_order(f));
    CHECK(w.words.front().empty());
    for (const auto& s : root_datum(f).reflections) CHECK((s * s).is_identity());
  }
}

TEST_CASE("very twisted Frobenius squares to p times a Weyl element") {
  for (const char* name : {"2B2", "2G2", "2F4"}) {
    const SimpleFactor f = parse_factor(name);
    const RootDatum rd = root_datum(f);
    const QSpec q{f.forced_p(), 2, 1};
    const SmallMat fs = frobenius_matrix(rd, q);
    const SmallMat sq = fs * fs;
    SmallMat scaled(rd.rank);
    bool divisible = true;
    for (int i = 0; i < rd.rank * rd.rank; ++i) {
      divisible = divisible && sq.a[static_cast<std::size_t>(i)] % static_cast<std::int64_t>(q.p) == 0;
      scaled.a[static_cast<std::size_t>(i)] = sq.a[static_cast<std::size_t>(i)] / static_cast<std::int64_t>(q.p);
    }
    CHECK(divisible);
    CHECK(weyl_group(f).index.count(scaled) == 1);
  }
  // 2B2: the product of q_alpha over a basis of the lattice is 2.
  CHECK(abs(det(frobenius_matrix(root_datum(parse_factor("2B2")), QSpec{2, 2, 1}).to_int())) == 2);
}
