#include <doctest.h>

#include <set>

#include "sylow/oracle.hpp"
#include "sylow/order_engine.hpp"

using namespace sylow;

TEST_CASE("finite fields") {
  for (std::uint64_t n : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u}) {
    const FiniteField f(n);
    CHECK(f.size() == static_cast<int>(n));
    for (int x = 1; x < f.size(); ++x) {
      CHECK(f.mul(x, f.inv(x)) == 1);
      CHECK(f.pow(x, n - 1) == 1);
      CHECK(f.add(x, f.neg(x)) == 0);
    }
    for (int x = 0; x < f.size(); ++x)
      for (int y = 0; y < f.size(); ++y) {
        CHECK(f.mul(x, y) == f.mul(y, x));
        for (int z = 0; z < f.size(); z += 3) CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
      }
    CHECK_THROWS_AS(f.inv(0), std::exception);
  }
  CHECK_THROWS_AS(FiniteField(6), std::exception);
  CHECK_THROWS_AS(FiniteField(25), std::exception);
}

TEST_CASE("enumerated orders") {
  CHECK(enumerate_group({Family::SL, 2, 3}).order() == 24);
  CHECK(enumerate_group({Family::Sp, 4, 2}).order() == 720);
  CHECK(enumerate_group({Family::SU, 3, 2}).order() == 216);
  CHECK(enumerate_group({Family::SL, 3, 2}).order() == 168);
}

TEST_CASE("enumeration agrees with the generic order") {
  for (const auto& spec : oracle_catalog()) {
    if (spec.to_string() == "Sp4(3)" || spec.to_string() == "SU4(2)") continue;
    const FiniteGroup g = enumerate_group(spec);
    CHECK(BigInt(static_cast<unsigned long>(g.order())) == evaluate_order(generic_order(spec.lie_type()), spec.qspec()));
  }
}

TEST_CASE("backtracking agrees with brute force") {
  for (const MatrixGroupSpec spec : {MatrixGroupSpec{Family::SL, 2, 3}, MatrixGroupSpec{Family::Sp, 4, 2},
                                     MatrixGroupSpec{Family::SU, 2, 2}, MatrixGroupSpec{Family::SL, 2, 4}}) {
    const auto a = enumerate_group(spec).elements();
    const auto b = enumerate_group_bruteforce(spec).elements();
    CHECK(std::set<PackedMatrix>(a.begin(), a.end()) == std::set<PackedMatrix>(b.begin(), b.end()));
  }
}

TEST_CASE("group axioms") {
  const FiniteGroup g = enumerate_group({Family::SL, 2, 3});
  const int n = static_cast<int>(g.order());
  for (int x = 0; x < n; ++x) {
    CHECK(g.mul(x, g.identity()) == x);
    for (int y = 0; y < n; y += 5)
      for (int z = 0; z < n; z += 7) CHECK(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)));
  }
}

TEST_CASE("Sylow subgroups") {
  const FiniteGroup sl23 = enumerate_group({Family::SL, 2, 3});
  const Subgroup q8 = sylow_subgroup(sl23, 2);
  CHECK(q8.elements.size() == 8);
  CHECK_FALSE(is_abelian(sl23, q8));

  const FiniteGroup sl32 = enumerate_group({Family::SL, 3, 2});
  const Subgroup c7 = sylow_subgroup(sl32, 7);
  CHECK(c7.elements.size() == 7);
  CHECK(is_abelian(sl32, c7));
  CHECK(abelian_invariants(sl32, c7, 7) == std::vector<BigInt>{7});

  const FiniteGroup su32 = enumerate_group({Family::SU, 3, 2});
  const Subgroup p27 = sylow_subgroup(su32, 3);
  CHECK(p27.elements.size() == 27);
  CHECK_FALSE(is_abelian(su32, p27));

  const FiniteGroup sp42 = enumerate_group({Family::Sp, 4, 2});
  const Subgroup e9 = sylow_subgroup(sp42, 3);
  CHECK(is_abelian(sp42, e9));
  CHECK(abelian_invariants(sp42, e9, 3) == std::vector<BigInt>{3, 3});

  Subgroup trivial;
  trivial.elements = {sl23.identity()};
  CHECK(is_abelian(sl23, trivial));
  CHECK(abelian_invariants(sl23, trivial, 2).empty());
  CHECK_THROWS_AS(sylow_subgroup(sl23, 5), Error);
}

TEST_CASE("catalog and type bridge") {
  CHECK(oracle_catalog().size() == 12);
  CHECK((MatrixGroupSpec{Family::SU, 3, 2}.lie_type().to_string()) == "2A2");
  CHECK((MatrixGroupSpec{Family::Sp, 4, 3}.lie_type().to_string()) == "B2");
  CHECK((MatrixGroupSpec{Family::SL, 4, 2}.lie_type().to_string()) == "A3");
  CHECK_THROWS_AS((MatrixGroupSpec{Family::Sp, 3, 2}.validate()), Error);
}
