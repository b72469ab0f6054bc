#include <doctest.h>

#include "sylow/lattice_engine.hpp"
#include "sylow/oracle.hpp"

using namespace sylow;

TEST_CASE("group enumeration: parallel equals serial") {
  for (const auto& spec : oracle_catalog()) {
    if (spec.to_string() == "Sp4(3)" || spec.to_string() == "SU4(2)") continue;
    CHECK(enumerate_group(spec, true).elements() == enumerate_group(spec, false).elements());
  }
}

TEST_CASE("eigenspace multiplicities: parallel equals serial") {
  for (const char* name : {"F4", "E6", "B4", "2A4", "3D4"}) {
    const SimpleFactor f = parse_factor(name);
    const LatticeRep rep = build_rep(f, canonical_q(f));
    for (int d : {1, 2, 3, 4, 6}) {
      const ZPoly p = CycFactorId::cyclo(d).normalized(rep.q);
      CHECK(eigenspace_multiplicities(weyl_group(f).elements, rep.fstar, p, true) ==
            eigenspace_multiplicities(weyl_group(f).elements, rep.fstar, p, false));
    }
  }
}

TEST_CASE("eigenspace search: parallel equals serial") {
  const SimpleFactor f = parse_factor("F4");
  const QSpec q = canonical_q(f);
  const auto a = max_eigenspace_search(f, RootOfUnity::primitive(4), q, true);
  const auto b = max_eigenspace_search(f, RootOfUnity::primitive(4), q, false);
  CHECK(a.witness == b.witness);
  CHECK(a.witnesses == b.witnesses);
  CHECK(a.histogram == b.histogram);
}

TEST_CASE("reduction lemma: parallel equals serial") {
  const auto samples = reduction_samples();
  for (int m : {3, 4, 9}) {
    const auto a = verify_reduction_lemma(m, samples, true);
    const auto b = verify_reduction_lemma(m, samples, false);
    CHECK(a.checks == b.checks);
    CHECK(a.violations == b.violations);
    CHECK(a.ok());
  }
}
