#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sylow/cyclotomic.hpp"
#include "sylow/root_system.hpp"

namespace sylow {

/// Root lattice of G with its Frobenius. For descent n the lattice is the
/// direct sum of n copies and F* permutes them cyclically, with F1* taken
/// at q^n on the last block.
struct LatticeRep {
  SimpleFactor factor;
  QSpec q;
  RootDatum datum;
  int dim = 0;
  SmallMat fstar;
  /// F* of one component (at q^n).
  SmallMat fstar1;
};

LatticeRep build_rep(const SimpleFactor& f, const QSpec& q);

/// q value used when only the Weyl coset matters: 2 for integral types,
/// sqrt p for the very twisted ones.
QSpec canonical_q(const SimpleFactor& f);

struct CharFactor {
  ZPoly poly;
  int mult = 1;
  /// Set when poly is q^deg Phi(x/q) for a tabulated Phi.
  std::optional<CycFactorId> id;
  /// False only when the factor search ran out of budget.
  bool irreducible = true;
};

/// Z-factorization of det(xI - m). With q given, normalized q-cyclotomic
/// factors are tried first; the rest is factored by Kronecker's method.
std::vector<CharFactor> char_poly_factored(const SmallMat& m, const std::optional<QSpec>& q);

struct TorusStructure {
  std::vector<BigInt> invariants;
  BigInt order() const;
};

/// Elementary divisors (> 1) of m - 1 on the sublattice spanned by the
/// columns of basis (or the whole lattice).
TorusStructure torus_fixed_points(const SmallMat& m, const std::optional<IntMatrix>& basis = std::nullopt);

/// Saturation of ker P(m), as a column basis.
IntMatrix saturated_kernel(const ZPoly& p, const SmallMat& m);

/// Matrix A with m * basis = basis * A; throws if the span is not stable.
IntMatrix restrict_to(const IntMatrix& m, const IntMatrix& basis);

/// The q-cyclotomic factor of the coset having zeta as a root.
CycFactorId factor_for_root(const SimpleFactor& f, const RootOfUnity& zeta);

/// Multiplicity of p in det(xI - w F*) for every element w (kernel shared by
/// the parallel and serial scans).
std::vector<int> eigenspace_multiplicities(const std::vector<SmallMat>& elements, const SmallMat& fstar,
                                           const ZPoly& p, bool parallel);

struct EigenspaceSearch {
  CycFactorId phi;
  ZPoly normalized;
  int max_dim = 0;
  int witness = 0;
  std::string witness_word;
  std::vector<int> witnesses;
  /// dimension -> number of elements.
  std::map<int, std::uint64_t> histogram;
};

/// Maximal dimension of the zeta-eigenspace of w phi over W; asserts it
/// equals |a(zeta)|. Ties go to the first element in shortlex order.
EigenspaceSearch max_eigenspace_search(const SimpleFactor& f, const RootOfUnity& zeta, const QSpec& q,
                                       bool parallel = true);

struct NormalizerQuotient {
  std::uint64_t order = 0;
  std::uint64_t normalizer_size = 0;
  std::uint64_t centralizer_size = 0;
  IntMatrix basis;
  IntMatrix restricted;
  /// Action of each coset of C on the kernel lattice, sorted, identity first.
  std::vector<IntMatrix> actions;
};

/// N = {v in W : v commutes with w F* on the kernel lattice L}, C = pointwise
/// fixer of L; asserts |N/C| equals the product of a(zeta).
NormalizerQuotient normalizer_quotient(const SimpleFactor& f, const RootOfUnity& zeta, int witness,
                                       const QSpec& q);

struct FaithfulnessResult {
  bool faithful = false;
  std::uint64_t d = 0;
  CycFactorId phi;
  std::uint64_t quotient_order = 0;
  std::uint64_t sylow_order = 0;
  std::vector<BigInt> ell_invariants;
};

/// Whether a Sylow l-subgroup of N/C acts faithfully on the l-part of
/// L/(wF* - 1)L. Refuses 2G2 with l = 2.
FaithfulnessResult check_faithful_ell_action(const SimpleFactor& f, const QSpec& q, std::uint64_t l);

struct DescentCheck {
  ZPoly base;
  ZPoly lifted;
  std::vector<CharFactor> lifted_factors;
};

/// det(xI - wF*) on the n-fold lattice equals det(x^n I - w1 F1*) at q1.
DescentCheck descent_charpoly_check(const SimpleFactor& f1, int n, const std::string& w1_word, const QSpec& q1);

/// Weyl elements of every rank <= 4 type, signed permutation matrices up to
/// size 6 and powers of cyclotomic companion matrices up to degree 8.
std::vector<SmallMat> reduction_samples();

/// For each sample of finite order w != I: w mod m != I.
SuiteReport verify_reduction_lemma(int m, const std::vector<SmallMat>& samples, bool parallel = true);

struct ModMCheck {
  std::vector<BigInt> quotient_invariants;
  std::uint64_t kernel_size = 0;
  std::uint64_t actions_checked = 0;
};

/// X/((wF*-1)X + mX) against ker(wF* - 1 | X/mX) on the kernel lattice of
/// phi, through the natural map, with the normalizer action.
ModMCheck mod_m_kernel_check(const LatticeRep& rep, const std::string& w_word, const CycFactorId& phi,
                             std::uint64_t m);

/// Canonical key of the lattice spanned by the columns of basis.
std::string lattice_key(const IntMatrix& basis);

} // namespace sylow
