#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sylow/exact_arith.hpp"
#include "sylow/polynomial.hpp"

namespace sylow {

/// Identifier of a q-cyclotomic factor. Cyclo(d) is the ordinary d-th
/// cyclotomic polynomial (integral q). Named factors live over Z[sqrt u] and
/// divide Phi_d(x^2); variant 0 is Phi_d(x^2) itself, 1 is the primed factor
/// and 2 the double-primed one.
struct CycFactorId {
  enum class Kind { Cyclo, Named };
  Kind kind = Kind::Cyclo;
  int d = 1;
  int u = 1;
  int variant = 0;
  RootOfUnity root;

  static CycFactorId cyclo(int d);
  static CycFactorId named(int u, int d, int variant);

  bool is_named() const { return kind == Kind::Named; }
  /// `P12`, `P2,1`, `P'2,4`, `P''2,12`.
  std::string name() const;
  /// Polynomial in x (coefficients in Z[sqrt u]).
  QuadPoly poly() const;
  int degree() const;
  /// q^deg * Phi(x/q), an integer polynomial for every q matching u.
  ZPoly normalized(const QSpec& q) const;
  /// Phi(q) as an exact integer.
  BigInt value(const QSpec& q) const;

  friend bool operator==(const CycFactorId& x, const CycFactorId& y) {
    return x.kind == y.kind && x.d == y.d && x.u == y.u && x.variant == y.variant;
  }
  /// Orders by (d, variant), cyclotomic before named.
  friend bool operator<(const CycFactorId& x, const CycFactorId& y);
};

/// Parses the output of CycFactorId::name(). Named factors need the radicand.
CycFactorId parse_factor_name(const std::string& name, int u);

/// d-th cyclotomic polynomial (cached for d <= 240).
const ZPoly& cyclotomic_poly(int d);

/// The multiset {Phi_(mu d) : mu | n, n/mu prime to d}; its product is
/// checked against Phi_d(x^n).
std::vector<CycFactorId> decompose_cyclo_power(int d, int n);

/// Named factor table for radicand u, validated on first use.
const std::vector<CycFactorId>& qcyclo_table(int u);

/// Order of q^(n eta) mod l (mod 4 when l = 2).
std::uint64_t d_of_ell(const QSpec& q, int n, std::uint64_t l);

struct PhiVal {
  unsigned val = 0;
  bool divides = false;
  /// Lemma prediction for divisibility and, when b != 0, valuation 1.
  bool predicted_divides = false;
  bool matches = false;
  int b = 0;
};

/// val_l(Phi_e(q)) and the divisibility prediction for it.
PhiVal phi_val(int e, const BigInt& q, std::uint64_t l);

struct SuiteReport {
  std::uint64_t checks = 0;
  std::uint64_t special_branch = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// val_l((x^f - 1)/(x - 1)) == val_l(f) for x = 1 mod l (mod 4 if l = 2).
SuiteReport verify_lemma_div(std::uint64_t x_max, std::uint64_t f_max, std::uint64_t l_max);

/// phi_val predictions for 2 <= q <= q_max, e <= e_max, primes l <= l_max.
SuiteReport verify_divcyclo(std::uint64_t q_max, int e_max, std::uint64_t l_max);

} // namespace sylow
