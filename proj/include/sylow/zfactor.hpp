#pragma once

#include <vector>

#include "sylow/polynomial.hpp"

namespace sylow {

struct ZFactor {
  ZPoly poly;
  int mult = 1;
};

struct ZFactorization {
  std::vector<ZFactor> factors;
  /// False when the search budget ran out; the last factors may then be
  /// reducible.
  bool complete = true;
};

/// Factorization of a monic integer polynomial into monic irreducibles by
/// Kronecker's method. Factors are sorted (degree, then coefficients).
ZFactorization factor_monic(const ZPoly& p, unsigned long budget = 200000);

/// Divisors of a nonzero integer up to 10^12 in absolute value, positive
/// ones only; empty when the value is too large.
std::vector<BigInt> positive_divisors(const BigInt& n);

} // namespace sylow
