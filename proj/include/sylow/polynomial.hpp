#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "sylow/exact_arith.hpp"

namespace sylow {

/// Dense integer polynomial, coefficients stored from degree 0 upwards with
/// no trailing zeros. The zero polynomial has no coefficients.
class ZPoly {
public:
  ZPoly() = default;
  ZPoly(std::initializer_list<long> coeffs);
  explicit ZPoly(std::vector<BigInt> coeffs);

  static ZPoly monomial(const BigInt& c, unsigned degree);
  static ZPoly x_minus(const BigInt& root) { return ZPoly(std::vector<BigInt>{-root, 1}); }

  /// Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt coeff(int k) const;
  const BigInt& leading() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  BigInt eval(const BigInt& x) const;
  /// P(x^n).
  ZPoly compose_power(unsigned n) const;

  friend ZPoly operator+(const ZPoly& x, const ZPoly& y);
  friend ZPoly operator-(const ZPoly& x, const ZPoly& y);
  friend ZPoly operator*(const ZPoly& x, const ZPoly& y);
  friend ZPoly operator*(const BigInt& s, const ZPoly& y);
  friend bool operator==(const ZPoly&, const ZPoly&) = default;
  /// Orders by degree, then coefficients from the top down.
  friend bool operator<(const ZPoly& x, const ZPoly& y);

  std::string to_string(const std::string& var = "x") const;

private:
  void trim();
  std::vector<BigInt> c_;
};

struct ZDivResult {
  ZPoly quotient;
  ZPoly remainder;
};

/// Division by a polynomial whose leading coefficient is +-1.
ZDivResult divmod_monic(const ZPoly& num, const ZPoly& den);
/// Quotient if den divides num exactly over Z, otherwise nullopt-like empty
/// flag. Den must have leading coefficient +-1.
bool divides(const ZPoly& den, const ZPoly& num, ZPoly* quotient = nullptr);
/// Largest k with den^k | num (den non-constant, leading coefficient +-1).
int multiplicity(const ZPoly& den, ZPoly num, ZPoly* cofactor = nullptr);

/// Polynomial with coefficients in Z[sqrt u]; coefficients low to high.
using QuadPoly = std::vector<QuadVal>;

QuadPoly quad_mul(const QuadPoly& x, const QuadPoly& y);
bool quad_equal(const QuadPoly& x, const QuadPoly& y);
QuadPoly to_quad(const ZPoly& p);
std::string quad_to_string(const QuadPoly& p, const std::string& var = "x");

namespace detail {
/// d-th cyclotomic polynomial by exact division of x^d - 1; uncached.
ZPoly compute_cyclotomic(int d);
} // namespace detail

} // namespace sylow
