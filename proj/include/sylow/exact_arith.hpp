#pragma once

// Exact arithmetic substrate: big integers, l-adic valuations, the real
// number q = p^(a/eta), values in Z[sqrt u], roots of unity as rationals
// mod 1, and elements of cyclotomic fields for root-membership tests.

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sylow {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Base class for every error raised by the library (bad input, unsupported
/// request, precondition violation).
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal mathematical assertion fails. Such a failure
/// falsifies either the implementation or one of its tables.
class VerificationFailure : public Error {
public:
  using Error::Error;
};

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);
std::string to_string(const BigInt& n);
BigInt pow(const BigInt& base, unsigned long exp);

/// Largest v with l^v dividing |n|. Throws on n == 0.
unsigned val_l(const BigInt& n, std::uint64_t l);

/// l-part of |n|, that is l^val_l(n).
BigInt l_part(const BigInt& n, std::uint64_t l);

/// q = p^(a/eta). eta = 2 only for the Suzuki and Ree groups, where p is 2
/// or 3 and a is odd.
struct QSpec {
  std::uint64_t p = 2;
  int eta = 1;
  int a = 1;

  void validate() const;
  bool integral() const { return eta == 1; }
  /// q^eta = p^a.
  BigInt q_eta() const;
  /// q^n as a QSpec, normalised so that eta == 2 only when the exponent is odd.
  QSpec pow(int n) const;
  /// Integer value of q; throws when eta == 2.
  BigInt integer_value() const;
  /// `p^a` or `sqrtp^a`.
  std::string to_string() const;

  friend bool operator==(const QSpec&, const QSpec&) = default;
};

/// c0 + c1*sqrt(u) with u in {1,2,3}; u == 1 forces c1 == 0.
struct QuadVal {
  int u = 1;
  BigInt c0 = 0;
  BigInt c1 = 0;

  QuadVal() = default;
  QuadVal(long c) : c0(c) {}
  QuadVal(BigInt c) : c0(std::move(c)) {}
  QuadVal(int radicand, BigInt a, BigInt b);

  bool is_zero() const { return c0 == 0 && c1 == 0; }
  std::string to_string() const;

  friend QuadVal operator+(const QuadVal& x, const QuadVal& y);
  friend QuadVal operator-(const QuadVal& x, const QuadVal& y);
  friend QuadVal operator*(const QuadVal& x, const QuadVal& y);
  friend QuadVal operator-(const QuadVal& x);
  friend bool operator==(const QuadVal& x, const QuadVal& y);
};

/// Value of sum_k coeffs[k] * q^k. Throws "evaluation not integral" when the
/// irrational parts do not cancel.
BigInt quad_eval(std::span<const QuadVal> coeffs, const QSpec& q);

/// Smallest d >= 1 with x^d = 1 (mod m). Throws "not a unit" if gcd(x,m) != 1.
std::uint64_t mult_order(const BigInt& x, std::uint64_t m);

/// exp(2 pi i * num/den), stored with 0 <= num < den and gcd(num,den) = 1.
class RootOfUnity {
public:
  RootOfUnity() = default;
  RootOfUnity(std::int64_t num, std::int64_t den);

  static RootOfUnity primitive(std::int64_t d) { return {1, d}; }
  static RootOfUnity one() { return {0, 1}; }
  static RootOfUnity minus_one() { return {1, 2}; }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  /// Multiplicative order, equal to the reduced denominator.
  std::int64_t order() const { return den_; }
  bool is_one() const { return num_ == 0; }

  RootOfUnity pow(std::int64_t k) const;
  friend RootOfUnity operator*(const RootOfUnity& x, const RootOfUnity& y);
  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
  friend auto operator<=>(const RootOfUnity&, const RootOfUnity&) = default;

  std::string to_string() const;

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Element of Q(zeta_N), stored as a rational polynomial of degree < phi(N)
/// in zeta_N reduced modulo the N-th cyclotomic polynomial.
class CycloFieldElem {
public:
  explicit CycloFieldElem(std::int64_t conductor);

  /// Builds sum_k c_k zeta_N^k from a map exponent -> coefficient; exponents
  /// are taken mod N.
  static CycloFieldElem from_powers(std::int64_t conductor,
                                    const std::map<std::int64_t, BigRat>& terms);

  std::int64_t conductor() const { return conductor_; }
  const std::vector<BigRat>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  friend CycloFieldElem operator+(const CycloFieldElem& x, const CycloFieldElem& y);
  friend CycloFieldElem operator-(const CycloFieldElem& x, const CycloFieldElem& y);
  friend CycloFieldElem operator*(const CycloFieldElem& x, const CycloFieldElem& y);
  friend bool operator==(const CycloFieldElem& x, const CycloFieldElem& y);

private:
  void reduce(std::vector<BigRat> dense);

  std::int64_t conductor_;
  std::vector<BigRat> coeffs_;
};

/// Value of the polynomial at zeta in Q(zeta_N), where N is the lcm of the
/// order of zeta with 8 (if sqrt 2 occurs) and 12 (if sqrt 3 occurs).
CycloFieldElem root_eval(std::span<const QuadVal> coeffs, const RootOfUnity& zeta);

std::int64_t euler_phi(std::int64_t n);

} // namespace sylow
