#include "sylow/exact_arith.hpp"

#include <numeric>
#include <sstream>

#include "sylow/polynomial.hpp"

namespace sylow {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  BigInt z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
  // BPSW; deterministic below 2^64.
  return mpz_probab_prime_p(z.get_mpz_t(), 25) != 0;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 2; k <= n; ++k)
    if (is_prime(k)) out.push_back(k);
  return out;
}

std::string to_string(const BigInt& n) { return n.get_str(); }

BigInt pow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

unsigned val_l(const BigInt& n, std::uint64_t l) {
  if (n == 0) throw Error("valuation of zero undefined");
  if (l < 2) throw Error("valuation base must be a prime");
  BigInt rest;
  BigInt base(static_cast<unsigned long>(l));
  return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), base.get_mpz_t()));
}

BigInt l_part(const BigInt& n, std::uint64_t l) {
  return pow(BigInt(static_cast<unsigned long>(l)), val_l(n, l));
}

// ---------------------------------------------------------------- QSpec

void QSpec::validate() const {
  if (!is_prime(p)) throw Error("q: characteristic " + std::to_string(p) + " is not prime");
  if (eta != 1 && eta != 2) throw Error("q: eta must be 1 or 2");
  if (a < 1) throw Error("q: exponent must be positive");
  if (eta == 2) {
    if (p != 2 && p != 3) throw Error("q: half-integral powers only for p = 2 or 3");
    if (a % 2 == 0) throw Error("q: sqrt form needs an odd exponent (write the integer power instead)");
  }
}

BigInt QSpec::q_eta() const { return sylow::pow(BigInt(static_cast<unsigned long>(p)), static_cast<unsigned long>(a)); }

QSpec QSpec::pow(int n) const {
  if (n < 1) throw Error("q power must be positive");
  QSpec r{p, eta, a * n};
  if (r.eta == 2 && r.a % 2 == 0) {
    r.eta = 1;
    r.a /= 2;
  }
  return r;
}

BigInt QSpec::integer_value() const {
  if (eta != 1) throw Error("q = " + to_string() + " is not an integer");
  return q_eta();
}

std::string QSpec::to_string() const {
  std::ostringstream os;
  if (eta == 2) os << "sqrt";
  os << p << "^" << a;
  return os.str();
}

// ---------------------------------------------------------------- QuadVal

QuadVal::QuadVal(int radicand, BigInt a, BigInt b) : u(radicand), c0(std::move(a)), c1(std::move(b)) {
  if (u < 1 || u > 3) throw Error("QuadVal radicand must be 1, 2 or 3");
  if (u == 1) {
    c0 += c1;
    c1 = 0;
  }
}

namespace {

int common_radicand(const QuadVal& x, const QuadVal& y) {
  if (x.c1 == 0) return y.u;
  if (y.c1 == 0) return x.u;
  if (x.u != y.u) throw Error("QuadVal: mixed radicands sqrt" + std::to_string(x.u) +
                              " and sqrt" + std::to_string(y.u));
  return x.u;
}

} // namespace

QuadVal operator+(const QuadVal& x, const QuadVal& y) {
  QuadVal r;
  r.u = common_radicand(x, y);
  r.c0 = x.c0 + y.c0;
  r.c1 = x.c1 + y.c1;
  return r;
}

QuadVal operator-(const QuadVal& x) {
  QuadVal r = x;
  r.c0 = -r.c0;
  r.c1 = -r.c1;
  return r;
}

QuadVal operator-(const QuadVal& x, const QuadVal& y) { return x + (-y); }

QuadVal operator*(const QuadVal& x, const QuadVal& y) {
  QuadVal r;
  r.u = common_radicand(x, y);
  r.c0 = x.c0 * y.c0 + x.c1 * y.c1 * r.u;
  r.c1 = x.c0 * y.c1 + x.c1 * y.c0;
  return r;
}

bool operator==(const QuadVal& x, const QuadVal& y) {
  if (x.c0 != y.c0 || x.c1 != y.c1) return false;
  return x.c1 == 0 || x.u == y.u;
}

std::string QuadVal::to_string() const {
  if (c1 == 0) return c0.get_str();
  std::ostringstream os;
  if (c0 != 0) os << c0.get_str() << (c1 < 0 ? "-" : "+");
  else if (c1 < 0) os << "-";
  BigInt m = abs(c1);
  if (m != 1) os << m.get_str() << "*";
  os << "sqrt" << u;
  return os.str();
}

BigInt quad_eval(std::span<const QuadVal> coeffs, const QSpec& q) {
  q.validate();
  // Accumulate by squarefree radicand: value = sum_r acc[r] * sqrt(r).
  std::map<std::uint64_t, BigInt> acc;
  const BigInt p(static_cast<unsigned long>(q.p));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const QuadVal& c = coeffs[k];
    if (c.is_zero()) continue;
    // q^k = base * sqrt(p)^odd
    const unsigned long e = static_cast<unsigned long>(k) * static_cast<unsigned long>(q.a);
    BigInt base;
    bool odd = false;
    if (q.eta == 1) {
      base = pow(p, e);
    } else {
      base = pow(p, e / 2);
      odd = (e % 2) == 1;
    }
    acc[odd ? q.p : 1] += c.c0 * base;
    if (c.c1 != 0) {
      const auto u = static_cast<std::uint64_t>(c.u);
      if (!odd) {
        acc[u] += c.c1 * base;
      } else if (u == q.p) {
        acc[1] += c.c1 * base * p;
      } else {
        acc[u * q.p] += c.c1 * base;
      }
    }
  }
  for (const auto& [r, v] : acc)
    if (r != 1 && v != 0) throw Error("evaluation not integral");
  auto it = acc.find(1);
  return it == acc.end() ? BigInt(0) : it->second;
}

std::uint64_t mult_order(const BigInt& x, std::uint64_t m) {
  if (m < 2) throw Error("mult_order: modulus must be at least 2");
  BigInt mm(static_cast<unsigned long>(m));
  BigInt r = x % mm;
  if (r < 0) r += mm;
  BigInt g = gcd(r, mm);
  if (g != 1) throw Error("not a unit");
  const std::uint64_t base = r.get_ui();
  unsigned __int128 cur = base % m;
  for (std::uint64_t d = 1; d <= m; ++d) {
    if (cur == 1) return d;
    cur = (cur * base) % m;
  }
  throw VerificationFailure("mult_order: no order found below the modulus");
}

// ---------------------------------------------------------------- RootOfUnity

RootOfUnity::RootOfUnity(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw Error("root of unity denominator must be positive");
  num %= den;
  if (num < 0) num += den;
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = den;
  num_ = num / g;
  den_ = den / g;
}

RootOfUnity RootOfUnity::pow(std::int64_t k) const {
  const __int128 n = static_cast<__int128>(num_) * k;
  std::int64_t r = static_cast<std::int64_t>(n % den_);
  return {r, den_};
}

RootOfUnity operator*(const RootOfUnity& x, const RootOfUnity& y) {
  const std::int64_t l = std::lcm(x.den_, y.den_);
  return {x.num_ * (l / x.den_) + y.num_ * (l / y.den_), l};
}

std::string RootOfUnity::to_string() const {
  if (num_ == 0) return "1";
  if (den_ == 2) return "-1";
  return "E(" + std::to_string(den_) + ")^" + std::to_string(num_);
}

// ---------------------------------------------------------------- cyclotomic field

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t f = 2; f * f <= n; ++f) {
    if (n % f != 0) continue;
    while (n % f == 0) n /= f;
    result -= result / f;
  }
  if (n > 1) result -= result / n;
  return result;
}

CycloFieldElem::CycloFieldElem(std::int64_t conductor) : conductor_(conductor) {
  if (conductor < 1) throw Error("cyclotomic field conductor must be positive");
  coeffs_.assign(static_cast<std::size_t>(euler_phi(conductor)), BigRat(0));
}

void CycloFieldElem::reduce(std::vector<BigRat> dense) {
  const ZPoly phi = detail::compute_cyclotomic(static_cast<int>(conductor_));
  const int d = phi.degree();
  for (int k = static_cast<int>(dense.size()) - 1; k >= d; --k) {
    const BigRat f = dense[static_cast<std::size_t>(k)];
    if (f == 0) continue;
    for (int j = 0; j <= d; ++j)
      dense[static_cast<std::size_t>(k - d + j)] -= f * BigRat(phi.coeffs()[static_cast<std::size_t>(j)]);
  }
  dense.resize(static_cast<std::size_t>(d), BigRat(0));
  for (auto& c : dense) c.canonicalize();
  coeffs_ = std::move(dense);
}

CycloFieldElem CycloFieldElem::from_powers(std::int64_t conductor,
                                           const std::map<std::int64_t, BigRat>& terms) {
  CycloFieldElem e(conductor);
  std::vector<BigRat> dense(static_cast<std::size_t>(conductor), BigRat(0));
  for (const auto& [k, c] : terms) {
    std::int64_t r = k % conductor;
    if (r < 0) r += conductor;
    dense[static_cast<std::size_t>(r)] += c;
  }
  e.reduce(std::move(dense));
  return e;
}

bool CycloFieldElem::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

namespace {
void require_same_field(const CycloFieldElem& x, const CycloFieldElem& y) {
  if (x.conductor() != y.conductor()) throw Error("cyclotomic field conductors differ");
}
} // namespace

CycloFieldElem operator+(const CycloFieldElem& x, const CycloFieldElem& y) {
  require_same_field(x, y);
  CycloFieldElem r = x;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += y.coeffs_[i];
  return r;
}

CycloFieldElem operator-(const CycloFieldElem& x, const CycloFieldElem& y) {
  require_same_field(x, y);
  CycloFieldElem r = x;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] -= y.coeffs_[i];
  return r;
}

CycloFieldElem operator*(const CycloFieldElem& x, const CycloFieldElem& y) {
  require_same_field(x, y);
  std::vector<BigRat> dense(x.coeffs_.size() + y.coeffs_.size(), BigRat(0));
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) dense[i + j] += x.coeffs_[i] * y.coeffs_[j];
  CycloFieldElem r(x.conductor_);
  r.reduce(std::move(dense));
  return r;
}

bool operator==(const CycloFieldElem& x, const CycloFieldElem& y) {
  return x.conductor_ == y.conductor_ && x.coeffs_ == y.coeffs_;
}

CycloFieldElem root_eval(std::span<const QuadVal> coeffs, const RootOfUnity& zeta) {
  std::int64_t n = zeta.den();
  for (const auto& c : coeffs) {
    if (c.c1 == 0) continue;
    if (c.u == 2) n = std::lcm(n, std::int64_t{8});
    if (c.u == 3) n = std::lcm(n, std::int64_t{12});
  }
  // zeta = z^e with z = exp(2 pi i / n); sqrt2 = z^(n/8) + z^(-n/8), sqrt3 = z^(n/12) + z^(-n/12).
  const std::int64_t e = zeta.num() * (n / zeta.den());
  std::map<std::int64_t, BigRat> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const QuadVal& c = coeffs[k];
    const std::int64_t base = e * static_cast<std::int64_t>(k);
    if (c.c0 != 0) terms[base % n] += BigRat(c.c0);
    if (c.c1 != 0) {
      const std::int64_t s = c.u == 2 ? n / 8 : n / 12;
      terms[(base + s) % n] += BigRat(c.c1);
      terms[((base - s) % n + n) % n] += BigRat(c.c1);
    }
  }
  return CycloFieldElem::from_powers(n, terms);
}

} // namespace sylow
