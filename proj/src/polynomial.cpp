#include "sylow/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace sylow {

ZPoly::ZPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

ZPoly::ZPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::monomial(const BigInt& c, unsigned degree) {
  std::vector<BigInt> v(degree + 1, BigInt(0));
  v[degree] = c;
  return ZPoly(std::move(v));
}

void ZPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt ZPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

BigInt ZPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ZPoly ZPoly::compose_power(unsigned n) const {
  if (is_zero()) return {};
  std::vector<BigInt> v(static_cast<std::size_t>(degree()) * n + 1, BigInt(0));
  for (std::size_t k = 0; k < c_.size(); ++k) v[k * n] = c_[k];
  return ZPoly(std::move(v));
}

ZPoly operator+(const ZPoly& x, const ZPoly& y) {
  std::vector<BigInt> v(std::max(x.c_.size(), y.c_.size()), BigInt(0));
  for (std::size_t i = 0; i < x.c_.size(); ++i) v[i] += x.c_[i];
  for (std::size_t i = 0; i < y.c_.size(); ++i) v[i] += y.c_[i];
  return ZPoly(std::move(v));
}

ZPoly operator-(const ZPoly& x, const ZPoly& y) {
  std::vector<BigInt> v(std::max(x.c_.size(), y.c_.size()), BigInt(0));
  for (std::size_t i = 0; i < x.c_.size(); ++i) v[i] += x.c_[i];
  for (std::size_t i = 0; i < y.c_.size(); ++i) v[i] -= y.c_[i];
  return ZPoly(std::move(v));
}

ZPoly operator*(const ZPoly& x, const ZPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  std::vector<BigInt> v(x.c_.size() + y.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i] == 0) continue;
    for (std::size_t j = 0; j < y.c_.size(); ++j) v[i + j] += x.c_[i] * y.c_[j];
  }
  return ZPoly(std::move(v));
}

ZPoly operator*(const BigInt& s, const ZPoly& y) {
  std::vector<BigInt> v = y.c_;
  for (auto& c : v) c *= s;
  return ZPoly(std::move(v));
}

bool operator<(const ZPoly& x, const ZPoly& y) {
  if (x.degree() != y.degree()) return x.degree() < y.degree();
  for (int k = x.degree(); k >= 0; --k) {
    const auto i = static_cast<std::size_t>(k);
    if (x.c_[i] != y.c_[i]) return x.c_[i] < y.c_[i];
  }
  return false;
}

std::string ZPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = c_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

ZDivResult divmod_monic(const ZPoly& num, const ZPoly& den) {
  if (den.is_zero()) throw Error("division by zero polynomial");
  const BigInt lead = den.leading();
  if (lead != 1 && lead != -1) throw Error("divmod_monic: leading coefficient must be +-1");
  std::vector<BigInt> r = num.coeffs();
  const int dd = den.degree();
  if (num.degree() < dd) return {ZPoly{}, num};
  std::vector<BigInt> q(static_cast<std::size_t>(num.degree() - dd + 1), BigInt(0));
  for (int k = num.degree(); k >= dd; --k) {
    const auto ki = static_cast<std::size_t>(k);
    if (r[ki] == 0) continue;
    BigInt f = r[ki] * lead; // lead is its own inverse
    q[static_cast<std::size_t>(k - dd)] = f;
    for (int j = 0; j <= dd; ++j)
      r[static_cast<std::size_t>(k - dd + j)] -= f * den.coeffs()[static_cast<std::size_t>(j)];
  }
  return {ZPoly(std::move(q)), ZPoly(std::move(r))};
}

bool divides(const ZPoly& den, const ZPoly& num, ZPoly* quotient) {
  auto [q, r] = divmod_monic(num, den);
  if (!r.is_zero()) return false;
  if (quotient) *quotient = std::move(q);
  return true;
}

int multiplicity(const ZPoly& den, ZPoly num, ZPoly* cofactor) {
  if (den.degree() < 1) throw Error("multiplicity: divisor must be non-constant");
  int k = 0;
  ZPoly q;
  while (!num.is_zero() && divides(den, num, &q)) {
    num = std::move(q);
    ++k;
  }
  if (cofactor) *cofactor = std::move(num);
  return k;
}

QuadPoly quad_mul(const QuadPoly& x, const QuadPoly& y) {
  if (x.empty() || y.empty()) return {};
  QuadPoly out(x.size() + y.size() - 1, QuadVal{});
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] = out[i + j] + x[i] * y[j];
  return out;
}

bool quad_equal(const QuadPoly& x, const QuadPoly& y) {
  const std::size_t n = std::max(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    QuadVal a = i < x.size() ? x[i] : QuadVal{};
    QuadVal b = i < y.size() ? y[i] : QuadVal{};
    if (!(a == b)) return false;
  }
  return true;
}

QuadPoly to_quad(const ZPoly& p) {
  QuadPoly out;
  for (const auto& c : p.coeffs()) out.emplace_back(c);
  return out;
}

std::string quad_to_string(const QuadPoly& p, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k) {
    const QuadVal& c = p[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    const bool neg = c.c1 == 0 && c.c0 < 0;
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    const BigInt mag = abs(c.c0);
    const bool unit = c.c1 == 0 && mag == 1;
    if (!unit || k == 0) os << (c.c1 == 0 ? mag.get_str() : "(" + c.to_string() + ")");
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return first ? "0" : os.str();
}

namespace detail {

ZPoly compute_cyclotomic(int d) {
  if (d < 1) throw Error("cyclotomic polynomial index must be positive");
  std::vector<int> divs;
  for (int e = 1; e <= d; ++e)
    if (d % e == 0) divs.push_back(e);
  std::map<int, ZPoly> memo;
  for (int e : divs) {
    ZPoly acc = ZPoly::monomial(1, static_cast<unsigned>(e)) - ZPoly{1};
    for (const auto& [f, phi] : memo) {
      if (e % f != 0) continue;
      ZPoly q;
      if (!divides(phi, acc, &q)) throw VerificationFailure("cyclotomic division not exact");
      acc = std::move(q);
    }
    memo.emplace(e, std::move(acc));
  }
  return memo.at(d);
}

} // namespace detail

} // namespace sylow
