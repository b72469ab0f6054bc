#include "sylow/finite_field.hpp"

#include "sylow/exact_arith.hpp"

namespace sylow {

namespace {

std::vector<int> digits(int x, int p, int k) {
  std::vector<int> d(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i, x /= p) d[static_cast<std::size_t>(i)] = x % p;
  return d;
}

int from_digits(const std::vector<int>& d, int p) {
  int x = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) x = x * p + *it;
  return x;
}

// Product of two residues modulo the monic polynomial m of degree k.
std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& m, int p) {
  const std::size_t k = m.size() - 1;
  std::vector<int> prod(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (std::size_t t = 2 * k - 1; t >= k; --t) {
    const int c = prod[t];
    if (c == 0) continue;
    for (std::size_t s = 0; s <= k; ++s) prod[t - k + s] = ((prod[t - k + s] - c * m[s]) % p + p) % p;
  }
  prod.resize(k);
  return prod;
}

// Monic irreducible of degree k over F_p: no roots suffices for k <= 3, and
// for k = 4 we also rule out products of two monic quadratics.
bool irreducible(const std::vector<int>& m, int p) {
  const int k = static_cast<int>(m.size()) - 1;
  auto eval = [&](int x) {
    int v = 0;
    for (int i = k; i >= 0; --i) v = (v * x + m[static_cast<std::size_t>(i)]) % p;
    return v;
  };
  for (int x = 0; x < p; ++x)
    if (eval(x) == 0) return false;
  if (k == 4) {
    for (int a0 = 0; a0 < p; ++a0)
      for (int a1 = 0; a1 < p; ++a1)
        for (int b0 = 0; b0 < p; ++b0)
          for (int b1 = 0; b1 < p; ++b1) {
            const int c[5] = {a0 * b0 % p, (a0 * b1 + a1 * b0) % p, (a0 + b0 + a1 * b1) % p, (a1 + b1) % p, 1};
            bool eq = true;
            for (int i = 0; i < 5 && eq; ++i) eq = c[i] == m[static_cast<std::size_t>(i)];
            if (eq) return false;
          }
  }
  return true;
}

} // namespace

FiniteField::FiniteField(std::uint64_t order) {
  if (order < 2 || order > 16) throw Error("finite fields are limited to at most 16 elements");
  for (std::uint64_t p = 2; p <= order; ++p) {
    if (!is_prime(p)) continue;
    std::uint64_t x = order;
    int k = 0;
    while (x % p == 0) {
      x /= p;
      ++k;
    }
    if (x == 1) {
      p_ = static_cast<int>(p);
      k_ = k;
      break;
    }
  }
  if (p_ == 0) throw Error(std::to_string(order) + " is not a prime power");
  q_ = static_cast<int>(order);
  if (k_ == 1) {
    modulus_ = {0, 1};
  } else {
    int count = 1;
    for (int i = 0; i < k_; ++i) count *= p_;
    for (int c = 0; c < count && modulus_.empty(); ++c) {
      std::vector<int> m = digits(c, p_, k_);
      m.push_back(1);
      if (irreducible(m, p_)) modulus_ = m;
    }
  }
  add_.resize(static_cast<std::size_t>(q_ * q_));
  mul_.resize(static_cast<std::size_t>(q_ * q_));
  neg_.resize(static_cast<std::size_t>(q_));
  for (int x = 0; x < q_; ++x) {
    const auto dx = digits(x, p_, k_);
    std::vector<int> n(dx.size());
    for (std::size_t i = 0; i < dx.size(); ++i) n[i] = (p_ - dx[i]) % p_;
    neg_[static_cast<std::size_t>(x)] = from_digits(n, p_);
    for (int y = 0; y < q_; ++y) {
      const auto dy = digits(y, p_, k_);
      std::vector<int> s(dx.size());
      for (std::size_t i = 0; i < dx.size(); ++i) s[i] = (dx[i] + dy[i]) % p_;
      add_[idx(x, y)] = from_digits(s, p_);
      if (k_ == 1) mul_[idx(x, y)] = x * y % p_;
      else mul_[idx(x, y)] = from_digits(poly_mulmod(dx, dy, modulus_, p_), p_);
    }
  }
}

int FiniteField::inv(int x) const {
  if (x == 0) throw Error("inverse of zero in a finite field");
  for (int y = 1; y < q_; ++y)
    if (mul(x, y) == 1) return y;
  throw Error("finite field element without inverse");
}

int FiniteField::pow(int x, std::uint64_t e) const {
  int r = 1;
  for (; e; e >>= 1) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
  }
  return r;
}

int FiniteField::from_int(long n) const { return static_cast<int>(((n % p_) + p_) % p_); }

} // namespace sylow
