#include "sylow/zfactor.hpp"

#include <algorithm>

namespace sylow {

std::vector<BigInt> positive_divisors(const BigInt& value) {
  BigInt n = abs(value);
  if (n == 0 || n > BigInt("1000000000000")) return {};
  std::vector<std::pair<BigInt, int>> primes;
  for (BigInt f = 2; f * f <= n; ++f) {
    if (n % f != 0) continue;
    int e = 0;
    while (n % f == 0) {
      n /= f;
      ++e;
    }
    primes.emplace_back(f, e);
  }
  if (n > 1) primes.emplace_back(n, 1);
  std::vector<BigInt> divs{1};
  for (const auto& [p, e] : primes) {
    const std::size_t sz = divs.size();
    BigInt pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

namespace {

// Monic g of degree k with g(x_i) = v_i, or nullopt-like false if not integral.
bool interpolate_monic(const std::vector<BigInt>& xs, const std::vector<BigInt>& vs, ZPoly& out) {
  const std::size_t k = xs.size();
  // g = prod (x - x_i) + h, deg h < k, h(x_i) = v_i.
  std::vector<BigRat> h(k, BigRat(0));
  for (std::size_t i = 0; i < k; ++i) {
    // Lagrange basis polynomial L_i.
    std::vector<BigRat> basis{BigRat(1)};
    BigRat denom = 1;
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      std::vector<BigRat> next(basis.size() + 1, BigRat(0));
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t + 1] += basis[t];
        next[t] -= basis[t] * BigRat(xs[j]);
      }
      basis = std::move(next);
      denom *= BigRat(xs[i] - xs[j]);
    }
    const BigRat scale = BigRat(vs[i]) / denom;
    for (std::size_t t = 0; t < basis.size(); ++t) h[t] += basis[t] * scale;
  }
  ZPoly prod{1};
  for (const auto& x : xs) prod = prod * ZPoly::x_minus(x);
  std::vector<BigInt> coeffs = prod.coeffs();
  for (std::size_t t = 0; t < k; ++t) {
    h[t].canonicalize();
    if (h[t].get_den() != 1) return false;
    coeffs[t] += h[t].get_num();
  }
  out = ZPoly(std::move(coeffs));
  return true;
}

struct Search {
  unsigned long budget;
  bool complete = true;

  // A monic factor of p of degree k, if one exists.
  bool find_factor(const ZPoly& p, int k, ZPoly& g) {
    struct Point {
      BigInt x;
      std::vector<BigInt> divs;
    };
    std::vector<Point> pool;
    for (long t = 0; pool.size() < static_cast<std::size_t>(3 * k + 4) && t < 40 * (k + 2); ++t) {
      const long x = (t % 2 == 0) ? t / 2 : -(t + 1) / 2;
      const BigInt v = p.eval(BigInt(x));
      if (v == 0) {
        // x is a root: degree-1 factor found directly.
        if (k == 1) {
          g = ZPoly::x_minus(BigInt(x));
          return true;
        }
        continue;
      }
      auto divs = positive_divisors(v);
      if (divs.empty()) continue;
      pool.push_back({BigInt(x), std::move(divs)});
    }
    if (pool.size() < static_cast<std::size_t>(k)) {
      complete = false;
      return false;
    }
    std::stable_sort(pool.begin(), pool.end(),
                     [](const Point& a, const Point& b) { return a.divs.size() < b.divs.size(); });
    pool.resize(static_cast<std::size_t>(k));
    unsigned long combos = 1;
    for (const auto& pt : pool) {
      combos *= 2 * pt.divs.size();
      if (combos > budget) {
        complete = false;
        return false;
      }
    }
    budget -= combos;
    std::vector<BigInt> xs, vs(static_cast<std::size_t>(k));
    for (const auto& pt : pool) xs.push_back(pt.x);
    std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
    while (true) {
      for (int i = 0; i < k; ++i) {
        const auto& divs = pool[static_cast<std::size_t>(i)].divs;
        const std::size_t j = idx[static_cast<std::size_t>(i)];
        vs[static_cast<std::size_t>(i)] = j < divs.size() ? divs[j] : BigInt(-divs[j - divs.size()]);
      }
      ZPoly cand;
      if (interpolate_monic(xs, vs, cand) && cand.degree() == k && divides(cand, p)) {
        g = cand;
        return true;
      }
      int i = 0;
      for (; i < k; ++i) {
        auto& j = idx[static_cast<std::size_t>(i)];
        if (++j < 2 * pool[static_cast<std::size_t>(i)].divs.size()) break;
        j = 0;
      }
      if (i == k) return false;
    }
  }

  void split(const ZPoly& p, std::vector<ZPoly>& out) {
    if (p.degree() <= 1) {
      if (p.degree() == 1) out.push_back(p);
      return;
    }
    for (int k = 1; 2 * k <= p.degree(); ++k) {
      ZPoly g;
      if (find_factor(p, k, g)) {
        ZPoly rest;
        divides(g, p, &rest);
        split(g, out);
        split(rest, out);
        return;
      }
    }
    out.push_back(p);
  }
};

} // namespace

ZFactorization factor_monic(const ZPoly& p, unsigned long budget) {
  if (!p.is_monic()) throw Error("factor_monic: polynomial must be monic");
  Search s{budget};
  std::vector<ZPoly> pieces;
  s.split(p, pieces);
  std::sort(pieces.begin(), pieces.end());
  ZFactorization r;
  r.complete = s.complete;
  for (auto& f : pieces) {
    if (!r.factors.empty() && r.factors.back().poly == f) ++r.factors.back().mult;
    else r.factors.push_back({f, 1});
  }
  return r;
}

} // namespace sylow
