#pragma once

// Sylow subgroups of a finite group given abstractly by element indices
// 0..size-1 and a multiplication callback.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "sylow/exact_arith.hpp"

namespace sylow {

struct Subgroup {
  std::vector<int> elements; // sorted
  std::vector<int> generators;
};

template <class Mul>
int element_power(int x, std::uint64_t k, int identity, Mul&& mul) {
  int r = identity;
  for (std::uint64_t i = 0; i < k; ++i) r = mul(r, x);
  return r;
}

template <class Mul>
std::vector<int> inverse_table(int size, int identity, Mul&& mul) {
  std::vector<int> inv(static_cast<std::size_t>(size), -1);
  for (int x = 0; x < size; ++x) {
    if (inv[static_cast<std::size_t>(x)] >= 0) continue;
    int prev = identity, cur = x;
    while (cur != identity) {
      prev = cur;
      cur = mul(cur, x);
    }
    inv[static_cast<std::size_t>(x)] = prev;
    inv[static_cast<std::size_t>(prev)] = x;
  }
  return inv;
}

/// Normalizer climbing: starting from the trivial group, repeatedly take an
/// element of N_G(P) whose order modulo P is divisible by l and adjoin the
/// matching power. N_G(P) is found by scanning all of G.
template <class Mul>
Subgroup sylow_climb(int size, int identity, std::uint64_t l, Mul&& mul) {
  const auto inv = inverse_table(size, identity, mul);
  std::uint64_t target = 1;
  {
    std::uint64_t s = static_cast<std::uint64_t>(size);
    while (s % l == 0) {
      s /= l;
      target *= l;
    }
  }
  std::vector<char> in(static_cast<std::size_t>(size), 0);
  Subgroup p;
  p.elements = {identity};
  in[static_cast<std::size_t>(identity)] = 1;
  while (p.elements.size() < target) {
    bool extended = false;
    for (int x = 0; x < size && !extended; ++x) {
      if (in[static_cast<std::size_t>(x)]) continue;
      bool normalizes = true;
      for (int g : p.generators) {
        const int c = mul(mul(x, g), inv[static_cast<std::size_t>(x)]);
        if (!in[static_cast<std::size_t>(c)]) {
          normalizes = false;
          break;
        }
      }
      if (!normalizes) continue;
      std::uint64_t k = 1;
      for (int y = x; !in[static_cast<std::size_t>(y)]; y = mul(y, x)) ++k;
      if (k % l != 0) continue;
      const int z = element_power(x, k / l, identity, mul);
      std::vector<int> grown;
      int cur = identity;
      for (std::uint64_t i = 0; i < l; ++i) {
        for (int e : p.elements) grown.push_back(mul(cur, e));
        cur = mul(cur, z);
      }
      std::sort(grown.begin(), grown.end());
      grown.erase(std::unique(grown.begin(), grown.end()), grown.end());
      if (grown.size() != p.elements.size() * l)
        throw VerificationFailure("sylow_climb: extension did not multiply the order by l");
      for (int e : grown) in[static_cast<std::size_t>(e)] = 1;
      p.elements = std::move(grown);
      p.generators.push_back(z);
      extended = true;
    }
    if (!extended) throw VerificationFailure("sylow_climb: no l-element in N(P) outside P");
  }
  return p;
}

template <class Mul>
bool generators_commute(const std::vector<int>& gens, Mul&& mul) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (mul(gens[i], gens[j]) != mul(gens[j], gens[i])) return false;
  return true;
}

/// Invariants l^e_1 <= l^e_2 <= ... of an abelian l-group, from the sizes of
/// the subgroups {x : x^(l^k) = 1}.
template <class Mul>
std::vector<BigInt> abelian_l_invariants(const std::vector<int>& elements, int identity, std::uint64_t l,
                                         Mul&& mul) {
  std::vector<std::uint64_t> omega{1};
  std::vector<int> pw(elements.begin(), elements.end());
  while (omega.back() < elements.size()) {
    std::uint64_t c = 0;
    for (auto& x : pw) {
      x = element_power(x, l, identity, mul);
      if (x == identity) ++c;
    }
    omega.push_back(c);
    if (omega.size() > 64) throw VerificationFailure("abelian_l_invariants: not an l-group");
  }
  // rank_k = number of invariants with exponent >= k.
  std::vector<int> ranks;
  for (std::size_t k = 1; k < omega.size(); ++k) {
    std::uint64_t ratio = omega[k] / omega[k - 1];
    int r = 0;
    while (ratio > 1) {
      ratio /= l;
      ++r;
    }
    ranks.push_back(r);
  }
  std::vector<BigInt> out;
  for (std::size_t k = 0; k < ranks.size(); ++k) {
    const int next = k + 1 < ranks.size() ? ranks[k + 1] : 0;
    for (int i = 0; i < ranks[k] - next; ++i) out.push_back(pow(BigInt(static_cast<unsigned long>(l)), k + 1));
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace sylow
