#pragma once

#include <string>
#include <vector>

#include "sylow/cyclotomic.hpp"
#include "sylow/group_data.hpp"

namespace sylow {

/// Phi(q^subst)^mult.
struct OrderFactor {
  CycFactorId id;
  int subst = 1;
  int mult = 0;

  /// `P3`, `P2,1^2`, `P1(q^2)`.
  std::string to_string() const;
  BigInt value(const QSpec& q) const;
  friend bool operator==(const OrderFactor&, const OrderFactor&) = default;
};

/// q^q_exponent * prod Phi(q^n)^mult, factors sorted by (subst, d, variant).
struct FactoredOrder {
  int q_exponent = 0;
  std::vector<OrderFactor> factors;

  /// Canonical rendering `q^12 * P1^2 * P2^2 * P3^2 * P6^2 * P12`.
  std::string to_string() const;
  /// Compact rendering `q^12 * P1^2 P2^2 P3^2 P6^2 P12`.
  std::string to_compact_string() const;
  /// Total degree in q.
  int degree() const;

  void add(const OrderFactor& f);
  friend bool operator==(const FactoredOrder&, const FactoredOrder&) = default;
};

/// Multiset of d_i with zeta^d_i = eps_i, ascending.
std::vector<int> a_zeta(const std::vector<GenDegree>& degrees, const RootOfUnity& zeta);

/// Factored order of a single factor (substitution degree = its descent).
FactoredOrder generic_order(const SimpleFactor& f);
/// Product over all factors.
FactoredOrder generic_order(const GroupSpec& g);

/// Replaces each integral Phi_d(q^n) by the cyclotomic factors of Phi_d(x^n).
FactoredOrder normalize(const FactoredOrder& fo);

BigInt evaluate_order(const FactoredOrder& fo, const QSpec& q);

} // namespace sylow
