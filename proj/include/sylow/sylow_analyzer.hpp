#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "sylow/group_data.hpp"
#include "sylow/order_engine.hpp"

namespace sylow {

/// Where torus_part came from.
enum class TorusSource { None, Formula, LatticeSnf, ExceptionSnf, ReeTable };

std::string to_string(TorusSource s);
TorusSource parse_torus_source(const std::string& s);

struct SylowReport {
  SimpleFactor factor;
  QSpec q;
  std::uint64_t ell = 2;
  /// False when l does not divide the order; the remaining fields are then
  /// trivial.
  bool divides = false;
  std::uint64_t d_ell = 0;
  std::set<std::uint64_t> D_ell;
  /// The distinguished factor Phi, evaluated at q^subst.
  OrderFactor chosen;
  int n_phi = 0;
  unsigned v_torus = 0;
  std::vector<BigInt> torus_part;
  TorusSource torus_source = TorusSource::None;
  std::vector<int> w_phi_degrees;
  BigInt w_phi_order = 1;
  BigInt sylow_order = 1;
  bool abelian = true;
  ExceptionClass exception = ExceptionClass::None;
  /// val_l of |C_G(S)^F| in the exceptional cases, 0 otherwise.
  unsigned correction_v = 0;

  friend bool operator==(const SylowReport&, const SylowReport&) = default;
};

/// {d : some order factor Phi dividing Phi_d(x^eta) has l | Phi(q^n)}, by
/// exact evaluation.
std::set<std::uint64_t> D_of_ell(const SimpleFactor& f, const QSpec& q, std::uint64_t l);

/// Sylow l-data of one factor. Internal assertions (d(l) in D(l), unique
/// Phi, the divisibility lemma on integral q) raise VerificationFailure.
SylowReport analyze(const SimpleFactor& f, const QSpec& q, std::uint64_t l);

struct ValuationIdentity {
  unsigned lhs = 0;
  unsigned rhs = 0;
  bool holds() const { return lhs == rhs; }
};

/// val_l |G^F| summed over all order factors, against the torus layer (or the
/// exceptional centralizer) plus val_l |W_Phi|. Throws on mismatch.
ValuationIdentity check_valuation_identity(const SimpleFactor& f, const QSpec& q, std::uint64_t l);

struct GroupSylowReport {
  std::vector<SylowReport> factors;
  BigInt order = 1;
  BigInt sylow_order = 1;
};

/// Per-factor reports; only the orders are merged.
GroupSylowReport analyze_group(const GroupSpec& g, const QSpec& q, std::uint64_t l);

} // namespace sylow
