#pragma once

#include <string>
#include <vector>

#include "sylow/exact_arith.hpp"

namespace sylow {

enum class Series { A, B, C, D, E, F, G };

char series_letter(Series s);

/// One quasi-simple factor with its twist and descent of scalars.
struct SimpleFactor {
  Series series = Series::A;
  int rank = 1;
  int twist = 1;
  bool very_twisted = false;
  int descent = 1;

  void validate() const;
  /// Grammar form, e.g. `2A3`, `3D4`, `2F4^2`.
  std::string to_string() const;
  /// The untwisted factor with the same diagram.
  SimpleFactor split_form() const;
  /// eta forced by the factor: 2 for the very twisted types, 1 otherwise.
  int eta() const { return very_twisted ? 2 : 1; }
  /// Characteristic forced by a very twisted factor, 0 when free.
  std::uint64_t forced_p() const;

  friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;
};

struct GroupSpec {
  std::vector<SimpleFactor> factors;

  void validate() const;
  std::string to_string() const;
  /// Throws unless q suits every factor (eta and characteristic).
  void check_q(const QSpec& q) const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Parses `[2|3]SERIESrank[^n]`, factors joined by `x` (e.g. `A1xB2`).
/// C2 is read as B2; C1, B1, D2, D3 are rejected with the canonical name.
GroupSpec parse_group(const std::string& text);
SimpleFactor parse_factor(const std::string& text);

struct GenDegree {
  int d = 1;
  RootOfUnity eps;
  friend bool operator==(const GenDegree&, const GenDegree&) = default;
};

/// Generalized degrees (d_i, eps_i) of the reflection coset, before descent.
std::vector<GenDegree> generalized_degrees(const SimpleFactor& f);

/// Number of positive roots of the underlying root system.
int positive_root_count(const SimpleFactor& f);

/// Order of the Weyl group (product of the degrees).
BigInt weyl_order(const SimpleFactor& f);

enum class ExceptionClass { None, TriD4_l3, Split_l2_d2, NonSplit_l2_d1, Ree2G2_l2 };

std::string to_string(ExceptionClass e);
ExceptionClass parse_exception(const std::string& s);

/// Exception rule matched by (f, l, d) where d = d(l).
ExceptionClass exception_class(const SimpleFactor& f, const QSpec& q, std::uint64_t l, std::uint64_t d);

/// Every valid single factor of rank <= max_rank (twists included, descent 1).
std::vector<SimpleFactor> all_factors(int max_rank);

} // namespace sylow
