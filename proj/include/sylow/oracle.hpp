#pragma once

// Brute-force ground truth: small classical groups over finite fields,
// their orders and genuine Sylow subgroups.

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "sylow/finite_field.hpp"
#include "sylow/group_algo.hpp"
#include "sylow/group_data.hpp"

namespace sylow {

enum class Family { SL, SU, Sp };

std::string to_string(Family f);

/// SL_n(q), SU_n(q) (matrices over F_{q^2}) or Sp_n(q) (n even).
struct MatrixGroupSpec {
  Family family = Family::SL;
  int n = 2;
  std::uint64_t q = 2;

  void validate() const;
  /// Size of the field the entries live in.
  std::uint64_t field_size() const { return family == Family::SU ? q * q : q; }
  std::string to_string() const;
  /// Matching Lie type: SL_n -> A(n-1), SU_n -> 2A(n-1), Sp4 -> B2.
  SimpleFactor lie_type() const;
  QSpec qspec() const;
};

/// n x n matrix over a field with at most 16 elements, 4 bits per entry.
using PackedMatrix = std::uint64_t;

class FiniteGroup {
public:
  FiniteGroup(MatrixGroupSpec spec, std::vector<PackedMatrix> elements);

  const MatrixGroupSpec& spec() const { return spec_; }
  const FiniteField& field() const { return *field_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<PackedMatrix>& elements() const { return elements_; }
  int identity() const { return identity_; }
  /// Index of the product; recomputes the matrix product.
  int mul(int x, int y) const;
  PackedMatrix product(PackedMatrix x, PackedMatrix y) const;

private:
  MatrixGroupSpec spec_;
  std::shared_ptr<const FiniteField> field_;
  std::vector<PackedMatrix> elements_;
  std::unordered_map<PackedMatrix, int> index_;
  int identity_ = 0;
};

inline int entry(PackedMatrix m, int n, int i, int j) { return static_cast<int>((m >> (4 * (i * n + j))) & 0xF); }

/// Column-by-column backtracking with pruning by the defining equations; the
/// parallel form splits on the first column and merges in order.
FiniteGroup enumerate_group(const MatrixGroupSpec& spec, bool parallel = true);

/// Reference: tests every one of field_size^(n^2) matrices (at most 2^26).
FiniteGroup enumerate_group_bruteforce(const MatrixGroupSpec& spec);

/// Sylow l-subgroup by normalizer climbing. Throws when l does not divide |G|.
Subgroup sylow_subgroup(const FiniteGroup& g, std::uint64_t l);

bool is_abelian(const FiniteGroup& g, const Subgroup& p);

/// Invariants of an abelian l-group, ascending; throws if not abelian.
std::vector<BigInt> abelian_invariants(const FiniteGroup& g, const Subgroup& p, std::uint64_t l);

/// The groups of the order-equivalence check.
std::vector<MatrixGroupSpec> oracle_catalog();

} // namespace sylow
