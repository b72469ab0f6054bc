#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sylow {

/// GF(p^k) with at most 16 elements. Elements are integers 0..size-1 whose
/// base-p digits are polynomial coefficients modulo a fixed irreducible.
class FiniteField {
public:
  explicit FiniteField(std::uint64_t order);

  int size() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return k_; }
  /// Monic irreducible used for the construction, coefficients low to high.
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int x, int y) const { return add_[idx(x, y)]; }
  int sub(int x, int y) const { return add_[idx(x, neg_[static_cast<std::size_t>(y)])]; }
  int mul(int x, int y) const { return mul_[idx(x, y)]; }
  int neg(int x) const { return neg_[static_cast<std::size_t>(x)]; }
  /// Throws on zero.
  int inv(int x) const;
  int pow(int x, std::uint64_t e) const;
  /// The embedding of the integer n (mod p).
  int from_int(long n) const;

private:
  std::size_t idx(int x, int y) const { return static_cast<std::size_t>(x * q_ + y); }
  int p_ = 0, k_ = 0, q_ = 0;
  std::vector<int> modulus_;
  std::vector<int> add_, mul_, neg_;
};

} // namespace sylow
