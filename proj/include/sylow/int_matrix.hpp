#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sylow/exact_arith.hpp"
#include "sylow/polynomial.hpp"

namespace sylow {

/// Dense integer matrix, row-major, arbitrary precision entries.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  int rows() const { return r_; }
  int cols() const { return c_; }
  BigInt& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * c_ + j)]; }
  const BigInt& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * c_ + j)]; }

  IntMatrix transpose() const;
  bool is_identity() const;
  bool is_zero() const;
  /// Columns [begin, end).
  IntMatrix col_range(int begin, int end) const;
  /// Rows [begin, end).
  IntMatrix row_range(int begin, int end) const;

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
  friend IntMatrix operator+(const IntMatrix& x, const IntMatrix& y);
  friend IntMatrix operator-(const IntMatrix& x, const IntMatrix& y);
  friend IntMatrix operator*(const BigInt& s, const IntMatrix& y);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend bool operator<(const IntMatrix& x, const IntMatrix& y);

  /// Rows separated by `;`, entries by `,`.
  std::string to_string() const;

private:
  int r_ = 0;
  int c_ = 0;
  std::vector<BigInt> a_;
};

/// Bareiss determinant.
BigInt det(const IntMatrix& a);

/// det(xI - a) by Faddeev-LeVerrier with exact division.
ZPoly charpoly(const IntMatrix& a);

/// P(a) by Horner's rule.
IntMatrix poly_eval(const ZPoly& p, const IntMatrix& a);

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ...
struct SmithForm {
  IntMatrix U, Uinv, V, D;
  std::vector<BigInt> diag; // the nonzero diagonal entries, positive
  int rank = 0;
};

SmithForm smith(const IntMatrix& a);

/// Nonzero elementary divisors.
std::vector<BigInt> elementary_divisors(const IntMatrix& a);

/// Basis (as columns) of {x : A x = 0}; the result is saturated.
IntMatrix integer_kernel(const IntMatrix& a);

/// True when the columns of b span a saturated sublattice of full column rank.
bool is_saturated(const IntMatrix& b);

/// Row Hermite normal form of the row span, zero rows dropped. Canonical for
/// the lattice spanned by the rows.
IntMatrix hnf_rows(const IntMatrix& a);

/// Left inverse (k x n) of a saturated n x k column basis.
IntMatrix left_inverse(const IntMatrix& b);

/// Small matrix with 64-bit entries for Weyl group elements.
struct SmallMat {
  int n = 0;
  std::vector<std::int64_t> a;

  SmallMat() = default;
  explicit SmallMat(int dim) : n(dim), a(static_cast<std::size_t>(dim * dim), 0) {}
  static SmallMat identity(int dim);
  static SmallMat from(const IntMatrix& m);

  std::int64_t& operator()(int i, int j) { return a[static_cast<std::size_t>(i * n + j)]; }
  std::int64_t operator()(int i, int j) const { return a[static_cast<std::size_t>(i * n + j)]; }

  IntMatrix to_int() const;
  bool is_identity() const;
  friend SmallMat operator*(const SmallMat& x, const SmallMat& y);
  friend bool operator==(const SmallMat&, const SmallMat&) = default;
  friend bool operator<(const SmallMat& x, const SmallMat& y) { return x.a < y.a; }
};

struct SmallMatHash {
  std::size_t operator()(const SmallMat& m) const;
};

/// Characteristic polynomial with an overflow-checked 64-bit fast path.
ZPoly charpoly(const SmallMat& a);

} // namespace sylow
