#include "sylow/int_matrix.hpp"

#include <algorithm>
#include <sstream>

namespace sylow {

IntMatrix::IntMatrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows * cols), BigInt(0)) {
  if (rows < 0 || cols < 0) throw Error("matrix dimensions must be nonnegative");
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows[0].size()) : 0;
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c) throw Error("ragged matrix rows");
    for (int j = 0; j < c; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_identity() const {
  if (r_ != c_) return false;
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool IntMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const BigInt& x) { return x == 0; });
}

IntMatrix IntMatrix::col_range(int begin, int end) const {
  IntMatrix m(r_, end - begin);
  for (int i = 0; i < r_; ++i)
    for (int j = begin; j < end; ++j) m(i, j - begin) = (*this)(i, j);
  return m;
}

IntMatrix IntMatrix::row_range(int begin, int end) const {
  IntMatrix m(end - begin, c_);
  for (int i = begin; i < end; ++i)
    for (int j = 0; j < c_; ++j) m(i - begin, j) = (*this)(i, j);
  return m;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.c_ != y.r_) throw Error("matrix product dimension mismatch");
  IntMatrix m(x.r_, y.c_);
  BigInt t;
  for (int i = 0; i < x.r_; ++i)
    for (int k = 0; k < x.c_; ++k) {
      const BigInt& xik = x(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.c_; ++j) {
        mpz_mul(t.get_mpz_t(), xik.get_mpz_t(), y(k, j).get_mpz_t());
        m(i, j) += t;
      }
    }
  return m;
}

IntMatrix operator+(const IntMatrix& x, const IntMatrix& y) {
  if (x.r_ != y.r_ || x.c_ != y.c_) throw Error("matrix sum dimension mismatch");
  IntMatrix m = x;
  for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += y.a_[i];
  return m;
}

IntMatrix operator-(const IntMatrix& x, const IntMatrix& y) {
  if (x.r_ != y.r_ || x.c_ != y.c_) throw Error("matrix difference dimension mismatch");
  IntMatrix m = x;
  for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] -= y.a_[i];
  return m;
}

IntMatrix operator*(const BigInt& s, const IntMatrix& y) {
  IntMatrix m = y;
  for (auto& v : m.a_) v *= s;
  return m;
}

bool operator<(const IntMatrix& x, const IntMatrix& y) {
  if (x.r_ != y.r_) return x.r_ < y.r_;
  if (x.c_ != y.c_) return x.c_ < y.c_;
  return std::lexicographical_compare(x.a_.begin(), x.a_.end(), y.a_.begin(), y.a_.end());
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < r_; ++i) {
    if (i) os << ";";
    for (int j = 0; j < c_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
  }
  return os.str();
}

BigInt det(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error("determinant of a non-square matrix");
  const int n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        BigInt v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

ZPoly charpoly(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error("characteristic polynomial of a non-square matrix");
  const int n = a.rows();
  std::vector<BigInt> c(static_cast<std::size_t>(n + 1), BigInt(0));
  c[static_cast<std::size_t>(n)] = 1;
  IntMatrix m(n, n);
  for (int k = 1; k <= n; ++k) {
    m = a * m;
    for (int i = 0; i < n; ++i) m(i, i) += c[static_cast<std::size_t>(n - k + 1)];
    const IntMatrix am = a * m;
    BigInt tr = 0;
    for (int i = 0; i < n; ++i) tr += am(i, i);
    BigInt q;
    mpz_divexact_ui(q.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
    c[static_cast<std::size_t>(n - k)] = -q;
  }
  return ZPoly(std::move(c));
}

IntMatrix poly_eval(const ZPoly& p, const IntMatrix& a) {
  const int n = a.rows();
  IntMatrix r(n, n);
  for (int k = p.degree(); k >= 0; --k) {
    r = a * r;
    for (int i = 0; i < n; ++i) r(i, i) += p.coeff(k);
  }
  return r;
}

namespace {

struct SmithWork {
  IntMatrix D, U, Uinv, V;
  int m, n;

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < n; ++k) std::swap(D(i, k), D(j, k));
    for (int k = 0; k < m; ++k) {
      std::swap(U(i, k), U(j, k));
      std::swap(Uinv(k, i), Uinv(k, j));
    }
  }
  // row_i += c row_j
  void add_row(int i, int j, const BigInt& c) {
    for (int k = 0; k < n; ++k) D(i, k) += c * D(j, k);
    for (int k = 0; k < m; ++k) {
      U(i, k) += c * U(j, k);
      Uinv(k, j) -= c * Uinv(k, i);
    }
  }
  void negate_row(int i) {
    for (int k = 0; k < n; ++k) D(i, k) = -D(i, k);
    for (int k = 0; k < m; ++k) {
      U(i, k) = -U(i, k);
      Uinv(k, i) = -Uinv(k, i);
    }
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < m; ++k) std::swap(D(k, i), D(k, j));
    for (int k = 0; k < n; ++k) std::swap(V(k, i), V(k, j));
  }
  // col_i += c col_j
  void add_col(int i, int j, const BigInt& c) {
    for (int k = 0; k < m; ++k) D(k, i) += c * D(k, j);
    for (int k = 0; k < n; ++k) V(k, i) += c * V(k, j);
  }
};

} // namespace

SmithForm smith(const IntMatrix& a) {
  SmithWork w{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols()),
              a.rows(), a.cols()};
  const int lim = std::min(w.m, w.n);
  int t = 0;
  BigInt q;
  for (; t < lim; ++t) {
    int pi = -1, pj = -1;
    for (int i = t; i < w.m; ++i)
      for (int j = t; j < w.n; ++j)
        if (w.D(i, j) != 0 && (pi < 0 || abs(w.D(i, j)) < abs(w.D(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);
    while (true) {
      bool dirty = false;
      for (int i = t + 1; i < w.m; ++i) {
        if (w.D(i, t) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), w.D(i, t).get_mpz_t(), w.D(t, t).get_mpz_t());
        w.add_row(i, t, -q);
        dirty |= w.D(i, t) != 0;
      }
      for (int j = t + 1; j < w.n; ++j) {
        if (w.D(t, j) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), w.D(t, j).get_mpz_t(), w.D(t, t).get_mpz_t());
        w.add_col(j, t, -q);
        dirty |= w.D(t, j) != 0;
      }
      if (dirty) {
        int bi = -1, bj = -1;
        BigInt best = abs(w.D(t, t));
        for (int i = t + 1; i < w.m; ++i)
          if (w.D(i, t) != 0 && abs(w.D(i, t)) < best) {
            best = abs(w.D(i, t));
            bi = i;
            bj = -1;
          }
        for (int j = t + 1; j < w.n; ++j)
          if (w.D(t, j) != 0 && abs(w.D(t, j)) < best) {
            best = abs(w.D(t, j));
            bj = j;
            bi = -1;
          }
        if (bi >= 0) w.swap_rows(t, bi);
        if (bj >= 0) w.swap_cols(t, bj);
        continue;
      }
      int bad = -1;
      for (int i = t + 1; i < w.m && bad < 0; ++i)
        for (int j = t + 1; j < w.n; ++j)
          if (!mpz_divisible_p(w.D(i, j).get_mpz_t(), w.D(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      w.add_row(t, bad, 1);
    }
    if (w.D(t, t) < 0) w.negate_row(t);
  }
  SmithForm s{w.U, w.Uinv, w.V, w.D, {}, t};
  for (int i = 0; i < t; ++i) s.diag.push_back(w.D(i, i));
  return s;
}

std::vector<BigInt> elementary_divisors(const IntMatrix& a) { return smith(a).diag; }

IntMatrix integer_kernel(const IntMatrix& a) {
  const SmithForm s = smith(a);
  return s.V.col_range(s.rank, a.cols());
}

bool is_saturated(const IntMatrix& b) {
  const SmithForm s = smith(b);
  if (s.rank != b.cols()) return false;
  return std::all_of(s.diag.begin(), s.diag.end(), [](const BigInt& d) { return d == 1; });
}

IntMatrix hnf_rows(const IntMatrix& a) {
  IntMatrix m = a;
  const int rows = m.rows(), cols = m.cols();
  auto swap_rows = [&](int i, int j) {
    for (int k = 0; k < cols; ++k) std::swap(m(i, k), m(j, k));
  };
  auto add_row = [&](int i, int j, const BigInt& c) {
    for (int k = 0; k < cols; ++k) m(i, k) += c * m(j, k);
  };
  int r = 0;
  BigInt q;
  for (int j = 0; j < cols && r < rows; ++j) {
    while (true) {
      int p = -1;
      for (int i = r; i < rows; ++i)
        if (m(i, j) != 0 && (p < 0 || abs(m(i, j)) < abs(m(p, j)))) p = i;
      if (p < 0) break;
      swap_rows(r, p);
      bool done = true;
      for (int i = r + 1; i < rows; ++i) {
        if (m(i, j) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), m(i, j).get_mpz_t(), m(r, j).get_mpz_t());
        add_row(i, r, -q);
        done &= m(i, j) == 0;
      }
      if (done) break;
    }
    if (m(r, j) == 0) continue;
    if (m(r, j) < 0)
      for (int k = 0; k < cols; ++k) m(r, k) = -m(r, k);
    for (int i = 0; i < r; ++i) {
      mpz_fdiv_q(q.get_mpz_t(), m(i, j).get_mpz_t(), m(r, j).get_mpz_t());
      add_row(i, r, -q);
    }
    ++r;
  }
  return m.row_range(0, r);
}

IntMatrix left_inverse(const IntMatrix& b) {
  const SmithForm s = smith(b);
  if (s.rank != b.cols() || !std::all_of(s.diag.begin(), s.diag.end(), [](const BigInt& d) { return d == 1; }))
    throw Error("left_inverse: basis is not saturated");
  return s.V * s.U.row_range(0, b.cols());
}

SmallMat SmallMat::identity(int dim) {
  SmallMat m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

SmallMat SmallMat::from(const IntMatrix& src) {
  if (src.rows() != src.cols()) throw Error("SmallMat must be square");
  SmallMat m(src.rows());
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) {
      if (!src(i, j).fits_slong_p()) throw Error("matrix entry too large for SmallMat");
      m(i, j) = src(i, j).get_si();
    }
  return m;
}

IntMatrix SmallMat::to_int() const {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = static_cast<long>((*this)(i, j));
  return m;
}

bool SmallMat::is_identity() const {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((*this)(i, j) != (i == j)) return false;
  return true;
}

SmallMat operator*(const SmallMat& x, const SmallMat& y) {
  SmallMat m(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      const std::int64_t v = x(i, k);
      if (!v) continue;
      for (int j = 0; j < x.n; ++j) m(i, j) += v * y(k, j);
    }
  return m;
}

std::size_t SmallMatHash::operator()(const SmallMat& m) const {
  std::uint64_t h = 1469598103934665603ull;
  for (auto v : m.a) {
    h ^= static_cast<std::uint64_t>(v);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

ZPoly charpoly(const SmallMat& a) {
  const int n = a.n;
  std::vector<std::int64_t> c(static_cast<std::size_t>(n + 1), 0);
  c[static_cast<std::size_t>(n)] = 1;
  std::vector<std::int64_t> m(static_cast<std::size_t>(n * n), 0), t(m.size());
  auto mul = [&](const std::vector<std::int64_t>& y, std::vector<std::int64_t>& out) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::int64_t s = 0;
        for (int k = 0; k < n; ++k) {
          std::int64_t p;
          if (__builtin_mul_overflow(a(i, k), y[static_cast<std::size_t>(k * n + j)], &p) ||
              __builtin_add_overflow(s, p, &s))
            return false;
        }
        out[static_cast<std::size_t>(i * n + j)] = s;
      }
    return true;
  };
  for (int k = 1; k <= n; ++k) {
    if (!mul(m, t)) return charpoly(a.to_int());
    for (int i = 0; i < n; ++i)
      if (__builtin_add_overflow(t[static_cast<std::size_t>(i * n + i)], c[static_cast<std::size_t>(n - k + 1)],
                                 &t[static_cast<std::size_t>(i * n + i)]))
        return charpoly(a.to_int());
    m.swap(t);
    if (!mul(m, t)) return charpoly(a.to_int());
    std::int64_t tr = 0;
    for (int i = 0; i < n; ++i)
      if (__builtin_add_overflow(tr, t[static_cast<std::size_t>(i * n + i)], &tr)) return charpoly(a.to_int());
    c[static_cast<std::size_t>(n - k)] = -(tr / k);
  }
  std::vector<BigInt> out;
  for (auto v : c) out.emplace_back(static_cast<long>(v));
  return ZPoly(std::move(out));
}

} // namespace sylow
