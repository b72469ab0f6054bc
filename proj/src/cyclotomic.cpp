#include "sylow/cyclotomic.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace sylow {

namespace {

constexpr int kCacheLimit = 240;

QuadPoly named_poly(int u, int d, int variant) {
  if (variant == 0) return to_quad(cyclotomic_poly(d).compose_power(2));
  const BigInt s = variant == 1 ? 1 : -1;
  auto r = [&](long c0, const BigInt& c1) { return QuadVal(u, BigInt(c0), c1); };
  if (u == 2 && d == 4) return {1, r(0, s), 1};
  if (u == 2 && d == 12) return {1, r(0, s), 1, r(0, s), 1};
  if (u == 3 && d == 6) return {1, r(0, s), 1};
  throw Error("no q-cyclotomic factor P" + std::string(variant == 1 ? "'" : "''") + "2," +
              std::to_string(d) + " over sqrt" + std::to_string(u));
}

std::vector<CycFactorId> build_table(int u) {
  struct Entry { int d, variant; };
  std::vector<Entry> entries;
  if (u == 2) entries = {{1, 0}, {2, 0}, {4, 1}, {4, 2}, {6, 0}, {12, 1}, {12, 2}};
  else entries = {{1, 0}, {2, 0}, {6, 1}, {6, 2}};

  std::vector<CycFactorId> table;
  for (auto [d, variant] : entries) {
    CycFactorId id;
    id.kind = CycFactorId::Kind::Named;
    id.u = u;
    id.d = d;
    id.variant = variant;
    const QuadPoly p = named_poly(u, d, variant);
    // Every root of Phi_d(x^2) is a 2d-th root of unity; take the first one
    // that the factor actually vanishes on.
    bool found = false;
    for (int k = 0; k < 2 * d && !found; ++k) {
      RootOfUnity z(k, 2 * d);
      if (root_eval(p, z).is_zero()) {
        id.root = z;
        found = true;
      }
    }
    if (!found) throw VerificationFailure("named factor " + id.name() + " has no 2d-th root of unity");
    table.push_back(id);
  }
  // Split pairs multiply back to Phi_d(x^2), and split factors share no root.
  for (const auto& a : table) {
    if (a.variant != 1) continue;
    const auto b = std::find_if(table.begin(), table.end(),
                                [&](const CycFactorId& c) { return c.d == a.d && c.variant == 2; });
    if (b == table.end()) throw VerificationFailure("unpaired named factor " + a.name());
    if (!quad_equal(quad_mul(a.poly(), b->poly()), named_poly(u, a.d, 0)))
      throw VerificationFailure("product identity fails for " + a.name());
    if (root_eval(b->poly(), a.root).is_zero() || root_eval(a.poly(), b->root).is_zero())
      throw VerificationFailure("named factors " + a.name() + " and " + b->name() + " share a root");
  }
  return table;
}

} // namespace

CycFactorId CycFactorId::cyclo(int d) {
  if (d < 1) throw Error("cyclotomic index must be positive");
  CycFactorId id;
  id.d = d;
  id.root = RootOfUnity(1, d);
  return id;
}

CycFactorId CycFactorId::named(int u, int d, int variant) {
  for (const auto& id : qcyclo_table(u))
    if (id.d == d && id.variant == variant) return id;
  throw Error("no tabulated q-cyclotomic factor with d=" + std::to_string(d) + " variant " +
              std::to_string(variant) + " over sqrt" + std::to_string(u));
}

std::string CycFactorId::name() const {
  if (kind == Kind::Cyclo) return "P" + std::to_string(d);
  return std::string("P") + (variant == 1 ? "'" : variant == 2 ? "''" : "") + "2," + std::to_string(d);
}

QuadPoly CycFactorId::poly() const {
  if (kind == Kind::Cyclo) return to_quad(cyclotomic_poly(d));
  return named_poly(u, d, variant);
}

int CycFactorId::degree() const { return static_cast<int>(poly().size()) - 1; }

ZPoly CycFactorId::normalized(const QSpec& q) const {
  const QuadPoly p = poly();
  const int deg = static_cast<int>(p.size()) - 1;
  std::vector<BigInt> out(p.size());
  for (int k = 0; k <= deg; ++k) {
    QuadPoly mono(static_cast<std::size_t>(deg - k + 1), QuadVal{});
    mono.back() = p[static_cast<std::size_t>(k)];
    out[static_cast<std::size_t>(k)] = quad_eval(mono, q);
  }
  return ZPoly(std::move(out));
}

BigInt CycFactorId::value(const QSpec& q) const { return quad_eval(poly(), q); }

bool operator<(const CycFactorId& x, const CycFactorId& y) {
  if (x.d != y.d) return x.d < y.d;
  if (x.variant != y.variant) return x.variant < y.variant;
  if (x.kind != y.kind) return x.kind < y.kind;
  return x.u < y.u;
}

CycFactorId parse_factor_name(const std::string& name, int u) {
  if (name.size() < 2 || name[0] != 'P') throw Error("bad factor name '" + name + "'");
  std::size_t pos = 1;
  int variant = 0;
  while (pos < name.size() && name[pos] == '\'') {
    ++variant;
    ++pos;
  }
  const std::string rest = name.substr(pos);
  try {
    if (rest.rfind("2,", 0) == 0) {
      if (variant > 2) throw Error("too many primes");
      return CycFactorId::named(u, std::stoi(rest.substr(2)), variant);
    }
    if (variant != 0) throw Error("primes on a cyclotomic factor");
    std::size_t used = 0;
    const int d = std::stoi(rest, &used);
    if (used != rest.size()) throw Error("trailing characters");
    return CycFactorId::cyclo(d);
  } catch (const std::logic_error&) {
    throw Error("bad factor name '" + name + "'");
  }
}

const ZPoly& cyclotomic_poly(int d) {
  if (d < 1) throw Error("cyclotomic polynomial index must be positive");
  static const std::vector<ZPoly> cache = [] {
    std::vector<ZPoly> v(kCacheLimit + 1);
    for (int k = 1; k <= kCacheLimit; ++k) v[static_cast<std::size_t>(k)] = detail::compute_cyclotomic(k);
    return v;
  }();
  if (d <= kCacheLimit) return cache[static_cast<std::size_t>(d)];
  static std::mutex mu;
  static std::map<int, ZPoly> extra;
  std::lock_guard lock(mu);
  auto it = extra.find(d);
  if (it == extra.end()) it = extra.emplace(d, detail::compute_cyclotomic(d)).first;
  return it->second;
}

std::vector<CycFactorId> decompose_cyclo_power(int d, int n) {
  if (d < 1 || n < 1) throw Error("decompose_cyclo_power: arguments must be positive");
  std::vector<CycFactorId> out;
  ZPoly prod{1};
  for (int mu = 1; mu <= n; ++mu) {
    if (n % mu != 0 || std::gcd(n / mu, d) != 1) continue;
    out.push_back(CycFactorId::cyclo(mu * d));
    prod = prod * cyclotomic_poly(mu * d);
  }
  if (!(prod == cyclotomic_poly(d).compose_power(static_cast<unsigned>(n))))
    throw VerificationFailure("decomposition of P" + std::to_string(d) + "(x^" + std::to_string(n) +
                              ") does not multiply back");
  return out;
}

const std::vector<CycFactorId>& qcyclo_table(int u) {
  static const std::vector<CycFactorId> t2 = build_table(2);
  static const std::vector<CycFactorId> t3 = build_table(3);
  if (u == 2) return t2;
  if (u == 3) return t3;
  throw Error("q-cyclotomic tables exist only for sqrt2 and sqrt3");
}

std::uint64_t d_of_ell(const QSpec& q, int n, std::uint64_t l) {
  q.validate();
  if (!is_prime(l)) throw Error("l = " + std::to_string(l) + " is not prime");
  if (l == q.p) throw Error("ℓ must differ from the defining characteristic");
  if (n < 1) throw Error("descent factor must be positive");
  // q^(n eta) = p^(a n) in both cases.
  const BigInt x = pow(BigInt(static_cast<unsigned long>(q.p)), static_cast<unsigned long>(q.a) * n);
  return mult_order(x, l == 2 ? 4 : l);
}

PhiVal phi_val(int e, const BigInt& q, std::uint64_t l) {
  if (e < 1) throw Error("phi_val: e must be positive");
  if (q < 2) throw Error("phi_val: q must be at least 2");
  if (!is_prime(l)) throw Error("phi_val: l must be prime");
  const BigInt lb(static_cast<unsigned long>(l));
  if (gcd(q, lb) != 1) throw Error("phi_val: q and l must be coprime");
  PhiVal r;
  r.val = val_l(cyclotomic_poly(e).eval(q), l);
  r.divides = r.val > 0;
  const auto d = static_cast<int>(mult_order(q, l == 2 ? 4 : l));
  if (e % d == 0) {
    int m = e / d;
    int b = 0;
    while (m % static_cast<int>(l) == 0) {
      m /= static_cast<int>(l);
      ++b;
    }
    if (m == 1) {
      r.predicted_divides = true;
      r.b = b;
    }
  }
  if (l == 2 && d == 2 && e == 1) {
    r.predicted_divides = true;
    r.b = -1;
  }
  r.matches = r.divides == r.predicted_divides && (!r.divides || r.b == 0 || r.val == 1);
  return r;
}

SuiteReport verify_lemma_div(std::uint64_t x_max, std::uint64_t f_max, std::uint64_t l_max) {
  SuiteReport rep;
  for (std::uint64_t l : primes_up_to(l_max)) {
    const std::uint64_t m = l == 2 ? 4 : l;
    for (std::uint64_t x = m + 1; x <= x_max; x += m) {
      const BigInt bx(static_cast<unsigned long>(x));
      BigInt s = 0, xp = 1;
      for (std::uint64_t f = 1; f <= f_max; ++f) {
        s += xp;
        xp *= bx;
        ++rep.checks;
        const unsigned lhs = val_l(s, l);
        const unsigned rhs = val_l(BigInt(static_cast<unsigned long>(f)), l);
        if (lhs != rhs) {
          std::ostringstream os;
          os << "x=" << x << " f=" << f << " l=" << l << ": " << lhs << " != " << rhs;
          rep.violations.push_back(os.str());
        }
      }
    }
  }
  return rep;
}

SuiteReport verify_divcyclo(std::uint64_t q_max, int e_max, std::uint64_t l_max) {
  SuiteReport rep;
  for (std::uint64_t l : primes_up_to(l_max)) {
    for (std::uint64_t q = 2; q <= q_max; ++q) {
      if (q % l == 0) continue;
      const BigInt bq(static_cast<unsigned long>(q));
      for (int e = 1; e <= e_max; ++e) {
        const PhiVal r = phi_val(e, bq, l);
        ++rep.checks;
        if (r.b == -1 && r.divides) ++rep.special_branch;
        if (!r.matches) {
          std::ostringstream os;
          os << "q=" << q << " e=" << e << " l=" << l << ": val " << r.val << ", predicted "
             << (r.predicted_divides ? "divides" : "coprime") << " (b=" << r.b << ")";
          rep.violations.push_back(os.str());
        }
      }
    }
  }
  return rep;
}

} // namespace sylow
