#include "sylow/order_engine.hpp"

#include <algorithm>
#include <numeric>

namespace sylow {

namespace {

bool factor_less(const OrderFactor& x, const OrderFactor& y) {
  if (x.subst != y.subst) return x.subst < y.subst;
  return x.id < y.id;
}

std::string power_suffix(int k) { return k == 1 ? "" : "^" + std::to_string(k); }

// Fixed decompositions for the Suzuki and Ree cosets.
std::vector<std::pair<CycFactorId, int>> very_twisted_table(const SimpleFactor& f) {
  auto N = [&](int u, int d, int v) { return CycFactorId::named(u, d, v); };
  if (f.series == Series::B) return {{N(2, 1, 0), 1}, {N(2, 4, 1), 1}, {N(2, 4, 2), 1}};
  if (f.series == Series::G) return {{N(3, 1, 0), 1}, {N(3, 2, 0), 1}, {N(3, 6, 1), 1}, {N(3, 6, 2), 1}};
  return {{N(2, 1, 0), 2}, {N(2, 2, 0), 2}, {N(2, 4, 1), 2}, {N(2, 4, 2), 2},
          {N(2, 6, 0), 1}, {N(2, 12, 1), 1}, {N(2, 12, 2), 1}};
}

} // namespace

std::string OrderFactor::to_string() const {
  std::string s = id.name();
  if (subst != 1) s += "(q^" + std::to_string(subst) + ")";
  return s + power_suffix(mult);
}

BigInt OrderFactor::value(const QSpec& q) const {
  return pow(id.value(q.pow(subst)), static_cast<unsigned long>(mult));
}

static std::string render(const FactoredOrder& fo, const char* sep_first, const char* sep) {
  std::string s;
  if (fo.q_exponent > 0) s = "q" + power_suffix(fo.q_exponent);
  for (std::size_t i = 0; i < fo.factors.size(); ++i) {
    if (!s.empty()) s += i == 0 ? sep_first : sep;
    s += fo.factors[i].to_string();
  }
  return s.empty() ? "1" : s;
}

std::string FactoredOrder::to_string() const { return render(*this, " * ", " * "); }

std::string FactoredOrder::to_compact_string() const { return render(*this, " * ", " "); }

int FactoredOrder::degree() const {
  int deg = q_exponent;
  for (const auto& f : factors) deg += f.mult * f.id.degree() * f.subst;
  return deg;
}

void FactoredOrder::add(const OrderFactor& f) {
  if (f.mult == 0) return;
  auto it = std::lower_bound(factors.begin(), factors.end(), f, factor_less);
  if (it != factors.end() && it->id == f.id && it->subst == f.subst) it->mult += f.mult;
  else factors.insert(it, f);
}

std::vector<int> a_zeta(const std::vector<GenDegree>& degrees, const RootOfUnity& zeta) {
  std::vector<int> out;
  for (const auto& g : degrees)
    if (zeta.pow(g.d) == g.eps) out.push_back(g.d);
  std::sort(out.begin(), out.end());
  return out;
}

FactoredOrder generic_order(const SimpleFactor& f) {
  f.validate();
  const auto degs = generalized_degrees(f);
  const int n = f.descent;
  FactoredOrder fo;
  int sum = 0;
  for (const auto& g : degs) sum += g.d - 1;
  if (sum != positive_root_count(f))
    throw VerificationFailure(f.to_string() + ": degree table disagrees with the positive root count");
  fo.q_exponent = n * sum;

  if (f.very_twisted) {
    QuadPoly prod{1}, expected{1};
    for (const auto& [id, mult] : very_twisted_table(f)) {
      fo.add({id, n, mult});
      for (int k = 0; k < mult; ++k) prod = quad_mul(prod, id.poly());
    }
    for (const auto& g : degs) {
      QuadPoly term(static_cast<std::size_t>(g.d + 1), QuadVal{});
      term.back() = 1;
      term.front() = g.eps.is_one() ? -1 : 1;
      expected = quad_mul(expected, term);
    }
    if (!quad_equal(prod, expected))
      throw VerificationFailure(f.to_string() + ": factor table does not multiply to the order polynomial");
  } else {
    // Galois orbits of eps: prod over primitive m-th roots of (x^d - eps) is Phi_m(x^d).
    std::vector<bool> used(degs.size(), false);
    for (std::size_t i = 0; i < degs.size(); ++i) {
      if (used[i]) continue;
      const int d = degs[i].d;
      const auto m = degs[i].eps.order();
      for (std::int64_t k = 1; k <= m; ++k) {
        if (std::gcd(k, m) != 1) continue;
        const RootOfUnity e(k, m);
        bool found = false;
        for (std::size_t j = i; j < degs.size() && !found; ++j)
          if (!used[j] && degs[j].d == d && degs[j].eps == e) used[j] = found = true;
        if (!found) throw VerificationFailure(f.to_string() + ": generalized degrees not closed under conjugation");
      }
      for (const auto& id : decompose_cyclo_power(static_cast<int>(m), d)) fo.add({id, n, 1});
    }
  }

  int deg_sum = 0;
  for (const auto& g : degs) deg_sum += g.d;
  for (const auto& of : fo.factors) {
    const auto a = a_zeta(degs, of.id.root);
    if (static_cast<int>(a.size()) != of.mult)
      throw VerificationFailure(f.to_string() + ": multiplicity of " + of.id.name() + " is " +
                                std::to_string(of.mult) + " but |a(zeta)| = " + std::to_string(a.size()));
  }
  if (fo.degree() != n * (sum + deg_sum))
    throw VerificationFailure(f.to_string() + ": total degree differs from n dim G");
  return fo;
}

FactoredOrder generic_order(const GroupSpec& g) {
  g.validate();
  FactoredOrder fo;
  for (const auto& f : g.factors) {
    const FactoredOrder part = generic_order(f);
    fo.q_exponent += part.q_exponent;
    for (const auto& of : part.factors) fo.add(of);
  }
  return fo;
}

FactoredOrder normalize(const FactoredOrder& fo) {
  FactoredOrder out;
  out.q_exponent = fo.q_exponent;
  for (const auto& of : fo.factors) {
    if (of.id.is_named() || of.subst == 1) {
      out.add(of);
      continue;
    }
    for (const auto& id : decompose_cyclo_power(of.id.d, of.subst)) out.add({id, 1, of.mult});
  }
  return out;
}

BigInt evaluate_order(const FactoredOrder& fo, const QSpec& q) {
  q.validate();
  BigInt v = fo.q_exponent > 0 ? q.pow(fo.q_exponent).integer_value() : BigInt(1);
  for (const auto& of : fo.factors) v *= of.value(q);
  if (v <= 0) throw VerificationFailure("order evaluated to a non-positive value");
  return v;
}

} // namespace sylow
