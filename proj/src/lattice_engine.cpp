#include "sylow/lattice_engine.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "sylow/group_algo.hpp"
#include "sylow/order_engine.hpp"
#include "sylow/zfactor.hpp"

namespace sylow {

LatticeRep build_rep(const SimpleFactor& f, const QSpec& q) {
  f.validate();
  LatticeRep rep;
  rep.factor = f;
  rep.q = q;
  SimpleFactor one = f;
  one.descent = 1;
  rep.datum = root_datum(one);
  rep.fstar1 = frobenius_matrix(rep.datum, q.pow(f.descent));
  rep.fstar = f.descent == 1 ? rep.fstar1 : descent_frobenius(rep.fstar1, f.descent);
  rep.dim = rep.fstar.n;
  return rep;
}

QSpec canonical_q(const SimpleFactor& f) {
  if (f.very_twisted) return {f.forced_p(), 2, 1};
  return {2, 1, 1};
}

std::vector<CharFactor> char_poly_factored(const SmallMat& m, const std::optional<QSpec>& q) {
  ZPoly rest = charpoly(m);
  const int deg = rest.degree();
  std::vector<CharFactor> out;
  if (q) {
    std::vector<CycFactorId> cands;
    if (q->eta == 1) {
      for (int k = 1; k <= 2 * deg * deg + 2; ++k)
        if (euler_phi(k) <= deg) cands.push_back(CycFactorId::cyclo(k));
    } else {
      cands = qcyclo_table(static_cast<int>(q->p));
    }
    for (const auto& c : cands) {
      if (c.degree() > rest.degree()) continue;
      const ZPoly p = c.normalized(*q);
      const int k = multiplicity(p, rest, &rest);
      if (k > 0) out.push_back({p, k, c, true});
    }
  }
  if (rest.degree() > 0) {
    const ZFactorization zf = factor_monic(rest);
    for (const auto& f : zf.factors) out.push_back({f.poly, f.mult, std::nullopt, zf.complete});
  }
  std::sort(out.begin(), out.end(), [](const CharFactor& a, const CharFactor& b) { return a.poly < b.poly; });
  return out;
}

BigInt TorusStructure::order() const {
  BigInt o = 1;
  for (const auto& v : invariants) o *= v;
  return o;
}

IntMatrix restrict_to(const IntMatrix& m, const IntMatrix& basis) {
  const IntMatrix a = left_inverse(basis) * m * basis;
  if (!(basis * a == m * basis)) throw Error("restrict_to: sublattice is not stable");
  return a;
}

TorusStructure torus_fixed_points(const SmallMat& m, const std::optional<IntMatrix>& basis) {
  IntMatrix a = basis ? restrict_to(m.to_int(), *basis) : m.to_int();
  const int k = a.rows();
  for (int i = 0; i < k; ++i) a(i, i) -= 1;
  const SmithForm s = smith(a);
  if (s.rank < k) throw Error("torus_fixed_points: wF* - 1 is singular (fixed subtorus of positive dimension)");
  TorusStructure t;
  for (const auto& d : s.diag)
    if (d > 1) t.invariants.push_back(d);
  return t;
}

IntMatrix saturated_kernel(const ZPoly& p, const SmallMat& m) {
  const int k = multiplicity(p, charpoly(m));
  if (k == 0) throw Error("saturated_kernel: " + p.to_string() + " does not divide the characteristic polynomial");
  const IntMatrix ker = integer_kernel(poly_eval(p, m.to_int()));
  if (ker.cols() != k * p.degree())
    throw VerificationFailure("saturated_kernel: kernel rank " + std::to_string(ker.cols()) + " != " +
                              std::to_string(k * p.degree()));
  return ker;
}

CycFactorId factor_for_root(const SimpleFactor& f, const RootOfUnity& zeta) {
  if (!f.very_twisted) return CycFactorId::cyclo(static_cast<int>(zeta.order()));
  for (const auto& id : qcyclo_table(static_cast<int>(f.forced_p())))
    if (root_eval(id.poly(), zeta).is_zero()) return id;
  throw Error("no q-cyclotomic factor of " + f.to_string() + " has root " + zeta.to_string());
}

std::vector<int> eigenspace_multiplicities(const std::vector<SmallMat>& elements, const SmallMat& fstar,
                                           const ZPoly& p, bool parallel) {
  const auto n = static_cast<long>(elements.size());
  std::vector<int> out(elements.size(), 0);
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
  for (long i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] = multiplicity(p, charpoly(elements[static_cast<std::size_t>(i)] * fstar));
  return out;
}

namespace {

void require_descent_one(const SimpleFactor& f) {
  if (f.descent != 1) throw Error(f.to_string() + ": Weyl coset search works on a single component (descent 1)");
}

} // namespace

EigenspaceSearch max_eigenspace_search(const SimpleFactor& f, const RootOfUnity& zeta, const QSpec& q,
                                       bool parallel) {
  require_descent_one(f);
  const WeylGroup& w = weyl_group(f);
  const LatticeRep rep = build_rep(f, q);
  EigenspaceSearch r;
  r.phi = factor_for_root(f, zeta);
  r.normalized = r.phi.normalized(q);
  const auto mults = eigenspace_multiplicities(w.elements, rep.fstar, r.normalized, parallel);
  r.max_dim = -1;
  for (std::size_t i = 0; i < mults.size(); ++i) {
    ++r.histogram[mults[i]];
    if (mults[i] > r.max_dim) {
      r.max_dim = mults[i];
      r.witness = static_cast<int>(i);
      r.witnesses.clear();
    }
    if (mults[i] == r.max_dim) r.witnesses.push_back(static_cast<int>(i));
  }
  r.witness_word = w.words[static_cast<std::size_t>(r.witness)];
  const auto a = a_zeta(generalized_degrees(f), zeta);
  if (r.max_dim != static_cast<int>(a.size()))
    throw VerificationFailure(f.to_string() + ", zeta " + zeta.to_string() + ": maximal eigenspace dimension " +
                              std::to_string(r.max_dim) + " but |a(zeta)| = " + std::to_string(a.size()));
  return r;
}

NormalizerQuotient normalizer_quotient(const SimpleFactor& f, const RootOfUnity& zeta, int witness,
                                       const QSpec& q) {
  require_descent_one(f);
  const WeylGroup& w = weyl_group(f);
  const LatticeRep rep = build_rep(f, q);
  const ZPoly p = factor_for_root(f, zeta).normalized(q);
  const SmallMat m = w.elements.at(static_cast<std::size_t>(witness)) * rep.fstar;
  NormalizerQuotient nq;
  nq.basis = saturated_kernel(p, m);
  const IntMatrix mi = m.to_int();
  nq.restricted = restrict_to(mi, nq.basis);
  const IntMatrix mb = mi * nq.basis;
  const IntMatrix linv = left_inverse(nq.basis);
  std::set<IntMatrix> actions;
  for (const auto& v : w.elements) {
    const IntMatrix vi = v.to_int();
    const IntMatrix vb = vi * nq.basis;
    if (!(vi * mb == mi * vb)) continue;
    ++nq.normalizer_size;
    if (vb == nq.basis) ++nq.centralizer_size;
    actions.insert(linv * vb);
  }
  nq.order = actions.size();
  if (nq.order * nq.centralizer_size != nq.normalizer_size)
    throw VerificationFailure("normalizer_quotient: |N| != |N/C| |C|");
  const IntMatrix id = IntMatrix::identity(nq.basis.cols());
  nq.actions.push_back(id);
  for (const auto& a : actions)
    if (!(a == id)) nq.actions.push_back(a);
  BigInt prod = 1;
  for (int d : a_zeta(generalized_degrees(f), zeta)) prod *= d;
  if (BigInt(static_cast<unsigned long>(nq.order)) != prod)
    throw VerificationFailure(f.to_string() + ", zeta " + zeta.to_string() + ": |N/C| = " +
                              std::to_string(nq.order) + " but the product of a(zeta) is " + prod.get_str());
  return nq;
}

FaithfulnessResult check_faithful_ell_action(const SimpleFactor& f, const QSpec& q, std::uint64_t l) {
  require_descent_one(f);
  if (f.very_twisted && f.series == Series::G && l == 2)
    throw Error("2G2 with l = 2 is excluded: its Sylow 2-subgroup is the abelian exception");
  GroupSpec{{f}}.check_q(q);
  FaithfulnessResult r;
  r.d = d_of_ell(q, 1, l);
  const BigInt lb(static_cast<unsigned long>(l));
  std::vector<CycFactorId> cands;
  for (const auto& of : generic_order(f).factors)
    if (static_cast<std::uint64_t>(of.id.d) == r.d && of.id.value(q) % lb == 0) cands.push_back(of.id);
  if (cands.size() != 1)
    throw VerificationFailure(f.to_string() + ": expected one factor over d(l) divisible by l, found " +
                              std::to_string(cands.size()));
  r.phi = cands.front();
  const EigenspaceSearch es = max_eigenspace_search(f, r.phi.root, q);
  const NormalizerQuotient nq = normalizer_quotient(f, r.phi.root, es.witness, q);
  r.quotient_order = nq.order;

  IntMatrix a = nq.restricted;
  const int k = a.rows();
  for (int i = 0; i < k; ++i) a(i, i) -= 1;
  const SmithForm s = smith(a);
  if (s.rank < k) throw VerificationFailure("check_faithful_ell_action: wF* - 1 singular on L");
  std::vector<BigInt> e(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    e[static_cast<std::size_t>(i)] = l_part(s.diag[static_cast<std::size_t>(i)], l);
    if (e[static_cast<std::size_t>(i)] > 1) r.ell_invariants.push_back(e[static_cast<std::size_t>(i)]);
  }
  // Action on y = U x coordinates of L/(A - 1)L; trivial on the l-part iff it
  // fixes each generator (d_j / e_j) y_j.
  auto trivial_on_l = [&](const IntMatrix& act) {
    const IntMatrix t = s.U * act * s.Uinv;
    for (int j = 0; j < k; ++j) {
      if (e[static_cast<std::size_t>(j)] == 1) continue;
      const BigInt gen = s.diag[static_cast<std::size_t>(j)] / e[static_cast<std::size_t>(j)];
      for (int i = 0; i < k; ++i)
        if ((gen * (t(i, j) - (i == j ? 1 : 0))) % s.diag[static_cast<std::size_t>(i)] != 0) return false;
    }
    return true;
  };

  std::map<IntMatrix, int> index;
  for (std::size_t i = 0; i < nq.actions.size(); ++i) index.emplace(nq.actions[i], static_cast<int>(i));
  auto mul = [&](int x, int y) {
    return index.at(nq.actions[static_cast<std::size_t>(x)] * nq.actions[static_cast<std::size_t>(y)]);
  };
  const Subgroup syl = sylow_climb(static_cast<int>(nq.actions.size()), 0, l, mul);
  r.sylow_order = syl.elements.size();
  r.faithful = true;
  for (int x : syl.elements)
    if (x != 0 && trivial_on_l(nq.actions[static_cast<std::size_t>(x)])) r.faithful = false;
  return r;
}

DescentCheck descent_charpoly_check(const SimpleFactor& f1, int n, const std::string& w1_word, const QSpec& q1) {
  if (n < 1) throw Error("descent factor must be positive");
  SimpleFactor one = f1;
  one.descent = 1;
  const RootDatum rd = root_datum(one);
  const SmallMat fs1 = frobenius_matrix(rd, q1);
  const SmallMat w1 = word_matrix(rd, w1_word);
  DescentCheck r;
  r.base = charpoly(w1 * fs1);
  const SmallMat big = descent_lift(w1, n) * descent_frobenius(fs1, n);
  r.lifted = charpoly(big);
  if (!(r.lifted == r.base.compose_power(static_cast<unsigned>(n))))
    throw VerificationFailure("descent check: " + r.lifted.to_string() + " != (" + r.base.to_string() + ")(x^" +
                              std::to_string(n) + ")");
  r.lifted_factors = char_poly_factored(big, std::nullopt);
  return r;
}

std::vector<SmallMat> reduction_samples() {
  std::vector<SmallMat> out;
  for (const auto& f : all_factors(4)) {
    if (f.twist != 1) continue;
    const auto& w = weyl_group(f);
    out.insert(out.end(), w.elements.begin(), w.elements.end());
  }
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (int signs = 0; signs < (1 << n); ++signs) {
        SmallMat m(n);
        for (int j = 0; j < n; ++j) m(perm[static_cast<std::size_t>(j)], j) = (signs >> j) & 1 ? -1 : 1;
        out.push_back(std::move(m));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  for (int d = 1; d <= 60; ++d) {
    if (euler_phi(d) > 8) continue;
    const ZPoly& p = cyclotomic_poly(d);
    const int k = p.degree();
    SmallMat c(k);
    for (int i = 1; i < k; ++i) c(i, i - 1) = 1;
    for (int i = 0; i < k; ++i) c(i, k - 1) = -p.coeff(i).get_si();
    SmallMat pw = c;
    for (int e = 1; e < d; ++e) {
      out.push_back(pw);
      pw = pw * c;
    }
  }
  return out;
}

SuiteReport verify_reduction_lemma(int m, const std::vector<SmallMat>& samples, bool parallel) {
  if (m < 3) throw Error("verify_reduction_lemma: m must be at least 3");
  const auto n = static_cast<long>(samples.size());
  std::vector<char> status(samples.size(), 0); // 0 ok/identity, 1 infinite order, 2 reduces to I
#pragma omp parallel for schedule(dynamic, 256) if (parallel)
  for (long i = 0; i < n; ++i) {
    const SmallMat& w = samples[static_cast<std::size_t>(i)];
    if (w.is_identity()) continue;
    SmallMat pw = w;
    int ord = 1;
    while (!pw.is_identity() && ord <= 5000) {
      pw = pw * w;
      ++ord;
    }
    if (!pw.is_identity()) {
      status[static_cast<std::size_t>(i)] = 1;
      continue;
    }
    bool reduces = true;
    for (int r = 0; r < w.n && reduces; ++r)
      for (int c = 0; c < w.n; ++c)
        if ((w(r, c) - (r == c ? 1 : 0)) % m != 0) {
          reduces = false;
          break;
        }
    if (reduces) status[static_cast<std::size_t>(i)] = 2;
  }
  SuiteReport rep;
  rep.checks = samples.size();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!status[i]) continue;
    rep.violations.push_back(std::string(status[i] == 1 ? "sample of infinite order: " : "reduces to I mod " +
                                                                                         std::to_string(m) + ": ") +
                             samples[i].to_int().to_string());
  }
  return rep;
}

ModMCheck mod_m_kernel_check(const LatticeRep& rep, const std::string& w_word, const CycFactorId& phi,
                             std::uint64_t m) {
  require_descent_one(rep.factor);
  if (m < 2) throw Error("mod_m_kernel_check: m must be at least 2");
  const QSpec& q = rep.q;
  const BigInt mb(static_cast<unsigned long>(m));
  if (phi.value(q) % mb != 0) throw Error("mod_m_kernel_check: m must divide Phi(q)");
  const bool small_d = (phi.d == 1 || phi.d == 2) && q.eta == 1;
  if (!small_d && std::gcd(m, static_cast<std::uint64_t>(phi.d * q.eta)) != 1)
    throw Error("mod_m_kernel_check: needs d in {1,2} with integral q, or m prime to d*eta");

  const SmallMat w = word_matrix(rep.datum, w_word);
  const SmallMat mm = w * rep.fstar;
  const IntMatrix basis = saturated_kernel(phi.normalized(q), mm);
  const IntMatrix mi = mm.to_int();
  IntMatrix a = restrict_to(mi, basis);
  const int k = a.rows();
  IntMatrix am1 = a;
  for (int i = 0; i < k; ++i) am1(i, i) -= 1;
  const SmithForm s = smith(am1);
  if (s.rank < k) throw VerificationFailure("mod_m_kernel_check: wF* - 1 singular on L");

  ModMCheck r;
  std::vector<std::uint64_t> g(static_cast<std::size_t>(k));
  std::uint64_t quotient_size = 1;
  for (int i = 0; i < k; ++i) {
    BigInt gi = gcd(s.diag[static_cast<std::size_t>(i)], mb);
    g[static_cast<std::size_t>(i)] = gi.get_ui();
    quotient_size *= g[static_cast<std::size_t>(i)];
    if (gi > 1) r.quotient_invariants.push_back(gi);
  }
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) {
    total *= m;
    if (total > 2000000) throw Error("mod_m_kernel_check: (Z/m)^rank too large to enumerate");
  }

  auto reduce = [&](const std::vector<BigInt>& v, const std::vector<std::uint64_t>& mods) {
    std::vector<std::uint64_t> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      BigInt t = v[i] % BigInt(static_cast<unsigned long>(mods[i]));
      if (t < 0) t += static_cast<unsigned long>(mods[i]);
      out[i] = t.get_ui();
    }
    return out;
  };
  auto apply = [&](const IntMatrix& t, const std::vector<BigInt>& x) {
    std::vector<BigInt> y(static_cast<std::size_t>(k), BigInt(0));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) y[static_cast<std::size_t>(i)] += t(i, j) * x[static_cast<std::size_t>(j)];
    return y;
  };
  const std::vector<std::uint64_t> mods_m(static_cast<std::size_t>(k), m);

  // Kernel of A - 1 on (Z/m)^k by enumeration, mapped to the quotient.
  std::vector<std::vector<BigInt>> kernel;
  std::set<std::vector<std::uint64_t>> images;
  std::vector<BigInt> x(static_cast<std::size_t>(k), BigInt(0));
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int i = 0; i < k; ++i) {
      x[static_cast<std::size_t>(i)] = static_cast<unsigned long>(c % m);
      c /= m;
    }
    const auto y = reduce(apply(am1, x), mods_m);
    if (std::any_of(y.begin(), y.end(), [](std::uint64_t v) { return v != 0; })) continue;
    kernel.push_back(x);
    images.insert(reduce(apply(s.U, x), g));
  }
  r.kernel_size = kernel.size();
  if (kernel.size() != quotient_size || images.size() != quotient_size)
    throw VerificationFailure("mod_m_kernel_check: kernel of size " + std::to_string(kernel.size()) + " maps to " +
                              std::to_string(images.size()) + " classes, quotient has " +
                              std::to_string(quotient_size));

  // Equivariance for every element of W commuting with wF* on L.
  const WeylGroup& wg = weyl_group(rep.factor);
  const IntMatrix mbas = mi * basis;
  const IntMatrix linv = left_inverse(basis);
  std::set<IntMatrix> seen;
  for (const auto& v : wg.elements) {
    const IntMatrix vi = v.to_int();
    const IntMatrix vb = vi * basis;
    if (!(vi * mbas == mi * vb)) continue;
    const IntMatrix av = linv * vb;
    if (!seen.insert(av).second) continue;
    const IntMatrix tv = s.U * av * s.Uinv;
    for (const auto& kx : kernel) {
      const auto lhs = reduce(apply(s.U, apply(av, kx)), g);
      const auto rhs = reduce(apply(tv, apply(s.U, kx)), g);
      if (lhs != rhs) throw VerificationFailure("mod_m_kernel_check: natural map is not equivariant");
    }
  }
  r.actions_checked = seen.size();
  return r;
}

std::string lattice_key(const IntMatrix& basis) { return hnf_rows(basis.transpose()).to_string(); }

} // namespace sylow
