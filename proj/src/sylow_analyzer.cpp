#include "sylow/sylow_analyzer.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "sylow/cyclotomic.hpp"
#include "sylow/lattice_engine.hpp"

namespace sylow {

std::string to_string(TorusSource s) {
  switch (s) {
  case TorusSource::None: return "none";
  case TorusSource::Formula: return "formula";
  case TorusSource::LatticeSnf: return "lattice-snf";
  case TorusSource::ExceptionSnf: return "exception-snf";
  case TorusSource::ReeTable: return "ree-table";
  }
  return "none";
}

TorusSource parse_torus_source(const std::string& s) {
  for (auto t : {TorusSource::None, TorusSource::Formula, TorusSource::LatticeSnf, TorusSource::ExceptionSnf,
                 TorusSource::ReeTable})
    if (to_string(t) == s) return t;
  throw Error("unknown torus source '" + s + "'");
}

namespace {

void check_inputs(const SimpleFactor& f, const QSpec& q, std::uint64_t l) {
  f.validate();
  q.validate();
  if (!is_prime(l)) throw Error("l = " + std::to_string(l) + " is not prime");
  if (l == q.p) throw Error("ℓ must differ from the defining characteristic");
  GroupSpec{{f}}.check_q(q);
}

// Witness word for the maximal zeta-eigenspace, found once per (factor, zeta).
std::string cached_witness(const SimpleFactor& f, const RootOfUnity& zeta) {
  static std::mutex mu;
  static std::map<std::tuple<std::string, std::int64_t, std::int64_t>, std::string> cache;
  const auto key = std::make_tuple(f.to_string(), zeta.num(), zeta.den());
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const std::string word = max_eigenspace_search(f, zeta, canonical_q(f)).witness_word;
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, word);
  return word;
}

std::vector<BigInt> l_parts(const std::vector<BigInt>& invariants, std::uint64_t l) {
  std::vector<BigInt> out;
  for (const auto& v : invariants) {
    BigInt e = l_part(v, l);
    if (e > 1) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned total_val(const std::vector<BigInt>& parts, std::uint64_t l) {
  unsigned v = 0;
  for (const auto& x : parts) v += val_l(x, l);
  return v;
}

// |C_G(S)^F| for the exceptional cases: T_1 when d = 1, T_{w0} when d = 2, on
// one component at q^n.
std::vector<BigInt> exceptional_centralizer(const SimpleFactor& f, const QSpec& q, std::uint64_t d) {
  SimpleFactor one = f;
  one.descent = 1;
  const RootDatum rd = root_datum(one);
  const SmallMat fs = frobenius_matrix(rd, q.pow(f.descent));
  const SmallMat w = d == 1 ? SmallMat::identity(rd.rank) : longest_element(rd);
  return torus_fixed_points(w * fs).invariants;
}

} // namespace

std::set<std::uint64_t> D_of_ell(const SimpleFactor& f, const QSpec& q, std::uint64_t l) {
  check_inputs(f, q, l);
  const BigInt lb(static_cast<unsigned long>(l));
  std::set<std::uint64_t> out;
  for (const auto& of : generic_order(f).factors)
    if (of.id.value(q.pow(of.subst)) % lb == 0) out.insert(static_cast<std::uint64_t>(of.id.d));
  return out;
}

SylowReport analyze(const SimpleFactor& f, const QSpec& q, std::uint64_t l) {
  check_inputs(f, q, l);
  SylowReport r;
  r.factor = f;
  r.q = q;
  r.ell = l;
  r.d_ell = d_of_ell(q, f.descent, l);
  const FactoredOrder fo = generic_order(f);
  const BigInt order = evaluate_order(fo, q);
  r.sylow_order = l_part(order, l);
  r.D_ell = D_of_ell(f, q, l);
  r.divides = r.sylow_order > 1;
  if (!r.divides) return r;

  if (!r.D_ell.contains(r.d_ell))
    throw VerificationFailure(f.to_string() + " at q = " + q.to_string() + ", l = " + std::to_string(l) +
                              ": d(l) = " + std::to_string(r.d_ell) + " is not in D(l)");
  const BigInt lb(static_cast<unsigned long>(l));
  std::vector<OrderFactor> cands;
  for (const auto& of : fo.factors)
    if (static_cast<std::uint64_t>(of.id.d) == r.d_ell && of.id.value(q.pow(of.subst)) % lb == 0)
      cands.push_back(of);
  if (cands.size() != 1)
    throw VerificationFailure(f.to_string() + " at q = " + q.to_string() + ", l = " + std::to_string(l) + ": " +
                              std::to_string(cands.size()) + " factors over d(l) are divisible by l");
  r.chosen = cands.front();
  r.n_phi = r.chosen.mult;
  const QSpec qn = q.pow(r.chosen.subst);
  const BigInt phi_value = r.chosen.id.value(qn);
  const unsigned v_phi = val_l(phi_value, l);
  r.v_torus = static_cast<unsigned>(r.n_phi) * v_phi;

  if (!r.chosen.id.is_named()) {
    const PhiVal pv = phi_val(r.chosen.id.d, qn.integer_value(), l);
    if (!pv.matches || !pv.divides || pv.val != v_phi)
      throw VerificationFailure("divisibility lemma disagrees with evaluation for " + r.chosen.to_string());
  }

  r.w_phi_degrees = a_zeta(generalized_degrees(f), r.chosen.id.root);
  for (int d : r.w_phi_degrees) r.w_phi_order *= d;
  if (static_cast<int>(r.w_phi_degrees.size()) != r.n_phi)
    throw VerificationFailure("n_Phi != |a(zeta)| for " + r.chosen.to_string());
  r.abelian = r.D_ell.size() == 1;
  r.exception = exception_class(f, q, l, r.d_ell);

  switch (r.exception) {
  case ExceptionClass::Ree2G2_l2:
    r.torus_part = {2, 2, 2};
    r.torus_source = TorusSource::ReeTable;
    r.abelian = true;
    if (r.sylow_order != 8) throw VerificationFailure("2G2: Sylow 2-subgroup order is not 8");
    break;
  case ExceptionClass::TriD4_l3:
  case ExceptionClass::Split_l2_d2:
  case ExceptionClass::NonSplit_l2_d1: {
    if (r.d_ell > 2) throw VerificationFailure("exceptional case with d(l) > 2");
    const auto inv = exceptional_centralizer(f, q, r.d_ell);
    r.torus_part = l_parts(inv, l);
    r.torus_source = TorusSource::ExceptionSnf;
    r.correction_v = total_val(r.torus_part, l);
    if (r.exception == ExceptionClass::TriD4_l3) {
      const QSpec q1 = q.pow(f.descent);
      const int a = r.d_ell == 1 ? 1 : 2, b = r.d_ell == 1 ? 3 : 6;
      const BigInt closed = pow(CycFactorId::cyclo(a).value(q1), 2) * CycFactorId::cyclo(b).value(q1);
      BigInt det = 1;
      for (const auto& v : inv) det *= v;
      if (det != closed) throw VerificationFailure("3D4: centralizer torus order differs from the closed form");
    }
    break;
  }
  case ExceptionClass::None:
    if (!r.chosen.id.is_named()) {
      r.torus_part.assign(static_cast<std::size_t>(r.n_phi), pow(lb, v_phi));
      r.torus_source = TorusSource::Formula;
    } else {
      const LatticeRep rep = build_rep(f, q);
      const SmallMat m = word_matrix(rep.datum, cached_witness(f, r.chosen.id.root)) * rep.fstar;
      const IntMatrix basis = saturated_kernel(r.chosen.id.normalized(q), m);
      r.torus_part = l_parts(torus_fixed_points(m, basis).invariants, l);
      r.torus_source = TorusSource::LatticeSnf;
      if (total_val(r.torus_part, l) != r.v_torus)
        throw VerificationFailure("lattice torus order disagrees with n_Phi * val(Phi(q))");
    }
    break;
  }
  return r;
}

ValuationIdentity check_valuation_identity(const SimpleFactor& f, const QSpec& q, std::uint64_t l) {
  const SylowReport r = analyze(f, q, l);
  ValuationIdentity id;
  for (const auto& of : generic_order(f).factors)
    id.lhs += static_cast<unsigned>(of.mult) * val_l(of.id.value(q.pow(of.subst)), l);
  if (id.lhs != (r.divides ? val_l(r.sylow_order, l) : 0))
    throw VerificationFailure("valuation of the evaluated order disagrees with the factor sum");
  if (!r.divides) return id;
  const unsigned vw = val_l(r.w_phi_order, l);
  switch (r.exception) {
  case ExceptionClass::None: id.rhs = r.v_torus + vw; break;
  case ExceptionClass::Ree2G2_l2: id.rhs = total_val(r.torus_part, l); break;
  default: id.rhs = r.correction_v + vw; break;
  }
  if (!id.holds())
    throw VerificationFailure(f.to_string() + " at q = " + q.to_string() + ", l = " + std::to_string(l) +
                              ": valuation identity fails, " + std::to_string(id.lhs) +
                              " != " + std::to_string(id.rhs));
  return id;
}

GroupSylowReport analyze_group(const GroupSpec& g, const QSpec& q, std::uint64_t l) {
  g.validate();
  g.check_q(q);
  GroupSylowReport out;
  for (const auto& f : g.factors) {
    out.factors.push_back(analyze(f, q, l));
    out.sylow_order *= out.factors.back().sylow_order;
  }
  out.order = evaluate_order(generic_order(g), q);
  if (l_part(out.order, l) != out.sylow_order)
    throw VerificationFailure("product of per-factor Sylow orders differs from the l-part of |G^F|");
  return out;
}

} // namespace sylow
