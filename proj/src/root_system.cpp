#include "sylow/root_system.hpp"

#include <cstdlib>
#include <deque>
#include <map>
#include <memory>
#include <mutex>

namespace sylow {

IntMatrix cartan_matrix(Series s, int n) {
  IntMatrix a = IntMatrix::identity(n);
  for (int i = 0; i < n; ++i) a(i, i) = 2;
  auto bond = [&](int i, int j, long aij = -1, long aji = -1) {
    a(i, j) = aij;
    a(j, i) = aji;
  };
  switch (s) {
    case Series::A:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case Series::B:
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      bond(n - 2, n - 1, -1, -2);
      break;
    case Series::C:
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      bond(n - 2, n - 1, -2, -1);
      break;
    case Series::D:
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      bond(n - 3, n - 1);
      break;
    case Series::E:
      bond(0, 2);
      bond(1, 3);
      for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case Series::F:
      bond(0, 1);
      bond(1, 2, -1, -2);
      bond(2, 3);
      break;
    case Series::G:
      bond(0, 1, -3, -1);
      break;
  }
  return a;
}

RootDatum root_datum(const SimpleFactor& f) {
  f.validate();
  RootDatum rd;
  rd.factor = f;
  rd.rank = f.rank;
  const int n = f.rank;
  rd.cartan = cartan_matrix(f.series, n);
  rd.long_root.assign(static_cast<std::size_t>(n), true);
  if (f.series == Series::B) rd.long_root[static_cast<std::size_t>(n - 1)] = false;
  if (f.series == Series::C)
    for (int i = 0; i + 1 < n; ++i) rd.long_root[static_cast<std::size_t>(i)] = false;
  if (f.series == Series::F) rd.long_root[2] = rd.long_root[3] = false;
  if (f.series == Series::G) rd.long_root[0] = false;

  rd.sigma.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rd.sigma[static_cast<std::size_t>(i)] = i;
  auto& sg = rd.sigma;
  if (f.very_twisted) {
    if (f.series == Series::F) sg = {3, 2, 1, 0};
    else sg = {1, 0};
  } else if (f.twist == 3) {
    sg = {2, 1, 3, 0};
  } else if (f.twist == 2) {
    if (f.series == Series::A)
      for (int i = 0; i < n; ++i) sg[static_cast<std::size_t>(i)] = n - 1 - i;
    if (f.series == Series::D) std::swap(sg[static_cast<std::size_t>(n - 2)], sg[static_cast<std::size_t>(n - 1)]);
    if (f.series == Series::E) sg = {5, 1, 4, 3, 2, 0};
  }

  for (int i = 0; i < n; ++i) {
    SmallMat s = SmallMat::identity(n);
    for (int j = 0; j < n; ++j) s(i, j) -= rd.cartan(i, j).get_si();
    rd.reflections.push_back(s);
  }
  return rd;
}

SmallMat frobenius_matrix(const RootDatum& rd, const QSpec& q) {
  q.validate();
  const int n = rd.rank;
  SmallMat m(n);
  if (rd.factor.very_twisted) {
    if (q.eta != 2 || q.p != rd.factor.forced_p())
      throw Error(rd.factor.to_string() + " needs q = sqrt" + std::to_string(rd.factor.forced_p()) + "^odd");
    const BigInt lo = pow(BigInt(static_cast<unsigned long>(q.p)), static_cast<unsigned long>((q.a - 1) / 2));
    const BigInt hi = lo * static_cast<unsigned long>(q.p);
    if (!hi.fits_slong_p()) throw Error("q too large for the lattice engine");
    for (int j = 0; j < n; ++j)
      m(rd.sigma[static_cast<std::size_t>(j)], j) = (rd.long_root[static_cast<std::size_t>(j)] ? hi : lo).get_si();
  } else {
    const BigInt qv = q.integer_value();
    if (!qv.fits_slong_p()) throw Error("q too large for the lattice engine");
    for (int j = 0; j < n; ++j) m(rd.sigma[static_cast<std::size_t>(j)], j) = qv.get_si();
  }
  // F* s_i = s_sigma(i) F*.
  for (int i = 0; i < n; ++i)
    if (!(m * rd.reflections[static_cast<std::size_t>(i)] ==
          rd.reflections[static_cast<std::size_t>(rd.sigma[static_cast<std::size_t>(i)])] * m))
      throw VerificationFailure(rd.factor.to_string() + ": F* does not normalise W");
  return m;
}

SmallMat descent_frobenius(const SmallMat& f1, int n) {
  const int r = f1.n;
  SmallMat m(r * n);
  for (int b = 0; b + 1 < n; ++b)
    for (int i = 0; i < r; ++i) m(b * r + i, (b + 1) * r + i) = 1;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m((n - 1) * r + i, j) = f1(i, j);
  return m;
}

SmallMat descent_lift(const SmallMat& w1, int n) {
  const int r = w1.n;
  SmallMat m = SmallMat::identity(r * n);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m((n - 1) * r + i, (n - 1) * r + j) = w1(i, j);
  return m;
}

std::uint64_t weyl_cap() {
  if (const char* env = std::getenv("SYLOW_WEYL_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 100000;
}

const WeylGroup& weyl_group(const SimpleFactor& f) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<WeylGroup>> cache;
  const SimpleFactor base = [&] {
    SimpleFactor s = f.split_form();
    s.descent = 1;
    return s;
  }();
  const BigInt order = weyl_order(base);
  const std::uint64_t cap = weyl_cap();
  if (order > BigInt(static_cast<unsigned long>(cap)))
    throw Error("Weyl group of " + base.to_string() + " has " + order.get_str() +
                " elements, above the enumeration cap " + std::to_string(cap) +
                " (raise SYLOW_WEYL_CAP or use the degree tables)");
  std::lock_guard lock(mu);
  auto& slot = cache[base.to_string()];
  if (slot) return *slot;

  const RootDatum rd = root_datum(base);
  auto g = std::make_unique<WeylGroup>();
  g->rank = rd.rank;
  const SmallMat id = SmallMat::identity(rd.rank);
  g->elements.push_back(id);
  g->words.emplace_back("");
  g->index.emplace(id, 0);
  for (std::size_t head = 0; head < g->elements.size(); ++head) {
    for (int i = 0; i < rd.rank; ++i) {
      SmallMat next = g->elements[head] * rd.reflections[static_cast<std::size_t>(i)];
      if (g->index.count(next)) continue;
      g->index.emplace(next, static_cast<int>(g->elements.size()));
      g->words.push_back(g->words[head] + std::to_string(i + 1));
      g->elements.push_back(std::move(next));
    }
  }
  if (BigInt(static_cast<unsigned long>(g->elements.size())) != order)
    throw VerificationFailure("Weyl group of " + base.to_string() + " enumerated " +
                              std::to_string(g->elements.size()) + " elements, expected " + order.get_str());
  g->longest = g->index.at(longest_element(rd));
  slot = std::move(g);
  return *slot;
}

SmallMat word_matrix(const RootDatum& rd, const std::string& word) {
  SmallMat m = SmallMat::identity(rd.rank);
  for (char c : word) {
    const int i = c - '1';
    if (i < 0 || i >= rd.rank) throw Error("bad Weyl word '" + word + "' for rank " + std::to_string(rd.rank));
    m = m * rd.reflections[static_cast<std::size_t>(i)];
  }
  return m;
}

SmallMat longest_element(const RootDatum& rd) {
  SmallMat w = SmallMat::identity(rd.rank);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = 0; i < rd.rank && !grew; ++i) {
      bool positive = true;
      for (int r = 0; r < rd.rank; ++r) positive &= w(r, i) >= 0;
      if (positive) {
        w = w * rd.reflections[static_cast<std::size_t>(i)];
        grew = true;
      }
    }
  }
  return w;
}

} // namespace sylow
