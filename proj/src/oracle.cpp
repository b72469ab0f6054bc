#include "sylow/oracle.hpp"

#include <algorithm>

namespace sylow {

std::string to_string(Family f) {
  switch (f) {
  case Family::SL: return "SL";
  case Family::SU: return "SU";
  case Family::Sp: return "Sp";
  }
  return "?";
}

void MatrixGroupSpec::validate() const {
  if (n < 1 || n > 4) throw Error("matrix groups are limited to size 1..4");
  if (family == Family::Sp && n % 2 != 0) throw Error("Sp needs even size");
  if (family == Family::SU && n < 2) throw Error("SU needs size at least 2");
  FiniteField probe(field_size());
  if (static_cast<std::uint64_t>(probe.size()) != field_size()) throw Error("bad field size");
}

std::string MatrixGroupSpec::to_string() const {
  return sylow::to_string(family) + std::to_string(n) + "(" + std::to_string(q) + ")";
}

SimpleFactor MatrixGroupSpec::lie_type() const {
  switch (family) {
  case Family::SL: return SimpleFactor{Series::A, n - 1, 1, false, 1};
  case Family::SU: return SimpleFactor{Series::A, n - 1, n > 2 ? 2 : 1, false, 1};
  case Family::Sp:
    if (n == 2) return SimpleFactor{Series::A, 1, 1, false, 1};
    if (n == 4) return SimpleFactor{Series::B, 2, 1, false, 1};
    return SimpleFactor{Series::C, n / 2, 1, false, 1};
  }
  throw Error("unknown family");
}

QSpec MatrixGroupSpec::qspec() const {
  FiniteField f(q);
  return QSpec{static_cast<std::uint64_t>(f.characteristic()), 1, f.degree()};
}

FiniteGroup::FiniteGroup(MatrixGroupSpec spec, std::vector<PackedMatrix> elements)
    : spec_(spec), field_(std::make_shared<FiniteField>(spec.field_size())), elements_(std::move(elements)) {
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], static_cast<int>(i));
  PackedMatrix id = 0;
  for (int i = 0; i < spec_.n; ++i) id |= PackedMatrix{1} << (4 * (i * spec_.n + i));
  auto it = index_.find(id);
  if (it == index_.end()) throw VerificationFailure(spec_.to_string() + ": identity missing from the enumeration");
  identity_ = it->second;
}

PackedMatrix FiniteGroup::product(PackedMatrix x, PackedMatrix y) const {
  const int n = spec_.n;
  const FiniteField& f = *field_;
  PackedMatrix r = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int s = 0;
      for (int k = 0; k < n; ++k) s = f.add(s, f.mul(entry(x, n, i, k), entry(y, n, k, j)));
      r |= static_cast<PackedMatrix>(s) << (4 * (i * n + j));
    }
  return r;
}

int FiniteGroup::mul(int x, int y) const {
  const auto it = index_.find(product(elements_[static_cast<std::size_t>(x)], elements_[static_cast<std::size_t>(y)]));
  if (it == index_.end()) throw VerificationFailure(spec_.to_string() + ": product left the group");
  return it->second;
}

namespace {

using Column = std::vector<int>;

struct Constraints {
  const FiniteField& f;
  MatrixGroupSpec spec;
  int frob = 1; // exponent of the conjugation for SU

  int conj(int x) const { return spec.family == Family::SU ? f.pow(x, frob) : x; }

  // Required value of B(c_i, c_j) for the form of the family.
  int target(int i, int j) const {
    const int n = spec.n;
    if (spec.family == Family::SU) return j == n - 1 - i ? 1 : 0;
    const int h = n / 2;
    if (j == i + h && i < h) return 1;
    if (i == j + h && j < h) return f.neg(1);
    return 0;
  }

  int form(const Column& x, const Column& y) const {
    const int n = spec.n;
    int s = 0;
    if (spec.family == Family::SU) {
      for (int i = 0; i < n; ++i)
        s = f.add(s, f.mul(conj(x[static_cast<std::size_t>(i)]), y[static_cast<std::size_t>(n - 1 - i)]));
    } else {
      const int h = n / 2;
      for (int i = 0; i < h; ++i) {
        s = f.add(s, f.mul(x[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(i + h)]));
        s = f.sub(s, f.mul(x[static_cast<std::size_t>(i + h)], y[static_cast<std::size_t>(i)]));
      }
    }
    return s;
  }

  bool compatible(const std::vector<Column>& cols, const Column& c) const {
    if (spec.family == Family::SL) return true;
    const int j = static_cast<int>(cols.size());
    for (int i = 0; i < j; ++i)
      if (form(cols[static_cast<std::size_t>(i)], c) != target(i, j) || form(c, cols[static_cast<std::size_t>(i)]) != target(j, i))
        return false;
    return form(c, c) == target(j, j);
  }

  bool det_one(const std::vector<Column>& cols) const {
    const int n = spec.n;
    std::vector<std::vector<int>> a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    int det = 1;
    for (int c = 0; c < n; ++c) {
      int piv = -1;
      for (int r = c; r < n; ++r)
        if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return false;
      if (piv != c) {
        std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(c)]);
        det = f.neg(det);
      }
      const int p = a[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
      det = f.mul(det, p);
      const int pi = f.inv(p);
      for (int r = c + 1; r < n; ++r) {
        const int factor = f.mul(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], pi);
        if (factor == 0) continue;
        for (int k = c; k < n; ++k)
          a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] =
              f.sub(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)],
                    f.mul(factor, a[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)]));
      }
    }
    return det == 1;
  }

  bool member(const std::vector<Column>& cols) const {
    const int n = spec.n;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (spec.family != Family::SL &&
            form(cols[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]) != target(i, j))
          return false;
    return spec.family == Family::Sp || det_one(cols);
  }
};

Column decode(std::uint64_t code, int n, int size) {
  Column c(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i, code /= static_cast<std::uint64_t>(size))
    c[static_cast<std::size_t>(i)] = static_cast<int>(code % static_cast<std::uint64_t>(size));
  return c;
}

PackedMatrix pack(const std::vector<Column>& cols, int n) {
  PackedMatrix m = 0;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      m |= static_cast<PackedMatrix>(cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) << (4 * (i * n + j));
  return m;
}

std::uint64_t encode(const Column& c, int size) {
  std::uint64_t code = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) code = code * static_cast<std::uint64_t>(size) + static_cast<std::uint64_t>(*it);
  return code;
}

class Backtracker {
public:
  Backtracker(const Constraints& c, const std::vector<Column>& all) : c_(c), all_(all) {}

  void run(std::vector<Column>& cols, std::vector<char>& span, std::vector<PackedMatrix>& out) const {
    const int n = c_.spec.n;
    if (static_cast<int>(cols.size()) == n) {
      if (c_.spec.family == Family::Sp || c_.det_one(cols)) out.push_back(pack(cols, n));
      return;
    }
    const int size = c_.f.size();
    for (std::size_t k = 0; k < all_.size(); ++k) {
      if (span[k]) continue;
      const Column& v = all_[k];
      if (!c_.compatible(cols, v)) continue;
      // Span of cols + v.
      std::vector<char> grown = span;
      for (std::size_t s = 0; s < all_.size(); ++s) {
        if (!span[s]) continue;
        for (int a = 1; a < size; ++a) {
          Column w(static_cast<std::size_t>(n));
          for (int i = 0; i < n; ++i)
            w[static_cast<std::size_t>(i)] = c_.f.add(all_[s][static_cast<std::size_t>(i)], c_.f.mul(a, v[static_cast<std::size_t>(i)]));
          grown[encode(w, size)] = 1;
        }
      }
      cols.push_back(v);
      run(cols, grown, out);
      cols.pop_back();
    }
  }

private:
  const Constraints& c_;
  const std::vector<Column>& all_;
};

int su_frobenius(const MatrixGroupSpec& spec) { return static_cast<int>(spec.q); }

} // namespace

FiniteGroup enumerate_group(const MatrixGroupSpec& spec, bool parallel) {
  spec.validate();
  auto field = std::make_shared<FiniteField>(spec.field_size());
  const Constraints c{*field, spec, su_frobenius(spec)};
  const int n = spec.n, size = field->size();
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(size);
  std::vector<Column> all;
  for (std::uint64_t code = 0; code < total; ++code) all.push_back(decode(code, n, size));

  const Backtracker bt(c, all);
  std::vector<std::vector<PackedMatrix>> parts(all.size());
  const auto m = static_cast<long>(all.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long k = 1; k < m; ++k) {
    const Column& v = all[static_cast<std::size_t>(k)];
    std::vector<Column> cols;
    if (!c.compatible(cols, v)) continue;
    std::vector<char> span(all.size(), 0);
    span[0] = 1;
    for (int a = 1; a < size; ++a) {
      Column w(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = field->mul(a, v[static_cast<std::size_t>(i)]);
      span[encode(w, size)] = 1;
    }
    cols.push_back(v);
    bt.run(cols, span, parts[static_cast<std::size_t>(k)]);
  }
  std::vector<PackedMatrix> elements;
  for (auto& p : parts) elements.insert(elements.end(), p.begin(), p.end());
  return FiniteGroup(spec, std::move(elements));
}

FiniteGroup enumerate_group_bruteforce(const MatrixGroupSpec& spec) {
  spec.validate();
  FiniteField field(spec.field_size());
  const Constraints c{field, spec, su_frobenius(spec)};
  const int n = spec.n, size = field.size();
  std::uint64_t total = 1;
  for (int i = 0; i < n * n; ++i) {
    total *= static_cast<std::uint64_t>(size);
    if (total > (std::uint64_t{1} << 26)) throw Error(spec.to_string() + ": brute-force enumeration exceeds 2^26 candidates");
  }
  std::vector<PackedMatrix> elements;
  std::vector<Column> cols(static_cast<std::size_t>(n), Column(static_cast<std::size_t>(n)));
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t x = code;
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i, x /= static_cast<std::uint64_t>(size))
        cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = static_cast<int>(x % static_cast<std::uint64_t>(size));
    if (c.member(cols)) elements.push_back(pack(cols, n));
  }
  return FiniteGroup(spec, std::move(elements));
}

Subgroup sylow_subgroup(const FiniteGroup& g, std::uint64_t l) {
  if (!is_prime(l)) throw Error("l must be prime");
  if (g.order() % l != 0)
    throw Error(std::to_string(l) + " does not divide |" + g.spec().to_string() + "| = " + std::to_string(g.order()));
  return sylow_climb(static_cast<int>(g.order()), g.identity(), l, [&g](int x, int y) { return g.mul(x, y); });
}

bool is_abelian(const FiniteGroup& g, const Subgroup& p) {
  return generators_commute(p.generators, [&g](int x, int y) { return g.mul(x, y); });
}

std::vector<BigInt> abelian_invariants(const FiniteGroup& g, const Subgroup& p, std::uint64_t l) {
  if (p.elements.size() > 10000) throw Error("abelian_invariants: subgroup larger than 10^4");
  if (!is_abelian(g, p)) throw Error("abelian_invariants: subgroup is not abelian");
  return abelian_l_invariants(p.elements, g.identity(), l, [&g](int x, int y) { return g.mul(x, y); });
}

std::vector<MatrixGroupSpec> oracle_catalog() {
  return {{Family::SL, 2, 2}, {Family::SL, 2, 3}, {Family::SL, 2, 4}, {Family::SL, 2, 5},
          {Family::SL, 3, 2}, {Family::SL, 3, 3}, {Family::SL, 4, 2}, {Family::Sp, 4, 2},
          {Family::Sp, 4, 3}, {Family::SU, 3, 2}, {Family::SU, 3, 3}, {Family::SU, 4, 2}};
}

} // namespace sylow
