#include "sylow/group_data.hpp"

#include <cctype>

namespace sylow {

char series_letter(Series s) { return "ABCDEFG"[static_cast<int>(s)]; }

std::uint64_t SimpleFactor::forced_p() const {
  if (!very_twisted) return 0;
  return series == Series::G ? 3 : 2;
}

void SimpleFactor::validate() const {
  const std::string name = to_string();
  if (descent < 1) throw Error(name + ": descent factor must be positive");
  switch (series) {
    case Series::A:
      if (rank < 1) throw Error(name + ": rank must be at least 1");
      break;
    case Series::B:
      if (rank == 1) throw Error("B1 is A1; write A1");
      if (rank < 2) throw Error(name + ": rank must be at least 2");
      break;
    case Series::C:
      if (rank == 1) throw Error("C1 is A1; write A1");
      if (rank == 2) throw Error("C2 is B2; write B2");
      if (rank < 3) throw Error(name + ": rank must be at least 3");
      break;
    case Series::D:
      if (rank == 2) throw Error("D2 is A1xA1; write A1xA1");
      if (rank == 3) throw Error("D3 is A3; write A3");
      if (rank < 4) throw Error(name + ": rank must be at least 4");
      break;
    case Series::E:
      if (rank < 6 || rank > 8) throw Error(name + ": E series has rank 6, 7 or 8");
      break;
    case Series::F:
      if (rank != 4) throw Error(name + ": F series has rank 4");
      break;
    case Series::G:
      if (rank != 2) throw Error(name + ": G series has rank 2");
      break;
  }
  if (twist == 1) {
    if (very_twisted) throw Error(name + ": very twisted flag needs twist 2");
    return;
  }
  const bool ok2 = twist == 2 && !very_twisted &&
                   ((series == Series::A && rank >= 2) || series == Series::D ||
                    (series == Series::E && rank == 6));
  const bool ok3 = twist == 3 && !very_twisted && series == Series::D && rank == 4;
  const bool okv = twist == 2 && very_twisted &&
                   ((series == Series::B && rank == 2) || (series == Series::G && rank == 2) ||
                    (series == Series::F && rank == 4));
  if (!(ok2 || ok3 || okv)) throw Error(name + ": no such twisted form");
  if (very_twisted && descent != 1)
    throw Error(name + ": descent of scalars is supported only with descent 1 for Suzuki and Ree types");
}

std::string SimpleFactor::to_string() const {
  std::string s;
  if (twist > 1) s += std::to_string(twist);
  s += series_letter(series);
  s += std::to_string(rank);
  if (descent > 1) s += "^" + std::to_string(descent);
  return s;
}

SimpleFactor SimpleFactor::split_form() const {
  SimpleFactor f = *this;
  f.twist = 1;
  f.very_twisted = false;
  return f;
}

void GroupSpec::validate() const {
  if (factors.empty()) throw Error("group has no factors");
  for (const auto& f : factors) f.validate();
}

std::string GroupSpec::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += "x";
    s += factors[i].to_string();
  }
  return s;
}

void GroupSpec::check_q(const QSpec& q) const {
  q.validate();
  for (const auto& f : factors) {
    if (f.very_twisted) {
      if (q.eta != 2 || q.p != f.forced_p())
        throw Error(f.to_string() + " needs q = sqrt" + std::to_string(f.forced_p()) + "^odd");
    } else if (q.eta != 1) {
      throw Error(f.to_string() + " needs an integral q");
    }
  }
}

SimpleFactor parse_factor(const std::string& text) {
  std::size_t i = 0;
  SimpleFactor f;
  auto fail = [&]() -> SimpleFactor { throw Error("cannot parse group type '" + text + "'"); };
  if (i < text.size() && (text[i] == '2' || text[i] == '3') && i + 1 < text.size() &&
      std::isalpha(static_cast<unsigned char>(text[i + 1]))) {
    f.twist = text[i] - '0';
    ++i;
  }
  if (i >= text.size()) return fail();
  const char c = text[i++];
  const std::string letters = "ABCDEFG";
  const auto pos = letters.find(c);
  if (pos == std::string::npos) return fail();
  f.series = static_cast<Series>(pos);
  std::size_t start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == start || i - start > 3) return fail();
  f.rank = std::stoi(text.substr(start, i - start));
  if (i < text.size()) {
    if (text[i] != '^') return fail();
    start = ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start || i != text.size() || i - start > 3) return fail();
    f.descent = std::stoi(text.substr(start));
  }
  if (f.series == Series::C && f.rank == 2) f.series = Series::B;
  if (f.twist == 2 && ((f.series == Series::B && f.rank == 2) || (f.series == Series::G && f.rank == 2) ||
                       (f.series == Series::F && f.rank == 4)))
    f.very_twisted = true;
  f.validate();
  return f;
}

GroupSpec parse_group(const std::string& text) {
  GroupSpec g;
  std::size_t start = 0;
  while (true) {
    const auto x = text.find('x', start);
    g.factors.push_back(parse_factor(text.substr(start, x == std::string::npos ? x : x - start)));
    if (x == std::string::npos) break;
    start = x + 1;
  }
  g.validate();
  return g;
}

namespace {

std::vector<int> untwisted_degrees(Series s, int n) {
  std::vector<int> d;
  switch (s) {
    case Series::A:
      for (int k = 2; k <= n + 1; ++k) d.push_back(k);
      break;
    case Series::B:
    case Series::C:
      for (int k = 1; k <= n; ++k) d.push_back(2 * k);
      break;
    case Series::D:
      for (int k = 1; k <= n - 1; ++k) d.push_back(2 * k);
      d.push_back(n);
      break;
    case Series::E:
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case Series::F:
      d = {2, 6, 8, 12};
      break;
    case Series::G:
      d = {2, 6};
      break;
  }
  return d;
}

} // namespace

std::vector<GenDegree> generalized_degrees(const SimpleFactor& f) {
  f.validate();
  const RootOfUnity one = RootOfUnity::one(), minus = RootOfUnity::minus_one();
  std::vector<GenDegree> out;
  if (f.very_twisted) {
    if (f.series == Series::B) return {{2, one}, {4, minus}};
    if (f.series == Series::G) return {{2, one}, {6, minus}};
    return {{2, one}, {6, minus}, {8, one}, {12, minus}};
  }
  const std::vector<int> degs = untwisted_degrees(f.series, f.rank);
  if (f.twist == 1) {
    for (int d : degs) out.push_back({d, one});
    return out;
  }
  if (f.twist == 3) return {{2, one}, {6, one}, {4, RootOfUnity(1, 3)}, {4, RootOfUnity(2, 3)}};
  if (f.series == Series::D) {
    for (int k = 1; k <= f.rank - 1; ++k) out.push_back({2 * k, one});
    out.push_back({f.rank, minus});
    return out;
  }
  // 2A_n and 2E6: eps_i = (-1)^d_i.
  for (int d : degs) out.push_back({d, d % 2 ? minus : one});
  return out;
}

int positive_root_count(const SimpleFactor& f) {
  const int n = f.rank;
  switch (f.series) {
    case Series::A: return n * (n + 1) / 2;
    case Series::B:
    case Series::C: return n * n;
    case Series::D: return n * (n - 1);
    case Series::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Series::F: return 24;
    case Series::G: return 6;
  }
  return 0;
}

BigInt weyl_order(const SimpleFactor& f) {
  BigInt o = 1;
  for (const auto& g : generalized_degrees(f)) o *= g.d;
  return o;
}

std::string to_string(ExceptionClass e) {
  switch (e) {
    case ExceptionClass::None: return "None";
    case ExceptionClass::TriD4_l3: return "TriD4_l3";
    case ExceptionClass::Split_l2_d2: return "Split_l2_d2";
    case ExceptionClass::NonSplit_l2_d1: return "NonSplit_l2_d1";
    case ExceptionClass::Ree2G2_l2: return "Ree2G2_l2";
  }
  return "None";
}

ExceptionClass parse_exception(const std::string& s) {
  for (auto e : {ExceptionClass::None, ExceptionClass::TriD4_l3, ExceptionClass::Split_l2_d2,
                 ExceptionClass::NonSplit_l2_d1, ExceptionClass::Ree2G2_l2})
    if (to_string(e) == s) return e;
  throw Error("unknown exception class '" + s + "'");
}

ExceptionClass exception_class(const SimpleFactor& f, const QSpec& q, std::uint64_t l, std::uint64_t d) {
  f.validate();
  if (l == q.p) throw Error("ℓ must differ from the defining characteristic");
  const bool odd_d = f.series == Series::D && f.rank % 2 == 1;
  const bool e6 = f.series == Series::E && f.rank == 6;
  if (l == 3 && f.twist == 3) return ExceptionClass::TriD4_l3;
  if (l != 2) return ExceptionClass::None;
  if (f.very_twisted && f.series == Series::G) return ExceptionClass::Ree2G2_l2;
  if (d == 1 && f.twist == 2 && !f.very_twisted && (f.series == Series::A || odd_d || e6))
    return ExceptionClass::NonSplit_l2_d1;
  if (d == 2 && f.twist == 1 && ((f.series == Series::A && f.rank > 1) || odd_d || e6))
    return ExceptionClass::Split_l2_d2;
  return ExceptionClass::None;
}

std::vector<SimpleFactor> all_factors(int max_rank) {
  std::vector<SimpleFactor> out;
  auto add = [&](Series s, int r, int twist, bool vt) {
    if (r > max_rank) return;
    out.push_back(SimpleFactor{s, r, twist, vt, 1});
  };
  for (int r = 1; r <= max_rank; ++r) {
    add(Series::A, r, 1, false);
    if (r >= 2) add(Series::A, r, 2, false);
  }
  for (int r = 2; r <= max_rank; ++r) add(Series::B, r, 1, false);
  add(Series::B, 2, 2, true);
  for (int r = 3; r <= max_rank; ++r) add(Series::C, r, 1, false);
  for (int r = 4; r <= max_rank; ++r) {
    add(Series::D, r, 1, false);
    add(Series::D, r, 2, false);
  }
  add(Series::D, 4, 3, false);
  add(Series::E, 6, 1, false);
  add(Series::E, 6, 2, false);
  add(Series::E, 7, 1, false);
  add(Series::E, 8, 1, false);
  add(Series::F, 4, 1, false);
  add(Series::F, 4, 2, true);
  add(Series::G, 2, 1, false);
  add(Series::G, 2, 2, true);
  return out;
}

} // namespace sylow
