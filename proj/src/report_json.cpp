#include "sylow/report_json.hpp"

#include <sstream>

namespace sylow {

using nlohmann::json;

namespace {

json big(const BigInt& v) { return v.get_str(); }

BigInt read_big(const json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  return BigInt(j.get<long>());
}

template <class T>
json big_list(const std::vector<T>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(big(x));
  return a;
}

int radicand(const QSpec& q) { return q.eta == 2 ? static_cast<int>(q.p) : 1; }

json factor_json(const OrderFactor& of, const QSpec& q) {
  return json{{"id", of.id.name()}, {"subst_degree", of.subst}, {"mult", of.mult}, {"value", big(of.id.value(q.pow(of.subst)))}};
}

OrderFactor factor_from_json(const json& j, const QSpec& q) {
  OrderFactor of;
  of.id = parse_factor_name(j.at("id").get<std::string>(), radicand(q));
  of.subst = j.at("subst_degree").get<int>();
  of.mult = j.at("mult").get<int>();
  return of;
}

} // namespace

Report make_report(const GroupSpec& g, const QSpec& q, std::optional<std::uint64_t> ell) {
  g.validate();
  g.check_q(q);
  Report r;
  r.group = g;
  r.q = q;
  r.order = generic_order(g);
  r.order_value = evaluate_order(r.order, q);
  if (ell) {
    r.ell = ell;
    const GroupSylowReport gs = analyze_group(g, q, *ell);
    r.sylow = gs.factors;
    r.sylow_order = gs.sylow_order;
  }
  return r;
}

json to_json(const SylowReport& r) {
  json D = json::array();
  for (auto d : r.D_ell) D.push_back(d);
  json j{{"factor", r.factor.to_string()},
         {"ell", r.ell},
         {"divides", r.divides},
         {"d_ell", r.d_ell},
         {"D_ell", D},
         {"n_phi", r.n_phi},
         {"v_torus", r.v_torus},
         {"w_phi", json{{"degrees", r.w_phi_degrees}, {"order", big(r.w_phi_order)}}},
         {"sylow_order", big(r.sylow_order)},
         {"abelian", r.abelian},
         {"exception", to_string(r.exception)},
         {"correction_v", r.correction_v},
         {"torus_part", big_list(r.torus_part)},
         {"torus_source", to_string(r.torus_source)}};
  if (r.divides)
    j["chosen_phi"] = json{{"id", r.chosen.id.name()}, {"subst_degree", r.chosen.subst}, {"mult", r.chosen.mult}};
  return j;
}

SylowReport sylow_report_from_json(const json& j, const QSpec& q) {
  SylowReport r;
  r.factor = parse_factor(j.at("factor").get<std::string>());
  r.q = q;
  r.ell = j.at("ell").get<std::uint64_t>();
  r.divides = j.at("divides").get<bool>();
  r.d_ell = j.at("d_ell").get<std::uint64_t>();
  for (const auto& d : j.at("D_ell")) r.D_ell.insert(d.get<std::uint64_t>());
  r.n_phi = j.at("n_phi").get<int>();
  r.v_torus = j.at("v_torus").get<unsigned>();
  r.w_phi_degrees = j.at("w_phi").at("degrees").get<std::vector<int>>();
  r.w_phi_order = read_big(j.at("w_phi").at("order"));
  r.sylow_order = read_big(j.at("sylow_order"));
  r.abelian = j.at("abelian").get<bool>();
  r.exception = parse_exception(j.at("exception").get<std::string>());
  r.correction_v = j.at("correction_v").get<unsigned>();
  for (const auto& v : j.at("torus_part")) r.torus_part.push_back(read_big(v));
  r.torus_source = parse_torus_source(j.at("torus_source").get<std::string>());
  if (j.contains("chosen_phi")) {
    const json& c = j.at("chosen_phi");
    r.chosen.id = parse_factor_name(c.at("id").get<std::string>(), radicand(q));
    r.chosen.subst = c.at("subst_degree").get<int>();
    r.chosen.mult = c.at("mult").get<int>();
  }
  return r;
}

json to_json(const Report& r) {
  json factors = json::array();
  for (const auto& of : r.order.factors) factors.push_back(factor_json(of, r.q));
  json j{{"group", r.group.to_string()},
         {"q", json{{"p", r.q.p}, {"eta", r.q.eta}, {"a", r.q.a}}},
         {"order",
          json{{"q_exponent", r.order.q_exponent}, {"factors", factors}, {"value", big(r.order_value)},
               {"text", r.order.to_string()}}}};
  if (r.ell) {
    if (r.sylow.size() == 1) {
      j["sylow"] = to_json(r.sylow.front());
    } else {
      json per = json::array();
      for (const auto& s : r.sylow) per.push_back(to_json(s));
      j["sylow"] = json{{"ell", *r.ell}, {"sylow_order", big(r.sylow_order)}, {"factors", per}};
    }
  }
  return j;
}

Report report_from_json(const json& j) {
  Report r;
  r.group = parse_group(j.at("group").get<std::string>());
  const json& q = j.at("q");
  r.q = QSpec{q.at("p").get<std::uint64_t>(), q.at("eta").get<int>(), q.at("a").get<int>()};
  r.q.validate();
  const json& o = j.at("order");
  r.order.q_exponent = o.at("q_exponent").get<int>();
  for (const auto& f : o.at("factors")) r.order.factors.push_back(factor_from_json(f, r.q));
  r.order_value = read_big(o.at("value"));
  if (j.contains("sylow")) {
    const json& s = j.at("sylow");
    r.ell = s.at("ell").get<std::uint64_t>();
    if (s.contains("factors")) {
      for (const auto& f : s.at("factors")) r.sylow.push_back(sylow_report_from_json(f, r.q));
      r.sylow_order = read_big(s.at("sylow_order"));
    } else {
      r.sylow.push_back(sylow_report_from_json(s, r.q));
      r.sylow_order = r.sylow.front().sylow_order;
    }
  }
  return r;
}

QSpec parse_qspec(const std::string& text) {
  auto bad = [&] { return Error("cannot parse q = '" + text + "' (expected p^a, sqrtp^a or a prime power)"); };
  std::string s = text;
  int eta = 1;
  if (s.rfind("sqrt", 0) == 0) {
    eta = 2;
    s = s.substr(4);
  }
  const auto caret = s.find('^');
  const std::string base = s.substr(0, caret);
  const std::string exp = caret == std::string::npos ? "1" : s.substr(caret + 1);
  if (base.empty() || exp.empty() || base.find_first_not_of("0123456789") != std::string::npos ||
      exp.find_first_not_of("0123456789") != std::string::npos || base.size() > 18 || exp.size() > 4)
    throw bad();
  std::uint64_t b = std::stoull(base);
  int a = std::stoi(exp);
  if (b < 2 || a < 1) throw bad();
  // A plain prime power such as 4 is read as 2^2.
  if (!is_prime(b)) {
    if (eta == 2) throw bad();
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= b && !p; ++d)
      if (b % d == 0) p = d;
    int k = 0;
    while (b % p == 0) {
      b /= p;
      ++k;
    }
    if (b != 1) throw Error("q = " + text + " is not a prime power");
    b = p;
    a *= k;
  }
  QSpec q{b, eta, a};
  q.validate();
  return q;
}

std::string render_text(const SylowReport& r) {
  std::ostringstream os;
  os << r.factor.to_string() << ", q = " << r.q.to_string() << ", l = " << r.ell << "\n";
  if (!r.divides) {
    os << "  l does not divide the order\n";
    return os.str();
  }
  auto list = [](const auto& v) {
    std::ostringstream s;
    s << "{";
    bool first = true;
    for (const auto& x : v) {
      s << (first ? "" : ", ") << x;
      first = false;
    }
    s << "}";
    return s.str();
  };
  os << "  d(l) = " << r.d_ell << ", D(l) = " << list(r.D_ell) << "\n";
  os << "  Phi = " << r.chosen.id.name() << (r.chosen.subst > 1 ? "(q^" + std::to_string(r.chosen.subst) + ")" : "")
     << ", n_Phi = " << r.n_phi << ", v_torus = " << r.v_torus << "\n";
  os << "  W_Phi degrees " << list(r.w_phi_degrees) << ", order " << r.w_phi_order << "\n";
  os << "  Sylow order " << r.sylow_order << ", " << (r.abelian ? "abelian" : "non-abelian") << "\n";
  os << "  torus part " << list(r.torus_part) << " (" << to_string(r.torus_source) << ")\n";
  if (r.exception != ExceptionClass::None)
    os << "  exception " << to_string(r.exception) << ", centralizer valuation " << r.correction_v << "\n";
  return os.str();
}

} // namespace sylow
