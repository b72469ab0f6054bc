#include "sylow/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "sylow/lattice_engine.hpp"
#include "sylow/report_json.hpp"
#include "sylow/verify.hpp"

namespace sylow {

using nlohmann::json;

namespace {

struct Options {
  std::string type;
  std::string q = "2";
  std::uint64_t ell = 0;
  std::uint64_t lmax = 100;
  int descent = 1;
  int d = 1;
  std::string word;
  bool json_out = false;
  std::string out_file;
  // verify bounds
  std::uint64_t xmax = 200, fmax = 64, vlmax = 19, qmax = 50, wmax = 1152;
  int emax = 60, max_rank = 0;
  std::vector<int> moduli{3, 4, 5, 6, 7, 8, 9};
  bool serial = false;
};

GroupSpec group_of(const Options& o) {
  GroupSpec g = parse_group(o.type);
  if (o.descent != 1) {
    if (g.factors.size() != 1) throw Error("--descent needs a single factor");
    if (g.factors.front().descent != 1) throw Error("descent given twice");
    g.factors.front().descent = o.descent;
    g.validate();
  }
  return g;
}

SimpleFactor single_factor(const Options& o) {
  const GroupSpec g = group_of(o);
  if (g.factors.size() != 1) throw Error("this command takes a single factor");
  return g.factors.front();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string list_text(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "}";
}

// order / sylow
std::string cmd_order(const Options& o) {
  const Report r = make_report(group_of(o), parse_qspec(o.q));
  if (o.json_out) return dump(to_json(r));
  return r.order.to_compact_string() + " = " + r.order_value.get_str() + "\n";
}

std::string cmd_sylow(const Options& o) {
  const Report r = make_report(group_of(o), parse_qspec(o.q), o.ell);
  if (o.json_out) return dump(to_json(r));
  std::string s = r.group.to_string() + ": |G^F| = " + r.order_value.get_str() + "\n";
  for (const auto& f : r.sylow) s += render_text(f);
  if (r.sylow.size() > 1) s += "Sylow order " + r.sylow_order.get_str() + "\n";
  return s;
}

std::string cmd_sweep(const Options& o) {
  const GroupSpec g = group_of(o);
  const QSpec q = parse_qspec(o.q);
  const BigInt order = evaluate_order(generic_order(g), q);
  json all = json::array();
  std::string text;
  for (std::uint64_t l : primes_up_to(o.lmax)) {
    if (l == q.p || order % static_cast<unsigned long>(l) != 0) continue;
    const Report r = make_report(g, q, l);
    if (o.json_out) all.push_back(to_json(r));
    for (const auto& f : r.sylow) text += render_text(f);
  }
  return o.json_out ? dump(all) : text;
}

// weyl
std::string cmd_eigenspaces(const Options& o) {
  const SimpleFactor f = single_factor(o);
  if (o.d < 1) throw Error("--d must be positive");
  std::vector<RootOfUnity> roots;
  if (f.very_twisted) {
    for (const auto& of : generic_order(f).factors)
      if (of.id.d == o.d) roots.push_back(of.id.root);
    if (roots.empty()) throw Error("no q-cyclotomic factor of " + f.to_string() + " has d = " + std::to_string(o.d));
  } else {
    roots.push_back(RootOfUnity::primitive(o.d));
  }
  const QSpec q = canonical_q(f);
  json out = json::array();
  std::string text;
  for (const auto& zeta : roots) {
    const auto a = a_zeta(generalized_degrees(f), zeta);
    BigInt prod = 1;
    for (int d : a) prod *= d;
    json j{{"factor", f.to_string()}, {"zeta", zeta.to_string()}, {"a_zeta", a}, {"a_product", prod.get_str()}};
    text += f.to_string() + ", zeta = " + zeta.to_string() + ": a(zeta) = " + list_text(a);
    if (a.empty()) {
      j["max_dim"] = 0;
      text += ", no eigenvalue q*zeta in the coset\n";
    } else if (weyl_order(f) > static_cast<unsigned long>(weyl_cap())) {
      j["max_dim"] = a.size();
      j["N_over_C"] = prod.get_str();
      j["source"] = "degree-table";
      text += ", |W| = " + weyl_order(f).get_str() + " is above the enumeration cap; from the degrees: max dim " +
              std::to_string(a.size()) + ", |N/C| = " + prod.get_str() + "\n";
    } else {
      const EigenspaceSearch es = max_eigenspace_search(f, zeta, q);
      const NormalizerQuotient nq = normalizer_quotient(f, zeta, es.witness, q);
      json hist = json::object();
      for (const auto& [dim, count] : es.histogram) hist[std::to_string(dim)] = count;
      j["phi"] = es.phi.name();
      j["max_dim"] = es.max_dim;
      j["witness"] = es.witness_word;
      j["witness_count"] = es.witnesses.size();
      j["histogram"] = hist;
      j["N_over_C"] = std::to_string(nq.order);
      j["source"] = "enumeration";
      j["N"] = nq.normalizer_size;
      j["C"] = nq.centralizer_size;
      text += ", Phi = " + es.phi.name() + ", max dim " + std::to_string(es.max_dim) + " (witness '" +
              es.witness_word + "', " + std::to_string(es.witnesses.size()) + " maximal), |N/C| = " +
              std::to_string(nq.order) + "\n";
    }
    out.push_back(j);
  }
  return o.json_out ? dump(out) : text;
}

std::string cmd_torus(const Options& o) {
  const SimpleFactor f = single_factor(o);
  const QSpec q = parse_qspec(o.q);
  if (f.descent != 1) throw Error("weyl torus works on a single component (descent 1)");
  GroupSpec{{f}}.check_q(q);
  const LatticeRep rep = build_rep(f, q);
  const SmallMat m = word_matrix(rep.datum, o.word) * rep.fstar;
  const TorusStructure t = torus_fixed_points(m);
  const auto cf = char_poly_factored(m, q);
  json factors = json::array();
  std::string ftext;
  for (const auto& c : cf) {
    factors.push_back(json{{"poly", c.poly.to_string()}, {"mult", c.mult}, {"id", c.id ? c.id->name() : "anonymous"}});
    ftext += " (" + c.poly.to_string() + ")" + (c.mult > 1 ? "^" + std::to_string(c.mult) : "") + " [" +
             (c.id ? c.id->name() : "anonymous") + "]";
  }
  json inv = json::array();
  std::string itext;
  for (const auto& v : t.invariants) {
    inv.push_back(v.get_str());
    itext += (itext.empty() ? "" : ", ") + v.get_str();
  }
  if (o.json_out)
    return dump(json{{"factor", f.to_string()}, {"q", q.to_string()}, {"w", o.word}, {"charpoly", charpoly(m).to_string()},
                     {"factors", factors}, {"invariants", inv}, {"order", t.order().get_str()}});
  return "det(xI - wF*) =" + ftext + "\nT_w^F invariants [" + itext + "], order " + t.order().get_str() + "\n";
}

std::string suite_text(const VerifyResult& r) {
  std::string s = r.name + ": " + r.summary + ", " + (r.ok() ? "OK" : "FAILED") + "\n";
  if (!r.ok()) s += "first counterexample: " + r.violations.front() + "\n";
  return s;
}

VerifyResult cmd_verify(const std::string& suite, const Options& o) {
  if (suite == "lemma-div") return verify_suite_lemma_div(o.xmax, o.fmax, o.vlmax);
  if (suite == "divcyclo") return verify_suite_divcyclo(o.qmax, o.emax, o.vlmax);
  if (suite == "reduction") return verify_suite_reduction(o.moduli, !o.serial);
  if (suite == "order-oracle") return verify_suite_order_oracle(!o.serial);
  if (suite == "sylow-oracle") return verify_suite_sylow_oracle(o.vlmax);
  if (suite == "coset") return verify_suite_coset(o.wmax);
  if (suite == "descent") return verify_suite_descent();
  if (suite == "lattice") return verify_suite_lattice(o.max_rank ? o.max_rank : 4);
  if (suite == "valuation") return verify_suite_valuation(o.max_rank ? o.max_rank : 8, o.lmax);
  if (suite == "faithful") return verify_suite_faithful();
  throw Error("unknown suite '" + suite + "'");
}

} // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CliResult res;
  Options o;
  CLI::App app{"Sylow subgroups of finite reductive groups from generic data", "sylowctl"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  auto add_common = [&](CLI::App* c, bool with_q) {
    c->add_option("type", o.type, "Group, e.g. A3, 2A2, 3D4, 2F4, A1xB2, A1^2")->required();
    if (with_q) c->add_option("--q", o.q, "q as p^a, sqrtp^a or a prime power")->required();
    c->add_option("--descent", o.descent, "Descent of scalars n")->check(CLI::PositiveNumber);
    c->add_flag("--json", o.json_out, "JSON output");
    c->add_option("--out", o.out_file, "Write the output to FILE");
  };
  auto* order = app.add_subcommand("order", "Factored and evaluated order");
  add_common(order, true);
  auto* sylow = app.add_subcommand("sylow", "Sylow l-subgroup report");
  add_common(sylow, true);
  sylow->add_option("--ell", o.ell, "The prime l")->required();
  auto* sweep = app.add_subcommand("sweep", "Sylow reports for every prime l <= lmax dividing the order");
  add_common(sweep, true);
  sweep->add_option("--lmax", o.lmax, "Largest prime");

  auto* weyl = app.add_subcommand("weyl", "Weyl coset experiments");
  weyl->require_subcommand(1);
  auto* eig = weyl->add_subcommand("eigenspaces", "Maximal zeta_d-eigenspaces, a(zeta) and |N/C|");
  add_common(eig, false);
  eig->add_option("--d", o.d, "Order of zeta (d of the factor for 2B2, 2G2, 2F4)")->required();
  auto* tor = weyl->add_subcommand("torus", "Smith invariants of T_w^F");
  add_common(tor, true);
  tor->add_option("--w", o.word, "Reduced word in 1-based simple reflections, e.g. 1212");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->require_subcommand(1);
  std::string suite;
  for (const auto& name : suite_names()) {
    auto* s = verify->add_subcommand(name, "Verification suite " + name);
    s->callback([&suite, name] { suite = name; });
    s->add_flag("--json", o.json_out, "JSON output");
    s->add_option("--out", o.out_file, "Write the output to FILE");
    if (name == "lemma-div") {
      s->add_option("--xmax", o.xmax);
      s->add_option("--fmax", o.fmax);
      s->add_option("--lmax", o.vlmax);
    } else if (name == "divcyclo") {
      s->add_option("--qmax", o.qmax);
      s->add_option("--emax", o.emax);
      s->add_option("--lmax", o.vlmax);
    } else if (name == "reduction") {
      s->add_option("--m", o.moduli, "Moduli (each >= 3)")->delimiter(',');
      s->add_flag("--serial", o.serial, "Use the serial kernel");
    } else if (name == "order-oracle") {
      s->add_flag("--serial", o.serial, "Use the serial enumeration");
    } else if (name == "sylow-oracle") {
      s->add_option("--lmax", o.vlmax);
    } else if (name == "coset") {
      s->add_option("--wmax", o.wmax, "Largest |W| examined");
    } else if (name == "lattice") {
      s->add_option("--max-rank", o.max_rank);
    } else if (name == "valuation") {
      s->add_option("--max-rank", o.max_rank);
      s->add_option("--lmax", o.lmax);
    }
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    res.out = app.help();
    return res;
  } catch (const CLI::CallForAllHelp& e) {
    res.out = app.help("", CLI::AppFormatMode::All);
    return res;
  } catch (const CLI::ParseError& e) {
    res.exit_code = 2;
    res.err = std::string(e.what()) + "\n" + app.help();
    return res;
  }

  try {
    std::string out;
    if (order->parsed()) out = cmd_order(o);
    else if (sylow->parsed()) out = cmd_sylow(o);
    else if (sweep->parsed()) out = cmd_sweep(o);
    else if (eig->parsed()) out = cmd_eigenspaces(o);
    else if (tor->parsed()) out = cmd_torus(o);
    else if (verify->parsed()) {
      const VerifyResult r = cmd_verify(suite, o);
      if (o.json_out)
        out = dump(json{{"suite", r.name}, {"checks", r.checks}, {"ok", r.ok()}, {"summary", r.summary},
                        {"violations", r.violations}});
      else out = suite_text(r);
      if (!r.ok()) res.exit_code = 1;
    }
    if (!o.out_file.empty()) {
      std::ofstream f(o.out_file);
      if (!f) throw Error("cannot write " + o.out_file);
      f << out;
      res.out = "wrote " + o.out_file + "\n";
    } else {
      res.out = out;
    }
  } catch (const VerificationFailure& e) {
    res.exit_code = 1;
    res.err = std::string("verification failure: ") + e.what() + "\n";
  } catch (const Error& e) {
    res.exit_code = 2;
    res.err = std::string("error: ") + e.what() + "\nRun sylowctl --help for usage.\n";
  } catch (const json::exception& e) {
    res.exit_code = 2;
    res.err = std::string("error: ") + e.what() + "\nRun sylowctl --help for usage.\n";
  }
  return res;
}

} // namespace sylow
