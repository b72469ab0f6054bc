#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sylow/cli.hpp"
#include "sylow/report_json.hpp"

using namespace sylow;
using nlohmann::json;

TEST_CASE("order command") {
  const auto r = run_cli({"order", "3D4", "--q", "2^1"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "q^12 * P1^2 P2^2 P3^2 P6^2 P12 = 211341312\n");
  CHECK(run_cli({"order", "2B2", "--q", "sqrt2^3"}).out.find("= 29120") != std::string::npos);
  CHECK(run_cli({"order", "2G2", "--q", "sqrt3"}).out.find("= 1512") != std::string::npos);
  CHECK(run_cli({"order", "2F4", "--q", "sqrt2^1"}).out.find("= 35942400") != std::string::npos);
}

TEST_CASE("sylow command JSON") {
  const auto r = run_cli({"sylow", "2G2", "--q", "sqrt3^1", "--ell", "2", "--json"});
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["sylow"]["abelian"] == true);
  CHECK(j["sylow"]["torus_part"] == json::array({"2", "2", "2"}));
  CHECK(j["sylow"]["w_phi"]["order"] == "6");
  CHECK(j["q"]["eta"] == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli({"order", "NOTATYPE", "--q", "2"}).exit_code == 2);
  CHECK(run_cli({"order", "A2"}).exit_code == 2);
  CHECK(run_cli({"order", "A2", "--q", "6"}).exit_code == 2);
  CHECK(run_cli({"order", "2B2", "--q", "2"}).exit_code == 2);
  CHECK(run_cli({"sylow", "A2", "--q", "2", "--ell", "2"}).exit_code == 2);
  CHECK(run_cli({"frobnicate"}).exit_code == 2);
  CHECK(run_cli({}).exit_code == 2);
  const auto h = run_cli({"--help"});
  CHECK(h.exit_code == 0);
  CHECK(h.out.find("verify") != std::string::npos);
}

TEST_CASE("verify command") {
  const auto r = run_cli({"verify", "lemma-div", "--xmax", "200", "--fmax", "64", "--lmax", "19"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("OK") != std::string::npos);
  const auto d = run_cli({"verify", "descent", "--json"});
  CHECK(d.exit_code == 0);
  CHECK(json::parse(d.out)["ok"] == true);
}

TEST_CASE("weyl commands") {
  const auto e = run_cli({"weyl", "eigenspaces", "G2", "--d", "2"});
  CHECK(e.exit_code == 0);
  CHECK(e.out.find("|N/C| = 12") != std::string::npos);
  const auto t = run_cli({"weyl", "torus", "B2", "--w", "12", "--q", "2", "--json"});
  REQUIRE(t.exit_code == 0);
  CHECK(json::parse(t.out)["invariants"] == json::array({"5"}));
  const auto big = run_cli({"weyl", "eigenspaces", "E8", "--d", "30", "--json"});
  REQUIRE(big.exit_code == 0);
  const json b = json::parse(big.out);
  CHECK(b[0]["source"] == "degree-table");
  CHECK(b[0]["N_over_C"] == "30");
}

TEST_CASE("parse_qspec") {
  CHECK(parse_qspec("2^1") == QSpec{2, 1, 1});
  CHECK(parse_qspec("4") == QSpec{2, 1, 2});
  CHECK(parse_qspec("8^2") == QSpec{2, 1, 6});
  CHECK(parse_qspec("sqrt3^3") == QSpec{3, 2, 3});
  CHECK(parse_qspec("sqrt2") == QSpec{2, 2, 1});
  for (const char* bad : {"", "0", "1", "6", "2^0", "x", "2^", "sqrt4", "sqrt2^2", "-3"})
    CHECK_THROWS_AS(parse_qspec(bad), Error);
}

TEST_CASE("JSON round trip") {
  const std::vector<std::tuple<std::string, std::string, std::uint64_t>> cases{
      {"A2", "4", 3},       {"2G2", "sqrt3", 2}, {"2F4", "sqrt2", 3}, {"3D4", "2", 3},
      {"A1xB2", "3", 2},    {"E6", "3", 2},      {"A1^2", "3", 5},    {"2B2", "sqrt2^3", 13},
      {"2A3", "2", 5},      {"D4", "3", 2}};
  for (const auto& [g, q, l] : cases) {
    const Report r = make_report(parse_group(g), parse_qspec(q), l);
    const json j = to_json(r);
    CHECK(report_from_json(j) == r);
    CHECK(report_from_json(json::parse(j.dump())) == r);
    const Report o = make_report(parse_group(g), parse_qspec(q));
    CHECK(report_from_json(to_json(o)) == o);
  }
}

TEST_CASE("identical requests give identical bytes") {
  for (const std::vector<std::string> args :
       {std::vector<std::string>{"sylow", "3D4", "--q", "2", "--ell", "3", "--json"},
        std::vector<std::string>{"sweep", "E6", "--q", "2", "--json"},
        std::vector<std::string>{"weyl", "eigenspaces", "2B2", "--d", "4"}}) {
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("--out writes the file") {
  const auto path = std::filesystem::temp_directory_path() / "sylowctl_out_test.json";
  const auto r = run_cli({"order", "B2", "--q", "2", "--json", "--out", path.string()});
  CHECK(r.exit_code == 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(json::parse(ss.str())["order"]["value"] == "720");
  std::filesystem::remove(path);
}
