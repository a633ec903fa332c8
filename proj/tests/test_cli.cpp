#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tt2/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "tt2");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = tt2::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_CASE("spectrum json for n=4") {
  const auto r = run({"spectrum", "--n", "4", "--format", "json", "--aggregate"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 4);
  std::map<int, int> mult;
  for (const auto& e : j) {
    CHECK(e["den"] == 5);
    mult[e["num"].get<int>()] = e["mult"].get<int>();
  }
  CHECK(mult == std::map<int, int>{{5, 1}, {3, 3}, {1, 3}, {-1, 5}});

  const auto full = nlohmann::json::parse(run({"spectrum", "--n", "4", "--format", "json"}).out);
  for (const auto& e : full) {
    CHECK(e.contains("shape"));
    CHECK(e.contains("case"));
  }
}

TEST_CASE("spectrum footer and errors") {
  const auto r = run({"spectrum", "--n", "12", "--aggregate"});
  CHECK(r.code == 0);
  CHECK(r.err.find("239500800") != std::string::npos);
  CHECK(run({"spectrum", "--n", "2"}).code == 2);
  CHECK(run({"spectrum"}).code == 2);
  CHECK(run({"spectrum", "--n", "4", "--format", "xml"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("csv layout") {
  const auto r = run({"spectrum", "--n", "5"});
  REQUIRE(r.code == 0);
  const auto l = lines(r.out);
  CHECK(l[0] == "num,den,mult,shape,case");
  CHECK(r.out.find('\r') == std::string::npos);
  CHECK(l[1] == "7,7,1,(5),ascending");
  CHECK(r.out.find(",\"(4,1)\",") != std::string::npos);  // shapes with commas are quoted
}

TEST_CASE("tv-curve rows") {
  const auto r = run({"tv-curve", "--n", "6", "--k-max", "20"});
  REQUIRE(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 22);
  CHECK(l[0] == "k,tv,ub_spectral,ub_envelope,lb_fixedpoint");
  CHECK(l[1].rfind("0,0.99722222222222223,", 0) == 0);
  double previous = 2;
  for (std::size_t i = 1; i < l.size(); ++i) {
    const double tv = std::stod(l[i].substr(l[i].find(',') + 1));
    CHECK(tv <= previous);
    previous = tv;
  }
  CHECK(r.err.find("warning") == std::string::npos);
}

TEST_CASE("tv-curve json marks missing values as null") {
  const auto r = run({"tv-curve", "--n", "4", "--k-max", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 4);
  CHECK(j[0]["lb_fixedpoint"].is_null());
  CHECK(j[3]["tv"].is_number());
}

TEST_CASE("exact and float curves agree") {
  const auto f = nlohmann::json::parse(run({"tv-curve", "--n", "5", "--k-max", "10", "--format", "json"}).out);
  const auto e = nlohmann::json::parse(
      run({"tv-curve", "--n", "5", "--k-max", "10", "--format", "json", "--mode", "exact"}).out);
  for (std::size_t k = 0; k <= 10; ++k)
    CHECK(f[k]["tv"].get<double>() == doctest::Approx(e[k]["tv"].get<double>()).epsilon(1e-12));
}

TEST_CASE("caps and resource refusal") {
  CHECK(run({"tv-curve", "--n", "7", "--mode", "exact", "--k-max", "1"}).code == 2);
  CHECK(run({"tv-curve", "--n", "11", "--k-max", "1"}).code == 2);
  CHECK(run({"tv-curve", "--n", "13", "--force"}).code == 2);
  CHECK(run({"tv-curve", "--n", "10", "--k-max", "1", "--mem-budget-mb", "16"}).code == 3);
  CHECK(run({"tv-curve", "--n", "3"}).code == 2);
}

TEST_CASE("tv-curve output file and cache") {
  const auto dir = std::filesystem::temp_directory_path() / "tt2-cli-test";
  std::filesystem::remove_all(dir);
  const auto file = dir / "curve.csv";
  std::filesystem::create_directories(dir);
  const auto r = run({"tv-curve", "--n", "6", "--k-max", "5", "--output", file.string(),
                      "--cache-dir", (dir / "cache").string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(std::filesystem::exists(dir / "cache" / "action-n6.tt2s"));
  std::ifstream in(file);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == run({"tv-curve", "--n", "6", "--k-max", "5"}).out);
  CHECK(run({"tv-curve", "--n", "6", "--k-max", "5", "--low-memory"}).out == ss.str());
  std::filesystem::remove_all(dir);
}

TEST_CASE("bounds") {
  const auto r = run({"bounds", "--n", "6", "--k-max", "3"});
  REQUIRE(r.code == 0);
  const auto l = lines(r.out);
  CHECK(l[0] == "k,e_k,v_k,ub_spectral,ub_envelope,lb_fixedpoint");
  CHECK(l[1].rfind("0,6,0,", 0) == 0);
  CHECK(l.size() == 5);
  CHECK(run({"bounds", "--n", "4"}).code == 2);
}

TEST_CASE("simulate") {
  const auto r = run({"simulate", "--n", "10", "--k", "15", "--trials", "2000", "--seed", "7",
                      "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out)[0];
  CHECK(j["trials"] == 2000);
  CHECK(j["seed"] == 7);
  CHECK(j["all_even"] == true);
  CHECK(std::abs(j["mean_fixed_points"].get<double>() - j["e_k"].get<double>()) <=
        4 * j["ci_half_width"].get<double>());
  CHECK(run({"simulate", "--n", "10", "--k", "15", "--trials", "2000", "--seed", "7", "--format",
             "json", "--threads", "3"})
            .out == r.out);
  CHECK(run({"simulate", "--n", "10", "--trials", "10"}).code == 2);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--only", "trace-oracle", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 2);
  CHECK(r.out.find("trace-oracle") != std::string::npos);
  const auto t = run({"verify", "--only", "table1", "--n", "10"});
  CHECK(t.code == 0);
  CHECK(t.out.find("PASS") != std::string::npos);
  CHECK(run({"verify", "--only", "bogus"}).code == 2);
  const auto all = run({"verify"});
  CHECK(all.code == 0);
  CHECK(all.out.find("FAIL") == std::string::npos);
  for (const auto& name : tt2::cli::verify_check_names()) CHECK(all.out.find(name) != std::string::npos);
}
