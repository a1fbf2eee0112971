#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bohr/cli.hpp"
#include "oracles.hpp"

using bohr::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) result.push_back(line);
  return result;
}

std::vector<double> csv_row(const std::string& line) {
  std::vector<double> v;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) v.push_back(std::stod(cell));
  return v;
}

}  // namespace

TEST_CASE("format_radius rounds to six decimals") {
  CHECK(bohr::cli::format_radius(0.110376725) == "0.110377");
  CHECK(bohr::cli::format_radius(1.0 / 3.0) == "0.333333");
}

TEST_CASE("radius in each format") {
  const Outcome text = invoke({"radius", "--theorem", "t2.1"});
  CHECK(text.code == 0);
  CHECK(text.out.find("radius=0.110377") != std::string::npos);
  CHECK(text.out.find("sharp=true") != std::string::npos);

  const Outcome csv = invoke({"radius", "--class", "c2", "--functional", "f3", "--N", "2", "--format", "csv"});
  CHECK(csv.code == 0);
  const auto rows = lines(csv.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "theorem,class,functional,p,N,radius,bracket_width,sharp");
  CHECK(rows[1].rfind("t3.3,c2,f3,,2,0.280776,", 0) == 0);

  const Outcome json = invoke({"radius", "--theorem", "t4.2", "--p", "2", "--format", "json"});
  CHECK(json.code == 0);
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["theorem"] == "t4.2");
  CHECK(j["class"] == "c3");
  CHECK(j["p"].get<double>() == 2.0);
  CHECK_FALSE(j.contains("N"));
  CHECK(j["sharp"] == true);
  const double r = j["radius"].get<double>();
  CHECK(std::fabs(r - oracle::kRadii[2].radius[2]) < 2e-12);
  CHECK(j["radius_display"] == bohr::cli::format_radius(r));
  CHECK(j["bracket_width"].get<double>() <= 2e-12);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"radius"}).code == 2);
  CHECK(invoke({"radius", "--theorem", "t2.2"}).code == 2);
  CHECK(invoke({"radius", "--theorem", "t2.1", "--p", "2"}).code == 2);
  CHECK(invoke({"radius", "--theorem", "t9.1"}).code == 2);
  CHECK(invoke({"radius", "--theorem", "t2.3", "--N", "1"}).code == 2);
  CHECK(invoke({"radius", "--theorem", "t2.2", "--p", "0.5"}).code == 2);
  CHECK(invoke({"radius", "--class", "c1"}).code == 2);
  CHECK(invoke({"radius", "--theorem", "t2.1", "--class", "c1", "--functional", "f1"}).code == 2);
  CHECK(invoke({"radius", "--theorem", "t2.1", "--format", "xml"}).code == 2);
  CHECK(invoke({"radius", "--theorem", "t2.1", "--tol", "0"}).code == 2);
  CHECK(invoke({"table", "3"}).code == 2);
  CHECK(invoke({"sweep", "--theorem", "t2.1", "--points", "1"}).code == 2);
  CHECK(invoke({"bogus"}).code == 2);
  const Outcome e = invoke({"radius", "--theorem", "t2.2"});
  CHECK_FALSE(e.err.empty());
}

TEST_CASE("table output matches the published tables") {
  for (int which : {1, 2}) {
    const Outcome t = invoke({"table", std::to_string(which)});
    CHECK(t.code == 0);
    const auto rows = lines(t.out);
    REQUIRE(rows.size() == 8);
    CHECK(rows[0] == "p,radius");
    const double* expected = which == 1 ? oracle::kTable1 : oracle::kTable2;
    for (int i = 0; i < 7; ++i) {
      const auto v = csv_row(rows[static_cast<std::size_t>(i + 1)]);
      CHECK(v[0] == i + 2);
      CHECK(std::fabs(v[1] - expected[i]) <= 1e-6 + 1e-12);
    }
  }
  const Outcome text = invoke({"table", "--which", "2", "--format", "text", "--p-min", "3", "--p-max", "4"});
  CHECK(text.out == "  p  radius\n  3  0.332707\n  4  0.333265\n");
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> a = {"table", "1", "--format", "json"};
  CHECK(invoke(a).out == invoke(a).out);
  const std::vector<std::string> b = {"radius", "--theorem", "t3.4", "--N", "5", "--format", "csv"};
  CHECK(invoke(b).out == invoke(b).out);
}

TEST_CASE("sweep crosses d* at the radius") {
  const int points = 601;
  const Outcome s = invoke({"sweep", "--theorem", "t3.1", "--points", std::to_string(points)});
  CHECK(s.code == 0);
  const auto rows = lines(s.out);
  REQUIRE(rows.size() == points + 1);
  CHECK(rows[0] == "r,lhs_majorant,lhs_extremal,d_star");
  const auto first = csv_row(rows[1]);
  CHECK(first[0] == 0.0);
  CHECK(first[1] == 0.0);
  CHECK(first[2] == 0.0);
  double crossing = -1.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto v = csv_row(rows[i]);
    CHECK(std::fabs(v[1] - v[2]) < 1e-9 * (1.0 + v[1]));
    if (crossing < 0.0 && v[2] > v[3]) crossing = v[0];
  }
  const double step = 0.6 / (points - 1);
  CHECK(std::fabs(crossing - oracle::kRadii[0].radius[1]) <= step);
}

TEST_CASE("sweep writes to a file") {
  const auto path = std::filesystem::temp_directory_path() / "bohr_sweep_test.csv";
  const Outcome s = invoke({"sweep", "--theorem", "t4.4", "--N", "3", "--points", "5", "--out", path.string()});
  CHECK(s.code == 0);
  CHECK(s.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(lines(content.str()).size() == 6);
  std::filesystem::remove(path);
  CHECK(invoke({"sweep", "--theorem", "t2.1", "--out", "/nonexistent-dir/x.csv"}).code == 2);
}

TEST_CASE("verify passes and detects an injected fault") {
  const Outcome ok = invoke({"verify"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  const Outcome bad = invoke({"verify", "--override-dstar", "c2=0.51"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAIL") != std::string::npos);
  CHECK(invoke({"verify", "--override-dstar", "c2"}).code == 2);
}
