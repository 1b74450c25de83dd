#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = zdyn::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  EXPECT_TRUE(in.good()) << path;
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string golden(const std::string& name) { return slurp(std::string(ZDYN_GOLDEN_DIR) + "/" + name); }

std::vector<std::vector<double>> numeric_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::stringstream in(text);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::stringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

std::string line_value(const std::string& text, const std::string& key) {
  std::stringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(key + " ", 0) == 0) {
      const std::string rest = line.substr(key.size() + 1);
      return rest.substr(0, rest.find(' '));
    }
  }
  return "";
}

std::string g12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

TEST(Cli, FixGridMatchesGolden) {
  const Result r = run({"fix", "grid", "times2_times3", "--n1", "-5..5", "--n2", "0..5", "--format", "csv"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, golden("x2x3_fix_grid.csv"));
}

TEST(Cli, FixCount) {
  EXPECT_EQ(run({"fix", "count", "times2_times3", "--n", "1,1"}).out, "5\n");
  const Result zero = run({"fix", "count", "times2_times3", "--n", "0,0"});
  EXPECT_EQ(zero.code, 2);
  EXPECT_NE(zero.err.find("ZeroExponent"), std::string::npos) << zero.err;
  const auto j = nlohmann::json::parse(run({"fix", "count", "ledrappier", "--n", "3,0", "--format", "json"}).out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["count"], "4");
}

TEST(Cli, ActionShow) {
  const Result r = run({"action", "show", "times2_times3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["action"]["d"], 2);
  std::vector<std::vector<double>> vs;
  for (const auto& e : j["lyapunov"]) vs.push_back(e["vector"].get<std::vector<double>>());
  std::sort(vs.begin(), vs.end());
  const double l2 = std::log(2.0), l3 = std::log(3.0);
  const std::vector<std::vector<double>> want = {{-l2, 0}, {0, -l3}, {l2, l3}};
  ASSERT_EQ(vs.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t k = 0; k < 2; ++k) EXPECT_NEAR(vs[i][k], want[i][k], 1e-15);
  }
}

TEST(Cli, ActionListAndValidateFile) {
  const Result list = run({"action", "list"});
  EXPECT_NE(list.out.find("ledrappier\n"), std::string::npos);

  const auto path = std::filesystem::temp_directory_path() / "zdyn_cli_action.json";
  const Result shown = run({"action", "show", "toral_sqrt2_sqrt5"});
  std::ofstream(path) << nlohmann::json::parse(shown.out)["action"].dump();
  const Result ok = run({"action", "validate", path.string()});
  EXPECT_EQ(ok.code, 0) << ok.err;
  EXPECT_EQ(ok.out, "ok: toral_sqrt2_sqrt5 d=3 components=1 lyapunov=4\n");

  std::ofstream(path) << R"({"name":"x","d":2,"components":[{"kind":"rational-s-integer",
    "generators":["2","3"],"places":["2","3"],"multiplicity":1}]})";
  const Result bad = run({"action", "validate", path.string()});
  EXPECT_EQ(bad.code, 2);
  EXPECT_EQ(bad.err.rfind("error: ValidationError: ", 0), 0u) << bad.err;
  std::filesystem::remove(path);
}

TEST(Cli, FriedPrintsTwelveDigits) {
  const Result r = run({"entropy", "fried", "ledrappier"});
  ASSERT_EQ(r.code, 0);
  const double l2 = std::log(2.0);
  EXPECT_EQ(line_value(r.out, "octahedron_times_volume"), g12(6 / (l2 * l2)));
  EXPECT_EQ(line_value(r.out, "volume"), g12(3 / (l2 * l2)));
  EXPECT_EQ(line_value(r.out, "h_star"), g12(2 / (3 / (l2 * l2))));

  const Result t = run({"entropy", "fried", "toral_sqrt2_sqrt5", "--format", "json"});
  const auto j = nlohmann::json::parse(t.out);
  EXPECT_LT(j["closed_form_relative_error"].get<double>(), 1e-9);
  EXPECT_TRUE(j.contains("repeated_xi3_flag"));
}

TEST(Cli, BallVerticesMatchGolden) {
  for (auto [action, file] : {std::pair{"times2_times3", "x2x3_ball_vertices.csv"},
                              std::pair{"ledrappier", "ledrappier_ball_vertices.csv"}}) {
    const Result r = run({"entropy", "ball", action, "--format", "csv", "--precision", "15"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto got = numeric_csv(r.out), want = numeric_csv(golden(file));
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    ASSERT_EQ(got.size(), want.size()) << action;
    for (std::size_t i = 0; i < got.size(); ++i) {
      EXPECT_NEAR(got[i][0], want[i][0], 1e-9);
      EXPECT_NEAR(got[i][1], want[i][1], 1e-9);
    }
  }
}

TEST(Cli, BitsMakeLedrappierIntegral) {
  const Result r = run({"entropy", "ball", "ledrappier", "--bits", "--format", "csv"});
  auto got = numeric_csv(r.out);
  std::sort(got.begin(), got.end());
  const std::vector<std::vector<double>> want = {{-1, 0}, {-1, 1}, {0, -1}, {0, 1}, {1, -1}, {1, 0}};
  EXPECT_EQ(got, want);
  EXPECT_EQ(run({"entropy", "eval", "ledrappier", "--t", "3,1", "--bits"}).out, "4\n");
}

TEST(Cli, ToralFacetCountMatchesGolden) {
  const auto g = nlohmann::json::parse(golden("toral_ball.json"));
  const auto j = nlohmann::json::parse(run({"entropy", "ball", "toral_sqrt2_sqrt5", "--format", "json"}).out);
  EXPECT_EQ(j["facets"], g["facets"]);
  EXPECT_EQ(j["vertices"].size(), 12u);
}

TEST(Cli, OmegaEnvelopeMatchesGolden) {
  const Result r = run({"zeta", "omega", "--radius", "40", "--bins", "72", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  const auto want = numeric_csv(golden("omega_envelope.csv"));
  std::size_t matched = 0;
  for (const auto& e : j["envelope"]) {
    const double theta = e["theta"];
    for (const auto& w : want) {
      if (std::fabs(w[0] - theta) < 1e-9) {
        // the lowest point in a bin may sit anywhere in it; allow the slack of a radius-40 scan
        const double rate = -std::log(e["y_min"].get<double>());
        EXPECT_NEAR(e["h"].get<double>(), w[1], 1e-9);
        EXPECT_GE(rate, w[2] - 0.02) << theta;
        EXPECT_LE(rate, w[3] + 0.02) << theta;
        ++matched;
      }
    }
  }
  EXPECT_EQ(matched, want.size());
}

TEST(Cli, Svg) {
  const Result ball = run({"entropy", "ball", "times2_times3", "--format", "svg"});
  EXPECT_EQ(ball.code, 0);
  EXPECT_NE(ball.out.find("width=\"800\" height=\"800\""), std::string::npos);
  const Result omega = run({"zeta", "omega", "--radius", "10", "--format", "svg"});
  EXPECT_NE(omega.out.find("<polyline"), std::string::npos);
  EXPECT_EQ(run({"fix", "grid", "times2_times3", "--format", "svg"}).code, 1);
}

TEST(Cli, DomainErrorsExitTwo) {
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases = {
      {{"hull", "run", "ledrappier", "--logN", "5"}, "InfiniteHull"},
      {{"entropy", "ball", "z5_times2_times3"}, "NotANorm"},
      {{"zeta", "show", "times2_times3", "--n", "1,0"}, "NotExpansive"},
      {{"fix", "count", "nosuch", "--n", "1,1"}, "UnknownAction"},
      {{"sync", "pair", "--alpha", "2", "--beta", "2", "--n", "3"}, "DegenerateSync"},
  };
  for (const auto& [args, kind] : cases) {
    const Result r = run(args);
    EXPECT_EQ(r.code, 2) << kind;
    EXPECT_EQ(r.err.rfind("error: " + kind + ": ", 0), 0u) << r.err;
    EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
  }
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"fix", "count", "times2_times3"}).code, 1);
  EXPECT_EQ(run({"fix", "count", "times2_times3", "--n", "a,b"}).code, 1);
  EXPECT_EQ(run({"fix", "grid", "times2_times3", "--n1", "3..1"}).code, 1);
  EXPECT_EQ(run({"--format", "yaml", "action", "list"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"fix", "--help"}).code, 0);
}

TEST(Cli, SyncCommands) {
  EXPECT_EQ(run({"sync", "pair", "--n", "4"}).out, "65\n");
  EXPECT_EQ(run({"sync", "pair", "--alpha", "2", "--beta", "1", "--n", "3", "sync_1_2_3"}).out, "7\n");
  EXPECT_EQ(run({"sync", "strong", "--n", "12"}).out, "455\n");
  EXPECT_EQ(run({"sync", "rate"}).out, "3\n");
  const Result trace = run({"sync", "trace", "--nmax", "12"});
  EXPECT_NE(trace.out.find("\n12,455,"), std::string::npos);
}

TEST(Cli, ZetaCommands) {
  EXPECT_EQ(run({"zeta", "show", "times2_times3", "--n", "1,1"}).out, "(1-z)/(1-6z)\n");
  const Result check = run({"zeta", "check"});
  EXPECT_EQ(check.code, 0);
  EXPECT_NE(check.out.find("144/144"), std::string::npos);
  EXPECT_EQ(run({"zeta", "nonexpansive", "ledrappier", "--bits"}).code, 0);
  const Result series = run({"zeta", "show", "ledrappier", "--n", "1,2", "--K", "3"});
  EXPECT_EQ(series.code, 0);
  EXPECT_NE(series.out.find("no closed form"), std::string::npos);
}

TEST(Cli, HullAndRelational) {
  const Result hull = run({"hull", "run", "times2_times3", "--logN", "10", "--format", "csv"});
  ASSERT_EQ(hull.code, 0) << hull.err;
  EXPECT_EQ(hull.out.rfind("logN,delta,", 0), 0u);
  EXPECT_EQ(run({"entropy", "relational", "--pairs", "log2:log3"}).out, g12(std::log(5.0)) + "\n");
  const Result bounds = run({"entropy", "bounds", "ledrappier"});
  EXPECT_EQ(line_value(bounds.out, "c2"), g12(std::sqrt(2.0) * std::log(2.0)));
}

TEST(Cli, DeterministicAndOutFile) {
  const std::vector<std::string> args = {"hull", "run", "times2_times3", "--logN", "8,12", "--format", "json"};
  EXPECT_EQ(run(args).out, run(args).out);
  const auto path = std::filesystem::temp_directory_path() / "zdyn_cli_out.csv";
  const Result r = run({"fix", "grid", "times2_times3", "--format", "csv", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(slurp(path.string()), golden("x2x3_fix_grid.csv"));
  std::filesystem::remove(path);
}
