#include <gtest/gtest.h>

#include <clocale>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "output.hpp"

using oscsum::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST(CliFormat, TwelveSignificantDigits) {
  using oscsum::cli::format_number;
  EXPECT_EQ(format_number(1.0), "1");
  EXPECT_EQ(format_number(0.1 + 0.2), "0.3");
  EXPECT_EQ(format_number(2.0 / 3.0), "0.666666666667");
  EXPECT_EQ(format_number(1.0 / 0.0), "inf");
  EXPECT_EQ(oscsum::cli::json_number(std::nan("")), nullptr);
}

TEST(CliFormat, DecimalPointIgnoresLocale) {
  // A comma-decimal locale, if present, must not leak into the output.
  const char* prev = std::setlocale(LC_ALL, nullptr);
  const std::string saved = prev ? prev : "C";
  if (!std::setlocale(LC_ALL, "de_DE.UTF-8")) std::setlocale(LC_ALL, "C");
  EXPECT_EQ(oscsum::cli::format_number(0.5), "0.5");
  std::setlocale(LC_ALL, saved.c_str());
}

TEST(CliGamma, RowsAndRejection) {
  const auto r = call({"gamma", "--q", "2,4"});
  EXPECT_EQ(r.code, 0);
  const auto l = lines(r.out);
  ASSERT_GE(l.size(), 3u);
  EXPECT_EQ(l[0], "q,gamma,gamma_pow_q");
  EXPECT_EQ(l[1], "2,1,1");
  EXPECT_EQ(l[2].rfind("4,0.90360200361", 0), 0u);

  const auto bad = call({"gamma", "--q", "1"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("q must exceed 1"), std::string::npos);
}

TEST(CliTrigScan, OnesMatchesCountingOracle) {
  const auto r = call({"trig-scan", "--family", "ones", "--p", "inf", "--q",
                       "4", "--N", "16,2,8,4"});
  EXPECT_EQ(r.code, 0);
  const auto l = lines(r.out);
  EXPECT_EQ(l[0], "N,value,predicted,label,seed");
  // Sorted by N regardless of input order.
  const long ns[] = {2, 4, 8, 16};
  for (int k = 0; k < 4; ++k) {
    std::istringstream row(l[k + 1]);
    std::string cell;
    std::getline(row, cell, ',');
    EXPECT_EQ(std::stol(cell), ns[k]);
    std::getline(row, cell, ',');
    const double n = double(ns[k]);
    EXPECT_NEAR(std::stod(cell), std::pow((2 * n * n * n + n) / 3.0, 0.25),
                1e-6);
  }
}

TEST(CliTrigScan, DeltaAndChirp) {
  const auto d = call({"trig-scan", "--family", "delta", "--p", "1", "--q",
                       "1", "--N", "4,16,64", "--format", "json"});
  EXPECT_EQ(d.code, 0);
  const auto j = nlohmann::json::parse(d.out);
  for (const auto& row : j["rows"]) EXPECT_DOUBLE_EQ(row["value"].get<double>(), 1.0);

  const auto c = call({"trig-scan", "--family", "chirp", "--p", "inf", "--q",
                       "2", "--N", "64,128,256,512,1024", "--format", "json"});
  const auto jc = nlohmann::json::parse(c.out);
  EXPECT_NEAR(jc["summary"]["slope"].get<double>(), 0.5, 0.05);
}

TEST(CliUsage, BadInputsExitTwo) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"nosuch"}).code, 2);
  EXPECT_EQ(call({"trig-scan", "--family", "ones", "--q", "0.5", "--N", "4"}).code, 2);
  EXPECT_EQ(call({"trig-scan", "--family", "zig", "--N", "4"}).code, 2);
  EXPECT_EQ(call({"gamma", "--q", "2", "--format", "xml"}).code, 2);
  EXPECT_EQ(call({"lemma", "fresnel", "--grid", "20by20"}).code, 2);
  EXPECT_EQ(call({"region", "--n", "2", "--inv-r", "0", "--inv-rt", "0"}).code, 2);
}

TEST(CliRegion, JsonVerdict) {
  const auto r = call({"region", "--n", "3", "--inv-r", "0.1", "--inv-rt",
                       "0.2", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "region");
  const auto& row = j["rows"][0];
  EXPECT_TRUE(row["in_cone"].get<bool>());
  EXPECT_TRUE(row["in_hull"].get<bool>());
  EXPECT_NEAR(row["inv_q"].get<double>(), 0.45, 1e-12);
  EXPECT_TRUE(row["q_attained"].get<bool>());

  const auto far = call({"region", "--n", "3", "--inv-r", "0.9", "--inv-rt",
                         "0.9", "--format", "json"});
  const auto jf = nlohmann::json::parse(far.out);
  EXPECT_TRUE(jf["rows"][0]["inv_q"].is_null());
  EXPECT_FALSE(jf["summary"]["feasible"].get<bool>());
}

TEST(CliLemma, ZygmundWithinConstant) {
  const auto r = call({"lemma", "zygmund", "--t", "1", "--Nmax", "1024",
                       "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_LE(j["summary"]["max_diff"].get<double>(), 10.44);
  EXPECT_TRUE(j["pass"].get<bool>());
}

TEST(CliLemma, StatPhaseSlope) {
  const auto r = call({"lemma", "statphase", "--family", "quad", "--decades",
                       "2", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["summary"]["slope"].get<double>(), -1.0, 0.15);
}

TEST(CliLemma, FailedCheckExitsOne) {
  // A zero slope ceiling cannot hold for a noisy envelope.
  const auto r = call({"lemma", "zygmund", "--t", "0.5", "--Nmax", "256",
                       "--slope-max", "-1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("# pass=false"), std::string::npos);
}

TEST(CliOpnorm, EightTermMaximizer) {
  const auto r = call({"opnorm", "--N", "8", "--p", "inf", "--q", "4",
                       "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["rows"][0]["value"].get<double>(), std::pow(344.0, 0.25), 1e-9);
  EXPECT_EQ(j["rows"][0]["label"], "seed:0");
}

TEST(CliSchrodScan, SeedDeterminismAndOutFile) {
  const std::vector<std::string> args = {"schrod-scan", "--N", "16,32,64",
                                         "--seed", "7", "--no-validate"};
  const auto a = call(args);
  const auto b = call(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find(",7\n"), std::string::npos);

  const std::string path = ::testing::TempDir() + "oscsum_cli_out.csv";
  auto with_out = args;
  with_out.push_back("--out");
  with_out.push_back(path);
  const auto c = call(with_out);
  EXPECT_TRUE(c.out.empty());
  std::ifstream in(path, std::ios::binary);
  std::stringstream content;
  content << in.rdbuf();
  EXPECT_EQ(content.str(), a.out);
  std::remove(path.c_str());
}
