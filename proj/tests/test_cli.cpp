#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace {

using nlohmann::json;

struct CliResult {
  int code;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = std::string(G2_CLI) + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), f)) out.append(buf.data(), n);
  const int status = pclose(f);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path temp_dir() {
  auto d = std::filesystem::temp_directory_path() / ("g2_cli_" + std::to_string(::getpid()));
  std::filesystem::create_directories(d);
  return d;
}

}  // namespace

TEST(Cli, InfoShowsFamilyData) {
  const CliResult r = run("info k4");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["command"], "info");
  EXPECT_EQ(j["info"]["charpoly"], json({49, 0, 0, 0, 1}));
  EXPECT_EQ(j["info"]["r"], 5);
  EXPECT_EQ(j["info"]["embedding_degree"], 4);
  EXPECT_EQ(j["info"]["distortion_catalog"].size(), 16u);
  const json k6 = json::parse(run("info k6").out);
  EXPECT_EQ(k6["info"]["r"], 37);
  EXPECT_TRUE(k6["info"]["constants"].contains("gamma"));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("info k4 --p 11").code, 2);
  EXPECT_EQ(run("info k9").code, 2);
  EXPECT_EQ(run("verify k4 --suite split").code, 2);
  EXPECT_EQ(run("verify k4 --samples 0").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("verify k4 --suite commutation --samples 50 --seed 1").code, 0);
  EXPECT_EQ(run("verify k5 --suite trace0").code, 0);
  EXPECT_EQ(run("verify k6 --p 5 --suite projectors --samples 10").code, 0);
  // The rank-10 span at p = 7 is a genuine check failure.
  EXPECT_EQ(run("verify k4 --suite independence").code, 1);
  EXPECT_EQ(run("distort k4 --pairs 5").code, 1);
  EXPECT_EQ(run("distort k4 --p 13 --pairs 5").code, 0);
}

TEST(Cli, SameSeedSameReport) {
  for (const std::string args : {"verify k12 --suite sigma --samples 3 --seed 5", "distort k6 --p 5 --pairs 10 --seed 2"}) {
    json a = json::parse(run(args).out), b = json::parse(run(args).out);
    a.erase("timing");
    b.erase("timing");
    EXPECT_EQ(a.dump(), b.dump()) << args;
  }
  json a = json::parse(run("distort k6 --p 5 --pairs 10 --seed 2").out), b = json::parse(run("distort k6 --p 5 --pairs 10 --seed 3").out);
  a.erase("timing");
  b.erase("timing");
  EXPECT_EQ(a["seed"], 2);
  EXPECT_NE(a.dump(), b.dump());
}

TEST(Cli, SpecFileAndFlagPrecedence) {
  const auto dir = temp_dir();
  std::ofstream(dir / "fam.txt") << "# family spec\nfamily = k4\np = 13\nA = 1\n";
  const json j = json::parse(run("info --spec " + (dir / "fam.txt").string()).out);
  EXPECT_EQ(j["info"]["r"], 17);
  const json k = json::parse(run("info --spec " + (dir / "fam.txt").string() + " --p 7").out);
  EXPECT_EQ(k["info"]["r"], 5);
  std::ofstream(dir / "bad.txt") << "family = k4\nq = 3\n";
  EXPECT_EQ(run("info --spec " + (dir / "bad.txt").string()).code, 2);
  EXPECT_EQ(run("info --spec " + (dir / "missing.txt").string()).code, 2);
  std::filesystem::remove_all(dir);
}

TEST(Cli, PairRoundTripThroughFiles) {
  const auto dir = temp_dir();
  const auto d1 = dir / "d1.json", d2 = dir / "d2.json", neg = dir / "neg.json", id = dir / "id.json";
  std::ofstream(d1) << run("sample k6 --order-r --degree 1 --seed 1").out;
  std::ofstream(d2) << run("sample k6 --order-r --degree 6 --seed 2").out;
  json dj = json::parse(std::ifstream(d2));
  // -D2 = (u, -v) on y^2 = f.
  for (auto& c : dj["v"])
    for (auto& x : c) x = (11 - x.get<std::uint64_t>()) % 11;
  std::ofstream(neg) << dj.dump();
  std::ofstream(id) << json({{"u", {json::array({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0})}}, {"v", json::array()}, {"field_degree", 12}}).dump();

  const CliResult a = run("pair k6 --d1 " + d1.string() + " --d2 " + d2.string());
  ASSERT_EQ(a.code, 0) << a.out;
  const json ja = json::parse(a.out)["result"];
  EXPECT_TRUE(ja["in_mu_r"].get<bool>());
  EXPECT_EQ(ja["r"], 37);
  const json jb = json::parse(run("pair k6 --d1 " + d1.string() + " --d2 " + neg.string()).out)["result"];
  EXPECT_EQ((ja["log"].get<std::int64_t>() + jb["log"].get<std::int64_t>()) % 37, 0);
  const json ji = json::parse(run("pair k6 --d1 " + d1.string() + " --d2 " + id.string()).out)["result"];
  EXPECT_TRUE(ji["trivial"].get<bool>());
  EXPECT_EQ(run("pair k6 --d1 " + d1.string() + " --d2 " + d2.string() + " --pairing weil").code, 0);

  std::ofstream(dir / "junk.json") << "{not json";
  EXPECT_EQ(run("pair k6 --d1 " + (dir / "junk.json").string() + " --d2 " + d2.string()).code, 2);
  EXPECT_EQ(run("pair k4 --d1 " + d1.string() + " --d2 " + d2.string()).code, 2);
  std::ofstream(dir / "any.json") << run("sample k6 --degree 6 --seed 4").out;
  EXPECT_EQ(run("pair k6 --d1 " + (dir / "any.json").string() + " --d2 " + d2.string()).code, 2);
  std::filesystem::remove_all(dir);
}

TEST(Cli, ReportDirectory) {
  const auto dir = temp_dir() / "reports";
  const std::string cmd = "G2_REPORT_DIR=" + dir.string() + " " + std::string(G2_CLI) + " verify k5 --suite trace0 --samples 3 --seed 4 >/dev/null";
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  EXPECT_TRUE(std::filesystem::exists(dir / "verify-k5-seed4.json"));
  std::filesystem::remove_all(dir.parent_path());
}
