#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

#include "asmloops/biject.hpp"
#include "asmloops/enumerate.hpp"
#include "asmloops/io.hpp"
#include "cli.hpp"
#include "fixtures.hpp"

using namespace asmloops;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string island(const IntMatrix& m) { return to_json(validate_island(m)).dump(); }
std::string matrix(const IntMatrix& m) { return to_json(validate_asm(m)).dump(); }

}  // namespace

TEST(CliConvert, Examples) {
  Result r = run({"convert", "--to", "island"}, to_json(Asm::identity(5)).dump());
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(std::get<DyckIsland>(parse_representation(std::string_view(r.out))).is_zero());

  r = run({"convert", "--to", "island"}, matrix(fixtures::kSharedVertexAsm));
  EXPECT_EQ(json::parse(r.out).at("boxes"), json(fixtures::kIslandA));

  r = run({"convert", "--to", "height"}, island(fixtures::kIslandB));
  EXPECT_EQ(json::parse(r.out).at("h"), json(fixtures::kHeightB));

  r = run({"convert", "--to", "asm"}, matrix(fixtures::kSharedVertexAsm));
  EXPECT_EQ(json::parse(r.out), json::parse(matrix(fixtures::kSharedVertexAsm)));
}

TEST(CliConvert, RoundTripsOnFixtures) {
  std::vector<std::string> objects;
  for (const auto& m : fixtures::kInvFourAsms) objects.push_back(matrix(m));
  objects.push_back(island(fixtures::kThreeLoops));
  objects.push_back(island(fixtures::osculating_pair()));
  objects.push_back(to_json(validate_height(fixtures::kHeightA)).dump());
  objects.push_back(to_json(phi1(5)).dump());
  for (const auto& o : objects) {
    const std::string from = json::parse(o).at("kind");
    for (const char* to : {"asm", "fpl", "height", "island"}) {
      const Result there = run({"convert", "--to", to}, o);
      ASSERT_EQ(there.code, 0) << there.err;
      const Result back = run({"convert", "--to", from}, there.out);
      ASSERT_EQ(back.code, 0) << back.err;
      EXPECT_EQ(json::parse(back.out), json::parse(o)) << from << " via " << to;
    }
  }
}

TEST(CliConvert, Errors) {
  EXPECT_EQ(run({"convert", "--to", "island"}, "not json").code, cli::kInvalid);
  EXPECT_EQ(run({"convert", "--to", "island"}, R"({"kind":"x"})").code, cli::kInvalid);
  EXPECT_EQ(run({"convert", "--to", "tableau"}, matrix(fixtures::kSharedVertexAsm)).code,
            cli::kInvalid);
  const Result bad = run({"convert", "--to", "fpl"}, R"({"kind":"asm","entries":[[1,0],[1,0]]})");
  EXPECT_EQ(bad.code, cli::kInvalid);
  EXPECT_NE(bad.err.find("ColSum"), std::string::npos);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kInvalid);
  EXPECT_EQ(run({}).code, cli::kInvalid);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST(CliDecompose, Examples) {
  Result r = run({"decompose"}, island(fixtures::kInvFourIslands[2]));
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  ASSERT_EQ(j.at("loops").size(), 1u);
  EXPECT_EQ(j.at("loops")[0].at("diagonal_osculations"), 3);

  r = run({"decompose"}, to_json(DyckIsland::zero(5)).dump());
  EXPECT_TRUE(json::parse(r.out).at("loops").empty());

  r = run({"decompose"}, island(fixtures::osculating_pair()));
  j = json::parse(r.out);
  EXPECT_EQ(j.at("loops").size(), 2u);
  EXPECT_EQ(j.at("off_diagonal_osculations"), 1);
}

TEST(CliInv, Examples) {
  Result r = run({"inv", "--method", "both"}, island(fixtures::kThreeLoops));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "14\n");
  r = run({"inv", "--method", "both"}, to_json(Asm::identity(5)).dump());
  EXPECT_EQ(r.out, "0\n");
  r = run({"inv", "--method", "direct"}, matrix(fixtures::kInvFourAsms[1]));
  EXPECT_EQ(r.out, "4\n");
  r = run({"inv", "--method", "loops", "--report"}, island(fixtures::kThreeLoops));
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("inv"), 14);
  EXPECT_EQ(j.at("report").at("loops").size(), 3u);
  EXPECT_EQ(run({"inv", "--method", "fast"}, island(fixtures::kThreeLoops)).code, cli::kInvalid);
}

TEST(CliInv, AgreesOnAllSizeFive) {
  for_each_asm(5, [](const Asm& a) {
    const Result r = run({"inv", "--method", "both"}, to_json(a).dump());
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, std::to_string(inv_direct(a)) + "\n");
  });
}

TEST(CliEnumerate, ListsAndCounts) {
  Result r = run({"enumerate", "3"});
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    EXPECT_EQ(kind_of(parse_representation(std::string_view(line))), Kind::Asm);
    ++count;
  }
  EXPECT_EQ(count, 7);
  EXPECT_EQ(run({"enumerate", "6", "--count-only"}).out, "7436\n");
  r = run({"enumerate", "2", "--as", "island"});
  EXPECT_NE(r.out.find("\"island\""), std::string::npos);
  EXPECT_EQ(run({"enumerate", "0"}).code, cli::kInvalid);
}

TEST(CliVerify, ReportsAndExitCodes) {
  Result r = run({"verify", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const json j = json::parse(line);
    EXPECT_EQ(j.at("items"), 7);
    EXPECT_TRUE(j.at("failures").empty());
    ++count;
  }
  EXPECT_EQ(count, 5);
  r = run({"verify", "4", "--suite", "commuting", "--jobs", "2"});
  EXPECT_EQ(json::parse(r.out).at("suite"), "commuting");
  r = run({"verify", "5", "--suite", "reflection", "--shard", "10:3"});
  EXPECT_EQ(json::parse(r.out).at("items"), 43);
  EXPECT_EQ(run({"verify", "3", "--suite", "nope"}).code, cli::kInvalid);
  EXPECT_EQ(run({"verify", "9"}).code, cli::kInvalid);
  EXPECT_EQ(run({"verify", "3", "--shard", "x"}).code, cli::kInvalid);
}

TEST(CliRender, ZeroIslandAscii) {
  const Result r = run({"render"}, to_json(DyckIsland::zero(5)).dump());
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::string> entry_rows;
  while (std::getline(lines, line)) {
    EXPECT_EQ(line.find("─"), std::string::npos);
    EXPECT_EQ(line.find("│"), std::string::npos);
    if (line.find('0') != std::string::npos) entry_rows.push_back(line);
  }
  ASSERT_EQ(entry_rows.size(), 4u);
  for (const auto& row : entry_rows) EXPECT_EQ(std::count(row.begin(), row.end(), '0'), 4);
}

TEST(CliRender, IslandAsciiEntries) {
  const Result r = run({"render", "--no-grid"}, island(fixtures::kIslandA));
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  IntMatrix got;
  int k = 0;
  while (std::getline(lines, line)) {
    if (k++ % 2 == 0) continue;  // vertex rows
    std::vector<int> row;
    for (char c : line) {
      if (c >= '0' && c <= '9') row.push_back(c - '0');
    }
    got.push_back(row);
  }
  EXPECT_EQ(got, fixtures::kIslandA);
  EXPECT_NE(r.out.find("┌"), std::string::npos);
}

TEST(CliRender, Phi0SvgHasTracedDarkEdges) {
  const std::string in = to_json(phi0(5)).dump();
  const Result r = run({"render", "--format", "svg", "--cell-size", "40"}, in);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(run({"render", "--format", "svg", "--cell-size", "40"}, in).out, r.out);
  const std::regex dark(
      R"re(<line class="dark" x1="([0-9.]+)" y1="([0-9.]+)" x2="([0-9.]+)" y2="([0-9.]+)"/>)re");
  const int n = 5;
  const double cs = 40, side = cs * (n + 1);
  auto index = [&](double x) {
    if (x == cs / 2) return 0;
    if (x == side - cs / 2) return n + 1;
    return static_cast<int>(x / cs);
  };
  EdgeColoring seen(n);
  int segments = 0;
  for (auto it = std::sregex_iterator(r.out.begin(), r.out.end(), dark);
       it != std::sregex_iterator(); ++it) {
    const LatticeVertex a{index(std::stod((*it)[2])), index(std::stod((*it)[1]))};
    const LatticeVertex b{index(std::stod((*it)[4])), index(std::stod((*it)[3]))};
    if (a.i == b.i) {
      seen.set_east(a.i, std::min(a.j, b.j), true);
    } else {
      seen.set_south(std::min(a.i, b.i), a.j, true);
    }
    ++segments;
  }
  EXPECT_EQ(segments, fixtures::kPhi0DarkSegments);
  EXPECT_EQ(seen, fixtures::coloring(n, fixtures::kPhi0Lines));
}

TEST(CliRender, OtherModes) {
  Result r = run({"render", "--format", "svg"}, island(fixtures::osculating_pair()));
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("class=\"osc\""), std::string::npos);
  r = run({"render"}, to_json(phi0(4)).dump());
  EXPECT_NE(r.out.find("┃"), std::string::npos);
  r = run({"render"}, matrix(fixtures::kInvFourAsms[1]));
  EXPECT_NE(r.out.find("-1"), std::string::npos);
  r = run({"render", "--format", "svg"}, to_json(HeightFunction::minimal(3)).dump());
  EXPECT_EQ(r.code, cli::kInvalid);
  EXPECT_NE(r.err.find("UnsupportedCombination"), std::string::npos);
  EXPECT_EQ(run({"render", "--format", "png"}, island(fixtures::kThreeLoops)).code, cli::kInvalid);
}

TEST(CliIo, FilesInAndOut) {
  const std::string in_path = ::testing::TempDir() + "asmloops_in.json";
  const std::string out_path = ::testing::TempDir() + "asmloops_out.json";
  std::ofstream(in_path) << island(fixtures::kThreeLoops);
  const Result r = run({"inv", "--in", in_path, "--out", out_path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(out_path);
  std::string text((std::istreambuf_iterator<char>(f)), {});
  EXPECT_EQ(text, "14\n");
  EXPECT_EQ(run({"inv", "--in", in_path + ".missing"}).code, cli::kInvalid);
  std::remove(in_path.c_str());
  std::remove(out_path.c_str());
}
