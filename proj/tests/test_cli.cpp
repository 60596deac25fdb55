#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "fatpoints/io.hpp"

namespace fs = std::filesystem;
using fatpoints::Json;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(FATPOINTS_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "fatpoints_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

fs::path generate(const std::string& name, const std::string& flags) {
  const auto path = scratch(name);
  const auto r = run("gen " + flags);
  REQUIRE(r.status == 0);
  std::ofstream(path) << r.out;
  return path;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    out.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  return out;
}

} // namespace

TEST_CASE("bounds and gms") {
  auto r = run("bounds --vector 6,6,6,2,1");
  CHECK(r.status == 0);
  CHECK(r.out == "f: 1,3,6,10,15,18,20,21,…\nF: 1,3,6,10,15,18,21,…\n");

  r = run("bounds --vector 3,3,2,2 --json");
  CHECK(r.status == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["f"]["stable"] == 10);
  CHECK(j["F"]["prefix"] == Json::array({1, 3, 6, 10}));

  r = run("gms --vector 3,3,2,2");
  CHECK(r.out.rfind("false: pattern (3,3,2,2)", 0) == 0);
  CHECK(run("gms --vector 9,6,4,3,2").out == "true\n");
  CHECK(run("gms --vector 1,3").out == "false: pair (1,2)\n");

  CHECK(run("bounds --vector 1,x").status == 2);
  CHECK(run("bounds").status == 2);
  CHECK(run("frobnicate").status == 2);
}

TEST_CASE("betti table output") {
  auto r = run("betti --vector 12,11,10,9,8,4,3,2,1");
  CHECK(r.status == 0);
  const auto rows = lines_of(r.out);
  REQUIRE(rows.size() == 15);
  CHECK(rows[0] == "t\tnu_lo\tnu_hi\tsigma_lo\tsigma_hi");
  CHECK(rows[10] == "9\t5\t5\t0\t0");
  CHECK(rows[13] == "12\t5\t5\t0\t0");

  r = run("betti --vector 12,11,10,9,8,4,3,2,1 --json");
  const auto j = Json::parse(r.out);
  CHECK(j["alpha"] == 9);
  CHECK(j["reg"] == 12);
  CHECK(j["exact"] == true);

  CHECK(run("betti --vector 3,3,2,2").status == 3);
}

TEST_CASE("star configuration end to end") {
  const auto star = generate("star.json", "--family star-config --s 5 --m 3");
  auto r = run("reduce --scheme " + star.string() + " --greedy");
  CHECK(r.status == 0);
  CHECK(r.out.find("vector: 12,11,10,9,8,4,3,2,1\nfull: true\n") != std::string::npos);

  r = run("check --scheme " + star.string() + " --lines L1,L2,L3,L4,L5,L1,L2,L3,L4");
  CHECK(r.status == 0);
  const auto rows = lines_of(r.out);
  REQUIRE(rows.size() == 15);
  for (std::size_t i = 1; i <= 12; ++i) {
    const auto& row = rows[i];
    INFO(row);
    CHECK(row.ends_with("PASS"));
    // f = h = F
    std::vector<std::string> cells;
    std::size_t pos = 0;
    while (pos <= row.size()) {
      auto end = row.find('\t', pos);
      if (end == std::string::npos) end = row.size();
      cells.push_back(row.substr(pos, end - pos));
      pos = end + 1;
    }
    REQUIRE(cells.size() == 5);
    CHECK(cells[1] == cells[2]);
    CHECK(cells[2] == cells[3]);
  }
  CHECK(rows.back() == "sandwich: PASS");

  r = run("hilbert --scheme " + star.string() + " --json");
  CHECK(Json::parse(r.out)["h"] == Json::array({1, 3, 6, 10, 15, 21, 28, 36, 45, 50, 55, 60}));

  r = run("reduce --scheme " + star.string() + " --lines L1,L1,L1 --json");
  CHECK(r.status == 0);
  CHECK(Json::parse(r.out)["full"] == false);
  CHECK(run("check --scheme " + star.string() + " --lines L1").status == 3);
  CHECK(run("reduce --scheme " + star.string() + " --lines L1 --greedy").status == 2);
  CHECK(run("reduce --scheme " + star.string() + " --lines Q7").status == 2);
}

TEST_CASE("generated files are accepted by every subcommand") {
  const std::vector<std::pair<std::string, std::string>> families{
      {"grid", "--family grid"},
      {"plane", "--family projective-plane-fq --q 3"},
      {"hesse", "--family dual-hesse --field Fp --p 7"},
      {"lc", "--family line-count-config --a 2,1 --m 2,3"},
      {"inter", "--family intersections --line-coeffs '1,0,0;0,1,0;0,0,1;1,1,1' --e 1,2,1,1"},
  };
  for (const auto& [name, flags] : families) {
    INFO(name);
    const auto f = generate(name + ".json", flags);
    CHECK(run("reduce --scheme " + f.string() + " --greedy").status == 0);
    CHECK(run("bounds --scheme " + f.string() + " --greedy").status == 0);
    CHECK(run("hilbert --scheme " + f.string() + " --max-degree 4").status == 0);
    CHECK(run("check --scheme " + f.string() + " --greedy").status == 0);
  }
  const auto grid = scratch("grid.json");
  CHECK(run("check --scheme " + grid.string() + " --lines V1,V2,V3,V4,V5,V1,V2").status == 0);
  CHECK(run("bounds --scheme " + grid.string() + " --lines H1,H2,H3,V1,V2").out ==
        "f: 1,3,6,10,15,18,20,21,…\nF: 1,3,6,10,15,18,21,…\n");

  const auto zach = generate("zach.json", "--family zach-example");
  CHECK(run("bounds --scheme " + zach.string() + " --lines l1,l3,l2,l4").status == 0);
  CHECK(run("hilbert --scheme " + zach.string()).status == 2);
}

TEST_CASE("malformed input") {
  const auto bad = scratch("bad.json");
  std::ofstream(bad) << R"({"ambient_dim":2,"field":{"kind":"Q"},"points":[],"lines":[],"extra":1})";
  CHECK(run("reduce --scheme " + bad.string() + " --greedy").status == 2);

  const auto broken = scratch("broken.json");
  std::ofstream(broken) << "{ not json";
  CHECK(run("reduce --scheme " + broken.string() + " --greedy").status == 2);

  const auto shared = scratch("shared.json");
  std::ofstream(shared) << R"({"ambient_dim":2,"field":{"kind":"Q"},
    "points":[{"id":"a","mult":1},{"id":"b","mult":1}],
    "lines":[{"name":"L","points":["a","b"]},{"name":"M","points":["a","b"]}]})";
  const std::string cmd = std::string(FATPOINTS_CLI) + " reduce --greedy --scheme " + shared.string() + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string text;
  std::array<char, 512> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) text.append(buf.data(), n);
  const int raw = pclose(pipe);
  CHECK(WEXITSTATUS(raw) == 2);
  CHECK(text.find("lines-share-two-points") != std::string::npos);

  CHECK(run("reduce --scheme /nonexistent/x.json --greedy").status == 2);
  CHECK(run("gen --family nothing").status == 2);
  CHECK(run("gen --family star-config --field Fp --p 9").status == 2);
}

TEST_CASE("output is deterministic") {
  const auto a = run("gen --family projective-plane-fq --q 4 --mult 2");
  const auto b = run("gen --family projective-plane-fq --q 4 --mult 2");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  const auto f = generate("det.json", "--family dual-hesse --field Fp --p 13 --mult 2");
  CHECK(run("check --scheme " + f.string() + " --greedy").out == run("check --scheme " + f.string() + " --greedy").out);
}
