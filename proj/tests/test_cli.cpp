// Drives the pbnn executable as a subprocess.
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

struct Scratch {
  fs::path dir = fs::temp_directory_path() / ("pbnn_cli_tests_" + std::to_string(::getpid()));
  Scratch() { fs::create_directories(dir); }
  ~Scratch() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
};

fs::path scratch() {
  static const Scratch s;
  return s.dir;
}

Run run(const std::string& args) {
  const auto out = scratch() / "stdout.txt";
  const auto cmd = std::string(PBNN_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count_lines(const std::string& s, const std::string& prefix = {}) {
  std::istringstream in(s);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line.rfind(prefix, 0) == 0) ++n;
  return n;
}

}  // namespace

TEST_CASE("cli simulate") {
  auto r = run("simulate --n 7 --cn 1 --perm 2613754 --steps 40");
  REQUIRE(r.code == 0);
  REQUIRE(count_lines(r.out) == 41);
  CHECK(r.out.substr(0, 8) == r.out.substr(20 * 8, 8));

  r = run("simulate --n 7 --cn 1 --perm 1234567 --steps 0");
  CHECK(r.code == 0);
  CHECK(count_lines(r.out) == 1);

  r = run("simulate --n 5 --cn 1 --init ++--- --steps 2");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("..###\n", 0) == 0);

  const auto svg = scratch() / "p.svg";
  r = run("simulate --n 7 --cn 1 --perm 2613754 --render svg --out " + svg.string());
  CHECK(r.code == 0);
  CHECK(slurp(svg).rfind("<svg", 0) == 0);

  CHECK(run("simulate --n 7 --cn 1 --perm 1223456").code == 2);
  CHECK(run("simulate --n 7 --cn 1 --perm 123456").code == 2);
  CHECK(run("simulate --n 7 --cn 1 --init random").code == 2);
  CHECK(run("simulate --n 7 --cn 1 --init random --seed 5").code == 0);
  CHECK(run("simulate --n 7 --cn 9").code == 2);
}

TEST_CASE("cli classify") {
  auto r = run("classify --n 7 --cn 1 --perm 2613754");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("verdict: GBPO, period 20, EPPs 106") != std::string::npos);

  r = run("classify --n 7 --cn 1 --perm 1234567");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("verdict: not GBPO") != std::string::npos);

  const auto a = run("classify --n 7 --cn 1 --perm 1325476 --format json");
  const auto b = run("classify --n 7 --cn 1 --perm 7243651 --format json");
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  const auto verdict = [](const std::string& s) { return s.substr(s.find("\"verdict\"")); };
  CHECK(verdict(a.out) == verdict(b.out));

  const auto dot = scratch() / "g.dot";
  const auto csv = scratch() / "g.csv";
  r = run("classify --n 7 --cn 1 --perm 2613754 --dot " + dot.string() + " --csv " + csv.string());
  CHECK(r.code == 0);
  CHECK(slurp(dot).rfind("digraph", 0) == 0);
  CHECK(count_lines(slurp(csv)) == 129);
}

TEST_CASE("cli standard-ids") {
  auto r = run("standard-ids --np 3");
  REQUIRE(r.code == 0);
  CHECK(r.out == "123\n132\n231\n312\ncount: 4 (formula 4)\n");

  const auto out = scratch() / "ids5.txt";
  r = run("standard-ids --np 5 --out " + out.string());
  REQUIRE(r.code == 0);
  CHECK(count_lines(slurp(out)) == 28);

  CHECK(run("standard-ids --np 6").code == 2);
  CHECK(run("standard-ids --np 11 --budget 1000").code == 3);
}

TEST_CASE("cli explore and verify") {
  const auto full = scratch() / "full.csv";
  auto r = run("explore --np 7 --jobs 1 --out " + full.string());
  REQUIRE(r.code == 0);
  CHECK(r.out.find("np=7: 173 GBPO(s)") != std::string::npos);
  const auto body = slurp(full);
  CHECK(count_lines(body) - count_lines(body, "#") - 1 == 173);

  const auto par = scratch() / "par.csv";
  REQUIRE(run("explore --np 7 --jobs 8 --out " + par.string()).code == 0);
  CHECK(slurp(par) == body);

  const auto json = scratch() / "full.json";
  REQUIRE(run("explore --np 7 --out " + json.string()).code == 0);
  CHECK(slurp(json).front() == '{');
  CHECK(run("verify --results " + json.string()).code == 0);

  const auto edge = scratch() / "edge.csv";
  REQUIRE(run("explore --np 7 --cns 0,7 --out " + edge.string()).code == 0);
  CHECK(count_lines(slurp(edge)) - count_lines(slurp(edge), "#") - 1 == 0);

  r = run("verify --results " + full.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("0 difference(s)") != std::string::npos);

  const auto partial = scratch() / "partial.csv";
  r = run("explore --np 7 --max-configs 200 --out " + partial.string());
  CHECK(r.code == 3);
  CHECK(slurp(partial).find("# complete=false") != std::string::npos);

  CHECK(run("explore --np 9").code == 2);
}

TEST_CASE("cli verify reports reference problems") {
  const auto results = scratch() / "v.csv";
  REQUIRE(run("explore --np 7 --cns 1 --out " + results.string()).code == 0);

  const auto reference = slurp(PBNN_REFERENCE_PATH);
  const auto truncated = scratch() / "trunc.csv";
  std::ofstream(truncated) << reference.substr(0, reference.size() - 7);
  auto r = run("verify --results " + results.string() + " --reference " + truncated.string());
  CHECK(r.code == 2);

  const auto row = std::string("1,1357246,42,84\n");
  const auto pos = reference.find(row);
  REQUIRE(pos != std::string::npos);
  const auto missing = scratch() / "missing.csv";
  std::ofstream(missing) << reference.substr(0, pos) + reference.substr(pos + row.size());
  r = run("verify --results " + results.string() + " --reference " + missing.string());
  CHECK(r.code == 1);
  CHECK(r.out.find("CN1 1357246") != std::string::npos);

  CHECK(run("verify --results /nonexistent/file.csv").code == 2);
}
