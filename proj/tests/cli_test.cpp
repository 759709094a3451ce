// Runs the anlab binary end to end.

#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

TEST_SUITE_BEGIN("cli");

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(ANLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("anlab_cli_" + std::to_string(getpid()))) { fs::create_directories(path); }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("models list, show and export") {
  const auto list = run("models list");
  CHECK(list.code == 0);
  CHECK(list.out ==
        "ramesh-counterexample\ntwo-limit-blocks\nisometry-phase\nsum-not-an\nprojection-infinite\n");
  CHECK(run("models show nope").code == 2);
  CHECK(run("models show two-limit-blocks").out.find("provenance: ") != std::string::npos);
}

TEST_CASE("classify exit codes follow the verdict") {
  TempDir tmp;
  const char* expected[][2] = {{"ramesh-counterexample", "0"}, {"two-limit-blocks", "3"}, {"isometry-phase", "0"},
                               {"sum-not-an", "3"},            {"projection-infinite", "3"}};
  for (const auto& [name, code] : expected) {
    const auto f = tmp.file(std::string(name) + ".json");
    REQUIRE(run("models export " + std::string(name) + " " + f).code == 0);
    CHECK(run("classify " + f).code == std::stoi(code));
    const auto json = run("classify --json " + f);
    CHECK(json.code == std::stoi(code));
    CHECK(json.out.find("\"reason\"") != std::string::npos);
  }
  const auto blocks = run("classify --json " + tmp.file("two-limit-blocks.json"));
  CHECK(blocks.out.find("Fail_TwoLimitPoints") != std::string::npos);
  CHECK(run("classify --norming " + tmp.file("sum-not-an.json")).code == 3);
  CHECK(run("classify --norming " + tmp.file("two-limit-blocks.json")).code == 0);

  write(tmp.file("bad.json"), "{\"atoms\": [");
  CHECK(run("classify " + tmp.file("bad.json")).code == 2);
  write(tmp.file("neg.json"), R"({"atoms": [{"value": "-1", "multiplicity": 1}]})");
  CHECK(run("classify " + tmp.file("neg.json")).code == 2);
  CHECK(run("classify " + tmp.file("missing.json")).code == 2);
}

TEST_CASE("decompose, witness and verify") {
  TempDir tmp;
  const auto ramesh = tmp.file("r.json");
  const auto blocks = tmp.file("b.json");
  const auto proj = tmp.file("p.json");
  run("models export ramesh-counterexample " + ramesh);
  run("models export two-limit-blocks " + blocks);
  run("models export projection-infinite " + proj);

  const auto d = run("decompose --verify --out " + tmp.file("d.json") + " " + ramesh);
  CHECK(d.code == 0);
  std::ifstream in(tmp.file("d.json"));
  const std::string dj((std::istreambuf_iterator<char>(in)), {});
  CHECK(dj.find("\"-1/2\"") != std::string::npos);
  CHECK(run("decompose " + blocks).code == 3);

  const auto rows = run("witness --emit-basis 10 " + blocks);
  CHECK(rows.code == 0);
  CHECK(rows.out.rfind("n,c_n_squared,f_index,g_index\n1,95/108,0,1\n", 0) == 0);
  CHECK(std::count(rows.out.begin(), rows.out.end(), '\n') == 11);
  CHECK(run("witness " + ramesh).code == 4);
  CHECK(run("witness --emit-basis 3 --out " + tmp.file("w.csv") + " " + proj).out.find("TwoInfiniteMultiplicities") !=
        std::string::npos);

  const auto v = run("verify --witness --truncate 10,50 " + blocks);
  CHECK(v.code == 0);
  CHECK(v.out == "N,restricted_norm,sup_value,gap\n"
                 "10,1.975000000000e+00,2.000000000000e+00,2.500000000000e-02\n"
                 "50,1.995000000000e+00,2.000000000000e+00,5.000000000000e-03\n");
  CHECK(run("verify --truncate 10,5 " + blocks).code == 2);
}

TEST_CASE("matrix-check suites") {
  TempDir tmp;
  const auto polar = run("matrix-check --suite polar --seed 7 --size 8");
  CHECK(polar.code == 0);
  CHECK(polar.out == run("matrix-check --suite polar --seed 7 --size 8").out);
  for (const char* suite : {"absval", "norming", "negcount"}) CHECK(run(std::string("matrix-check --suite ") + suite).code == 0);

  write(tmp.file("id.csv"), "1,0\n0,1\n");
  CHECK(run("matrix-check --suite polar --matrix " + tmp.file("id.csv")).code == 0);
  write(tmp.file("nh.csv"), "1,2i\n0,1\n");
  CHECK(run("matrix-check --suite negcount --matrix " + tmp.file("nh.csv")).code == 2);
  write(tmp.file("sub.csv"), "1,0\n0,1\n0,0\n");
  write(tmp.file("t.csv"), "3,0,0\n0,1,0\n0,0,2\n");
  const auto restricted = run("matrix-check --suite norming --matrix " + tmp.file("t.csv") + " --subspace " + tmp.file("sub.csv"));
  CHECK(restricted.code == 0);
  CHECK(restricted.out.find("restricted_norm,3.000000000000e+00,pass") != std::string::npos);
  CHECK(run("matrix-check --suite bogus").code == 2);
}

TEST_SUITE_END();
