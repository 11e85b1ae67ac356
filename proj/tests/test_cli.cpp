#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs the installed binary through the shell, capturing both streams.
// `env` may hold a VAR=value prefix.
RunResult run_cli(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  const std::string base = "/tmp/catalan_cli_" + std::to_string(getpid()) +
                           "_" + std::to_string(counter++);
  const std::string out_path = base + ".out";
  const std::string err_path = base + ".err";
  std::string cmd;
  if (!env.empty()) cmd += env + " ";
  cmd += std::string(CATALAN_CLI_PATH) + " " + args + " >" + out_path + " 2>" +
         err_path;
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

std::size_t count_occurrences(const std::string& haystack,
                              const std::string& needle) {
  std::size_t count = 0, pos = 0;
  while ((pos = haystack.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

}  // namespace

TEST_CASE("help exits cleanly") {
  const RunResult r = run_cli("--help");
  CHECK(r.code == 0);
  CHECK(r.out.find("Usage") != std::string::npos);
}

TEST_CASE("missing subcommand is a usage error") {
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
}

TEST_CASE("enumerate transformations as text") {
  const RunResult r = run_cli("enumerate --class cminus --n 3");
  CHECK(r.code == 0);
  CHECK(r.out == "111\n112\n113\n122\n123\n");
  CHECK(r.err == "count: 5 expected: 5\n");
}

TEST_CASE("enumerate matrices as blank-separated blocks") {
  const RunResult r = run_cli("enumerate --shape stair --n 2");
  CHECK(r.code == 0);
  CHECK(r.out == "10\n01\n\n11\n01\n");
  CHECK(r.err == "count: 2 expected: 2\n");
}

TEST_CASE("enumerate json output is byte-deterministic") {
  const std::string args = "enumerate --class c --n 3 --format json";
  const RunResult a = run_cli(args);
  const RunResult b = run_cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"schema\": 1") != std::string::npos);
  CHECK(a.out.find("\"count\": 5") != std::string::npos);
  CHECK(a.out.find("\"123\"") != std::string::npos);
}

TEST_CASE("enumerate argument validation") {
  // --class and --shape are mutually exclusive
  CHECK(run_cli("enumerate --class c --shape stair --n 2").code == 2);
  // one of them is required
  CHECK(run_cli("enumerate --n 2").code == 2);
  // caps surface as usage errors, and --force lifts them
  const RunResult capped = run_cli("enumerate --class c --n 11");
  CHECK(capped.code == 2);
  CHECK(capped.err.find("resource limit") != std::string::npos);
  const RunResult forced = run_cli("enumerate --class c --n 11 --force");
  CHECK(forced.code == 0);
  CHECK(forced.err == "count: 58786 expected: 58786\n");
}

TEST_CASE("represent emits the requested matrix") {
  const RunResult stair = run_cli("represent 1244 --map stair");
  CHECK(stair.code == 0);
  CHECK(stair.out == "1000\n0100\n0011\n0001\n");

  const RunResult action = run_cli("represent 2344 --map action");
  CHECK(action.code == 0);
  CHECK(action.out == "0100\n0010\n0001\n0001\n");

  const RunResult unary = run_cli("represent 123 --map unary");
  CHECK(unary.code == 0);
  CHECK(unary.out == "10\n11\npartition: [2,1]\n");

  const RunResult conj = run_cli("represent 123 --map unary-conjugated");
  CHECK(conj.code == 0);
  CHECK(conj.out == "11\n01\n");
}

TEST_CASE("represent json carries the partition for the unary map") {
  const RunResult r = run_cli("represent 123 --map unary --format json");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"partition\": [") != std::string::npos);
  CHECK(r.out.find("\"10\"") != std::string::npos);
  CHECK(r.out.find("\"11\"") != std::string::npos);
}

TEST_CASE("represent rejects off-domain input") {
  const RunResult r = run_cli("represent 132 --map stair");
  CHECK(r.code == 2);
  CHECK(r.err.find("not order-preserving") != std::string::npos);

  const RunResult r2 = run_cli("represent 133 --map unary");
  CHECK(r2.code == 2);
  CHECK(r2.err.find("not decreasing") != std::string::npos);
}

TEST_CASE("verify runs a suite and reports per-check lines") {
  const RunResult r = run_cli("verify --theorem stair-rep --n 3");
  CHECK(r.code == 0);
  CHECK(count_occurrences(r.out, "[PASS]") == 5);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
  CHECK(r.out.find("summary: 5/5 passed") != std::string::npos);
  CHECK(r.err.empty());
}

TEST_CASE("verify json includes the verdict") {
  const RunResult r =
      run_cli("verify --theorem complementarity --n 2 --format json");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"all_passed\": true") != std::string::npos);
  CHECK(r.out.find("\"suite\": \"complementarity\"") != std::string::npos);
}

TEST_CASE("verify rejects unknown suites and out-of-range sizes") {
  CHECK(run_cli("verify --theorem nonsense --n 2").code == 2);
  const RunResult r = run_cli("verify --theorem lattice --n 9");
  CHECK(r.code == 2);
  CHECK(r.err.find("accepts n in [1, 5]") != std::string::npos);
}

TEST_CASE("identity text form checks an arbitrary law") {
  const RunResult r = run_cli("identity 'x = x' --target cminussemiring:3");
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict: holds after 5 assignments") != std::string::npos);
  CHECK(r.err.empty());

  const RunResult fails =
      run_cli("identity 'xy = yx' --target csemiring:3");
  CHECK(fails.code == 1);
  CHECK(fails.out.find("verdict: fails") != std::string::npos);
  CHECK(fails.err.find("\"schema\":1") != std::string::npos);
  CHECK(fails.err.find("\"witness\"") != std::string::npos);
}

TEST_CASE("built-in law one fails one size up with the displayed witness") {
  const RunResult r = run_cli("identity --eq 1 --n 2 --target csemiring:4");
  CHECK(r.code == 1);
  CHECK(r.out.find("identity: x^2 = x^3") != std::string::npos);
  CHECK(r.out.find("verdict: fails") != std::string::npos);
  CHECK(r.out.find("witness: x=2344") != std::string::npos);
  CHECK(r.out.find("displayed witness 2344: 1 -> 3 then 4 (consistent)") !=
        std::string::npos);
}

TEST_CASE("built-in law two holds in the matching matrix size") {
  const RunResult r = run_cli("identity --eq 2 --n 2 --target upper");
  CHECK(r.code == 0);
  CHECK(r.out.find("identity: xy = x^2y+xy^2") != std::string::npos);
  CHECK(r.out.find("verdict: holds after 64 assignments") !=
        std::string::npos);

  const RunResult fails =
      run_cli("identity --eq 2 --n 2 --target csemiring:3");
  CHECK(fails.code == 1);
  CHECK(fails.out.find(
            "displayed pair x=233 y=223: sides send 1 to 2 and 3 "
            "(consistent)") != std::string::npos);
}

TEST_CASE("identity argument validation") {
  // text and --eq are mutually exclusive, and one is required
  CHECK(run_cli("identity 'x = x' --eq 1 --n 2 --target upper").code == 2);
  CHECK(run_cli("identity --target upper").code == 2);
  // --eq needs --n
  CHECK(run_cli("identity --eq 1 --target csemiring:3").code == 2);
  // bad target
  const RunResult r = run_cli("identity 'x = x' --target nonsense");
  CHECK(r.code == 2);
  CHECK(r.err.find("unknown target") != std::string::npos);
}

TEST_CASE("budget flag and environment variable are honored") {
  const RunResult flag =
      run_cli("identity --eq 2 --n 3 --target upper --budget 10");
  CHECK(flag.code == 2);
  CHECK(flag.err.find("resource limit") != std::string::npos);
  CHECK(flag.err.find("4096") != std::string::npos);

  const RunResult env = run_cli("verify --theorem unary-rep --n 3",
                                "CATALAN_BUDGET=10");
  CHECK(env.code == 2);
  CHECK(env.err.find("resource limit") != std::string::npos);

  const RunResult bad = run_cli("verify --theorem unary-rep --n 2",
                                "CATALAN_BUDGET=abc");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("CATALAN_BUDGET is not a number") != std::string::npos);
}

TEST_CASE("hasse emits layered dot output") {
  const RunResult r = run_cli("hasse --class o --n 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("digraph hasse {") != std::string::npos);
  CHECK(r.out.find("rankdir=BT;") != std::string::npos);
  CHECK(r.out.find("node [shape=box];") != std::string::npos);
  CHECK(r.out.find("rank=same") != std::string::npos);
  CHECK(r.out.find("\"111\" -> \"112\";") != std::string::npos);
  CHECK(count_occurrences(r.out, " -> ") == 12);
}

TEST_CASE("hasse json lists nodes and edges") {
  const RunResult r = run_cli("hasse --class cminus --n 3 --format json");
  CHECK(r.code == 0);
  CHECK(count_occurrences(r.out, "\"111\"") >= 1);
  CHECK(r.out.find("\"nodes\"") != std::string::npos);
  CHECK(r.out.find("\"edges\"") != std::string::npos);
}

TEST_CASE("hasse caps the diagram size") {
  const RunResult r = run_cli("hasse --class o --n 5");
  CHECK(r.code == 2);
  CHECK(r.err.find("resource limit") != std::string::npos);
}

TEST_CASE("young lists maps with partitions and matrices") {
  const RunResult r = run_cli("young --n 2");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "111 []\n00\n00\n\n"
        "112 [1]\n00\n10\n\n"
        "113 [2]\n00\n11\n\n"
        "122 [1,1]\n10\n10\n\n"
        "123 [2,1]\n10\n11\n");
  CHECK(r.err == "count: 5 expected: 5\n");
}

TEST_CASE("young count-only prints the bare number") {
  const RunResult r = run_cli("young --n 8 --count-only");
  CHECK(r.code == 0);
  CHECK(r.out == "4862\n");
  CHECK(r.err == "expected: 4862\n");

  // the full listing is capped, the count is not
  CHECK(run_cli("young --n 7").code == 2);
  CHECK(run_cli("young --n 12 --count-only").out == "742900\n");
}

TEST_CASE("complement walks the pipeline stage by stage") {
  const RunResult r = run_cli("complement 1244");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "input 1244\n"
        "stair:\n1000\n0100\n0011\n0001\n"
        "negated:\n0111\n0011\n0000\n0000\n"
        "cropped:\n111\n011\n000\n"
        "bar 1134\n"
        "unary:\n000\n110\n111\n"
        "conjugated:\n111\n011\n000\n"
        "agreement: yes\n");

  const RunResult bad = run_cli("complement 113");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("not extensive") != std::string::npos);
}

TEST_CASE("report-all aggregates every suite") {
  const RunResult r = run_cli("report-all --n-max 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
  CHECK(count_occurrences(r.out, "[PASS]") > 20);
  CHECK(r.out.find(" passed\n") != std::string::npos);
  CHECK(r.err.empty());
}

TEST_CASE("output flag writes the report to a file") {
  const std::string path = "/tmp/catalan_cli_out_" +
                           std::to_string(getpid()) + ".txt";
  const RunResult r =
      run_cli("enumerate --class cminus --n 3 --output " + path);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(path) == "111\n112\n113\n122\n123\n");
  std::remove(path.c_str());
}
