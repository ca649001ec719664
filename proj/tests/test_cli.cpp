#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

const std::string kCli = HKA_CLI_PATH;
const std::string kFixtures = HKA_FIXTURES_DIR;

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  RunResult r;
  FILE* pipe = popen((kCli + " " + args + " 2>/dev/null").c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) {
    r.out.append(buf.data(), got);
  }
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("validate: exit codes partition the outcomes") {
  CHECK(run("validate " + kFixtures + "/kite.json").code == 0);
  CHECK(run("validate " + kFixtures + "/no_such_file.json").code == 1);

  std::string bad = "/tmp/hka_cli_bad.json";
  {
    std::ofstream f(bad);
    f << "{ not json";
  }
  CHECK(run("validate " + bad).code == 1);
  {
    std::ofstream f(bad);
    // dangling target object
    f << R"({"dim":1,"objects":["a"],)"
      << R"("gens1":[{"name":"f","src":"a","tgt":"b"}]})";
  }
  CHECK(run("validate " + bad).code == 1);  // name resolution is a parse error
  {
    std::ofstream f(bad);
    // parses fine, but the extension cell does not bound a sphere
    f << R"({"dim":1,"objects":["a","b","c"],)"
      << R"("gens1":[{"name":"f","src":"a","tgt":"b"},)"
      << R"({"name":"g","src":"a","tgt":"c"}],)"
      << R"("extension":[{"name":"x","src_zigzag":["f"],"tgt_zigzag":["g"]}]})";
  }
  CHECK(run("validate " + bad).code == 2);
  std::remove(bad.c_str());
}

TEST_CASE("laws: clean runs pass, mutants exit 3") {
  RunResult ok = run("laws " + kFixtures +
                     "/kite.json --bounds-l 4 --bounds-t 3 --budget 60");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);

  RunResult rel = run("laws " + kFixtures +
                      "/rel_small.json --model rel --budget 100");
  CHECK(rel.code == 0);

  RunResult bad = run("laws " + kFixtures +
                      "/rel_small.json --model rel --mutate star-no-unit");
  CHECK(bad.code == 3);
  CHECK(bad.out.find("FAIL") != std::string::npos);

  RunResult drop =
      run("laws " + kFixtures +
          "/kite.json --bounds-l 4 --bounds-t 3 --budget 60 "
          "--mutate drop-interchange");
  CHECK(drop.code == 3);
}

TEST_CASE("analyze: kite confirms, loop reports unmet hypotheses") {
  RunResult kite =
      run("analyze " + kFixtures + "/kite.json --bounds-l 5 --bounds-t 4");
  CHECK(kite.code == 0);
  CHECK(kite.out.find("termination: yes") != std::string::npos);
  CHECK(kite.out.find("church-rosser: confirmed") != std::string::npos);
  CHECK(kite.out.find("Newman: confirmed") != std::string::npos);

  RunResult loop = run("analyze " + kFixtures + "/loop.json");
  CHECK(loop.code == 0);
  CHECK(loop.out.find("termination: no") != std::string::npos);
  CHECK(loop.out.find("hypotheses unmet") != std::string::npos);

  RunResult clipped = run("analyze " + kFixtures +
                          "/kite.json --bounds-l 2 --bounds-t 1 "
                          "--fail-on-clipped");
  CHECK(clipped.code != 0);

  RunResult words = run("analyze " + kFixtures + "/commute.json");
  CHECK(words.code == 0);
  CHECK(words.out.find("termination: yes") != std::string::npos);
}

TEST_CASE("pave: certificates come back verified, or exit 5") {
  RunResult one = run("pave " + kFixtures +
                      "/kite.json --zigzag f-.g --format json");
  CHECK(one.code == 0);
  CHECK(one.out.find("jn_f_g") != std::string::npos);

  RunResult branch = run("pave " + kFixtures +
                         "/kite.json --branching 'f.h;g.k' --format json");
  CHECK(branch.code == 0);

  RunResult missing =
      run("pave " + kFixtures + "/kite_bare.json --zigzag f-.g");
  CHECK(missing.code == 5);
}

TEST_CASE("export-dot is byte-identical across runs") {
  std::string cmd = "export-dot " + kFixtures + "/kite.json";
  RunResult a = run(cmd);
  RunResult b = run(cmd);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("digraph") != std::string::npos);
}

TEST_CASE("fixed seed makes law reports byte-identical") {
  std::string cmd = "laws " + kFixtures +
                    "/kite.json --bounds-l 4 --bounds-t 3 --budget 40 "
                    "--format json --seed 99";
  RunResult a = run(cmd);
  RunResult b = run(cmd);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}
