#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "eta/eta.hpp"
#include "eta/partition.hpp"
#include "eta/poly.hpp"
#include "eta/quotient.hpp"
#include "eta/schubert.hpp"

using namespace eta;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) {
    if (c == '\'')
      q += "'\\''";
    else
      q += c;
  }
  return q + "'";
}

RunResult run_cli(const std::string& args, const std::string& input = "") {
  std::string cmd;
  if (!input.empty()) cmd += "printf '%s' " + shell_quote(input) + " | ";
  cmd += std::string(ETA_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) {
    if (c == '\n') ++n;
  }
  return n;
}

TypedPartition tp(std::vector<int> parts, int k, int type) {
  return make_typed(std::move(parts), k, type);
}

}  // namespace

TEST_CASE("compute subcommand") {
  SUBCASE("text output matches the library") {
    RunResult r = run_cli("compute --k 1 --lambda 2:t0");
    CHECK(r.status == 0);
    CHECK(r.out == double_eta(tp({2}, 1, 0)).to_string() + "\n");
  }

  SUBCASE("json output parses back to the same polynomial") {
    RunResult r = run_cli("compute --k 1 --lambda 2,1:t1 --format json");
    CHECK(r.status == 0);
    CHECK(Polynomial::from_json(r.out) == double_eta(tp({2, 1}, 1, 1)));
  }

  SUBCASE("runs are deterministic") {
    std::string args = "compute --k 2 --lambda 3,1:t0 --format json";
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
  }

  SUBCASE("single flag sets t to zero") {
    RunResult r = run_cli("compute --k 1 --lambda 2:t0 --single");
    CHECK(r.status == 0);
    CHECK(r.out == "b2\n");
  }

  SUBCASE("hatted class of a bare shape") {
    RunResult r = run_cli("compute --k 1 --lambda 2 --hat");
    CHECK(r.status == 0);
    CHECK(r.out == double_eta_hat({2}, 1).to_string() + "\n");
  }

  SUBCASE("typed suffix with --hat is a usage error") {
    CHECK(run_cli("compute --k 1 --lambda 2:t0 --hat").status == 2);
  }

  SUBCASE("missing required option is a usage error") {
    CHECK(run_cli("compute --lambda 2:t0").status == 2);
  }

  SUBCASE("basis expansion output") {
    RunResult r = run_cli("compute --k 1 --lambda 2:t0 --expand-basis b");
    CHECK(r.status == 0);
    std::string want;
    BasisExpansion ex = expand_in_b_basis(double_eta(tp({2}, 1, 0)), 1);
    for (const auto& [la, cf] : ex.terms) {
      want += "b[" + format_partition(la) + "]: " + cf.to_string() + "\n";
    }
    CHECK(r.out == want);
  }
}

TEST_CASE("normal-form subcommand") {
  SUBCASE("reduces json from stdin") {
    RunResult r = run_cli(
        "normal-form --k 1",
        R"({"terms":[{"coeff":"1","vars":{"b1":1,"bt1":1}}]})");
    CHECK(r.status == 0);
    CHECK(r.out == "b2\n");
  }

  SUBCASE("reads a file") {
    Polynomial f = Polynomial::var(var_b(2), 2);
    std::string path = "/tmp/eta_cli_nf_input.json";
    {
      std::ofstream out(path);
      out << f.to_json();
    }
    RunResult r = run_cli("normal-form --k 1 --in " + path);
    CHECK(r.status == 0);
    CHECK(r.out == normal_form(f, 1).to_string() + "\n");
    std::remove(path.c_str());
  }

  SUBCASE("bad json is a usage error") {
    CHECK(run_cli("normal-form --k 1", "not json").status == 2);
  }
}

TEST_CASE("basis-expand subcommand") {
  Polynomial f = double_eta(tp({2}, 1, 0)) + double_eta(tp({1}, 1, 1)) * 2;
  RunResult r = run_cli("basis-expand --k 1 --basis eta --format json",
                        f.to_json());
  CHECK(r.status == 0);
  // the eta expansion of a combination of basis classes is exact
  CHECK(r.out.find("\"partition\":\"2:t0\"") != std::string::npos);
  CHECK(r.out.find("\"partition\":\"1:t1\"") != std::string::npos);

  RunResult rb = run_cli("basis-expand --k 1 --basis b", f.to_json());
  CHECK(rb.status == 0);
  std::string want;
  for (const auto& [la, cf] : expand_in_b_basis(f, 1).terms) {
    want += "b[" + format_partition(la) + "]: " + cf.to_string() + "\n";
  }
  CHECK(rb.out == want);
}

TEST_CASE("schubert subcommand") {
  RunResult r = run_cli("schubert --perm 1,3,2");
  CHECK(r.status == 0);
  CHECK(r.out == "t1 + t2\n");

  RunResult rn = run_cli("schubert --perm 2,1 --negate-t");
  CHECK(rn.status == 0);
  CHECK(rn.out == "-t1\n");

  CHECK(run_cli("schubert --perm 1,1,2").status != 0);
}

TEST_CASE("enumerate subcommand") {
  SUBCASE("box enumeration") {
    RunResult r = run_cli("enumerate --k 1 --rows 2 --cols 3");
    CHECK(r.status == 0);
    CHECK(count_lines(r.out) == 12);
    std::string want;
    for (const TypedPartition& la : enumerate_typed(1, 2, 3)) {
      want += format_partition(la) + "\n";
    }
    CHECK(r.out == want);
  }

  SUBCASE("fixed weight enumeration") {
    RunResult r = run_cli("enumerate --k 1 --weight 3");
    CHECK(r.status == 0);
    std::string want;
    for (const TypedPartition& la : enumerate_typed(1, 3, 3)) {
      if (la.weight() == 3) want += format_partition(la) + "\n";
    }
    CHECK(r.out == want);
  }

  SUBCASE("missing box is a usage error") {
    CHECK(run_cli("enumerate --k 1").status == 2);
    CHECK(run_cli("enumerate --k 1 --rows 2").status == 2);
  }
}

TEST_CASE("verify subcommand") {
  SUBCASE("tables suite passes") {
    RunResult r = run_cli("verify tables");
    CHECK(r.status == 0);
    CHECK(r.out.find("suite tables: passed 30/30\n") != std::string::npos);
    CHECK(r.out.find("total: passed 30/30\n") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
  }

  SUBCASE("unknown suite is a usage error") {
    CHECK(run_cli("verify bogus").status == 2);
  }

  SUBCASE("unknown subcommand is a usage error") {
    CHECK(run_cli("frobnicate").status == 2);
  }
}
