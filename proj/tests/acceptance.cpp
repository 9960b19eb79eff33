#include <chrono>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "eta/verify.hpp"

/*****************************************************************************
 * Acceptance gate: runs the six verification suites at pinned options and
 * condenses them into eleven pass/fail lines, one per advertised guarantee.
 * Output is deterministic apart from budget overruns; exits nonzero if any
 * line fails.
 *****************************************************************************/

namespace {

struct SuiteRun {
  std::string name;
  eta::SuiteReport report;
  double seconds = 0.0;
  double budget = 0.0;
};

bool starts_with(const std::string& s, const std::string& p) {
  return s.rfind(p, 0) == 0;
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  std::vector<SuiteRun> runs;
  auto run = [&runs](const std::string& name, const eta::VerifyOptions& opt,
                     double budget) {
    auto t0 = clock::now();
    eta::SuiteReport rep = eta::verify_suites(name, opt).front();
    double secs = std::chrono::duration<double>(clock::now() - t0).count();
    runs.push_back({name, std::move(rep), secs, budget});
  };

  {
    eta::VerifyOptions o;
    run("tables", o, 10.0);
  }
  {
    eta::VerifyOptions o;
    o.kmax = 3;
    run("identities", o, 125.0);
  }
  {
    eta::VerifyOptions o;
    o.kmax = 2;
    o.n = 5;
    run("covers", o, 1800.0);
  }
  {
    eta::VerifyOptions o;
    o.kmax = 2;
    o.max_weight = 8;
    run("hat", o, 120.0);
  }
  {
    eta::VerifyOptions o;
    o.kmax = 2;
    o.max_weight = 6;
    run("splitting", o, 600.0);
  }
  {
    eta::VerifyOptions o;
    o.kmax = 2;
    o.max_weight = 8;
    o.dim_kmax = 3;
    o.dim_degree = 10;
    run("basis", o, 300.0);
  }

  struct Criterion {
    int id;
    const char* desc;
    const char* suite;
    std::vector<std::string> prefixes;
  };
  const std::vector<Criterion> criteria = {
      {1, "typed class Giambelli table, k = 1 and 2", "tables", {"table1/"}},
      {2, "hatted class Giambelli table, k = 1 and 2", "tables", {"table2/"}},
      {3, "deformed generator identity battery, k <= 3", "identities",
       {"id/"}},
      {4, "Weyl group action and divided difference laws", "identities",
       {"weyl/"}},
      {5, "divided differences along covers, modulo the ideal", "covers",
       {"uniq/"}},
      {6, "divided differences along covers at t = 0, exact", "covers",
       {"uniq0/"}},
      {7, "hatted class equals the sum over the types", "hat", {"hat-sum/"}},
      {8, "triangularity over the monomial basis and dimension counts",
       "basis", {"triangular/", "dimension/"}},
      {9, "reconstruction of every class from the top one", "covers",
       {"reconstruction/"}},
      {10, "splitting into single classes and Schubert polynomials",
       "splitting", {"splitting/"}},
      {11, "elementary symmetric sign sums", "identities", {"elem/"}},
  };

  bool all_ok = true;
  int num_ok = 0;
  for (const Criterion& cr : criteria) {
    const SuiteRun* sr = nullptr;
    for (const SuiteRun& s : runs) {
      if (s.name == cr.suite) sr = &s;
    }
    int total = 0, passed = 0;
    std::string first_fail;
    for (const eta::CheckResult& c : sr->report.checks) {
      bool match = false;
      for (const std::string& p : cr.prefixes) {
        if (starts_with(c.name, p)) {
          match = true;
          break;
        }
      }
      if (!match) continue;
      ++total;
      if (c.pass) {
        ++passed;
      } else if (first_fail.empty()) {
        first_fail = c.name + ": " + c.detail;
      }
    }
    bool over = sr->seconds > sr->budget;
    bool ok = total > 0 && passed == total && !over;
    all_ok = all_ok && ok;
    num_ok += ok ? 1 : 0;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << cr.id << ": "
              << cr.desc << " (" << passed << "/" << total << " checks)";
    if (total == 0) std::cout << " [no checks matched]";
    if (over) std::cout << " [suite " << cr.suite << " over budget]";
    if (!first_fail.empty()) {
      std::cout << " [first failure " << first_fail << "]";
    }
    std::cout << "\n";
  }
  std::cout << "acceptance: " << num_ok << "/" << criteria.size()
            << " criteria passed\n";
  return all_ok ? 0 : 1;
}
