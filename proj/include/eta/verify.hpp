#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace eta {

/*****************************************************************************
 * Verification suites: batteries of named checks testing the library
 * against closed-form identities, golden expansions, and independent
 * second routes. Reports are deterministic (sorted by check name, no
 * timings), so repeated runs are byte-identical.
 *****************************************************************************/

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // witness of the first failure, empty when passing
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  int total() const { return static_cast<int>(checks.size()); }
  int passed() const;
  bool ok() const { return passed() == total(); }
};

struct VerifyOptions {
  int kmax = 2;        // largest k exercised
  int n = 5;           // rank bound for the cover suite
  int max_weight = 8;  // weight bound for the per-partition suites
  std::uint64_t seed = 12345;
  int dim_kmax = 3;     // dimension count: k range
  int dim_degree = 10;  // dimension count: degree range
};

// golden Giambelli tables for the typed and hatted classes, k = 1, 2
SuiteReport verify_tables(const VerifyOptions& opt);
// symmetric function identities, Weyl action laws, sign sum identities
SuiteReport verify_identities(const VerifyOptions& opt);
// divided differences along the Bruhat covers, hatted recursions, and the
// reconstruction of every class from the top one
SuiteReport verify_covers(const VerifyOptions& opt);
// hatted class = sum of the typed classes over the types of the shape
SuiteReport verify_hat(const VerifyOptions& opt);
// splitting into single classes times type A Schubert polynomials
SuiteReport verify_splitting(const VerifyOptions& opt);
// triangularity over the monomial basis and dimension counts
SuiteReport verify_basis(const VerifyOptions& opt);

// name: tables|identities|covers|hat|splitting|basis|all, with hat-sum
// accepted for hat; throws std::invalid_argument on anything else
std::vector<SuiteReport> verify_suites(const std::string& name,
                                       const VerifyOptions& opt);

void print_report(std::ostream& os, const SuiteReport& rep);

}  // namespace eta
