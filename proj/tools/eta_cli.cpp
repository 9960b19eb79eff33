#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "eta/eta.hpp"
#include "eta/partition.hpp"
#include "eta/poly.hpp"
#include "eta/quotient.hpp"
#include "eta/ring.hpp"
#include "eta/schubert.hpp"
#include "eta/verify.hpp"
#include "eta/weyl.hpp"

namespace {

void print_poly(const eta::Polynomial& f, const std::string& fmt) {
  if (fmt == "json")
    std::cout << f.to_json() << "\n";
  else if (fmt == "latex")
    std::cout << f.to_latex() << "\n";
  else
    std::cout << f.to_string() << "\n";
}

void print_expansion(const eta::BasisExpansion& ex, const std::string& label,
                     const std::string& fmt) {
  if (fmt == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [la, cf] : ex.terms)
      arr.push_back({{"partition", eta::format_partition(la)},
                     {"coeff", nlohmann::json::parse(cf.to_json())}});
    std::cout << arr.dump() << "\n";
    return;
  }
  for (const auto& [la, cf] : ex.terms) {
    if (fmt == "latex")
      std::cout << label << "_{" << eta::format_partition(la)
                << "}: " << cf.to_latex() << "\n";
    else
      std::cout << label << "[" << eta::format_partition(la)
                << "]: " << cf.to_string() << "\n";
  }
}

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path.empty() || path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "double eta polynomial calculator for even orthogonal Grassmannians; "
      "set ETA_THREADS to parallelize the verify suites"};
  app.require_subcommand(1);

  std::string format = "text";
  int k = 1;

  auto* compute = app.add_subcommand(
      "compute", "compute a double eta polynomial from a typed partition");
  std::string lambda_text;
  bool hat = false, single = false, nf = false;
  std::string expand;
  compute->add_option("--k", k, "number of special columns")->required();
  compute
      ->add_option("--lambda", lambda_text,
                   "typed partition like 2,1:t2, or a bare shape with --hat")
      ->required();
  compute->add_flag("--hat", hat, "hatted class of a bare shape");
  compute->add_flag("--single", single, "set all t variables to zero");
  compute->add_flag("--normal-form", nf, "reduce modulo the ideal");
  compute
      ->add_option("--expand-basis", expand,
                   "expand in the monomial (b) or eta basis")
      ->check(CLI::IsMember({"b", "eta"}));
  compute->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "latex"}));

  auto* nfcmd = app.add_subcommand(
      "normal-form", "reduce a polynomial (JSON on stdin or --in) "
                     "modulo the ideal");
  std::string in_path = "-";
  nfcmd->add_option("--k", k, "number of special columns")->required();
  nfcmd->add_option("--in", in_path, "input file, - for stdin");
  nfcmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "latex"}));

  auto* becmd = app.add_subcommand(
      "basis-expand", "expand a polynomial (JSON on stdin or --in) in the "
                      "monomial or eta basis");
  std::string basis = "b";
  becmd->add_option("--k", k, "number of special columns")->required();
  becmd->add_option("--basis", basis, "basis to expand in")
      ->check(CLI::IsMember({"b", "eta"}));
  becmd->add_option("--in", in_path, "input file, - for stdin");
  becmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "latex"}));

  auto* scmd = app.add_subcommand(
      "schubert", "type A Schubert polynomial of a permutation");
  std::string perm_text;
  bool negate = false;
  scmd->add_option("--perm", perm_text, "one-line permutation like 3,1,2")
      ->required();
  scmd->add_flag("--negate-t", negate, "evaluate at negated variables");
  scmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "latex"}));

  auto* vcmd = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  eta::VerifyOptions vopt;
  vcmd->add_option("suite", suite,
                   "tables|identities|covers|hat|splitting|basis|all");
  vcmd->add_option("--k", vopt.kmax, "largest k exercised");
  vcmd->add_option("--n", vopt.n, "rank bound for the cover suite");
  vcmd->add_option("--max-weight", vopt.max_weight,
                   "weight bound for the per-partition suites");
  vcmd->add_option("--seed", vopt.seed, "seed for the randomized laws");

  auto* ecmd = app.add_subcommand(
      "enumerate", "list typed k-strict partitions in a box or of a weight");
  int rows = 0, cols = 0, weight = -1;
  ecmd->add_option("--k", k, "number of special columns")->required();
  ecmd->add_option("--rows", rows, "maximum number of parts");
  ecmd->add_option("--cols", cols, "maximum part size");
  ecmd->add_option("--weight", weight, "exact weight instead of a box");
  ecmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "latex"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) {
      eta::Polynomial f;
      if (hat) {
        f = eta::double_eta_hat(eta::parse_shape(lambda_text, k), k);
      } else {
        f = eta::double_eta(eta::parse_partition(lambda_text, k));
      }
      if (single) f = f.zero_t();
      if (nf) f = eta::normal_form(f, k);
      if (!expand.empty()) {
        eta::BasisExpansion ex =
            expand == "b" ? eta::expand_in_b_basis(f, k)
                          : eta::expand_in_eta_basis(f, k);
        print_expansion(ex, expand == "b" ? "b" : "H", format);
      } else {
        print_poly(f, format);
      }
    } else if (nfcmd->parsed()) {
      eta::Polynomial f = eta::Polynomial::from_json(read_input(in_path));
      print_poly(eta::normal_form(f, k), format);
    } else if (becmd->parsed()) {
      eta::Polynomial f = eta::Polynomial::from_json(read_input(in_path));
      eta::BasisExpansion ex = basis == "b"
                                   ? eta::expand_in_b_basis(f, k)
                                   : eta::expand_in_eta_basis(f, k);
      print_expansion(ex, basis == "b" ? "b" : "H", format);
    } else if (scmd->parsed()) {
      eta::Permutation u;
      {
        std::vector<int> w;
        std::stringstream ss(perm_text);
        std::string tok;
        while (std::getline(ss, tok, ','))
          w.push_back(std::stoi(tok));
        u = eta::make_permutation(std::move(w));
      }
      eta::Polynomial f = eta::schubert_poly(u);
      if (negate) f = f.negate_t();
      print_poly(f, format);
    } else if (vcmd->parsed()) {
      std::vector<eta::SuiteReport> reps = eta::verify_suites(suite, vopt);
      int pass = 0, total = 0;
      for (const eta::SuiteReport& rep : reps) {
        eta::print_report(std::cout, rep);
        pass += rep.passed();
        total += rep.total();
      }
      std::cout << "total: passed " << pass << "/" << total << "\n";
      return pass == total ? 0 : 1;
    } else if (ecmd->parsed()) {
      if (weight >= 0) {
        rows = cols = weight;
      } else if (rows <= 0 || cols <= 0) {
        throw std::invalid_argument(
            "enumerate needs --weight or both --rows and --cols");
      }
      nlohmann::json arr = nlohmann::json::array();
      for (const eta::TypedPartition& la :
           eta::enumerate_typed(k, rows, cols)) {
        if (weight >= 0 && la.weight() != weight) continue;
        if (format == "json")
          arr.push_back(eta::format_partition(la));
        else
          std::cout << eta::format_partition(la) << "\n";
      }
      if (format == "json") std::cout << arr.dump() << "\n";
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
