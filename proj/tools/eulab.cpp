// eulab: verify identities, print tables, expand polynomials read from stdin.
//
// Exit codes: 0 pass, 1 fail, 2 usage, 3 size guard, 4 parse error,
// 5 not palindromic, 6 not symmetric, 7 not expandable.

#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eulab/errors.hpp"
#include "eulab/poly_json.hpp"
#include "eulab/verify.hpp"

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kSizeGuard = 3, kParse = 4, kNotPalindromic = 5, kNotSymmetric = 6, kNotExpandable = 7 };

int print_reports(const std::vector<eulab::IdentityReport>& reports, bool json) {
  bool failed = false, guarded = false;
  nlohmann::json all = nlohmann::json::array();
  for (const auto& r : reports) {
    failed |= r.status == eulab::ReportStatus::fail;
    guarded |= r.status == eulab::ReportStatus::size_guard;
    if (json) {
      all.push_back(eulab::report_to_json(r));
      continue;
    }
    std::cout << r.identity << ' ' << eulab::to_string(r.status) << ' ' << r.range << " checks=" << r.checks << '\n';
    if (r.counterexample) {
      std::cout << "  at " << r.counterexample->where << '\n'
                << "  expected " << eulab::dump_poly(r.counterexample->expected) << '\n'
                << "  actual   " << eulab::dump_poly(r.counterexample->actual) << '\n';
    }
    if (!r.message.empty()) std::cout << "  " << r.message << '\n';
  }
  if (json) std::cout << (reports.size() == 1 ? all[0] : all).dump(2) << '\n';
  // timings go to stderr so stdout stays byte-identical between runs
  for (const auto& r : reports) std::cerr << r.identity << ": " << r.wall_ms << " ms\n";
  if (failed) return kFail;
  if (guarded) return kSizeGuard;
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Eulerian-type identities"};
  app.require_subcommand(1);

  std::string identity;
  std::optional<int> max_n, verify_k;
  bool json = false;
  auto* verify = app.add_subcommand("verify", "check an identity (or 'all') over its range");
  verify->add_option("identity", identity, "identity name or 'all'")->required();
  verify->add_option("--max-n", max_n, "largest n to test");
  verify->add_option("--k", verify_k, "restrict to one k");
  verify->add_flag("--json", json, "JSON report");

  std::string table_name, format = "json";
  int table_n = 0;
  std::optional<int> table_k;
  auto* table = app.add_subcommand("table", "print a table");
  table->add_option("name", table_name)->required();
  table->add_option("--n", table_n)->required();
  table->add_option("--k", table_k);
  table->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  std::string basis;
  eulab::ExpandRequest request;
  std::string vars;
  auto* expand = app.add_subcommand("expand", "expand a Poly-JSON read from stdin");
  expand->add_option("basis", basis)->required()->check(CLI::IsMember({"gamma", "frobenius", "partial-gamma", "esym"}));
  expand->add_option("--n", request.n, "degree of the expansion");
  expand->add_option("--var", request.var, "expansion variable (gamma, frobenius)");
  expand->add_option("--vars", vars, "comma-separated alphabet (esym)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*verify) {
      eulab::VerifyOptions options{max_n, verify_k};
      if (identity == "all") return print_reports(eulab::verify_all(options), json);
      return print_reports({eulab::verify_identity(identity, options)}, json);
    }
    if (*table) {
      std::cout << eulab::render_table(table_name, table_n, table_k,
                                       format == "csv" ? eulab::TableFormat::csv : eulab::TableFormat::json);
      return kPass;
    }
    if (*expand) {
      request.basis = eulab::basis_from_string(basis);
      if (!vars.empty()) {
        std::string item;
        for (char ch : vars + ",") {
          if (ch != ',') {
            item += ch;
          } else if (!item.empty()) {
            request.vars.push_back(item);
            item.clear();
          }
        }
      }
      const std::string input{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
      const eulab::Poly p = eulab::parse_poly(input);
      std::cout << eulab::expansion_to_json(eulab::run_expand(request, p)).dump() << '\n';
      return kPass;
    }
  } catch (const eulab::SizeLimitError& e) {
    std::cerr << "size guard: " << e.what() << '\n';
    return kSizeGuard;
  } catch (const eulab::OutOfRangeError& e) {
    std::cerr << "size guard: " << e.what() << '\n';
    return kSizeGuard;
  } catch (const eulab::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const eulab::NotPalindromicError& e) {
    std::cerr << "not palindromic: " << e.what() << '\n';
    return kNotPalindromic;
  } catch (const eulab::NotSymmetricError& e) {
    std::cerr << "not symmetric: " << e.what() << '\n';
    return kNotSymmetric;
  } catch (const eulab::NotExpandableError& e) {
    std::cerr << "not expandable: " << e.what() << '\n';
    return kNotExpandable;
  } catch (const eulab::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
