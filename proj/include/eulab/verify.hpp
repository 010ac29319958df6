#pragma once

// Identity catalog for the command-line harness: each named identity runs a
// cross-module equality over a parameter range and reports the first
// counterexample.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "eulab/exactalg.hpp"
#include "eulab/expand.hpp"

namespace eulab {

enum class ReportStatus { pass, fail, size_guard };

struct Counterexample {
  std::string where;
  Poly expected;
  Poly actual;
};

struct IdentityReport {
  std::string identity;
  std::string range;
  ReportStatus status = ReportStatus::pass;
  std::optional<Counterexample> counterexample;
  std::string message;
  double wall_ms = 0;
  int checks = 0;
};

struct IdentityInfo {
  std::string name;
  int default_max_n;
  std::string summary;
};

const std::vector<IdentityInfo>& identity_catalog();

struct VerifyOptions {
  std::optional<int> max_n;
  std::optional<int> k;
};

/// Throws UnknownIdentityError for names outside the catalog. Size guards
/// are reported through ReportStatus::size_guard, not thrown.
IdentityReport verify_identity(std::string_view name, const VerifyOptions& options = {});

/// Every catalog identity, ordered by name.
std::vector<IdentityReport> verify_all(const VerifyOptions& options = {});

nlohmann::json report_to_json(const IdentityReport& r);
std::string to_string(ReportStatus s);

enum class TableFormat { json, csv };

/// Deterministic table output. Names: eulerian, trivariate, second-order,
/// kth-order, gamma-nij, gamma-histogram, andre.
std::string render_table(std::string_view name, int n, std::optional<int> k, TableFormat format);

nlohmann::json expansion_to_json(const Expansion& e);

struct ExpandRequest {
  Basis basis = Basis::gamma;
  std::optional<int> n;
  std::string var = "x";
  std::vector<std::string> vars;  // esym alphabet; empty = all input variables
};

Expansion run_expand(const ExpandRequest& request, const Poly& input);

}  // namespace eulab
