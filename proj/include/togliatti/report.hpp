#pragma once

// JSON and plain-text renderings of the reports produced by the CLI. The JSON
// layout is versioned by kReportSchema; see docs/report_schema.md.

#include <json.hpp>

#include <string>

#include "togliatti/classify.hpp"
#include "togliatti/family.hpp"

namespace togliatti {

inline constexpr const char* kReportSchema = "togliatti-report/1";

struct BoundRow {
  int n = 0;
  std::int64_t bound = 0;  ///< C(n+1,3) + n + 1
  std::vector<PartitionSpec> partitions;
  std::vector<std::int64_t> mu;
  std::vector<std::int64_t> beta;
  std::int64_t max_mu = 0;
  std::vector<PartitionSpec> argmax;
};

/// mu and beta of every family member for 2 <= n <= n_max.
std::vector<BoundRow> bound_table(int n_max);

nlohmann::json to_json(const MonomialSystem& sys);
nlohmann::json to_json(const QuadricForm& q);
nlohmann::json to_json(const TogliattiVerdict& v);
nlohmann::json to_json(const SmoothnessCertificate& s);
nlohmann::json to_json(const CheckReport& r);
/// Omits wall time so that reports are reproducible byte for byte.
nlohmann::json to_json(const ClassificationResult& r);
nlohmann::json to_json(const VerifyReport& r);
nlohmann::json to_json(const FamilySystem& f, const CheckReport& check);
nlohmann::json to_json(const std::vector<BoundRow>& table);

/// Wraps a payload with the schema tag and command name.
nlohmann::json envelope(const std::string& command, nlohmann::json payload);

std::string render_text(const CheckReport& r, bool verbose);
std::string render_text(const ClassificationResult& r);
std::string render_text(const VerifyReport& r);
std::string render_text(const FamilySystem& f, const CheckReport& check);
std::string render_text(const std::vector<BoundRow>& table);

}  // namespace togliatti
