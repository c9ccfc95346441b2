#pragma once

#include <json.hpp>

#include "depict/depiction.hpp"

namespace depict {

using Json = nlohmann::ordered_json;

/// A scenario: named rings, the subring R = k + I, declared depictions, and
/// a list of queries. Loaded from JSON text or one of the bundled examples.
class Scenario {
 public:
  static Scenario from_json_text(const std::string& text,
                                 std::optional<std::uint64_t> field_override =
                                     std::nullopt,
                                 bool field_forced = false);
  static Scenario bundled(const std::string& id,
                          std::optional<std::uint64_t> field_override = std::nullopt,
                          bool field_forced = false);
  static std::vector<std::string> bundled_ids();

  const std::string& name() const { return name_; }
  const std::optional<std::uint64_t>& modulus() const { return modulus_; }
  const DepictionScene& scene() const { return *scene_; }
  const Json& queries() const { return queries_; }
  const std::vector<std::string>& notes() const { return notes_; }
  DomainPtr ring(const std::string& name) const;

 private:
  Scenario() = default;
  std::string name_;
  std::optional<std::uint64_t> modulus_;
  std::vector<std::pair<std::string, DomainPtr>> rings_;
  std::optional<DepictionScene> scene_;
  Json queries_ = Json::array();
  std::vector<std::string> notes_;
};

struct RunResult {
  Json report;
  bool unsupported = false;  // graceful "cannot compute" outcome (exit 2)
};

/// Evaluate a single query object against the scenario.
Json run_query(const Scenario& s, const Json& query, bool& unsupported,
               std::vector<std::string>& warnings, std::vector<std::string>& citations);

/// Evaluate the scenario's own query list into a full report.
RunResult run_queries(const Scenario& s);

/// Evaluate an externally supplied query list into a full report.
RunResult run_queries(const Scenario& s, const Json& queries);

/// Human-readable rendering of a report.
std::string render_text(const Json& report);

}  // namespace depict
