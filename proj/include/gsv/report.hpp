#ifndef GSV_REPORT_HPP
#define GSV_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gsv/choice.hpp"

namespace gsv {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

struct SuiteConfig {
  int n = 3;
  int N = 2;
  std::vector<std::string> suites;  // empty = all
  std::uint64_t seed = 1;
  long long samples = 1000;  // random tables for the equivalence suite
  bool exhaustive_validation = false;
  std::string dump_complex_path;
};

extern const std::vector<std::string> kAllSuites;

// Desk-scale envelope. Throws std::invalid_argument with an explicit
// message when (n, N) is too large for the requested suite.
void require_supported(const std::string& suite, int n, int N);

// Each suite returns a JSON object with at least {"pass": bool}; wall
// clock goes into the separate top-level "timing" object.
nlohmann::json run_suite(const std::string& suite, const SuiteConfig& config);

nlohmann::json cmd_verify(const SuiteConfig& config);
nlohmann::json cmd_analyze(const SocialChoiceFunction& f, const SuiteConfig& config);
nlohmann::json cmd_homology(const std::string& target, int n, int N,
                            std::optional<int> degree, const std::string& dump_path);
nlohmann::json cmd_enumerate(const SuiteConfig& config);
nlohmann::json cmd_arrangement(const SuiteConfig& config);

// True iff every "pass" field in the document (recursively) is true.
bool report_passes(const nlohmann::json& report);

nlohmann::json complex_dump(int n, int N, const std::string& target);

}  // namespace gsv

#endif
