#pragma once

// Verification suites and their JSON report.
//
//   {"suite": ..., "version": ..., "seed": ...,
//    "checks": [{"id", "status", "expected", "computed", "ms"}, ...],
//    "data": {...}}
//
// A check passes exactly when expected and computed agree as strings.

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace klein {

inline constexpr const char* kToolVersion = "0.1.0";

enum class CheckStatus { pass, fail, evidence_only };
std::string to_string(CheckStatus s);

struct CheckResult {
    std::string id;
    CheckStatus status = CheckStatus::fail;
    std::string expected;
    std::string computed;
    long long ms = 0;
};

struct VerificationReport {
    std::string suite;
    std::string version = kToolVersion;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    nlohmann::ordered_json data = nlohmann::ordered_json::object();

    bool any_failed() const;
    const CheckResult* find(const std::string& id) const;
};

struct SuiteOptions {
    std::uint64_t seed = 0;
    int samples = 25;
    std::uint64_t prime = 10007;
    /// Record ms = 0 so that repeated runs give identical bytes.
    bool timing = true;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

const std::vector<std::string>& suite_names();  // without "all"

/// Throws UsageError for an unknown suite name.
VerificationReport run_suite(const std::string& name, const SuiteOptions& opts);

nlohmann::ordered_json to_json(const VerificationReport& r);
/// 0 if nothing failed, 1 otherwise.
int exit_code(const VerificationReport& r);

/// Normalized fibration data for one or two comma-separated scalar lists.
/// Throws ParseError or std::invalid_argument on bad input.
nlohmann::ordered_json fibration_query(const std::string& l1, const std::optional<std::string>& l2);

/// Smoothness of a cubic given as "x1^2*x2=1;...".
nlohmann::ordered_json smooth_query(const std::string& cubic, std::uint64_t prime);

}  // namespace klein
