#ifndef AFFSYM_VERIFY_HPP
#define AFFSYM_VERIFY_HPP

// Seeded property checks over the whole library, with text and JSON reports.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace affsym::verify {

enum class Format { text, json };

struct RunConfig {
    long n = 2;
    long trials = 100;
    std::uint64_t seed = 0;
    double tol_alg = 1e-9;
    double tol_fd = 1e-6;
    double fd_step = 1e-5;
    std::vector<std::string> checks{"all"};
    Format format = Format::text;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    double max_residual = 0.0;
    long trials = 0;
    double seconds = 0.0;
};

struct Report {
    long n = 0;
    std::uint64_t seed = 0;
    long trials = 0;
    std::vector<CheckResult> checks;
    bool all_passed = false;
};

struct CheckInfo {
    std::string name;
    std::string description;
};

/// Bad configuration or unknown check name; maps to exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Every check, sorted by name.
const std::vector<CheckInfo>& list_checks();

/// Splits "a,b,c" into names; "all" stays a single entry.
std::vector<std::string> parse_check_list(const std::string& csv);

/// Throws UsageError on invalid settings or unknown check names.
void validate(const RunConfig& config);

/// Runs the selected checks (concurrently; each draws from its own stream
/// derived from the seed and the check name). Results come back in listing order.
Report run(const RunConfig& config);

/// 0 when every check passed, 1 otherwise.
int exit_code(const Report& report);

nlohmann::json to_json(const Report& report);
std::string to_text(const Report& report);
std::string listing_text();

}  // namespace affsym::verify

#endif  // AFFSYM_VERIFY_HPP
