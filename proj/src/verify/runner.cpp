#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <future>
#include <sstream>

#include "affsym/random.hpp"
#include "affsym/verify.hpp"
#include "checks.hpp"

namespace affsym::verify {
namespace {

constexpr double kPairingTolerance = 1e-12;

double tolerance_for(detail::Tier tier, const RunConfig& config) {
    switch (tier) {
        case detail::Tier::alg: return config.tol_alg;
        case detail::Tier::fd: return config.tol_fd;
        case detail::Tier::exact: return 0.0;
        case detail::Tier::pairing: return kPairingTolerance;
    }
    return 0.0;
}

bool selects_all(const std::vector<std::string>& names) {
    return std::find(names.begin(), names.end(), "all") != names.end();
}

const detail::CheckSpec* find_check(const std::string& name) {
    for (const auto& c : detail::registry()) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

CheckResult execute(const detail::CheckSpec& spec, const RunConfig& config) {
    const detail::Context ctx{config.n,       config.trials, derive_seed(config.seed, spec.name),
                              config.tol_alg, config.tol_fd, config.fd_step};
    const auto start = std::chrono::steady_clock::now();
    double residual = 0.0;
    try {
        residual = spec.residual(ctx);
    } catch (const std::exception&) {
        // A library precondition tripping inside a check is a failure, not a crash.
        residual = INFINITY;
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    return {spec.name, residual <= tolerance_for(spec.tier, config), residual, config.trials, elapsed.count()};
}

std::string format_double(const char* fmt, double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, fmt, value);
    return buffer;
}

}  // namespace

const std::vector<CheckInfo>& list_checks() {
    static const std::vector<CheckInfo> infos = [] {
        std::vector<CheckInfo> out;
        for (const auto& c : detail::registry()) out.push_back({c.name, c.description});
        return out;
    }();
    return infos;
}

std::vector<std::string> parse_check_list(const std::string& csv) {
    std::vector<std::string> names;
    std::stringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (!item.empty()) names.push_back(item);
    }
    return names;
}

void validate(const RunConfig& config) {
    if (config.n < 1) throw UsageError("--n must be at least 1");
    if (config.trials < 1) throw UsageError("--trials must be at least 1");
    if (!(config.tol_alg > 0.0) || !(config.tol_fd > 0.0)) throw UsageError("tolerances must be positive");
    if (!(config.fd_step > 0.0)) throw UsageError("--fd-step must be positive");
    if (config.checks.empty()) throw UsageError("no checks selected");
    for (const auto& name : config.checks) {
        if (name != "all" && find_check(name) == nullptr) throw UsageError("unknown check: " + name);
    }
}

Report run(const RunConfig& config) {
    validate(config);
    std::vector<const detail::CheckSpec*> selected;
    for (const auto& c : detail::registry()) {
        if (selects_all(config.checks) ||
            std::find(config.checks.begin(), config.checks.end(), c.name) != config.checks.end()) {
            selected.push_back(&c);
        }
    }

    std::vector<std::future<CheckResult>> pending;
    pending.reserve(selected.size());
    for (const auto* spec : selected) {
        pending.push_back(std::async(std::launch::async, [spec, &config] { return execute(*spec, config); }));
    }

    Report report{config.n, config.seed, config.trials, {}, true};
    for (auto& f : pending) {
        report.checks.push_back(f.get());
        report.all_passed = report.all_passed && report.checks.back().passed;
    }
    return report;
}

int exit_code(const Report& report) { return report.all_passed ? 0 : 1; }

nlohmann::json to_json(const Report& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
        // JSON has no infinity; a check that threw reports null.
        nlohmann::json residual = std::isfinite(c.max_residual) ? nlohmann::json(c.max_residual) : nlohmann::json();
        checks.push_back({{"name", c.name},
                          {"passed", c.passed},
                          {"max_residual", residual},
                          {"trials", c.trials},
                          {"seconds", c.seconds}});
    }
    return {{"n", report.n},
            {"seed", report.seed},
            {"trials", report.trials},
            {"checks", checks},
            {"all_passed", report.all_passed}};
}

std::string to_text(const Report& report) {
    std::ostringstream out;
    std::size_t width = 0;
    for (const auto& c : report.checks) width = std::max(width, c.name.size());
    for (const auto& c : report.checks) {
        out << c.name << std::string(width - c.name.size() + 2, '.') << ' ' << (c.passed ? "PASS" : "FAIL")
            << " max_residual=" << format_double("%.17g", c.max_residual) << " trials=" << c.trials
            << " seconds=" << format_double("%.3f", c.seconds) << '\n';
    }
    out << (report.all_passed ? "all checks passed" : "some checks FAILED") << " (n=" << report.n
        << ", seed=" << report.seed << ")\n";
    return out.str();
}

std::string listing_text() {
    std::ostringstream out;
    std::size_t width = 0;
    for (const auto& c : list_checks()) width = std::max(width, c.name.size());
    for (const auto& c : list_checks()) {
        out << c.name << std::string(width - c.name.size() + 2, ' ') << c.description << '\n';
    }
    return out.str();
}

}  // namespace affsym::verify
