#pragma once

#include "cotlab/characteristics.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cotlab {

struct CheckRecord {
    std::string name;
    bool pass;
    double measured;
    double tolerance;
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckRecord> checks;
    std::string version;
    std::vector<std::pair<std::string, std::string>> input;

    [[nodiscard]] std::size_t passed() const noexcept;
    [[nodiscard]] std::size_t failed() const noexcept;
    /// Records measured <= tolerance.
    void add(std::string name, double measured, double tolerance);
};

const std::vector<std::string>& suite_names();

/// Runs one of riccati | families | burgers | models | comparison.
/// Throws std::invalid_argument for unknown suites.
VerificationReport run_suite(std::string_view suite);

/// Stable key order: suite, version, input, checks, summary.
std::string report_json(const VerificationReport& report, int indent = 2);

/// Max over interior uniformly-spaced samples of
/// |(a[i+1] - a[i-1]) / (t[i+1] - t[i-1]) - a[i]^2 - r[i]|.
double riccati_defect(const CharacteristicTrace& trace);

} // namespace cotlab
