#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cra::cli {

struct CheckResult {
    std::string name;
    double metric;     ///< worst observed deviation (or normalized distance)
    double tolerance;  ///< nominal tolerance times the scale
    bool passed;       ///< metric < tolerance
    std::string detail;
};

struct ValidationReport {
    std::uint64_t seed;
    double tolerance_scale;
    std::vector<CheckResult> checks;
    bool passed() const;
    std::string to_json() const;
};

ValidationReport run_validation(std::uint64_t seed, double tolerance_scale);

}  // namespace cra::cli
