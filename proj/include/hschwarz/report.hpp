#pragma once

// Verification reports and their order-independent reducer.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <tuple>
#include <vector>

namespace hschwarz {

/// One row of the per-sample table; the worst node of a sample.
struct ReportRecord {
    std::string inequality;
    std::uint64_t seed = 0;
    int p = 0;
    double s = 0.0;
    double grid_r = 0.0;
    double grid_theta = 0.0;
    double attained = 0.0;
    double bound = 0.0;
    double margin = 0.0;

    friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

struct WorstCase {
    std::uint64_t seed = 0;
    int grid_index = -1;
    double r = 0.0;
    double theta = 0.0;

    friend bool operator==(const WorstCase&, const WorstCase&) = default;
};

/// Grid statistics for one checked inequality. Margins are signed
/// bound-minus-attained (or minus the deviation, for identities); a margin
/// below -tolerance is a violation.
struct VerificationReport {
    std::string inequality;
    long long samples = 0;
    long long grid_points = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    WorstCase worst_case;
    long long violations = 0;
    double tolerance = 0.0;
    /// Auxiliary checks: bound ordering, weaker-comparator margin, and
    /// independent re-derivations of the attained value.
    long long ordering_violations = 0;
    double comparator_min_margin = std::numeric_limits<double>::infinity();
    long long cross_check_failures = 0;
    double max_cross_check_error = 0.0;
    std::vector<ReportRecord> records;

    bool passed() const noexcept {
        return violations == 0 && ordering_violations == 0 && cross_check_failures == 0;
    }

    /// Record a margin at a node; keeps the smallest margin, ties broken by
    /// the lexicographically smallest (seed, grid index).
    void observe(double margin, std::uint64_t seed, int grid_index, double r, double theta) {
        ++grid_points;
        if (!(margin >= -tolerance)) ++violations;
        if (margin < min_margin ||
            (margin == min_margin && std::tie(seed, grid_index) < std::tie(worst_case.seed, worst_case.grid_index))) {
            min_margin = margin;
            worst_case = {seed, grid_index, r, theta};
        }
    }

    void cross_check(double deviation, double limit) {
        max_cross_check_error = std::max(max_cross_check_error, deviation);
        if (!(deviation <= limit)) ++cross_check_failures;
    }
};

/// Associative merge; the result does not depend on the order of arguments
/// apart from the concatenation order of records.
inline VerificationReport merge(VerificationReport a, const VerificationReport& b) {
    if (a.inequality.empty()) a.inequality = b.inequality;
    a.samples += b.samples;
    a.grid_points += b.grid_points;
    a.violations += b.violations;
    a.tolerance = std::max(a.tolerance, b.tolerance);
    a.ordering_violations += b.ordering_violations;
    a.comparator_min_margin = std::min(a.comparator_min_margin, b.comparator_min_margin);
    a.cross_check_failures += b.cross_check_failures;
    a.max_cross_check_error = std::max(a.max_cross_check_error, b.max_cross_check_error);
    const bool take_b = b.min_margin < a.min_margin ||
                        (b.min_margin == a.min_margin &&
                         std::tie(b.worst_case.seed, b.worst_case.grid_index) <
                             std::tie(a.worst_case.seed, a.worst_case.grid_index));
    if (take_b) {
        a.min_margin = b.min_margin;
        a.worst_case = b.worst_case;
    }
    a.records.insert(a.records.end(), b.records.begin(), b.records.end());
    return a;
}

}  // namespace hschwarz
