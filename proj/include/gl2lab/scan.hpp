#pragma once

#include <string>
#include <vector>

#include "gl2lab/classify.hpp"
#include "gl2lab/enumerate.hpp"
#include "gl2lab/subgroup.hpp"

namespace gl2 {

/// Reduction behaviour at the place above p; selects which subgroup the
/// inertia image is forced to contain (up to conjugacy).
enum class ReductionKind {
    OrdinaryOrMultTame,   // semi-Cartan power D^(e*e0)
    OrdinaryOrMultWild,   // <D^(e*e0), gamma>
    SupersingularTame,    // Cns^(e*e0)
    SupersingularWild,    // gamma present and D^((6d)!)
};

struct InertiaConstraint {
    int e;   // semistability index, in {1,2,3,4,6}
    int e0;  // absolute ramification index, 1..d
    int d;   // field degree
    ReductionKind reduction;
};

std::string constraint_name(const InertiaConstraint& c);

enum class ScanMode { Cyclotomic, Abelian };

struct ScanParams {
    int p = 0;
    int d = 1;
    bool ramified = false;
    ScanMode mode = ScanMode::Cyclotomic;
    Budget budget;
    int workers = 1;
    std::string cache_dir;  // empty: no persistence
};

struct ScanClass {
    std::string key;
    std::size_t order = 0;
    std::vector<std::string> constraints_met;
    ClassificationResult classification;
    bool conclusion_ok = false;
};

struct ScanExclusion {
    std::string key;
    std::string reason;
};

struct ScanViolation {
    std::string key;
    std::string detail;
};

struct ScanReport {
    ScanParams params;
    std::vector<ScanClass> classes;      // admissible classes
    std::vector<ScanExclusion> excluded; // filtered before admissibility
    std::vector<ScanViolation> violations;
    std::size_t total_candidates = 0;
    /// Whether the theorem's bound applies at these params, i.e. whether an
    /// empty violation list is a theorem check rather than a description.
    bool asserted = false;
    long long elapsed_ms = 0;
};

ScanReport scan_cyclotomic(const ScanParams& params);
ScanReport scan_abelian(const ScanParams& params);

std::string scan_report_to_json(const ScanReport& r, bool include_timing = false);

}  // namespace gl2
