#include "gl2lab/scan.hpp"

#include <chrono>

#include <json.hpp>

#include "gl2lab/cache.hpp"
#include "gl2lab/conjugacy.hpp"
#include "gl2lab/parallel.hpp"

namespace gl2 {

std::string constraint_name(const InertiaConstraint& c) {
    switch (c.reduction) {
        case ReductionKind::OrdinaryOrMultTame:
            return "ord-tame(e=" + std::to_string(c.e) + ",e0=" + std::to_string(c.e0) + ")";
        case ReductionKind::OrdinaryOrMultWild:
            return "ord-wild(e=" + std::to_string(c.e) + ",e0=" + std::to_string(c.e0) + ")";
        case ReductionKind::SupersingularTame:
            return "ss-tame(e=" + std::to_string(c.e) + ",e0=" + std::to_string(c.e0) + ")";
        case ReductionKind::SupersingularWild:
            return "ss-wild(d=" + std::to_string(c.d) + ")";
    }
    return "?";
}

namespace {

Mat2 semi_cartan_power_generator(int p, long long k) {
    int g = least_primitive_root(p);
    return Mat2::diag(p, mod_pow(g, k % (p - 1), p), 1);
}

/// (6d)! reduced mod m (the exponent only matters mod the generator order).
long long factorial_mod(long long x, long long m) {
    long long r = 1 % m;
    for (long long i = 2; i <= x; ++i) r = r * i % m;
    return r;
}

/// (6d)! + 1 with saturation, for the ramified abelian threshold.
long long factorial_saturating(long long x) {
    long long r = 1;
    for (long long i = 2; i <= x; ++i) {
        if (r > (1LL << 60) / i) return 1LL << 60;
        r *= i;
    }
    return r;
}

bool constraint_met(const Subgroup& g, const InertiaConstraint& c, const Mat2& cns_gen) {
    const int p = g.modulus();
    long long k = static_cast<long long>(c.e) * c.e0;
    switch (c.reduction) {
        case ReductionKind::OrdinaryOrMultTame: {
            Subgroup dk = closure(p, {semi_cartan_power_generator(p, k)});
            return conjugate_contains(g, dk).has_value();
        }
        case ReductionKind::OrdinaryOrMultWild: {
            Subgroup h = closure(p, {semi_cartan_power_generator(p, k), Mat2::unipotent(p)});
            return conjugate_contains(g, h).has_value();
        }
        case ReductionKind::SupersingularTame: {
            Subgroup h = closure(p, {mat_pow(cns_gen, k)});
            return conjugate_contains(g, h).has_value();
        }
        case ReductionKind::SupersingularWild: {
            Subgroup gam = closure(p, {Mat2::unipotent(p)});
            if (!conjugate_contains(g, gam)) return false;
            long long k6 = factorial_mod(6LL * c.d, p - 1);
            Subgroup dk = closure(p, {semi_cartan_power_generator(p, k6)});
            return conjugate_contains(g, dk).has_value();
        }
    }
    return false;
}

}  // namespace

static ScanReport run_scan(const ScanParams& params, bool cyclotomic) {
    auto t0 = std::chrono::steady_clock::now();
    const int p = params.p;
    if (p < 3 || !is_prime(p)) throw Error("scan: p must be an odd prime");
    if (params.d < 1) throw Error("scan: degree must be >= 1");

    ScanReport report;
    report.params = params;

    std::vector<Subgroup> candidates = cached_enumeration(
        params.cache_dir, p, cyclotomic ? "cyclic" : "abelian", params.budget);
    if (cyclotomic) {
        // det-injective images only: G cap SL2 = 1 (forces cyclicity)
        std::vector<Subgroup> kept;
        for (Subgroup& g : candidates)
            if (sl2_intersection(g).trivial()) kept.push_back(std::move(g));
        candidates = std::move(kept);
    }
    report.total_candidates = candidates.size();

    // ramification: unramified pins e0 = 1 and imposes det-surjectivity
    std::vector<int> e0_values;
    if (params.ramified)
        for (int e0 = 1; e0 <= params.d; ++e0) e0_values.push_back(e0);
    else
        e0_values.push_back(1);

    std::vector<InertiaConstraint> constraints;
    for (int e : {1, 2, 3, 4, 6}) {
        for (int e0 : e0_values) {
            constraints.push_back({e, e0, params.d, ReductionKind::OrdinaryOrMultTame});
            if (!cyclotomic) {
                constraints.push_back({e, e0, params.d, ReductionKind::OrdinaryOrMultWild});
            }
            constraints.push_back({e, e0, params.d, ReductionKind::SupersingularTame});
        }
    }
    if (!cyclotomic) constraints.push_back({1, 1, params.d, ReductionKind::SupersingularWild});

    Mat2 cns_gen = nonsplit_cartan_generator(p);
    Subgroup cs = standard({StandardTag::Cs, p});
    Subgroup cns = standard({StandardTag::Cns, p});

    struct PerClass {
        bool excluded = false;
        std::string exclusion_reason;
        ScanClass cls;
    };

    std::vector<PerClass> rows = parallel_map<PerClass>(
        candidates.size(), params.workers, [&](std::size_t i) {
            const Subgroup& g = candidates[i];
            PerClass row;
            row.cls.key = g.key();
            row.cls.order = g.order();
            if (!params.ramified && !det_surjective(g)) {
                row.excluded = true;
                row.exclusion_reason = g.order() % p == 0
                    ? "det image lies in the squares (unipotent-with-scalars shape)"
                    : "det not surjective";
                return row;
            }
            for (const InertiaConstraint& c : constraints)
                if (constraint_met(g, c, cns_gen)) row.cls.constraints_met.push_back(constraint_name(c));
            if (row.cls.constraints_met.empty()) return row;
            row.cls.classification = classify(g);
            bool into_cs = conjugate_contains(cs, g).has_value();
            if (cyclotomic) {
                // conclusion: G lands in Cs and contains each forcing D^(e*e0)
                bool contains_all = true;
                for (const InertiaConstraint& c : constraints) {
                    bool met = false;
                    for (const std::string& name : row.cls.constraints_met)
                        if (name == constraint_name(c)) met = true;
                    if (!met) continue;
                    Subgroup dk = closure(
                        p, {semi_cartan_power_generator(p, static_cast<long long>(c.e) * c.e0)});
                    if (!conjugate_contains(g, dk)) contains_all = false;
                }
                row.cls.conclusion_ok = into_cs && contains_all;
            } else {
                bool into_cns = conjugate_contains(cns, g).has_value();
                row.cls.conclusion_ok = into_cs || into_cns;
            }
            return row;
        });

    for (const PerClass& row : rows) {
        if (row.excluded) {
            report.excluded.push_back({row.cls.key, row.exclusion_reason});
        } else if (!row.cls.constraints_met.empty()) {
            report.classes.push_back(row.cls);
            if (!row.cls.conclusion_ok)
                report.violations.push_back(
                    {row.cls.key, cyclotomic ? "admissible class not of the form D^(e*e0) <= G <= Cs"
                                             : "admissible abelian class not inside Cs or Cns"});
        }
    }

    if (cyclotomic) {
        report.asserted = params.ramified ? p > 12 * params.d + 1 : p > 13;
    } else {
        report.asserted = params.ramified ? p > factorial_saturating(6LL * params.d) + 1 : p >= 17;
    }
    auto t1 = std::chrono::steady_clock::now();
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return report;
}

ScanReport scan_cyclotomic(const ScanParams& params) {
    if (params.mode != ScanMode::Cyclotomic) throw Error("scan_cyclotomic: wrong mode");
    return run_scan(params, true);
}

ScanReport scan_abelian(const ScanParams& params) {
    if (params.mode != ScanMode::Abelian) throw Error("scan_abelian: wrong mode");
    return run_scan(params, false);
}

std::string scan_report_to_json(const ScanReport& r, bool include_timing) {
    nlohmann::ordered_json j;
    j["params"] = {{"p", r.params.p},
                   {"d", r.params.d},
                   {"ramified", r.params.ramified},
                   {"mode", r.params.mode == ScanMode::Cyclotomic ? "cyclotomic" : "abelian"}};
    nlohmann::ordered_json classes = nlohmann::ordered_json::array();
    for (const ScanClass& c : r.classes) {
        nlohmann::ordered_json cj;
        cj["key"] = c.key;
        cj["order"] = c.order;
        cj["constraints_met"] = c.constraints_met;
        nlohmann::ordered_json labels = nlohmann::ordered_json::array();
        for (const ShapeLabel& l : c.classification.labels) labels.push_back(shape_tag_name(l.tag));
        cj["labels"] = labels;
        cj["classification"] = nlohmann::ordered_json::parse(classification_to_json(c.classification));
        cj["conclusion_ok"] = c.conclusion_ok;
        classes.push_back(cj);
    }
    j["classes"] = classes;
    nlohmann::ordered_json excluded = nlohmann::ordered_json::array();
    for (const ScanExclusion& e : r.excluded)
        excluded.push_back({{"key", e.key}, {"reason", e.reason}});
    j["excluded"] = excluded;
    nlohmann::ordered_json violations = nlohmann::ordered_json::array();
    for (const ScanViolation& v : r.violations)
        violations.push_back({{"key", v.key}, {"detail", v.detail}});
    j["violations"] = violations;
    j["totals"] = {{"classes", r.total_candidates},
                   {"admissible", r.classes.size()},
                   {"violations", r.violations.size()}};
    j["asserted"] = r.asserted;
    if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
    return j.dump();
}

}  // namespace gl2
