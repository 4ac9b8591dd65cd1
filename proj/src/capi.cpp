#include "gl2lab.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include <json.hpp>

#include "gl2lab/cache.hpp"
#include "gl2lab/classify.hpp"
#include "gl2lab/scan.hpp"
#include "gl2lab/verify.hpp"

struct gl2lab_ctx {
    std::string cache_dir;
    int workers = 1;
    bool timing = false;
    gl2::Budget budget;
    std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int usage(gl2lab_ctx* ctx, const std::string& msg) {
    ctx->last_error = msg;
    return GL2LAB_USAGE;
}

/// Wrap an operation body: exceptions become GL2LAB_USAGE + last_error.
template <typename Fn>
int guarded(gl2lab_ctx* ctx, Fn&& fn) {
    if (!ctx) return GL2LAB_USAGE;
    ctx->last_error.clear();
    try {
        return fn();
    } catch (const std::exception& e) {
        return usage(ctx, e.what());
    } catch (...) {
        return usage(ctx, "unknown error");
    }
}

int emit(char** json_out, const std::string& json) {
    if (json_out) *json_out = dup_string(json);
    return GL2LAB_OK;
}

nlohmann::ordered_json report_json(const gl2::VerifyReport& r) {
    return nlohmann::ordered_json::parse(gl2::verify_report_to_json(r));
}

}  // namespace

extern "C" {

gl2lab_ctx* gl2lab_ctx_new(void) { return new (std::nothrow) gl2lab_ctx; }

void gl2lab_ctx_free(gl2lab_ctx* ctx) { delete ctx; }

const char* gl2lab_last_error(gl2lab_ctx* ctx) {
    return ctx ? ctx->last_error.c_str() : "null context";
}

int gl2lab_set_cache_dir(gl2lab_ctx* ctx, const char* dir) {
    if (!ctx) return GL2LAB_USAGE;
    ctx->cache_dir = dir ? dir : "";
    return GL2LAB_OK;
}

int gl2lab_set_workers(gl2lab_ctx* ctx, int workers) {
    if (!ctx) return GL2LAB_USAGE;
    if (workers < 1 || workers > 256) return usage(ctx, "workers must be in 1..256");
    ctx->workers = workers;
    return GL2LAB_OK;
}

int gl2lab_set_timing(gl2lab_ctx* ctx, int enabled) {
    if (!ctx) return GL2LAB_USAGE;
    ctx->timing = enabled != 0;
    return GL2LAB_OK;
}

int gl2lab_set_budget(gl2lab_ctx* ctx, long long max_lattice_ambient,
                      int max_cyclic_p, int max_abelian_p) {
    if (!ctx) return GL2LAB_USAGE;
    if (max_lattice_ambient < 0 || max_cyclic_p < 0 || max_abelian_p < 0)
        return usage(ctx, "budget limits must be non-negative");
    if (max_lattice_ambient) ctx->budget.max_lattice_ambient = static_cast<std::size_t>(max_lattice_ambient);
    if (max_cyclic_p) ctx->budget.max_cyclic_p = max_cyclic_p;
    if (max_abelian_p) ctx->budget.max_abelian_p = max_abelian_p;
    return GL2LAB_OK;
}

int gl2lab_classify(gl2lab_ctx* ctx, int p, const char* const* gens,
                    size_t ngens, char** json_out) {
    return guarded(ctx, [&]() -> int {
        if (p < 3 || !gl2::is_prime(p)) return usage(ctx, "classify: p must be an odd prime");
        if (!gens || ngens == 0) return usage(ctx, "classify: at least one generator required");
        std::vector<gl2::Mat2> mats;
        for (size_t i = 0; i < ngens; ++i) {
            if (!gens[i]) return usage(ctx, "classify: null generator string");
            mats.push_back(gl2::parse_mat(p, gens[i]));
        }
        gl2::Subgroup g(p, std::move(mats));
        return emit(json_out, gl2::classification_to_json(gl2::classify(g)));
    });
}

int gl2lab_verify(gl2lab_ctx* ctx, const char* target, int modulus,
                  const char* part, char** json_out) {
    return guarded(ctx, [&]() -> int {
        if (!target) return usage(ctx, "verify: null target");
        std::string t = target;
        std::string pt = part ? part : "";
        std::vector<gl2::VerifyReport> reports;
        if (t == "lemma33") {
            // both index-two Cartan pairs unless a side is named
            if (pt.empty() || pt == "split")
                reports.push_back(gl2::verify_index2_lemma(
                    gl2::standard({gl2::StandardTag::Ns, modulus}),
                    gl2::standard({gl2::StandardTag::Cs, modulus}), ctx->budget));
            if (pt.empty() || pt == "nonsplit")
                reports.push_back(gl2::verify_index2_lemma(
                    gl2::standard({gl2::StandardTag::Nns, modulus}),
                    gl2::standard({gl2::StandardTag::Cns, modulus}), ctx->budget));
            if (reports.empty()) return usage(ctx, "verify lemma33: part must be split or nonsplit");
        } else if (t == "lemma34") {
            std::vector<std::string> parts =
                pt.empty() ? std::vector<std::string>{"a", "b", "c", "d"}
                           : std::vector<std::string>{pt};
            for (const std::string& q : parts)
                reports.push_back(gl2::verify_lemma34(modulus, q, ctx->budget));
        } else if (t == "prop32") {
            reports.push_back(gl2::verify_prop32(modulus, pt.empty() ? "all" : pt, ctx->budget));
        } else if (t == "prop31") {
            reports.push_back(gl2::verify_prop31_group_side(modulus, ctx->budget));
        } else {
            return usage(ctx, "verify: unknown target \"" + t + "\"");
        }
        bool pass = true;
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const gl2::VerifyReport& r : reports) {
            pass = pass && r.pass;
            j.push_back(report_json(r));
        }
        emit(json_out, j.size() == 1 ? j[0].dump() : j.dump());
        return pass ? GL2LAB_OK : GL2LAB_VIOLATION;
    });
}

int gl2lab_scan(gl2lab_ctx* ctx, const char* mode, int p, int d,
                int ramified, char** json_out) {
    return guarded(ctx, [&]() -> int {
        if (!mode) return usage(ctx, "scan: null mode");
        std::string m = mode;
        gl2::ScanParams params;
        params.p = p;
        params.d = d;
        params.ramified = ramified != 0;
        params.budget = ctx->budget;
        params.workers = ctx->workers;
        params.cache_dir = ctx->cache_dir;
        gl2::ScanReport report;
        if (m == "cyclotomic") {
            params.mode = gl2::ScanMode::Cyclotomic;
            report = gl2::scan_cyclotomic(params);
        } else if (m == "abelian") {
            params.mode = gl2::ScanMode::Abelian;
            report = gl2::scan_abelian(params);
        } else {
            return usage(ctx, "scan: mode must be cyclotomic or abelian");
        }
        emit(json_out, gl2::scan_report_to_json(report, ctx->timing));
        return report.violations.empty() ? GL2LAB_OK : GL2LAB_VIOLATION;
    });
}

int gl2lab_cache_op(gl2lab_ctx* ctx, const char* action, int p,
                    const char* family, char** json_out) {
    return guarded(ctx, [&]() -> int {
        if (!action) return usage(ctx, "cache: null action");
        std::string act = action;
        nlohmann::ordered_json j;
        if (act == "warm") {
            if (ctx->cache_dir.empty()) return usage(ctx, "cache warm: no cache directory configured");
            std::string fam = family ? family : "";
            if (fam != "cyclic" && fam != "abelian")
                return usage(ctx, "cache warm: family must be cyclic or abelian");
            gl2::cache_warm(ctx->cache_dir, p, fam, ctx->budget);
            j["action"] = "warm";
            j["file"] = gl2::cache_file_name(p, fam, ctx->budget);
        } else if (act == "clear") {
            if (ctx->cache_dir.empty()) return usage(ctx, "cache clear: no cache directory configured");
            j["action"] = "clear";
            j["removed"] = gl2::cache_clear(ctx->cache_dir);
        } else if (act == "stat") {
            if (ctx->cache_dir.empty()) return usage(ctx, "cache stat: no cache directory configured");
            j["action"] = "stat";
            nlohmann::ordered_json entries = nlohmann::ordered_json::array();
            for (const gl2::CacheEntryInfo& e : gl2::cache_stat(ctx->cache_dir))
                entries.push_back({{"file", e.file},
                                   {"p", e.p},
                                   {"family", e.family},
                                   {"subgroups", e.subgroups},
                                   {"bytes", e.bytes}});
            j["entries"] = entries;
        } else {
            return usage(ctx, "cache: action must be warm, clear or stat");
        }
        return emit(json_out, j.dump());
    });
}

void gl2lab_string_free(char* s) { std::free(s); }

}  // extern "C"
