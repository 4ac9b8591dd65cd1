// gl2lab command-line front end. All mathematics happens behind the C API;
// this program only parses arguments, forwards calls and formats reports.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gl2lab.h"

namespace {

using nlohmann::ordered_json;

struct CtxDeleter {
    void operator()(gl2lab_ctx* c) const { gl2lab_ctx_free(c); }
};

struct StrDeleter {
    void operator()(char* s) const { gl2lab_string_free(s); }
};

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::vector<std::string> string_array(const ordered_json& j) {
    std::vector<std::string> out;
    for (const auto& x : j) out.push_back(x.get<std::string>());
    return out;
}

/// One admissible class per row for scan reports.
std::string scan_to_csv(const ordered_json& j) {
    std::string out = "key,order,constraints_met,labels,conclusion_ok\n";
    for (const auto& c : j["classes"]) {
        out += csv_escape(c["key"].get<std::string>()) + ",";
        out += std::to_string(c["order"].get<long long>()) + ",";
        out += csv_escape(join(string_array(c["constraints_met"]), "|")) + ",";
        out += csv_escape(join(string_array(c["labels"]), "|")) + ",";
        out += c["conclusion_ok"].get<bool>() ? "true\n" : "false\n";
    }
    return out;
}

std::string scan_to_text(const ordered_json& j) {
    const auto& p = j["params"];
    std::string out = "scan " + p["mode"].get<std::string>() +
                      "  p=" + std::to_string(p["p"].get<int>()) +
                      "  d=" + std::to_string(p["d"].get<int>()) +
                      (p["ramified"].get<bool>() ? "  ramified" : "  unramified") + "\n";
    const auto& t = j["totals"];
    out += "candidate classes: " + std::to_string(t["classes"].get<long long>()) +
           "   admissible: " + std::to_string(t["admissible"].get<long long>()) +
           "   violations: " + std::to_string(t["violations"].get<long long>()) + "\n";
    out += std::string("conclusion ") +
           (j["asserted"].get<bool>() ? "asserted (theorem range)" : "descriptive (below threshold)") +
           "\n";
    for (const auto& c : j["classes"]) {
        out += "  order " + std::to_string(c["order"].get<long long>()) + "  [" +
               join(string_array(c["labels"]), ",") + "]  constraints: " +
               join(string_array(c["constraints_met"]), " ") +
               (c["conclusion_ok"].get<bool>() ? "" : "  ** VIOLATION **") + "\n";
    }
    for (const auto& v : j["violations"])
        out += "violation: " + v["detail"].get<std::string>() + "\n";
    return out;
}

std::string verify_one_to_text(const ordered_json& j) {
    std::string out = j["target"].get<std::string>();
    std::string part = j.value("part", std::string());
    if (!part.empty()) out += " part " + part;
    out += "  modulus " + std::to_string(j["modulus"].get<int>());
    out += j["pass"].get<bool>() ? "  PASS" : "  FAIL";
    out += "  (" + std::to_string(j["checked"].get<long long>()) + " checks)\n";
    for (const auto& f : j["failures"])
        out += "  failure: " + f["what"].get<std::string>() + " — " +
               f["detail"].get<std::string>() + "\n";
    return out;
}

std::string verify_to_csv(const ordered_json& j) {
    std::string out = "target,part,modulus,pass,checked,failures\n";
    auto row = [&](const ordered_json& r) {
        out += r["target"].get<std::string>() + "," + r.value("part", std::string()) + "," +
               std::to_string(r["modulus"].get<int>()) + "," +
               (r["pass"].get<bool>() ? "true" : "false") + "," +
               std::to_string(r["checked"].get<long long>()) + "," +
               std::to_string(r["failures"].size()) + "\n";
    };
    if (j.is_array())
        for (const auto& r : j) row(r);
    else
        row(j);
    return out;
}

std::string classify_to_text(const ordered_json& j) {
    std::string key = j["key"].get<std::string>();
    std::string out = "subgroup of order ";
    out += std::to_string(std::count(key.begin(), key.end(), ';') + 1) + "\n";
    std::vector<std::string> labels;
    for (const auto& l : j["labels"]) labels.push_back(l["tag"].get<std::string>());
    out += "labels: " + (labels.empty() ? std::string("(none)") : join(labels, ", ")) + "\n";
    out += "projective order " + std::to_string(j["projective_order"].get<int>());
    out += j["is_abelian"].get<bool>() ? ", abelian" : ", non-abelian";
    out += j["is_diagonalizable"].get<bool>() ? ", diagonalizable" : "";
    out += ", det image order " + std::to_string(j["det_image_order"].get<int>()) + "\n";
    return out;
}

std::string classify_to_csv(const ordered_json& j) {
    std::vector<std::string> labels;
    for (const auto& l : j["labels"]) labels.push_back(l["tag"].get<std::string>());
    std::string out = "labels,projective_order,is_abelian,is_diagonalizable,det_image_order\n";
    out += csv_escape(join(labels, "|")) + "," +
           std::to_string(j["projective_order"].get<int>()) + "," +
           (j["is_abelian"].get<bool>() ? "true," : "false,") +
           (j["is_diagonalizable"].get<bool>() ? "true," : "false,") +
           std::to_string(j["det_image_order"].get<int>()) + "\n";
    return out;
}

std::string cache_to_text(const ordered_json& j) {
    std::string act = j["action"].get<std::string>();
    if (act == "warm") return "warmed " + j["file"].get<std::string>() + "\n";
    if (act == "clear") return "removed " + std::to_string(j["removed"].get<long long>()) + " entries\n";
    std::string out;
    for (const auto& e : j["entries"])
        out += e["file"].get<std::string>() + "  subgroups=" +
               std::to_string(e["subgroups"].get<long long>()) + "  bytes=" +
               std::to_string(e["bytes"].get<long long>()) + "\n";
    if (out.empty()) out = "(no cache entries)\n";
    return out;
}

int write_report(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return 0;
    }
    std::ofstream out(output_path);
    if (!out) {
        std::cerr << "error: cannot write " << output_path << "\n";
        return GL2LAB_USAGE;
    }
    out << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with subgroups of GL2(Z/nZ)"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string format = "json";
    std::string output_path;
    std::string cache_dir;
    if (const char* env = std::getenv("GL2LAB_CACHE_DIR")) cache_dir = env;
    int workers = 1;
    bool timing = false;
    long long budget_ambient = 0;
    int budget_cyclic = 0, budget_abelian = 0;

    app.add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--output,-o", output_path, "write the report to a file");
    app.add_option("--cache-dir", cache_dir, "enumeration cache directory (default $GL2LAB_CACHE_DIR)");
    app.add_option("--workers", workers, "parallel workers for scans")->check(CLI::Range(1, 256));
    app.add_flag("--timing", timing, "include elapsed_ms in JSON reports");
    app.add_option("--max-lattice-ambient", budget_ambient, "full-lattice ambient order cap");
    app.add_option("--max-cyclic-p", budget_cyclic, "cyclic enumeration prime cap");
    app.add_option("--max-abelian-p", budget_abelian, "abelian enumeration prime cap");

    auto* cmd_classify = app.add_subcommand("classify", "classify a generated subgroup");
    int cl_p = 0;
    std::vector<std::string> cl_gens;
    cmd_classify->add_option("--p", cl_p, "odd prime modulus")->required();
    cmd_classify->add_option("--gens", cl_gens, "generators, each \"a,b,c,d\"")->required();

    auto* cmd_verify = app.add_subcommand("verify", "run a verifier");
    std::string v_target, v_part;
    int v_p = 0;
    cmd_verify->add_option("target", v_target, "lemma33|lemma34|prop32|prop31")
        ->required()
        ->check(CLI::IsMember({"lemma33", "lemma34", "prop32", "prop31"}));
    cmd_verify->add_option("--p,--n", v_p, "modulus")->required();
    cmd_verify->add_option("--part", v_part, "sub-case selector (target-specific)");

    auto* cmd_scan = app.add_subcommand("scan", "inertia-constraint scan");
    std::string s_mode;
    int s_p = 0, s_d = 1;
    bool s_ram = false, s_unram = false;
    cmd_scan->add_option("mode", s_mode, "cyclotomic|abelian")
        ->required()
        ->check(CLI::IsMember({"cyclotomic", "abelian"}));
    cmd_scan->add_option("--p", s_p, "odd prime")->required();
    cmd_scan->add_option("--degree,-d", s_d, "field degree d")->check(CLI::Range(1, 64));
    cmd_scan->add_flag("--ramified", s_ram, "p ramifies in the field");
    cmd_scan->add_flag("--unramified", s_unram, "p unramified (default)");

    auto* cmd_cache = app.add_subcommand("cache", "manage the enumeration cache");
    std::string c_action, c_family;
    int c_p = 0;
    cmd_cache->add_option("action", c_action, "warm|clear|stat")
        ->required()
        ->check(CLI::IsMember({"warm", "clear", "stat"}));
    cmd_cache->add_option("--p", c_p, "prime (warm)");
    cmd_cache->add_option("--family", c_family, "cyclic|abelian (warm)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : GL2LAB_USAGE;
    }
    if (s_ram && s_unram) {
        std::cerr << "error: --ramified and --unramified are mutually exclusive\n";
        return GL2LAB_USAGE;
    }

    std::unique_ptr<gl2lab_ctx, CtxDeleter> ctx(gl2lab_ctx_new());
    if (!ctx) {
        std::cerr << "error: cannot allocate context\n";
        return GL2LAB_USAGE;
    }
    gl2lab_set_cache_dir(ctx.get(), cache_dir.c_str());
    gl2lab_set_workers(ctx.get(), workers);
    gl2lab_set_timing(ctx.get(), timing ? 1 : 0);
    if (gl2lab_set_budget(ctx.get(), budget_ambient, budget_cyclic, budget_abelian) != GL2LAB_OK) {
        std::cerr << "error: " << gl2lab_last_error(ctx.get()) << "\n";
        return GL2LAB_USAGE;
    }

    char* raw = nullptr;
    int code = GL2LAB_USAGE;
    std::string verb;
    if (cmd_classify->parsed()) {
        verb = "classify";
        std::vector<const char*> gens;
        for (const std::string& g : cl_gens) gens.push_back(g.c_str());
        code = gl2lab_classify(ctx.get(), cl_p, gens.data(), gens.size(), &raw);
    } else if (cmd_verify->parsed()) {
        verb = "verify";
        code = gl2lab_verify(ctx.get(), v_target.c_str(), v_p,
                             v_part.empty() ? nullptr : v_part.c_str(), &raw);
    } else if (cmd_scan->parsed()) {
        verb = "scan";
        code = gl2lab_scan(ctx.get(), s_mode.c_str(), s_p, s_d, s_ram ? 1 : 0, &raw);
    } else if (cmd_cache->parsed()) {
        verb = "cache";
        code = gl2lab_cache_op(ctx.get(), c_action.c_str(), c_p,
                               c_family.empty() ? nullptr : c_family.c_str(), &raw);
    }
    std::unique_ptr<char, StrDeleter> json(raw);

    if (code == GL2LAB_USAGE) {
        std::cerr << "error: " << gl2lab_last_error(ctx.get()) << "\n";
        return GL2LAB_USAGE;
    }

    std::string text;
    if (format == "json") {
        text = json ? json.get() : "{}";
    } else {
        ordered_json j = ordered_json::parse(json ? json.get() : "{}");
        if (verb == "scan")
            text = format == "csv" ? scan_to_csv(j) : scan_to_text(j);
        else if (verb == "verify") {
            if (format == "csv")
                text = verify_to_csv(j);
            else if (j.is_array())
                for (const auto& r : j) text += verify_one_to_text(r);
            else
                text = verify_one_to_text(j);
        } else if (verb == "classify")
            text = format == "csv" ? classify_to_csv(j) : classify_to_text(j);
        else
            text = format == "csv" ? j.dump() : cache_to_text(j);
    }
    int werr = write_report(text, output_path);
    if (werr) return werr;
    return code;
}
