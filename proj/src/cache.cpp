#include "gl2lab/cache.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace gl2 {

std::string cache_file_name(int p, const std::string& family, const Budget& budget) {
    int cap = family == "cyclic" ? budget.max_cyclic_p : budget.max_abelian_p;
    return "p" + std::to_string(p) + "_" + family + "_b" + std::to_string(cap) + ".cache";
}

std::vector<Subgroup> compute_family(int p, const std::string& family, const Budget& budget) {
    if (family == "cyclic") return enumerate_cyclic_subgroups(p, budget);
    if (family == "abelian") return enumerate_abelian_classes(p, budget);
    throw Error("unknown enumeration family \"" + family + "\"");
}

namespace {

void write_entry(const fs::path& path, const std::vector<Subgroup>& subs) {
    fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw Error("cache: cannot write " + tmp.string());
        bool first = true;
        for (const Subgroup& s : subs) {
            if (!first) out << "\n";
            first = false;
            for (const Mat2& x : s.elements()) out << encode(x) << "\n";
        }
    }
    fs::rename(tmp, path);  // atomic publish
}

std::vector<Subgroup> read_entry(const fs::path& path, int p) {
    std::ifstream in(path);
    if (!in) throw Error("cache: cannot read " + path.string());
    std::vector<Subgroup> subs;
    std::vector<Mat2> block;
    std::string line;
    auto flush = [&] {
        if (block.empty()) return;
        // from_elements re-verifies closure; never trust the entry silently
        subs.push_back(Subgroup::from_elements(p, std::move(block)));
        block.clear();
    };
    while (std::getline(in, line)) {
        if (line.empty()) {
            flush();
            continue;
        }
        block.push_back(parse_mat(p, line));
    }
    flush();
    if (subs.empty()) throw Error("cache: empty entry " + path.string());
    return subs;
}

}  // namespace

std::vector<Subgroup> cached_enumeration(const std::string& cache_dir, int p,
                                         const std::string& family, const Budget& budget,
                                         bool persist) {
    if (cache_dir.empty()) return compute_family(p, family, budget);
    fs::path path = fs::path(cache_dir) / cache_file_name(p, family, budget);
    if (fs::exists(path)) {
        try {
            return read_entry(path, p);
        } catch (const std::exception&) {
            // corrupt entry: fall through and re-derive
        }
    }
    std::vector<Subgroup> subs = compute_family(p, family, budget);
    if (persist || fs::exists(path)) write_entry(path, subs);
    return subs;
}

void cache_warm(const std::string& cache_dir, int p, const std::string& family, const Budget& budget) {
    if (cache_dir.empty()) throw Error("cache warm: no cache directory given");
    write_entry(fs::path(cache_dir) / cache_file_name(p, family, budget),
                compute_family(p, family, budget));
}

std::size_t cache_clear(const std::string& cache_dir) {
    std::size_t removed = 0;
    if (!fs::exists(cache_dir)) return 0;
    for (const auto& ent : fs::directory_iterator(cache_dir)) {
        if (ent.path().extension() == ".cache") {
            fs::remove(ent.path());
            ++removed;
        }
    }
    return removed;
}

std::vector<CacheEntryInfo> cache_stat(const std::string& cache_dir) {
    std::vector<CacheEntryInfo> out;
    if (!fs::exists(cache_dir)) return out;
    for (const auto& ent : fs::directory_iterator(cache_dir)) {
        if (ent.path().extension() != ".cache") continue;
        CacheEntryInfo info;
        info.file = ent.path().filename().string();
        info.bytes = fs::file_size(ent.path());
        // filename: p{p}_{family}_b{cap}.cache
        std::string stem = ent.path().stem().string();
        if (stem.size() > 1 && stem[0] == 'p') {
            std::size_t us1 = stem.find('_');
            std::size_t us2 = stem.rfind('_');
            if (us1 != std::string::npos && us2 != std::string::npos && us2 > us1) {
                try {
                    info.p = std::stoi(stem.substr(1, us1 - 1));
                } catch (const std::exception&) {
                    info.p = 0;
                }
                info.family = stem.substr(us1 + 1, us2 - us1 - 1);
            }
        }
        std::ifstream in(ent.path());
        std::string line;
        bool in_block = false;
        while (std::getline(in, line)) {
            if (line.empty()) {
                in_block = false;
            } else if (!in_block) {
                in_block = true;
                ++info.subgroups;
            }
        }
        out.push_back(std::move(info));
    }
    std::sort(out.begin(), out.end(),
              [](const CacheEntryInfo& a, const CacheEntryInfo& b) { return a.file < b.file; });
    return out;
}

}  // namespace gl2
