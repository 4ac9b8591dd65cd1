#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gl2lab/enumerate.hpp"
#include "gl2lab/subgroup.hpp"

namespace gl2 {

/// Enumeration families that can be persisted.
/// "cyclic"  -> enumerate_cyclic_subgroups(p)
/// "abelian" -> enumerate_abelian_classes(p)
struct CacheEntryInfo {
    std::string file;
    int p = 0;
    std::string family;
    std::size_t subgroups = 0;
    std::size_t bytes = 0;
};

std::string cache_file_name(int p, const std::string& family, const Budget& budget);

/// Load from cache when present and intact, else compute (and, when `persist`
/// is set, write the entry atomically). A corrupt entry is re-derived.
std::vector<Subgroup> cached_enumeration(const std::string& cache_dir, int p,
                                         const std::string& family, const Budget& budget,
                                         bool persist = false);

/// Plain computation for a family name (no cache involved).
std::vector<Subgroup> compute_family(int p, const std::string& family, const Budget& budget);

void cache_warm(const std::string& cache_dir, int p, const std::string& family, const Budget& budget);
std::size_t cache_clear(const std::string& cache_dir);
std::vector<CacheEntryInfo> cache_stat(const std::string& cache_dir);

}  // namespace gl2
