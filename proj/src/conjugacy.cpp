#include "gl2lab/conjugacy.hpp"

#include <algorithm>
#include <map>

namespace gl2 {

std::optional<Mat2> cyclic_generator(const Subgroup& g) {
    for (const Mat2& x : g.elements())
        if (element_order(x) == static_cast<int>(g.order())) return x;
    return std::nullopt;
}

static bool conjugate_lands_in(const Mat2& m, const Mat2& mi, const Subgroup& h, const Subgroup& g) {
    for (const Mat2& x : h.elements())
        if (!g.contains(mul(mul(m, x), mi))) return false;
    return true;
}

static bool histogram_dominates(const Subgroup& g, const Subgroup& h) {
    std::map<int, int> gh;
    for (const Mat2& x : g.elements()) ++gh[element_order(x)];
    std::map<int, int> hh;
    for (const Mat2& x : h.elements()) ++hh[element_order(x)];
    for (auto [ord, cnt] : hh) {
        auto it = gh.find(ord);
        if (it == gh.end() || it->second < cnt) return false;
    }
    return true;
}

std::optional<Mat2> conjugate_contains_bruteforce(const Subgroup& g, const Subgroup& h) {
    if (g.modulus() != h.modulus()) throw Error("conjugate_contains: modulus mismatch");
    if (g.order() % h.order() != 0) return std::nullopt;
    if (!histogram_dominates(g, h)) return std::nullopt;
    const int n = g.modulus();
    const auto& gens = h.generators();
    uint32_t total = static_cast<uint32_t>(n) * n * n * n;
    for (uint32_t c = 0; c < total; ++c) {
        Mat2 m = Mat2::from_code(n, c);
        if (!is_invertible(m)) continue;
        Mat2 mi = inv(m);
        bool ok = true;
        for (const Mat2& x : gens) {
            if (!g.contains(mul(mul(m, x), mi))) {
                ok = false;
                break;
            }
        }
        if (ok && conjugate_lands_in(m, mi, h, g)) return m;
    }
    return std::nullopt;
}

std::optional<Mat2> conjugate_contains(const Subgroup& g, const Subgroup& h) {
    if (g.modulus() != h.modulus()) throw Error("conjugate_contains: modulus mismatch");
    if (g.order() % h.order() != 0) return std::nullopt;
    if (contains(g, h)) return Mat2::identity(g.modulus());
    if (!histogram_dominates(g, h)) return std::nullopt;
    if (is_prime(g.modulus())) {
        if (auto hgen = cyclic_generator(h)) {
            // m H m^-1 <= G iff some element of G is conjugate to the generator
            for (const Mat2& x : g.elements()) {
                if (!element_conjugate(*hgen, x)) continue;
                auto m = element_conjugating_witness(*hgen, x);
                if (m && conjugate_lands_in(*m, inv(*m), h, g)) return m;
            }
            return std::nullopt;
        }
    }
    return conjugate_contains_bruteforce(g, h);
}

std::optional<Mat2> conjugate_equal_witness(const Subgroup& g, const Subgroup& h) {
    if (g.order() != h.order()) return std::nullopt;
    return conjugate_contains(g, h);
}

}  // namespace gl2
