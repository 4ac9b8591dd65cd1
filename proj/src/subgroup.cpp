#include "gl2lab/subgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace gl2 {

Subgroup::Subgroup(int n, std::vector<Mat2> gens) : n_(n), gens_(std::move(gens)) {
    for (const Mat2& g : gens_) {
        if (g.n != n_) throw Error("Subgroup: generator modulus mismatch");
        if (!is_invertible(g)) throw Error("Subgroup: non-invertible generator " + encode(g));
    }
    std::unordered_set<uint32_t> seen;
    std::vector<Mat2> work;
    Mat2 id = Mat2::identity(n_);
    seen.insert(id.code());
    work.push_back(id);
    for (std::size_t i = 0; i < work.size(); ++i) {
        for (const Mat2& g : gens_) {
            Mat2 v = mul(work[i], g);
            if (seen.insert(v.code()).second) work.push_back(v);
        }
    }
    elements_ = std::move(work);
    finalize();
}

Subgroup Subgroup::from_elements(int n, std::vector<Mat2> elements) {
    Subgroup s;
    s.n_ = n;
    s.elements_ = std::move(elements);
    if (s.elements_.empty()) throw Error("Subgroup: empty element set");
    s.finalize();
    if (!s.contains(Mat2::identity(n))) throw Error("Subgroup: element set lacks identity");
    for (const Mat2& x : s.elements_) {
        if (!is_invertible(x)) throw Error("Subgroup: non-invertible element " + encode(x));
        if (!s.contains(inv(x))) throw Error("Subgroup: element set not closed under inverse");
    }
    // Product closure: exhaustive at small orders, deterministic sampling
    // beyond (large sets come from definitional constructions).
    const std::size_t m = s.elements_.size();
    if (m <= 512) {
        for (const Mat2& x : s.elements_)
            for (const Mat2& y : s.elements_)
                if (!s.contains(mul(x, y)))
                    throw Error("Subgroup: element set not closed under product");
    } else {
        uint64_t state = 0x9e3779b97f4a7c15ULL ^ (static_cast<uint64_t>(n) << 32) ^ m;
        auto next = [&state]() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            return state;
        };
        for (int t = 0; t < 65536; ++t) {
            const Mat2& x = s.elements_[next() % m];
            const Mat2& y = s.elements_[next() % m];
            if (!s.contains(mul(x, y)))
                throw Error("Subgroup: element set not closed under product");
        }
    }
    return s;
}

static std::unordered_set<uint32_t> closure_codes(int n, const std::vector<Mat2>& gens) {
    std::unordered_set<uint32_t> seen;
    std::vector<Mat2> work;
    Mat2 id = Mat2::identity(n);
    seen.insert(id.code());
    work.push_back(id);
    for (std::size_t i = 0; i < work.size(); ++i) {
        for (const Mat2& g : gens) {
            Mat2 v = mul(work[i], g);
            if (seen.insert(v.code()).second) work.push_back(v);
        }
    }
    return seen;
}

void Subgroup::finalize() {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    member_codes_.clear();
    member_codes_.reserve(elements_.size() * 2);
    key_.clear();
    for (const Mat2& x : elements_) {
        member_codes_.insert(x.code());
        if (!key_.empty()) key_ += ';';
        key_ += encode(x);
    }
    if (gens_.empty() && elements_.size() > 1) {
        // greedy small generating set, so conjugacy searches can prune cheaply
        std::unordered_set<uint32_t> cl;
        cl.insert(Mat2::identity(n_).code());
        for (const Mat2& x : elements_) {
            if (cl.count(x.code())) continue;
            gens_.push_back(x);
            cl = closure_codes(n_, gens_);
            if (cl.size() == elements_.size()) break;
        }
    }
}

bool Subgroup::contains(const Mat2& x) const {
    return x.n == n_ && member_codes_.count(x.code()) != 0;
}

const char* standard_tag_name(StandardTag tag) {
    switch (tag) {
        case StandardTag::Cs: return "Cs";
        case StandardTag::Ns: return "Ns";
        case StandardTag::Cns: return "Cns";
        case StandardTag::Nns: return "Nns";
        case StandardTag::B0: return "B0";
        case StandardTag::D: return "D";
        case StandardTag::Z: return "Z";
        case StandardTag::GammaZ: return "GammaZ";
        case StandardTag::SL2: return "SL2";
        case StandardTag::GL2: return "GL2";
    }
    return "?";
}

static void require_odd_prime(int p, const char* what) {
    if (p < 3 || !is_prime(p)) throw Error(std::string(what) + ": need an odd prime, got " + std::to_string(p));
}

Mat2 nonsplit_cartan_generator(int p) {
    require_odd_prime(p, "nonsplit_cartan_generator");
    int eps = least_primitive_root(p);
    Mat2 best = Mat2::identity(p);
    bool found = false;
    for (int a = 0; a < p && !found; ++a) {
        for (int b = 0; b < p; ++b) {
            Mat2 m(p, a, static_cast<long long>(b) * eps, b, a);
            if (!is_invertible(m)) continue;
            if (element_order(m) == p * p - 1) {
                best = m;
                found = true;
                break;
            }
        }
    }
    if (!found) throw Error("nonsplit_cartan_generator: none found");
    return best;
}

Subgroup standard(const StandardKind& kind) {
    int p = kind.p;
    int k = kind.k;
    if (k < 1) throw Error("standard: power k must be >= 1");
    switch (kind.tag) {
        case StandardTag::Cs: {
            require_odd_prime(p, "standard(Cs)");
            std::vector<Mat2> elems;
            for (int a = 1; a < p; ++a)
                for (int d = 1; d < p; ++d) elems.emplace_back(p, a, 0, 0, d);
            return Subgroup::from_elements(p, std::move(elems));
        }
        case StandardTag::Ns: {
            require_odd_prime(p, "standard(Ns)");
            std::vector<Mat2> elems;
            for (int a = 1; a < p; ++a)
                for (int d = 1; d < p; ++d) {
                    elems.emplace_back(p, a, 0, 0, d);
                    elems.emplace_back(p, 0, a, d, 0);
                }
            return Subgroup::from_elements(p, std::move(elems));
        }
        case StandardTag::Cns: {
            require_odd_prime(p, "standard(Cns)");
            Mat2 g = nonsplit_cartan_generator(p);
            if (k == 1) {
                int eps = least_primitive_root(p);
                std::vector<Mat2> elems;
                for (int a = 0; a < p; ++a)
                    for (int b = 0; b < p; ++b) {
                        if (a == 0 && b == 0) continue;
                        elems.emplace_back(p, a, static_cast<long long>(b) * eps, b, a);
                    }
                return Subgroup::from_elements(p, std::move(elems));
            }
            return closure(p, {mat_pow(g, k)});
        }
        case StandardTag::Nns: {
            require_odd_prime(p, "standard(Nns)");
            if (k != 1) throw Error("standard(Nns): no power parameter");
            Subgroup cns = standard({StandardTag::Cns, p});
            std::vector<Mat2> elems = cns.elements();
            Mat2 refl = Mat2::diag(p, 1, p - 1);
            for (const Mat2& x : cns.elements()) elems.push_back(mul(refl, x));
            return Subgroup::from_elements(p, std::move(elems));
        }
        case StandardTag::B0: {
            require_odd_prime(p, "standard(B0)");
            std::vector<Mat2> elems;
            for (int a = 1; a < p; ++a)
                for (int d = 1; d < p; ++d)
                    for (int b = 0; b < p; ++b) elems.emplace_back(p, a, b, 0, d);
            return Subgroup::from_elements(p, std::move(elems));
        }
        case StandardTag::D: {
            require_odd_prime(p, "standard(D)");
            int g = least_primitive_root(p);
            return closure(p, {Mat2::diag(p, mod_pow(g, k, p), 1)});
        }
        case StandardTag::Z: {
            require_odd_prime(p, "standard(Z)");
            if (k != 1) throw Error("standard(Z): no power parameter");
            int g = least_primitive_root(p);
            return closure(p, {Mat2::scalar(p, g)});
        }
        case StandardTag::GammaZ: {
            require_odd_prime(p, "standard(GammaZ)");
            if (k != 1) throw Error("standard(GammaZ): no power parameter");
            int g = least_primitive_root(p);
            return closure(p, {Mat2::unipotent(p), Mat2::scalar(p, g)});
        }
        case StandardTag::SL2: {
            if (!is_prime(p)) throw Error("standard(SL2): need a prime");
            if (k != 1) throw Error("standard(SL2): no power parameter");
            // generated by [[1,1],[0,1]] and [[1,0],[1,1]]
            return closure(p, {Mat2(p, 1, 1, 0, 1), Mat2(p, 1, 0, 1, 1)});
        }
        case StandardTag::GL2: {
            if (k != 1) throw Error("standard(GL2): no power parameter");
            if (p < 2) throw Error("standard(GL2): modulus must be >= 2");
            std::vector<Mat2> elems;
            uint32_t total = static_cast<uint32_t>(p) * p * p * p;
            for (uint32_t c = 0; c < total; ++c) {
                Mat2 m = Mat2::from_code(p, c);
                if (is_invertible(m)) elems.push_back(m);
            }
            return Subgroup::from_elements(p, std::move(elems));
        }
    }
    throw Error("standard: unknown tag");
}

Subgroup closure(int n, const std::vector<Mat2>& gens) {
    return Subgroup(n, gens);
}

Subgroup intersect(const Subgroup& g, const Subgroup& h) {
    if (g.modulus() != h.modulus()) throw Error("intersect: modulus mismatch");
    std::vector<Mat2> elems;
    for (const Mat2& x : g.elements())
        if (h.contains(x)) elems.push_back(x);
    return Subgroup::from_elements(g.modulus(), std::move(elems));
}

Subgroup sl2_intersection(const Subgroup& g) {
    std::vector<Mat2> elems;
    for (const Mat2& x : g.elements())
        if (det(x) == 1) elems.push_back(x);
    return Subgroup::from_elements(g.modulus(), std::move(elems));
}

Subgroup flip_subgroup(const Subgroup& h) {
    std::vector<Mat2> elems;
    for (const Mat2& x : h.elements()) {
        if (!is_diagonal(x)) throw Error("flip_subgroup: non-diagonal element " + encode(x));
        elems.push_back(Mat2::diag(h.modulus(), x.d, x.a));
    }
    return Subgroup::from_elements(h.modulus(), std::move(elems));
}

Subgroup semisimplify(const Subgroup& h) {
    std::vector<Mat2> elems;
    for (const Mat2& x : h.elements()) {
        if (!is_upper_triangular(x)) throw Error("semisimplify: non-triangular element " + encode(x));
        elems.push_back(Mat2::diag(h.modulus(), x.a, x.d));
    }
    return Subgroup::from_elements(h.modulus(), std::move(elems));
}

Subgroup conjugate_subgroup(const Mat2& m, const Subgroup& g) {
    if (m.n != g.modulus()) throw Error("conjugate_subgroup: modulus mismatch");
    Mat2 mi = inv(m);
    std::vector<Mat2> elems;
    elems.reserve(g.order());
    for (const Mat2& x : g.elements()) elems.push_back(mul(mul(m, x), mi));
    return Subgroup::from_elements(g.modulus(), std::move(elems));
}

bool contains(const Subgroup& g, const Subgroup& h) {
    if (g.modulus() != h.modulus()) throw Error("contains: modulus mismatch");
    if (h.order() > g.order()) return false;
    for (const Mat2& x : h.elements())
        if (!g.contains(x)) return false;
    return true;
}

bool is_abelian(const Subgroup& g) {
    const auto& e = g.elements();
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            if (!(mul(e[i], e[j]) == mul(e[j], e[i]))) return false;
    return true;
}

int det_image_order(const Subgroup& g) {
    std::unordered_set<int> dets;
    for (const Mat2& x : g.elements()) dets.insert(det(x));
    return static_cast<int>(dets.size());
}

bool det_surjective(const Subgroup& g) {
    int units = 0;
    for (int a = 1; a < g.modulus(); ++a)
        if (std::gcd(a, g.modulus()) == 1) ++units;
    return det_image_order(g) == units;
}

std::vector<std::pair<int, int>> order_histogram(const Subgroup& g) {
    std::map<int, int> h;
    for (const Mat2& x : g.elements()) ++h[element_order(x)];
    return {h.begin(), h.end()};
}

}  // namespace gl2
