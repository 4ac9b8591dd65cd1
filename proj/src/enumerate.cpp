#include "gl2lab/enumerate.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <unordered_set>

#include "gl2lab/conjugacy.hpp"

namespace gl2 {

DenseGroup::DenseGroup(const Subgroup& ambient, std::size_t max_order) : n_(ambient.modulus()) {
    if (ambient.order() > max_order)
        throw Error("DenseGroup: ambient order " + std::to_string(ambient.order()) +
                    " exceeds budget " + std::to_string(max_order));
    elems_ = ambient.elements();  // already sorted
    const std::size_t nn = static_cast<std::size_t>(n_) * n_ * n_ * n_;
    code_to_idx_.assign(nn, -1);
    for (std::size_t i = 0; i < elems_.size(); ++i)
        code_to_idx_[elems_[i].code()] = static_cast<int32_t>(i);
    const std::size_t sz = elems_.size();
    table_.resize(sz * sz);
    for (std::size_t i = 0; i < sz; ++i) {
        for (std::size_t j = 0; j < sz; ++j) {
            int32_t k = code_to_idx_[gl2::mul(elems_[i], elems_[j]).code()];
            if (k < 0) throw Error("DenseGroup: ambient not closed under product");
            table_[i * sz + j] = k;
        }
    }
    inv_.resize(sz);
    for (std::size_t i = 0; i < sz; ++i) {
        int32_t k = code_to_idx_[inv(elems_[i]).code()];
        if (k < 0) throw Error("DenseGroup: ambient not closed under inverse");
        inv_[i] = k;
    }
    identity_ = code_to_idx_[Mat2::identity(n_).code()];
    if (identity_ < 0) throw Error("DenseGroup: ambient lacks identity");
    order_.resize(sz);
    for (std::size_t i = 0; i < sz; ++i) {
        int32_t k = 1;
        int32_t x = static_cast<int32_t>(i);
        while (x != identity_) {
            x = mul(static_cast<int32_t>(i), x);
            ++k;
        }
        order_[i] = k;
    }
}

int32_t DenseGroup::index_of(const Mat2& m) const {
    if (m.n != n_) return -1;
    return code_to_idx_[m.code()];
}

namespace {

std::string idxset_key(const IdxSet& s) {
    return std::string(reinterpret_cast<const char*>(s.data()), s.size() * sizeof(int32_t));
}

struct LatticeBuilder {
    const DenseGroup& g;
    std::unordered_map<std::string, int32_t> id_by_key;
    std::vector<IdxSet> subs;
    std::vector<int32_t> class_of;
    std::vector<int32_t> reps;       // subgroup id per class
    std::vector<IdxSet> class_gens;  // generating set per class
    std::deque<int32_t> unprocessed; // class ids

    explicit LatticeBuilder(const DenseGroup& g_) : g(g_) {}

    int32_t add_subgroup(IdxSet s, int32_t cls) {
        std::string key = idxset_key(s);
        auto it = id_by_key.find(key);
        if (it != id_by_key.end()) return it->second;
        int32_t id = static_cast<int32_t>(subs.size());
        subs.push_back(std::move(s));
        class_of.push_back(cls);
        id_by_key.emplace(std::move(key), id);
        return id;
    }

    // Register a new conjugacy class from a representative (if unseen) and
    // expand its full orbit so later joins can be recognized by key alone.
    void add_class(const IdxSet& s, IdxSet gens) {
        if (id_by_key.count(idxset_key(s))) return;
        int32_t cls = static_cast<int32_t>(reps.size());
        int32_t rep_id = add_subgroup(s, cls);
        reps.push_back(rep_id);
        class_gens.push_back(std::move(gens));
        unprocessed.push_back(cls);
        IdxSet conj(s.size());
        for (int32_t m = 0; m < g.size(); ++m) {
            int32_t mi = g.inverse(m);
            for (std::size_t i = 0; i < s.size(); ++i) conj[i] = g.mul(g.mul(m, s[i]), mi);
            IdxSet sorted = conj;
            std::sort(sorted.begin(), sorted.end());
            add_subgroup(std::move(sorted), cls);
        }
    }

    // <H, x> by right-multiplication orbit on cosets of H.
    IdxSet join(const IdxSet& h, const IdxSet& hgens, int32_t x) {
        std::vector<int32_t> gens = hgens;
        gens.push_back(x);
        auto coset_id = [&](int32_t r) {
            int32_t best = g.mul(h[0], r);
            for (std::size_t i = 1; i < h.size(); ++i) best = std::min(best, g.mul(h[i], r));
            return best;
        };
        std::unordered_set<int32_t> seen;
        std::vector<int32_t> rep_queue;
        seen.insert(coset_id(g.identity()));
        rep_queue.push_back(g.identity());
        for (std::size_t qi = 0; qi < rep_queue.size(); ++qi) {
            int32_t r = rep_queue[qi];
            for (int32_t s : gens) {
                int32_t t = g.mul(r, s);
                if (seen.insert(coset_id(t)).second) rep_queue.push_back(t);
            }
        }
        IdxSet out;
        out.reserve(h.size() * rep_queue.size());
        for (int32_t r : rep_queue)
            for (int32_t e : h) out.push_back(g.mul(e, r));
        std::sort(out.begin(), out.end());
        return out;
    }

    Lattice run() {
        // elements of prime-power order suffice as extension steps
        std::vector<int32_t> ext;
        for (int32_t i = 0; i < g.size(); ++i) {
            int32_t o = g.order_of(i);
            if (o == 1) continue;
            int small = 2;
            while (small <= o && o % small != 0) ++small;
            int32_t q = o;
            while (q % small == 0) q /= small;
            if (q == 1) ext.push_back(i);
        }
        add_class({g.identity()}, {});
        while (!unprocessed.empty()) {
            int32_t cls = unprocessed.front();
            unprocessed.pop_front();
            const IdxSet h = subs[reps[cls]];
            const IdxSet gens = class_gens[cls];
            std::unordered_set<int32_t> member(h.begin(), h.end());
            for (int32_t x : ext) {
                if (member.count(x)) continue;
                add_class(join(h, gens, x), [&] {
                    IdxSet gg = gens;
                    gg.push_back(x);
                    return gg;
                }());
            }
        }
        // canonical order: by (order, index-set lexicographic)
        std::vector<int32_t> perm(subs.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int32_t>(i);
        std::sort(perm.begin(), perm.end(), [&](int32_t a, int32_t b) {
            if (subs[a].size() != subs[b].size()) return subs[a].size() < subs[b].size();
            return subs[a] < subs[b];
        });
        Lattice out;
        out.subgroups.reserve(subs.size());
        out.class_of.resize(subs.size());
        std::vector<int32_t> new_pos(subs.size());
        for (std::size_t i = 0; i < perm.size(); ++i) {
            new_pos[perm[i]] = static_cast<int32_t>(i);
            out.subgroups.push_back(std::move(subs[perm[i]]));
            out.class_of[i] = class_of[perm[i]];
        }
        out.class_reps.resize(reps.size());
        for (std::size_t c = 0; c < reps.size(); ++c) out.class_reps[c] = new_pos[reps[c]];
        return out;
    }
};

}  // namespace

Lattice enumerate_lattice(const DenseGroup& g) {
    return LatticeBuilder(g).run();
}

Subgroup to_subgroup(const DenseGroup& g, const IdxSet& s) {
    std::vector<Mat2> elems;
    elems.reserve(s.size());
    for (int32_t i : s) elems.push_back(g.element(i));
    return Subgroup::from_elements(g.modulus(), std::move(elems));
}

std::vector<Subgroup> enumerate_subgroups(const Subgroup& ambient, const Budget& budget) {
    DenseGroup dense(ambient, budget.max_lattice_ambient);
    Lattice lat = enumerate_lattice(dense);
    std::vector<Subgroup> out;
    out.reserve(lat.subgroups.size());
    for (const IdxSet& s : lat.subgroups) out.push_back(to_subgroup(dense, s));
    return out;
}

namespace {

// One representative per element conjugacy class of GL2(p).
std::vector<Mat2> element_class_reps(int p) {
    int eps = least_primitive_root(p);
    std::vector<Mat2> reps;
    for (int a = 1; a < p; ++a) reps.push_back(Mat2::scalar(p, a));
    for (int a = 1; a < p; ++a)
        for (int b = a + 1; b < p; ++b) reps.push_back(Mat2::diag(p, a, b));
    for (int a = 0; a < p; ++a)
        for (int b = 1; b <= (p - 1) / 2; ++b) {
            Mat2 m(p, a, static_cast<long long>(b) * eps, b, a);
            if (is_invertible(m)) reps.push_back(m);
        }
    for (int a = 1; a < p; ++a) reps.push_back(Mat2(p, a, 1, 0, a));
    return reps;
}

std::vector<Mat2> cyclic_elements(const Mat2& gen) {
    std::vector<Mat2> out;
    Mat2 x = Mat2::identity(gen.n);
    do {
        out.push_back(x);
        x = mul(x, gen);
    } while (!(x == Mat2::identity(gen.n)));
    std::sort(out.begin(), out.end());
    return out;
}

// conjugacy-invariant signature: order plus sorted (elt order, trace, det)
std::string subgroup_signature(const std::vector<Mat2>& elems) {
    std::vector<std::array<int, 3>> sig;
    sig.reserve(elems.size());
    for (const Mat2& x : elems) sig.push_back({element_order(x), trace(x), det(x)});
    std::sort(sig.begin(), sig.end());
    std::string out = std::to_string(elems.size());
    for (const auto& t : sig) {
        out += '|';
        out += std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]);
    }
    return out;
}

bool cyclic_conjugate(const Mat2& gen_a, const std::vector<Mat2>& elems_b, std::size_t order_b) {
    for (const Mat2& h : elems_b)
        if (static_cast<std::size_t>(element_order(h)) == order_b && element_conjugate(gen_a, h))
            return true;
    return false;
}

}  // namespace

std::vector<Subgroup> enumerate_cyclic_subgroups(int p, const Budget& budget) {
    if (p < 3 || !is_prime(p)) throw Error("enumerate_cyclic_subgroups: need an odd prime");
    if (p > budget.max_cyclic_p)
        throw Error("enumerate_cyclic_subgroups: p exceeds budget " + std::to_string(budget.max_cyclic_p));
    struct Cand {
        Mat2 gen;
        std::vector<Mat2> elems;
    };
    std::vector<Cand> cands;
    std::unordered_set<std::string> seen_keys;
    for (const Mat2& g : element_class_reps(p)) {
        std::vector<Mat2> elems = cyclic_elements(g);
        std::string key;
        for (const Mat2& x : elems) key += encode(x) + ";";
        if (seen_keys.insert(key).second) cands.push_back({g, std::move(elems)});
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
        return a.gen < b.gen;
    });
    std::vector<Cand> reps;
    std::unordered_map<std::string, std::vector<std::size_t>> by_sig;
    for (Cand& c : cands) {
        std::string sig = subgroup_signature(c.elems);
        bool dup = false;
        for (std::size_t ri : by_sig[sig]) {
            if (cyclic_conjugate(c.gen, reps[ri].elems, reps[ri].elems.size())) {
                dup = true;
                break;
            }
        }
        if (!dup) {
            by_sig[sig].push_back(reps.size());
            reps.push_back(std::move(c));
        }
    }
    std::vector<Subgroup> out;
    out.reserve(reps.size());
    for (const Cand& c : reps) {
        Subgroup s(p, {c.gen});
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.key() < b.key();
    });
    return out;
}

namespace {

// Conjugacy test between diagonal subgroups: a conjugator must permute the
// coordinate eigenlines once a regular element is present, so the orbit of a
// diagonal subgroup inside Cs is {G, G_f}. Wholly-scalar subgroups are fixed.
bool diagonal_subgroups_conjugate(const Subgroup& a, const Subgroup& b) {
    if (a.key() == b.key()) return true;
    return flip_subgroup(a).key() == b.key();
}

bool all_diagonal(const Subgroup& g) {
    for (const Mat2& x : g.elements())
        if (!is_diagonal(x)) return false;
    return true;
}

}  // namespace

std::vector<Subgroup> enumerate_abelian_classes(int p, const Budget& budget) {
    if (p < 3 || !is_prime(p)) throw Error("enumerate_abelian_classes: need an odd prime");
    if (p > budget.max_abelian_p)
        throw Error("enumerate_abelian_classes: p exceeds budget " + std::to_string(budget.max_abelian_p));
    int g0 = least_primitive_root(p);

    std::vector<Subgroup> cands;
    std::unordered_set<std::string> keys;
    auto push = [&](Subgroup s) {
        if (keys.insert(s.key()).second) cands.push_back(std::move(s));
    };

    // scalar subgroups, one per divisor of p-1
    std::vector<Subgroup> scalar_subs;
    for (long long m : divisors(p - 1)) {
        Subgroup s = closure(p, {Mat2::scalar(p, mod_pow(g0, (p - 1) / m, p))});
        scalar_subs.push_back(s);
    }

    // subgroups of Cs(p)
    {
        DenseGroup cs(standard({StandardTag::Cs, p}), budget.max_lattice_ambient);
        Lattice lat = enumerate_lattice(cs);
        for (const IdxSet& s : lat.subgroups) push(to_subgroup(cs, s));
    }
    // subgroups of the cyclic Cns(p)
    {
        Mat2 c = nonsplit_cartan_generator(p);
        for (long long m : divisors(static_cast<long long>(p) * p - 1))
            push(closure(p, {mat_pow(c, (static_cast<long long>(p) * p - 1) / m)}));
    }
    // <antidiagonal, scalar subgroup> inside Ns(p)
    for (int b = 1; b < p; ++b)
        for (int c = 1; c < p; ++c)
            for (const Subgroup& s : scalar_subs) {
                std::vector<Mat2> gens = s.generators();
                gens.push_back(Mat2::antidiag(p, b, c));
                push(closure(p, gens));
            }
    // <reflection, scalar subgroup> inside Nns(p)
    {
        Subgroup cns = standard({StandardTag::Cns, p});
        Mat2 refl = Mat2::diag(p, 1, p - 1);
        for (const Mat2& x : cns.elements())
            for (const Subgroup& s : scalar_subs) {
                std::vector<Mat2> gens = s.generators();
                gens.push_back(mul(refl, x));
                push(closure(p, gens));
            }
    }
    // <gamma, scalar subgroup>
    for (const Subgroup& s : scalar_subs) {
        std::vector<Mat2> gens = s.generators();
        gens.push_back(Mat2::unipotent(p));
        push(closure(p, gens));
    }

    std::sort(cands.begin(), cands.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.key() < b.key();
    });

    std::vector<Subgroup> reps;
    std::unordered_map<std::string, std::vector<std::size_t>> by_sig;
    for (Subgroup& c : cands) {
        std::string sig = subgroup_signature(c.elements());
        bool dup = false;
        for (std::size_t ri : by_sig[sig]) {
            const Subgroup& r = reps[ri];
            bool conj;
            if (all_diagonal(c) && all_diagonal(r)) {
                conj = diagonal_subgroups_conjugate(c, r);
            } else {
                conj = conjugate_equal_witness(r, c).has_value();
            }
            if (conj) {
                dup = true;
                break;
            }
        }
        if (!dup) {
            by_sig[sig].push_back(reps.size());
            reps.push_back(std::move(c));
        }
    }
    return reps;
}

}  // namespace gl2
