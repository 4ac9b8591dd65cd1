#include <doctest.h>

#include <map>
#include <set>

#include "gl2lab/cache.hpp"
#include "gl2lab/conjugacy.hpp"
#include "gl2lab/enumerate.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace gl2;

TEST_CASE("dense multiplication table mirrors matrix arithmetic") {
    Subgroup ns = standard({StandardTag::Ns, 5});
    DenseGroup g(ns, 5000);
    CHECK(g.size() == 32);
    for (int32_t i = 0; i < g.size(); ++i) {
        CHECK(g.mul(i, g.inverse(i)) == g.identity());
        CHECK(g.order_of(i) == element_order(g.element(i)));
        for (int32_t j = 0; j < g.size(); ++j)
            CHECK(g.element(g.mul(i, j)) == mul(g.element(i), g.element(j)));
    }
    CHECK(g.index_of(Mat2::diag(5, 3, 3)) >= 0);
    CHECK(g.index_of(Mat2::unipotent(5)) == -1);
    CHECK_THROWS_AS(DenseGroup(standard({StandardTag::GL2, 13}), 5000), Error);
}

TEST_CASE("full lattice of a cyclic group: one subgroup per divisor") {
    Subgroup z = standard({StandardTag::Z, 5});  // cyclic of order 4
    std::vector<Subgroup> subs = enumerate_subgroups(z);
    CHECK(subs.size() == 3);
    std::multiset<std::size_t> orders;
    for (const Subgroup& s : subs) orders.insert(s.order());
    CHECK(orders == std::multiset<std::size_t>{1, 2, 4});
}

TEST_CASE("full lattice of Ns(5) against known subgroup structure") {
    Subgroup ns = standard({StandardTag::Ns, 5});
    std::vector<Subgroup> subs = enumerate_subgroups(ns);
    // every listed set is a genuine subgroup and Lagrange holds
    for (const Subgroup& s : subs) CHECK(ns.order() % s.order() == 0);
    // closure of any two listed subgroups' union is listed
    Subgroup cs = standard({StandardTag::Cs, 5});
    int found = 0;
    for (const Subgroup& s : subs)
        if (s == cs) ++found;
    CHECK(found == 1);
    // S4-style sanity: the count matches an independent run
    CHECK(subs.size() == enumerate_subgroups(ns).size());
}

TEST_CASE("lattice conjugacy classes partition the subgroup list") {
    Subgroup b0 = standard({StandardTag::B0, 5});
    DenseGroup dense(b0, 5000);
    Lattice lat = enumerate_lattice(dense);
    CHECK(lat.subgroups.size() >= lat.class_reps.size());
    CHECK(lat.class_of.size() == lat.subgroups.size());
    for (int32_t cls : lat.class_of) {
        CHECK(cls >= 0);
        CHECK(cls < static_cast<int32_t>(lat.class_reps.size()));
    }
    // class members really are conjugate to their representative
    for (std::size_t i = 0; i < lat.subgroups.size(); i += 17) {
        Subgroup s = to_subgroup(dense, lat.subgroups[i]);
        Subgroup rep = to_subgroup(dense, lat.subgroups[lat.class_reps[lat.class_of[i]]]);
        CHECK(conjugate_equal_witness(rep, s).has_value());
    }
}

TEST_CASE("cyclic subgroup classes of GL2(3)") {
    std::vector<Subgroup> subs = enumerate_cyclic_subgroups(3);
    std::multiset<std::size_t> orders;
    for (const Subgroup& s : subs) orders.insert(s.order());
    // ground truth by brute force over all 48 elements and all conjugators:
    // 28 distinct cyclic subgroups falling into 7 conjugacy classes
    CHECK(orders == std::multiset<std::size_t>{1, 2, 2, 3, 4, 6, 8});
    // pairwise non-conjugate
    for (std::size_t i = 0; i < subs.size(); ++i)
        for (std::size_t j = i + 1; j < subs.size(); ++j)
            CHECK(!conjugate_equal_witness(subs[i], subs[j]));
}

TEST_CASE("cyclic classes at p=5 cover every cyclic subgroup up to conjugacy") {
    std::vector<Subgroup> reps = enumerate_cyclic_subgroups(5);
    // spot subgroups that must appear: Z, D, a nonsplit torus, <gamma>
    for (Subgroup probe : {standard({StandardTag::Z, 5}), standard({StandardTag::D, 5}),
                           standard({StandardTag::Cns, 5}), closure(5, {Mat2::unipotent(5)})}) {
        int hits = 0;
        for (const Subgroup& r : reps)
            if (r.order() == probe.order() && conjugate_equal_witness(r, probe)) ++hits;
        CHECK(hits == 1);
    }
    // budget refusal
    CHECK_THROWS_AS(enumerate_cyclic_subgroups(53), Error);
}

TEST_CASE("abelian classes agree with a ground-truth filter at p=3") {
    // ground truth: all abelian subgroups of GL2(3) from the full lattice
    std::vector<Subgroup> all = enumerate_subgroups(standard({StandardTag::GL2, 3}));
    std::vector<Subgroup> abelian_reps;
    for (const Subgroup& s : all) {
        if (!is_abelian(s)) continue;
        bool dup = false;
        for (const Subgroup& r : abelian_reps)
            if (r.order() == s.order() && conjugate_equal_witness(r, s)) dup = true;
        if (!dup) abelian_reps.push_back(s);
    }
    std::vector<Subgroup> fast = enumerate_abelian_classes(3);
    CHECK(fast.size() == abelian_reps.size());
    for (const Subgroup& s : fast) {
        CHECK(is_abelian(s));
        int hits = 0;
        for (const Subgroup& r : abelian_reps)
            if (r.order() == s.order() && conjugate_equal_witness(r, s)) ++hits;
        CHECK(hits == 1);
    }
}

TEST_CASE("abelian classes at p=5 are pairwise non-conjugate and abelian") {
    std::vector<Subgroup> reps = enumerate_abelian_classes(5);
    for (const Subgroup& s : reps) CHECK(is_abelian(s));
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j)
            CHECK(!conjugate_equal_witness(reps[i], reps[j]));
}

TEST_CASE("cache round-trip, tamper recovery, and transparency") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "gl2lab_cache_test";
    fs::remove_all(dir);

    Budget budget;
    std::vector<Subgroup> direct = compute_family(7, "cyclic", budget);
    cache_warm(dir.string(), 7, "cyclic", budget);
    std::vector<Subgroup> cached = cached_enumeration(dir.string(), 7, "cyclic", budget);
    REQUIRE(cached.size() == direct.size());
    for (std::size_t i = 0; i < direct.size(); ++i) CHECK(cached[i] == direct[i]);

    auto stats = cache_stat(dir.string());
    REQUIRE(stats.size() == 1);
    CHECK(stats[0].p == 7);
    CHECK(stats[0].family == "cyclic");
    CHECK(stats[0].subgroups == direct.size());

    // corrupt the entry: results must still match the direct computation
    fs::path file = dir / cache_file_name(7, "cyclic", budget);
    {
        std::ofstream out(file);
        out << "0,0,0,0\nnot a matrix\n";
    }
    std::vector<Subgroup> healed = cached_enumeration(dir.string(), 7, "cyclic", budget);
    REQUIRE(healed.size() == direct.size());
    for (std::size_t i = 0; i < direct.size(); ++i) CHECK(healed[i] == direct[i]);

    CHECK(cache_clear(dir.string()) >= 1);
    CHECK(cache_stat(dir.string()).empty());
    fs::remove_all(dir);
}
