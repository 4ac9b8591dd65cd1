#include <doctest.h>

#include <algorithm>

#include "gl2lab/subgroup.hpp"

using namespace gl2;

TEST_CASE("closure of generators") {
    // <gamma, 2I> mod 5: order 5 * 4 = 20
    Subgroup g = closure(5, {Mat2::unipotent(5), Mat2::scalar(5, 2)});
    CHECK(g.order() == 20);
    CHECK(g.contains(Mat2(5, 3, 3, 0, 3)));
    CHECK(!g.contains(Mat2::diag(5, 2, 1)));

    Subgroup triv = closure(7, {Mat2::identity(7)});
    CHECK(triv.trivial());
    CHECK(triv.key() == "1,0,0,1");
}

TEST_CASE("standard subgroup orders") {
    for (int p : {3, 5, 7, 11, 13}) {
        long long pl = p;
        CHECK(standard({StandardTag::Cs, p}).order() == (pl - 1) * (pl - 1));
        CHECK(standard({StandardTag::Ns, p}).order() == 2 * (pl - 1) * (pl - 1));
        CHECK(standard({StandardTag::Cns, p}).order() == pl * pl - 1);
        CHECK(standard({StandardTag::Nns, p}).order() == 2 * (pl * pl - 1));
        CHECK(standard({StandardTag::B0, p}).order() == pl * (pl - 1) * (pl - 1));
        CHECK(standard({StandardTag::D, p}).order() == pl - 1);
        CHECK(standard({StandardTag::Z, p}).order() == pl - 1);
        CHECK(standard({StandardTag::GammaZ, p}).order() == pl * (pl - 1));
        CHECK(standard({StandardTag::SL2, p}).order() == pl * (pl - 1) * (pl + 1));
        CHECK(standard({StandardTag::GL2, p}).order() == pl * (pl - 1) * (pl - 1) * (pl + 1));
    }
}

TEST_CASE("semi-Cartan powers") {
    // D(7)^3 = {I, diag(6,1)}: cubes of <diag(3,1)> form the order-2 subgroup
    Subgroup d3 = standard({StandardTag::D, 7, 3});
    CHECK(d3.order() == 2);
    CHECK(d3.contains(Mat2::diag(7, 6, 1)));
    // Cns(5)^6 = Z(5): sixth powers of the order-24 cyclic group
    Subgroup c6 = standard({StandardTag::Cns, 5, 6});
    CHECK(c6 == standard({StandardTag::Z, 5}));
}

TEST_CASE("normalizers are the Cartan union its reflecting coset") {
    for (int p : {5, 7}) {
        Subgroup cs = standard({StandardTag::Cs, p});
        Subgroup ns = standard({StandardTag::Ns, p});
        for (const Mat2& x : ns.elements())
            CHECK((is_diagonal(x) || is_antidiagonal(x)));
        for (const Mat2& x : cs.elements()) CHECK(ns.contains(x));

        Subgroup cns = standard({StandardTag::Cns, p});
        Subgroup nns = standard({StandardTag::Nns, p});
        for (const Mat2& x : cns.elements()) {
            CHECK(nns.contains(x));
            CHECK(nns.contains(mul(Mat2::diag(p, 1, p - 1), x)));
        }
    }
}

TEST_CASE("nonsplit Cartan shape") {
    int p = 7, eps = least_primitive_root(7);
    Subgroup cns = standard({StandardTag::Cns, p});
    for (const Mat2& x : cns.elements()) {
        CHECK(x.a == x.d);
        CHECK(x.b == static_cast<long long>(x.c) * eps % p);
    }
    Mat2 gen = nonsplit_cartan_generator(p);
    CHECK(element_order(gen) == p * p - 1);
    CHECK(cns.contains(gen));
}

TEST_CASE("from_elements accepts closed sets and rejects junk") {
    Subgroup z = standard({StandardTag::Z, 5});
    Subgroup copy = Subgroup::from_elements(5, z.elements());
    CHECK(copy == z);
    std::vector<Mat2> bad = {Mat2::identity(5), Mat2::diag(5, 2, 1)};  // not closed
    CHECK_THROWS_AS(Subgroup::from_elements(5, bad), Error);
}

TEST_CASE("intersection and SL2 intersection") {
    Subgroup cs = standard({StandardTag::Cs, 5});
    CHECK(sl2_intersection(cs).order() == 4);  // diag(a, a^-1)
    Subgroup d = standard({StandardTag::D, 5});
    CHECK(intersect(cs, d) == d);
    CHECK(sl2_intersection(d).trivial());
}

TEST_CASE("flip is an involution and preserves order") {
    Subgroup g = closure(7, {Mat2::diag(7, 3, 2), Mat2::scalar(7, 6)});
    Subgroup f = flip_subgroup(g);
    CHECK(f.order() == g.order());
    CHECK(flip_subgroup(f) == g);
    CHECK(flip_subgroup(standard({StandardTag::Z, 7})) == standard({StandardTag::Z, 7}));
}

TEST_CASE("semisimplification is idempotent and lands in Cs") {
    Subgroup b = closure(7, {Mat2(7, 3, 1, 0, 2), Mat2::unipotent(7)});
    Subgroup ss = semisimplify(b);
    for (const Mat2& x : ss.elements()) CHECK(is_diagonal(x));
    CHECK(semisimplify(ss) == ss);
    CHECK(semisimplify(closure(7, {Mat2::unipotent(7)})).trivial());
}

TEST_CASE("conjugate_subgroup relabels without changing structure") {
    Subgroup g = closure(5, {Mat2::diag(5, 2, 1)});
    Mat2 m(5, 1, 1, 1, 2);
    Subgroup c = conjugate_subgroup(m, g);
    CHECK(c.order() == g.order());
    CHECK(conjugate_subgroup(inv(m), c) == g);
    CHECK(order_histogram(c) == order_histogram(g));
}

TEST_CASE("abelian / determinant predicates") {
    CHECK(is_abelian(standard({StandardTag::Cs, 7})));
    CHECK(is_abelian(standard({StandardTag::Cns, 7})));
    CHECK(!is_abelian(standard({StandardTag::Ns, 7})));
    CHECK(!is_abelian(standard({StandardTag::SL2, 5})));
    CHECK(det_image_order(standard({StandardTag::SL2, 5})) == 1);
    CHECK(det_image_order(standard({StandardTag::D, 7})) == 6);
    CHECK(det_surjective(standard({StandardTag::GL2, 3})));
    CHECK(!det_surjective(standard({StandardTag::SL2, 5})));
    // <gamma, Z>: det image = squares of scalars = all of (Z/pZ)^x? no — det(zI) = z^2
    Subgroup gz = standard({StandardTag::GammaZ, 7});
    CHECK(det_image_order(gz) == 3);  // squares mod 7
    CHECK(!det_surjective(gz));
}

TEST_CASE("keys are canonical and order-insensitive in the generators") {
    Subgroup a = closure(5, {Mat2::diag(5, 2, 1), Mat2::diag(5, 1, 2)});
    Subgroup b = closure(5, {Mat2::diag(5, 1, 2), Mat2::diag(5, 2, 1)});
    CHECK(a.key() == b.key());
    CHECK(a == b);
    CHECK(std::is_sorted(a.elements().begin(), a.elements().end(),
                         [](const Mat2& x, const Mat2& y) { return x < y; }));
}
