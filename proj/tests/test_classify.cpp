#include <doctest.h>

#include "gl2lab/classify.hpp"
#include "gl2lab/conjugacy.hpp"
#include "gl2lab/enumerate.hpp"

#include <json.hpp>

using namespace gl2;

namespace {

bool has_tag(const ClassificationResult& r, ShapeTag t) {
    for (const ShapeLabel& l : r.labels)
        if (l.tag == t) return true;
    return false;
}

}  // namespace

TEST_CASE("named groups get their expected labels") {
    CHECK(has_tag(classify(standard({StandardTag::GL2, 5})), ShapeTag::ContainsSL2));
    CHECK(has_tag(classify(standard({StandardTag::SL2, 5})), ShapeTag::ContainsSL2));
    CHECK(has_tag(classify(standard({StandardTag::B0, 7})), ShapeTag::BorelConj));
    CHECK(has_tag(classify(standard({StandardTag::Ns, 7})), ShapeTag::SplitNormalizerConj));
    CHECK(has_tag(classify(standard({StandardTag::Nns, 7})), ShapeTag::NonsplitNormalizerConj));
    ClassificationResult cs = classify(standard({StandardTag::Cs, 7}));
    CHECK(has_tag(cs, ShapeTag::BorelConj));
    CHECK(has_tag(cs, ShapeTag::SplitNormalizerConj));
    CHECK(cs.abelian);
    CHECK(cs.diagonalizable);
}

TEST_CASE("every label's witness actually conjugates into the named group") {
    int p = 7;
    Subgroup probe = conjugate_subgroup(Mat2(p, 1, 2, 3, 1), standard({StandardTag::Cs, p}));
    ClassificationResult r = classify(probe);
    for (const ShapeLabel& l : r.labels) {
        if (!l.witness) continue;
        StandardTag target;
        switch (l.tag) {
            case ShapeTag::BorelConj: target = StandardTag::B0; break;
            case ShapeTag::SplitNormalizerConj: target = StandardTag::Ns; break;
            case ShapeTag::NonsplitNormalizerConj: target = StandardTag::Nns; break;
            default: continue;
        }
        Subgroup named = standard({target, p});
        for (const Mat2& x : probe.elements()) CHECK(named.contains(conjugate(*l.witness, x)));
    }
}

TEST_CASE("exceptional projective quotients") {
    // the projective image of SL2(3) is A4: histogram {1:1, 2:3, 3:8}
    std::map<int, int> a4 = projective_quotient_histogram(standard({StandardTag::SL2, 3}));
    CHECK(a4 == std::map<int, int>{{1, 1}, {2, 3}, {3, 8}});
    // GL2(3) has projective image S4
    std::map<int, int> s4 = projective_quotient_histogram(standard({StandardTag::GL2, 3}));
    CHECK(s4 == std::map<int, int>{{1, 1}, {2, 9}, {3, 8}, {4, 6}});
    // SL2(3) inside GL2(q) for larger q is labeled exceptional A4 when proper:
    // embed the 2x2 icosahedral group? cheap route: classify SL2(3) directly.
    ClassificationResult r = classify(standard({StandardTag::SL2, 3}));
    CHECK(has_tag(r, ShapeTag::ContainsSL2));  // at p=3 it IS SL2, not exceptional
}

TEST_CASE("an A5 subgroup of GL2(11)") {
    // SL2(5) embeds in SL2(11); its projective image is A5. Some conjugate
    // of it contains the order-10 torus <diag(2,6)>, so a second generator
    // completing the binary icosahedral group exists — find the first one.
    Subgroup sl2_11 = standard({StandardTag::SL2, 11});
    Mat2 s = Mat2::diag(11, 2, 6);
    REQUIRE(element_order(s) == 10);
    std::optional<Subgroup> icosa;
    for (const Mat2& y : sl2_11.elements()) {
        Subgroup g = closure(11, {s, y});
        if (g.order() == 120) {
            icosa = g;
            break;
        }
    }
    REQUIRE(icosa);
    ClassificationResult r = classify(*icosa);
    CHECK(has_tag(r, ShapeTag::ExceptionalA5));
    CHECK(!has_tag(r, ShapeTag::ContainsSL2));
    std::map<int, int> h = projective_quotient_histogram(*icosa);
    CHECK(h == std::map<int, int>{{1, 1}, {2, 15}, {3, 20}, {5, 24}});
}

TEST_CASE("labels are conjugation-invariant") {
    int p = 5;
    std::vector<Subgroup> probes = {
        standard({StandardTag::Cns, p}),
        standard({StandardTag::GammaZ, p}),
        closure(p, {Mat2::antidiag(p, 2, 1)}),
    };
    Mat2 m(p, 1, 4, 2, 1);
    REQUIRE(is_invertible(m));
    for (const Subgroup& g : probes) {
        ClassificationResult a = classify(g);
        ClassificationResult b = classify(conjugate_subgroup(m, g));
        REQUIRE(a.labels.size() == b.labels.size());
        for (std::size_t i = 0; i < a.labels.size(); ++i)
            CHECK(a.labels[i].tag == b.labels[i].tag);
        CHECK(a.projective_order == b.projective_order);
        CHECK(a.abelian == b.abelian);
        CHECK(a.diagonalizable == b.diagonalizable);
        CHECK(a.det_image_order == b.det_image_order);
    }
}

TEST_CASE("every subgroup of GL2(3) receives at least one label") {
    for (const Subgroup& s : enumerate_subgroups(standard({StandardTag::GL2, 3})))
        CHECK(!classify(s).labels.empty());
}

TEST_CASE("classification JSON shape") {
    ClassificationResult r = classify(closure(5, {Mat2::diag(5, 2, 1)}));
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(classification_to_json(r));
    CHECK(j["key"] == r.key);
    CHECK(j["labels"].is_array());
    CHECK(!j["labels"].empty());
    CHECK(j["is_abelian"] == true);
    CHECK(j["is_diagonalizable"] == true);
    CHECK(j["det_image_order"] == 4);
    CHECK(j["projective_order"] == r.projective_order);
}
