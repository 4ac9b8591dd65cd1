#include "gl2lab/classify.hpp"

#include <unordered_set>

#include <json.hpp>

#include "gl2lab/conjugacy.hpp"

namespace gl2 {

const char* shape_tag_name(ShapeTag tag) {
    switch (tag) {
        case ShapeTag::ContainsSL2: return "ContainsSL2";
        case ShapeTag::BorelConj: return "BorelConj";
        case ShapeTag::SplitNormalizerConj: return "SplitNormalizerConj";
        case ShapeTag::NonsplitNormalizerConj: return "NonsplitNormalizerConj";
        case ShapeTag::ExceptionalA4: return "ExceptionalA4";
        case ShapeTag::ExceptionalS4: return "ExceptionalS4";
        case ShapeTag::ExceptionalA5: return "ExceptionalA5";
    }
    return "?";
}

std::optional<Mat2> is_diagonalizable(const Subgroup& g) {
    Subgroup cs = standard({StandardTag::Cs, g.modulus()});
    return conjugate_contains(cs, g);
}

std::map<int, int> projective_quotient_histogram(const Subgroup& g) {
    const int n = g.modulus();
    // scalar part Z cap G
    std::unordered_set<uint32_t> zg;
    for (const Mat2& x : g.elements())
        if (is_scalar(x)) zg.insert(x.code());
    std::map<int, int> hist;
    std::unordered_set<uint32_t> done;
    for (const Mat2& x : g.elements()) {
        if (done.count(x.code())) continue;
        // mark the whole coset x * (Z cap G)
        for (const Mat2& y : g.elements())
            if (is_scalar(y)) done.insert(mul(x, y).code());
        // order of the coset in G / (Z cap G)
        Mat2 pw = x;
        int k = 1;
        while (!zg.count(pw.code())) {
            pw = mul(pw, x);
            ++k;
            if (k > n * n * n * n) throw Error("projective order: runaway iteration");
        }
        ++hist[k];
    }
    return hist;
}

namespace {

bool histogram_is(const std::map<int, int>& h, std::initializer_list<std::pair<int, int>> want) {
    if (h.size() != want.size()) return false;
    for (auto [o, c] : want) {
        auto it = h.find(o);
        if (it == h.end() || it->second != c) return false;
    }
    return true;
}

}  // namespace

ClassificationResult classify(const Subgroup& g) {
    const int p = g.modulus();
    if (p < 3 || !is_prime(p)) throw Error("classify: prime modulus p >= 3 required");

    ClassificationResult r;
    r.key = g.key();
    r.abelian = gl2::is_abelian(g);
    r.det_image_order = det_image_order(g);

    std::map<int, int> proj = projective_quotient_histogram(g);
    r.projective_order = 0;
    for (auto [o, c] : proj) r.projective_order += c;

    // SL2 containment: enough to contain the two unipotent generators
    bool has_sl2 = g.contains(Mat2(p, 1, 1, 0, 1)) && g.contains(Mat2(p, 1, 0, 1, 1));
    if (has_sl2) r.labels.push_back({ShapeTag::ContainsSL2, std::nullopt});

    Subgroup b0 = standard({StandardTag::B0, p});
    Subgroup ns = standard({StandardTag::Ns, p});
    Subgroup nns = standard({StandardTag::Nns, p});
    if (auto w = conjugate_contains(b0, g)) r.labels.push_back({ShapeTag::BorelConj, *w});
    if (auto w = conjugate_contains(ns, g)) r.labels.push_back({ShapeTag::SplitNormalizerConj, *w});
    if (auto w = conjugate_contains(nns, g)) r.labels.push_back({ShapeTag::NonsplitNormalizerConj, *w});

    if (r.projective_order == 12 && histogram_is(proj, {{1, 1}, {2, 3}, {3, 8}}))
        r.labels.push_back({ShapeTag::ExceptionalA4, std::nullopt});
    if (r.projective_order == 24 && histogram_is(proj, {{1, 1}, {2, 9}, {3, 8}, {4, 6}}))
        r.labels.push_back({ShapeTag::ExceptionalS4, std::nullopt});
    if (r.projective_order == 60 && histogram_is(proj, {{1, 1}, {2, 15}, {3, 20}, {5, 24}}))
        r.labels.push_back({ShapeTag::ExceptionalA5, std::nullopt});

    r.diagonalizable = is_diagonalizable(g).has_value();
    return r;
}

std::string classification_to_json(const ClassificationResult& r) {
    nlohmann::ordered_json j;
    j["key"] = r.key;
    nlohmann::ordered_json labels = nlohmann::ordered_json::array();
    for (const ShapeLabel& l : r.labels) {
        nlohmann::ordered_json lj;
        lj["tag"] = shape_tag_name(l.tag);
        if (l.witness) lj["witness"] = encode(*l.witness);
        labels.push_back(lj);
    }
    j["labels"] = labels;
    j["projective_order"] = r.projective_order;
    j["is_abelian"] = r.abelian;
    j["is_diagonalizable"] = r.diagonalizable;
    j["det_image_order"] = r.det_image_order;
    return j.dump();
}

}  // namespace gl2
