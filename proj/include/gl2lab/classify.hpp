#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gl2lab/mat2.hpp"
#include "gl2lab/subgroup.hpp"

namespace gl2 {

enum class ShapeTag {
    ContainsSL2,
    BorelConj,
    SplitNormalizerConj,
    NonsplitNormalizerConj,
    ExceptionalA4,
    ExceptionalS4,
    ExceptionalA5,
};

const char* shape_tag_name(ShapeTag tag);

struct ShapeLabel {
    ShapeTag tag;
    std::optional<Mat2> witness;  // conjugates the subgroup into the named group
};

struct ClassificationResult {
    std::string key;
    std::vector<ShapeLabel> labels;
    int projective_order = 0;
    bool abelian = false;
    bool diagonalizable = false;
    int det_image_order = 0;
};

/// All applicable cases of the subgroup classification, with witnesses.
ClassificationResult classify(const Subgroup& g);

/// Witness conjugating G into the diagonal group, when one exists.
std::optional<Mat2> is_diagonalizable(const Subgroup& g);

/// Element-order histogram of G / (Z cap G).
std::map<int, int> projective_quotient_histogram(const Subgroup& g);

std::string classification_to_json(const ClassificationResult& r);

}  // namespace gl2
