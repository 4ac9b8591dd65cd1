#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "gl2lab/mat2.hpp"

namespace gl2 {

/// Finite subgroup of GL2(Z/nZ): generators, full element set (sorted),
/// canonical key. Immutable after construction.
class Subgroup {
  public:
    /// Closure of the generators (breadth-first product closure).
    Subgroup(int n, std::vector<Mat2> gens);

    /// Adopt an already-closed element set (verified).
    static Subgroup from_elements(int n, std::vector<Mat2> elements);

    int modulus() const { return n_; }
    const std::vector<Mat2>& generators() const { return gens_; }
    const std::vector<Mat2>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }
    bool contains(const Mat2& x) const;
    bool trivial() const { return elements_.size() == 1; }

    /// Sorted element encodings joined by ';'.
    const std::string& key() const { return key_; }

    bool operator==(const Subgroup& o) const { return n_ == o.n_ && key_ == o.key_; }

  private:
    Subgroup() = default;
    void finalize();  // sort, build membership set and key

    int n_ = 0;
    std::vector<Mat2> gens_;
    std::vector<Mat2> elements_;
    std::unordered_set<uint32_t> member_codes_;
    std::string key_;
};

enum class StandardTag { Cs, Ns, Cns, Nns, B0, D, Z, GammaZ, SL2, GL2 };

struct StandardKind {
    StandardTag tag;
    int p;      // odd prime for the Cartan families
    int k = 1;  // power, for D^k and Cns^k
};

const char* standard_tag_name(StandardTag tag);

/// The named subgroups of GL2(p) (Cartan families require an odd prime).
Subgroup standard(const StandardKind& kind);

/// Deterministic generator of the cyclic group Cns(p): the least element
/// (by encoding) of order p^2 - 1.
Mat2 nonsplit_cartan_generator(int p);

Subgroup closure(int n, const std::vector<Mat2>& gens);

Subgroup intersect(const Subgroup& g, const Subgroup& h);
Subgroup sl2_intersection(const Subgroup& g);

/// H must lie in Cs(p); swaps the diagonal entries of every element.
Subgroup flip_subgroup(const Subgroup& h);

/// H must lie in B0(p); projects each element to its diagonal part.
Subgroup semisimplify(const Subgroup& h);

Subgroup conjugate_subgroup(const Mat2& m, const Subgroup& g);

/// Set containment H <= G.
bool contains(const Subgroup& g, const Subgroup& h);

bool is_abelian(const Subgroup& g);

/// Order of det(G) as a subgroup of (Z/nZ)^x.
int det_image_order(const Subgroup& g);

/// det(G) = full unit group of Z/nZ?
bool det_surjective(const Subgroup& g);

/// Multiset histogram order -> count over the elements.
std::vector<std::pair<int, int>> order_histogram(const Subgroup& g);

}  // namespace gl2
