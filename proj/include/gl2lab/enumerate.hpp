#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "gl2lab/mat2.hpp"
#include "gl2lab/subgroup.hpp"

namespace gl2 {

/// Enumeration size budgets. Defaults keep every stock run at desk scale.
struct Budget {
    std::size_t max_lattice_ambient = 5000;   // dense table ambient order cap
    int max_cyclic_p = 47;                    // cyclic class enumeration cap
    int max_abelian_p = 19;                   // abelian class enumeration cap
};

/// Ambient finite matrix group with a dense multiplication table.
/// Element indices follow the sorted element order of the ambient subgroup.
class DenseGroup {
  public:
    DenseGroup(const Subgroup& ambient, std::size_t max_order);

    int modulus() const { return n_; }
    int32_t size() const { return static_cast<int32_t>(elems_.size()); }
    const Mat2& element(int32_t i) const { return elems_[i]; }
    int32_t identity() const { return identity_; }
    int32_t mul(int32_t i, int32_t j) const { return table_[static_cast<std::size_t>(i) * elems_.size() + j]; }
    int32_t inverse(int32_t i) const { return inv_[i]; }
    int32_t order_of(int32_t i) const { return order_[i]; }
    int32_t index_of(const Mat2& m) const;  // -1 if not in ambient

  private:
    int n_;
    std::vector<Mat2> elems_;
    std::vector<int32_t> code_to_idx_;
    std::vector<int32_t> table_;
    std::vector<int32_t> inv_;
    std::vector<int32_t> order_;
    int32_t identity_;
};

/// Sorted element-index set of a subgroup of a DenseGroup ambient.
using IdxSet = std::vector<int32_t>;

struct Lattice {
    /// Every subgroup of the ambient, as sorted index sets, sorted by key.
    std::vector<IdxSet> subgroups;
    /// Conjugacy class id per subgroup (classes under ambient conjugation).
    std::vector<int32_t> class_of;
    /// One representative subgroup index per class.
    std::vector<int32_t> class_reps;
};

/// Full subgroup lattice of the ambient, grouped into conjugacy classes.
Lattice enumerate_lattice(const DenseGroup& g);

Subgroup to_subgroup(const DenseGroup& g, const IdxSet& s);

/// All subgroups of the ambient (full list, not up to conjugacy).
/// Throws if the ambient exceeds the budget.
std::vector<Subgroup> enumerate_subgroups(const Subgroup& ambient, const Budget& budget = {});

/// One representative per conjugacy class of cyclic subgroups of GL2(p),
/// sorted by canonical key.
std::vector<Subgroup> enumerate_cyclic_subgroups(int p, const Budget& budget = {});

/// One representative per conjugacy class of abelian subgroups of GL2(p),
/// via the shape families an abelian subgroup can take: subgroups of Cs,
/// of cyclic Cns, <n, scalars> inside Ns or Nns, and <gamma, scalars>.
std::vector<Subgroup> enumerate_abelian_classes(int p, const Budget& budget = {});

}  // namespace gl2
