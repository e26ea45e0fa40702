#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lcert/intutil.hpp"

namespace lcert {

// Finite group presented by its multiplication table; elements are indices
// 0..n-1. Group axioms are validated at construction; conjugacy classes and
// the full subgroup list are computed once and cached. Instances are
// immutable afterwards and freely shareable.
class FiniteGroup {
  public:
    static FiniteGroup from_table(std::vector<std::vector<int>> table);
    // Generators as point permutations (0-based images). The generated group
    // must have the declared order.
    static FiniteGroup from_permutations(int declared_order,
                                         const std::vector<std::vector<int>>& generators);
    // Corpus file format: "order n", then "table" with n rows of n indices,
    // or "perm" with one generator per line in cycle notation, 1-based points.
    static FiniteGroup from_file(const std::string& path);
    static FiniteGroup parse(std::istream& in, const std::string& origin);
    // (Z/N)^* under multiplication; element i is residue units()[i].
    static FiniteGroup unit_group_of(i64 modulus);

    int order() const { return n_; }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inverse(int a) const { return inverse_[a]; }
    int element_order(int a) const { return element_order_[a]; }
    int conjugate_element(int g, int x) const {  // x g x^-1
        return mul(mul(x, g), inverse_[x]);
    }

    const std::vector<std::vector<int>>& conjugacy_classes() const { return classes_; }
    int class_of(int g) const { return class_of_[g]; }
    int class_count() const { return (int)classes_.size(); }

    // All subgroups as sorted element lists, ordered by (order, elements).
    const std::vector<std::vector<int>>& subgroups() const { return subgroups_; }

    std::vector<int> closure(std::vector<int> seed) const;
    bool is_abelian() const;

    // Residues when the group came from unit_group_of, else empty.
    const std::vector<i64>& residues() const { return residues_; }
    std::string element_name(int a) const;

  private:
    FiniteGroup() = default;
    void finalize();  // validation + derived data

    int n_ = 0;
    int identity_ = 0;
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    std::vector<int> element_order_;
    std::vector<std::vector<int>> classes_;
    std::vector<int> class_of_;
    std::vector<std::vector<int>> subgroups_;
    std::vector<i64> residues_;
    std::vector<std::string> names_;
};

// Subgroup relabelled as a standalone group; parent_index maps the new
// element indices back into G.
struct SubgroupView {
    FiniteGroup group;
    std::vector<int> parent_index;
};

SubgroupView subgroup_as_group(const FiniteGroup& G, const std::vector<int>& elements);

std::vector<int> commutator_subgroup(const FiniteGroup& G);

// Quotient by a normal subgroup: returns the coset group and the projection
// element -> coset index. Cosets are labelled by their smallest element.
struct QuotientView {
    FiniteGroup group;
    std::vector<int> coset_of;
};

QuotientView quotient_group(const FiniteGroup& G, const std::vector<int>& normal_subgroup);

}  // namespace lcert
