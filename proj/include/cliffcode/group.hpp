#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "cliffcode/cyc_matrix.hpp"

namespace cliffcode {

/// A finite matrix group, fully enumerated. Elements are canonical cyclotomic
/// matrices; element identity is matrix identity. Indexing is breadth-first
/// word order over the generators as given, with the identity at index 0, so
/// every structural listing downstream is reproducible run to run.
///
/// All matrices are embedded into one ambient cyclotomic order
/// lcm(generator entry order, exponent(G)), which is large enough to hold
/// every character value and projector entry that later stages produce.
class FiniteGroup {
public:
    int order() const { return static_cast<int>(elements_.size()); }
    unsigned ambient_order() const { return ambient_order_; }
    int identity() const { return 0; }
    int degree() const { return degree_; }

    const std::vector<CycMatrix>& elements() const { return elements_; }
    const CycMatrix& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& generator_indices() const { return generator_indices_; }

    int mul(int i, int j) const { return mul_[static_cast<std::size_t>(i) * order() + j]; }
    int inv(int i) const { return inv_[static_cast<std::size_t>(i)]; }
    int conjugate(int g, int h) const { return mul(mul(g, h), inv(g)); } // g h g^-1
    int commutator(int g, int h) const { return mul(mul(inv(g), inv(h)), mul(g, h)); }

    int element_order(int i) const;
    int exponent() const;

    /// Index of a matrix in the group, or -1. The probe is embedded into the
    /// ambient order first.
    int find(const CycMatrix& m) const;

    /// Word over generator names in BFS derivation order; identity is "1".
    std::string word(int i, const std::vector<std::string>& names) const;

private:
    int degree_ = 0;
    unsigned ambient_order_ = 1;
    std::vector<CycMatrix> elements_;
    std::vector<int> mul_;
    std::vector<int> inv_;
    std::vector<int> generator_indices_;
    std::vector<std::pair<int, int>> derivation_; // (parent element, generator slot)
    std::unordered_map<CycMatrix, int, CycMatrixHash> index_;

    friend FiniteGroup close_generators(const std::vector<CycMatrix>& gens, int max_order);
};

/// Multiplicative closure of unitary generators. Throws InputError when a
/// generator is not unitary or the closure exceeds max_order.
FiniteGroup close_generators(const std::vector<CycMatrix>& gens, int max_order);

/// A subgroup as a sorted member-index set plus a small generating set kept
/// for cheap joins and report words.
class Subgroup {
public:
    Subgroup() : parent_(nullptr) {}
    Subgroup(const FiniteGroup& g, std::vector<int> members, std::vector<int> gens);

    static Subgroup whole(const FiniteGroup& g);
    static Subgroup trivial(const FiniteGroup& g);

    const FiniteGroup& group() const { return *parent_; }
    int order() const { return static_cast<int>(members_.size()); }
    const std::vector<int>& members() const { return members_; }
    const std::vector<int>& gens() const { return gens_; }
    bool contains(int element) const { return mask_[static_cast<std::size_t>(element)]; }
    bool contains(const Subgroup& other) const;

    bool operator==(const Subgroup& o) const {
        return parent_ == o.parent_ && members_ == o.members_;
    }

    /// Deterministic order: by size, then by member list.
    static bool less(const Subgroup& a, const Subgroup& b);

private:
    const FiniteGroup* parent_;
    std::vector<int> members_;
    std::vector<int> gens_;
    std::vector<bool> mask_;
};

struct ConjugacyClassSet {
    std::vector<std::vector<int>> classes; // sorted member indices
    std::vector<int> representatives;      // least index per class
    std::vector<int> class_of_element;     // parent-group sized, -1 outside H

    int size() const { return static_cast<int>(classes.size()); }
    int class_of(int element) const { return class_of_element[static_cast<std::size_t>(element)]; }
};

Subgroup center(const FiniteGroup& g);

/// Orbit partition of H under conjugation by H itself (H's own classes).
/// Classes are ordered by least representative, so the identity class is
/// always first.
ConjugacyClassSet conjugacy_classes(const Subgroup& h);

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<int>& seed);

bool is_normal(const FiniteGroup& g, const Subgroup& h);
bool is_abelian(const Subgroup& h);
int exponent(const Subgroup& h);

/// The complete normal-subgroup lattice, computed as the join closure of the
/// normal closures of single conjugacy classes. Includes the trivial subgroup
/// and G; sorted by (order, member set).
std::vector<Subgroup> normal_subgroups(const FiniteGroup& g);

/// Every subgroup of H (via cyclic-seed extension). Guard: |H| <= 4096.
std::vector<Subgroup> subgroups_within(const Subgroup& h);

} // namespace cliffcode
