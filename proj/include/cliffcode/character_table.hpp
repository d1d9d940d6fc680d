#pragma once

#include <cstdint>
#include <vector>

#include "cliffcode/fp.hpp"
#include "cliffcode/group.hpp"

namespace cliffcode {

/// One irreducible character: exact values in Q(zeta_e), one per conjugacy
/// class in class order, with values[0] = degree.
struct Character {
    int degree = 0;
    std::vector<Cyclotomic> values;
};

/// Class-power maps: map[s][c] is the class of the s-th powers of class c,
/// for s = 0..e-1. Needed by the eigenvalue-count lifting formula.
struct PowerMaps {
    int exponent = 1;
    std::vector<std::vector<int>> map;
};

/// Complete exact character table of a subgroup, computed with the
/// Dixon-Schneider method: simultaneous eigenvectors of the class-sum
/// matrices over F_p (p = 1 mod exponent, p > 2 sqrt|H|), lifted to
/// cyclotomic integers by counting eigenvalue multiplicities.
struct CharacterTable {
    Subgroup group;
    ConjugacyClassSet classes;
    int exponent = 1;
    std::uint64_t prime = 0;
    std::vector<Character> characters; // sorted by degree, then value vector
};

inline constexpr std::uint64_t kDefaultPrimeBound = 100000;

/// Smallest prime p with p = 1 (mod exponent(H)) and p > 2 sqrt(|H|).
/// Throws InputError when no such prime exists below `bound`.
std::uint64_t choose_prime(const Subgroup& h, std::uint64_t bound = kDefaultPrimeBound);

PowerMaps power_maps(const Subgroup& h, const ConjugacyClassSet& classes);

CharacterTable character_table(const Subgroup& h, std::uint64_t prime_bound = kDefaultPrimeBound);

/// Hermitian inner product of two class functions on the same class set:
/// (1/|H|) sum over classes of |C| a(C) conj(b(C)). Exact.
Cyclotomic inner_product(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b,
                         const ConjugacyClassSet& classes, int group_order);

/// Image of a value of order e in F_p under zeta_e -> zeta_residue; used to
/// check the lifted table against the finite-field stage.
std::uint64_t modular_residue(const Cyclotomic& value, std::uint64_t p,
                              std::uint64_t zeta_residue);

} // namespace cliffcode
