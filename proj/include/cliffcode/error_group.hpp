#pragma once

#include <vector>

#include "cliffcode/character_table.hpp"
#include "cliffcode/group.hpp"

namespace cliffcode {

/// The representing matrices of the group together with the character they
/// afford. In this artifact the image is the group's own defining matrices;
/// an explicit image vector is still carried so that deliberately broken
/// representations can be validated in tests.
struct UnitaryRep {
    const FiniteGroup* group = nullptr;
    int degree = 0;
    std::vector<CycMatrix> image;      // per element index
    std::vector<Cyclotomic> character; // trace per element index, ambient order

    static UnitaryRep natural(const FiniteGroup& g);
    static UnitaryRep with_image(const FiniteGroup& g, std::vector<CycMatrix> image);

    const CycMatrix& at(int element) const { return image[static_cast<std::size_t>(element)]; }
    const Cyclotomic& phi(int element) const {
        return character[static_cast<std::size_t>(element)];
    }
};

/// Outcome of checking the error-group axioms for (G, rho).
struct ErrorGroupCert {
    int degree = 0;
    int center_order = 0;
    int index = 0; // [G : Z(G)]
    bool faithful = false;
    bool irreducible = false;
    bool degree_squared_equals_index = false;

    bool valid() const { return faithful && irreducible && degree_squared_equals_index; }
};

/// The scalar function alpha on Z(G) with rho(z) = alpha(z) * I.
struct CentralCharacter {
    std::vector<int> members;        // center element indices, sorted
    std::vector<Cyclotomic> values;  // aligned with members

    const Cyclotomic& at(int element) const;
};

/// Checks faithfulness, irreducibility ([phi, phi] = 1, exact) and the degree
/// condition d^2 = [G : Z(G)]. Never throws on a failed axiom; the
/// certificate records what failed.
ErrorGroupCert verify_error_group(const FiniteGroup& g, const UnitaryRep& rho);

/// phi as a class function on G's classes (values at representatives).
std::vector<Cyclotomic> character_of(const UnitaryRep& rho, const ConjugacyClassSet& classes);

/// Extracts alpha from the diagonal of rho(z); throws InconsistencyError when
/// some central element is not represented by a scalar matrix.
CentralCharacter central_character(const UnitaryRep& rho, const Subgroup& center);

/// phi restricted to H, re-indexed to H's class structure.
std::vector<Cyclotomic> restrict_character(const UnitaryRep& rho, const ConjugacyClassSet& h_classes);

} // namespace cliffcode
