#pragma once

#include <optional>
#include <vector>

#include "cliffcode/character_table.hpp"
#include "cliffcode/error_group.hpp"

namespace cliffcode {

/// One Clifford code: a normal subgroup N, a constituent chi of the
/// restricted character, and the image of the projector
/// P = (chi(1)/|N|) sum over n in N of chi(n^-1) rho(n).
struct CliffordCode {
    Subgroup normal;
    ConjugacyClassSet classes; // classes of N
    Character chi;             // on those classes
    int multiplicity = 0;      // [chi, phi_N]
    CycMatrix projector;       // d x d, ambient order
    int dim_q = 0;             // trace of the projector
};

/// Inertia subgroup T, the character theta it affords on the code space
/// (theta(t) = trace(rho(t) P)), and the quasikernel Z(theta).
struct InertiaData {
    Subgroup inertia;
    std::vector<Cyclotomic> theta; // aligned with inertia.members()
    int theta_degree = 0;          // = dim Q
    Subgroup quasikernel;

    const Cyclotomic& theta_at(int element) const;
};

/// The normal abelian subgroups of G inside the quasikernel: the candidate
/// stabilizers of the code.
struct AdmissibleFamily {
    std::vector<Subgroup> members;          // sorted by (order, member set)
    std::vector<int> maximal;               // indices of maximal-order members
    std::vector<int> containing_center;     // indices of members with Z(G) <= A
};

struct StabilizerWitness {
    Subgroup stabilizer;                 // the abelian normal subgroup A
    std::vector<Cyclotomic> theta;       // linear character, aligned with A members
    CycMatrix projector;                 // P_A

    const Cyclotomic& theta_at(int element) const;
};

/// Per-candidate numbers recorded when no A attains the dimension equality.
struct CandidateEvidence {
    int a_order = 0;
    int a_cap_center_order = 0;
    bool contains_center = false;
    Rational stabilizer_dim; // |A cap Z(G)| phi(1) / |A|
    Rational n_over_a;       // |N| / |A|
    Rational g_over_a;       // |G| / |A|
};

struct ClassificationVerdict {
    enum class Kind { stabilizer, true_clifford };
    Kind kind = Kind::true_clifford;
    std::optional<StabilizerWitness> witness; // set when kind == stabilizer
    std::vector<CandidateEvidence> evidence;  // one entry per member of the family
};

/// Result of replacing (N, chi) by (N Z(G), chi_Z); the projector is
/// unchanged and is re-verified exactly during the extension.
struct CenterExtension {
    CliffordCode code;
    bool changed = false;
};

/// The defining projector of the code. Throws InputError when chi is not a constituent of the
/// restriction (the sum collapses to zero).
CycMatrix build_projector(const Subgroup& n, const ConjugacyClassSet& classes,
                          const Character& chi, const UnitaryRep& rho);

/// Exact trace of the projector; must be a non-negative integer.
int code_dimension(const CycMatrix& projector);

/// All codes (N, chi) with N normal in G and [chi, phi_N] != 0, in
/// deterministic order: N by (order, member set), chi by table order.
std::vector<CliffordCode> enumerate_codes(const FiniteGroup& g, const UnitaryRep& rho,
                                          std::uint64_t prime_bound = kDefaultPrimeBound);

/// T = {g : chi(g n g^-1) = chi(n) for all n in N}; always contains N.
Subgroup inertia_group(const FiniteGroup& g, const Subgroup& n, const ConjugacyClassSet& classes,
                       const Character& chi);

/// theta(t) = trace(rho(t) P) on T and the quasikernel
/// {t in T : |theta(t)|^2 = (dim Q)^2}.
InertiaData inertia_character(const CliffordCode& code, const Subgroup& inertia,
                              const UnitaryRep& rho);

AdmissibleFamily admissible_family(const FiniteGroup& g, const Subgroup& quasikernel,
                                   const Subgroup& center);

/// Replaces (N, chi) by (N Z(G), chi_Z) with chi_Z(z n) = alpha(z) chi(n).
/// Verifies exactly that the projector is unchanged. Throws InputError when
/// chi is inconsistent with alpha on N cap Z(G) (i.e. not a constituent).
CenterExtension extend_by_center(const CliffordCode& code, const UnitaryRep& rho,
                                 const CentralCharacter& alpha, const Subgroup& center);

/// Extracts the scalar eigenvalue character of A on the code space and the
/// averaged projector P_A over A. Requires A <= Z(theta); P_A P = P always holds.
StabilizerWitness stabilizer_witness(const CliffordCode& code, const Subgroup& a,
                                     const UnitaryRep& rho);

/// Runs the three equivalent stabilizer tests (dimension scan over the
/// whole family, the maximal-order shortcut, and the chi(1)^2 = |N|/|A|
/// criterion) and requires them to agree. Precondition: Z(G) <= N, enforced
/// by extend_by_center.
ClassificationVerdict classify(const CliffordCode& code, const InertiaData& inertia,
                               const AdmissibleFamily& family, const Subgroup& center,
                               const UnitaryRep& rho);

/// Everything the classification pipeline derives from one enumerated code:
/// center extension, inertia data, admissible family, verdict, census.
struct AnalyzedCode {
    CliffordCode original;
    CliffordCode extended;
    bool extension_changed = false;
    InertiaData inertia;
    AdmissibleFamily family;
    ClassificationVerdict verdict;
};

AnalyzedCode analyze_code(const CliffordCode& code, const UnitaryRep& rho,
                          const CentralCharacter& alpha, const Subgroup& center);

/// An error rho(g) is detectable iff g is not in T - Z(theta).
bool detectable(int element, const InertiaData& inertia);

struct DetectabilityCensus {
    int group_order = 0;
    int inertia_order = 0;
    int quasikernel_order = 0;
    int undetectable = 0; // |T| - |Z(theta)|
};

DetectabilityCensus detectability_census(const FiniteGroup& g, const InertiaData& inertia);

} // namespace cliffcode
