#include "cliffcode/clifford_code.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace cliffcode {

namespace {

const Cyclotomic& aligned_lookup(const std::vector<int>& members,
                                 const std::vector<Cyclotomic>& values, int element,
                                 const char* what) {
    auto it = std::lower_bound(members.begin(), members.end(), element);
    if (it == members.end() || *it != element)
        throw InputError(std::string("element is not a member of the ") + what);
    return values[static_cast<std::size_t>(it - members.begin())];
}

// trace(a * b) without forming the product.
Cyclotomic trace_of_product(const CycMatrix& a, const CycMatrix& b) {
    Cyclotomic acc = Cyclotomic::zero(std::lcm(a.order(), b.order()));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero() || b.at(j, i).is_zero()) continue;
            acc += a.at(i, j) * b.at(j, i);
        }
    return acc;
}

// Sum of rho over each class of N, shared between the projectors of all
// constituents of one normal subgroup.
std::vector<CycMatrix> class_sums(const ConjugacyClassSet& classes, const UnitaryRep& rho) {
    std::vector<CycMatrix> sums;
    sums.reserve(classes.classes.size());
    for (const auto& cls : classes.classes) {
        CycMatrix s(rho.degree, rho.degree, rho.at(0).order());
        for (int n : cls) s = s + rho.at(n);
        sums.push_back(std::move(s));
    }
    return sums;
}

CycMatrix projector_from_sums(const Subgroup& n, const ConjugacyClassSet& classes,
                              const Character& chi, const std::vector<CycMatrix>& sums,
                              const FiniteGroup& g) {
    CycMatrix p(sums[0].rows(), sums[0].cols(), sums[0].order());
    for (std::size_t c = 0; c < classes.classes.size(); ++c) {
        int inv_rep = g.inv(classes.representatives[c]);
        const Cyclotomic& chi_inv = chi.values[static_cast<std::size_t>(classes.class_of(inv_rep))];
        if (chi_inv.is_zero()) continue;
        p = p + sums[c].scaled(chi_inv);
    }
    Rational scale(BigInt(chi.degree), BigInt(n.order()));
    return p.scaled(Cyclotomic(scale));
}

Subgroup subgroup_from_members(const FiniteGroup& g, const std::vector<int>& members) {
    return subgroup_generated(g, members);
}

} // namespace

const Cyclotomic& InertiaData::theta_at(int element) const {
    return aligned_lookup(inertia.members(), theta, element, "inertia group");
}

const Cyclotomic& StabilizerWitness::theta_at(int element) const {
    return aligned_lookup(stabilizer.members(), theta, element, "stabilizer witness");
}

CycMatrix build_projector(const Subgroup& n, const ConjugacyClassSet& classes,
                          const Character& chi, const UnitaryRep& rho) {
    const FiniteGroup& g = *rho.group;
    CycMatrix p = projector_from_sums(n, classes, chi, class_sums(classes, rho), g);
    if (p.is_zero())
        throw InputError("chi is not a constituent of the restricted character; "
                         "the projector vanishes");
    return p;
}

int code_dimension(const CycMatrix& projector) {
    Cyclotomic t = projector.trace();
    auto r = t.as_rational();
    if (!r || !is_integer(*r) || *r < 0)
        throw InconsistencyError("projector trace is not a non-negative integer: " + t.str());
    return static_cast<int>(to_int64(numerator(*r)));
}

std::vector<CliffordCode> enumerate_codes(const FiniteGroup& g, const UnitaryRep& rho,
                                          std::uint64_t prime_bound) {
    std::vector<CliffordCode> codes;
    for (const Subgroup& n : normal_subgroups(g)) {
        CharacterTable table = character_table(n, prime_bound);
        std::vector<Cyclotomic> phi_n = restrict_character(rho, table.classes);
        std::vector<CycMatrix> sums = class_sums(table.classes, rho);
        for (const Character& chi : table.characters) {
            Cyclotomic ip = inner_product(chi.values, phi_n, table.classes, n.order());
            auto r = ip.as_rational();
            if (!r || !is_integer(*r) || *r < 0)
                throw InconsistencyError("[chi, phi_N] is not a non-negative integer");
            if (*r == 0) continue;
            CliffordCode code;
            code.normal = n;
            code.classes = table.classes;
            code.chi = chi;
            code.multiplicity = static_cast<int>(to_int64(numerator(*r)));
            code.projector = projector_from_sums(n, table.classes, chi, sums, g);
            code.dim_q = code_dimension(code.projector);
            if (code.dim_q != code.multiplicity * chi.degree)
                throw InconsistencyError("dim Q != multiplicity * chi(1)");
            codes.push_back(std::move(code));
        }
    }
    return codes;
}

Subgroup inertia_group(const FiniteGroup& g, const Subgroup& n, const ConjugacyClassSet& classes,
                       const Character& chi) {
    std::vector<int> members;
    for (int cand = 0; cand < g.order(); ++cand) {
        bool fixes = true;
        for (std::size_t c = 0; c < classes.representatives.size() && fixes; ++c) {
            int conj = g.conjugate(cand, classes.representatives[c]);
            fixes = chi.values[static_cast<std::size_t>(classes.class_of(conj))] ==
                    chi.values[c];
        }
        if (fixes) members.push_back(cand);
    }
    Subgroup t = subgroup_from_members(g, members);
    if (!t.contains(n))
        throw InconsistencyError("inertia group does not contain the normal subgroup");
    return t;
}

InertiaData inertia_character(const CliffordCode& code, const Subgroup& inertia,
                              const UnitaryRep& rho) {
    const FiniteGroup& g = *rho.group;
    InertiaData data;
    data.inertia = inertia;
    data.theta_degree = code.dim_q;

    Cyclotomic dim_sq(Rational(static_cast<long long>(code.dim_q) * code.dim_q));
    std::vector<int> quasi;
    data.theta.reserve(inertia.members().size());
    for (int t : inertia.members()) {
        Cyclotomic value = trace_of_product(rho.at(t), code.projector);
        if (Cyclotomic::equivalent(value.abs_squared(), dim_sq)) quasi.push_back(t);
        data.theta.push_back(std::move(value));
    }
    if (!Cyclotomic::equivalent(data.theta_at(g.identity()),
                                Cyclotomic(Rational(code.dim_q))))
        throw InconsistencyError("theta(1) != dim Q");
    data.quasikernel = subgroup_from_members(g, quasi);
    return data;
}

namespace {

// All abelian subgroups of H. Any abelian subgroup is reachable from the
// trivial one by adjoining single elements without ever leaving an abelian
// intermediate, so the cyclic-extension walk can prune non-commuting
// extensions instead of enumerating the full lattice of H.
std::vector<Subgroup> abelian_subgroups_within(const Subgroup& h) {
    if (h.order() > 4096) throw InputError("subgroup enumeration bound exceeded: |H| > 4096");
    const FiniteGroup& g = h.group();
    std::map<std::vector<int>, int> seen;
    std::vector<Subgroup> found;
    auto add = [&](Subgroup s) -> bool {
        if (seen.count(s.members())) return false;
        seen.emplace(s.members(), static_cast<int>(found.size()));
        found.push_back(std::move(s));
        return true;
    };
    add(Subgroup::trivial(g));
    std::vector<Subgroup> worklist = found;
    while (!worklist.empty()) {
        Subgroup current = std::move(worklist.back());
        worklist.pop_back();
        for (int m : h.members()) {
            if (current.contains(m)) continue;
            bool commutes = true;
            for (int x : current.members())
                if (g.mul(x, m) != g.mul(m, x)) {
                    commutes = false;
                    break;
                }
            if (!commutes) continue;
            std::vector<int> seed = current.gens();
            seed.push_back(m);
            Subgroup ext = subgroup_generated(g, seed);
            if (add(ext)) worklist.push_back(found.back());
        }
    }
    std::sort(found.begin(), found.end(), Subgroup::less);
    return found;
}

} // namespace

AdmissibleFamily admissible_family(const FiniteGroup& g, const Subgroup& quasikernel,
                                   const Subgroup& center) {
    AdmissibleFamily family;
    for (Subgroup& cand : abelian_subgroups_within(quasikernel)) {
        if (!is_normal(g, cand)) continue;
        family.members.push_back(std::move(cand));
    }
    int max_order = 0;
    for (const Subgroup& a : family.members) max_order = std::max(max_order, a.order());
    for (std::size_t i = 0; i < family.members.size(); ++i) {
        if (family.members[i].order() == max_order) family.maximal.push_back(static_cast<int>(i));
        if (family.members[i].contains(center)) family.containing_center.push_back(static_cast<int>(i));
    }
    return family;
}

namespace {

// Expresses a unit-modulus ambient value as a root of unity of the given
// element order.
Cyclotomic as_low_order_root(const Cyclotomic& value, int element_order) {
    for (int k = 0; k < element_order; ++k) {
        Cyclotomic cand = Cyclotomic::root_of_unity(static_cast<unsigned>(element_order), k);
        if (Cyclotomic::equivalent(cand, value)) return cand;
    }
    throw InconsistencyError("central scalar is not a root of unity of the element order");
}

} // namespace

CenterExtension extend_by_center(const CliffordCode& code, const UnitaryRep& rho,
                                 const CentralCharacter& alpha, const Subgroup& center) {
    const FiniteGroup& g = *rho.group;
    const Subgroup& n = code.normal;

    // chi must agree with alpha on N cap Z(G): chi(c) = chi(1) alpha(c).
    Cyclotomic degree(Rational(code.chi.degree));
    for (int z : center.members()) {
        if (!n.contains(z)) continue;
        const Cyclotomic& chi_z = code.chi.values[static_cast<std::size_t>(code.classes.class_of(z))];
        if (!Cyclotomic::equivalent(chi_z, degree * alpha.at(z)))
            throw InputError("chi is inconsistent with the central character on N cap Z(G); "
                             "not a constituent");
    }

    if (center.order() == 0 || n.contains(center))
        return {code, false};

    std::vector<int> seed = n.gens();
    seed.insert(seed.end(), center.gens().begin(), center.gens().end());
    Subgroup nz = subgroup_generated(g, seed);
    ConjugacyClassSet classes_z = conjugacy_classes(nz);
    const unsigned e_z = static_cast<unsigned>(exponent(nz));

    Character chi_z;
    chi_z.degree = code.chi.degree;
    chi_z.values.reserve(classes_z.representatives.size());
    for (int rep : classes_z.representatives) {
        // write rep = z * m with z central, m in N
        int found_z = -1, m = -1;
        for (int z : center.members()) {
            int cand = g.mul(g.inv(z), rep);
            if (n.contains(cand)) {
                found_z = z;
                m = cand;
                break;
            }
        }
        if (found_z < 0)
            throw InconsistencyError("element of N Z(G) has no central decomposition");
        Cyclotomic a_low =
            as_low_order_root(alpha.at(found_z), g.element_order(found_z)).embedded(e_z);
        Cyclotomic chi_m =
            code.chi.values[static_cast<std::size_t>(code.classes.class_of(m))].embedded(e_z);
        chi_z.values.push_back(a_low * chi_m);
    }

    CliffordCode extended;
    extended.normal = std::move(nz);
    extended.classes = std::move(classes_z);
    extended.chi = std::move(chi_z);
    extended.multiplicity = code.multiplicity;
    extended.projector = build_projector(extended.normal, extended.classes, extended.chi, rho);
    extended.dim_q = code_dimension(extended.projector);

    if (!CycMatrix::equivalent(extended.projector, code.projector))
        throw InconsistencyError("center extension changed the projector");
    return {std::move(extended), true};
}

StabilizerWitness stabilizer_witness(const CliffordCode& code, const Subgroup& a,
                                     const UnitaryRep& rho) {
    const FiniteGroup& g = *rho.group;
    const CycMatrix& p = code.projector;

    int pi = -1, pj = -1;
    for (int i = 0; i < p.rows() && pi < 0; ++i)
        for (int j = 0; j < p.cols(); ++j)
            if (!p.at(i, j).is_zero()) {
                pi = i;
                pj = j;
                break;
            }
    if (pi < 0) throw InputError("zero projector has no witness");

    StabilizerWitness w;
    w.stabilizer = a;
    w.theta.reserve(a.members().size());
    for (int m : a.members()) {
        CycMatrix mp = rho.at(m) * p;
        Cyclotomic theta = mp.at(pi, pj) / p.at(pi, pj);
        if (!CycMatrix::equivalent(mp, p.scaled(theta)))
            throw InconsistencyError(
                "rho(a) P is not a scalar multiple of P; A is not inside the quasikernel");
        w.theta.push_back(std::move(theta));
    }
    // theta is a homomorphism into the roots of unity.
    for (int x : a.members())
        for (int y : a.members())
            if (!Cyclotomic::equivalent(w.theta_at(g.mul(x, y)), w.theta_at(x) * w.theta_at(y)))
                throw InconsistencyError("witness eigenvalues are not multiplicative");

    CycMatrix pa(p.rows(), p.cols(), p.order());
    for (int m : a.members()) pa = pa + rho.at(m).scaled(w.theta_at(g.inv(m)));
    pa = pa.scaled(Cyclotomic(Rational(BigInt(1), BigInt(a.order()))));
    if (!CycMatrix::equivalent(pa * p, p))
        throw InconsistencyError("P_A does not fix the code space");
    w.projector = std::move(pa);
    return w;
}

ClassificationVerdict classify(const CliffordCode& code, const InertiaData& inertia,
                               const AdmissibleFamily& family, const Subgroup& center,
                               const UnitaryRep& rho) {
    const FiniteGroup& g = *rho.group;
    if (!code.normal.contains(center))
        throw InputError("classify requires the center-extended code (Z(G) <= N)");
    if (family.members.empty())
        throw InconsistencyError("admissible family is empty; it must contain the trivial group");
    if (!inertia.inertia.contains(code.normal) || !inertia.inertia.contains(inertia.quasikernel) ||
        !inertia.quasikernel.contains(center))
        throw InconsistencyError("quasikernel sandwich Z(G) <= Z(theta) <= T, N <= T violated");

    const Rational dim_q(code.dim_q);
    const Rational phi1(rho.degree);
    const Rational chi1_sq(static_cast<long long>(code.chi.degree) * code.chi.degree);

    ClassificationVerdict verdict;
    bool dim_scan = false;
    for (const Subgroup& a : family.members) {
        int cap = 0;
        for (int m : a.members())
            if (center.contains(m)) ++cap;
        CandidateEvidence ev;
        ev.a_order = a.order();
        ev.a_cap_center_order = cap;
        ev.contains_center = a.contains(center);
        ev.stabilizer_dim = Rational(cap) * phi1 / Rational(a.order());
        ev.n_over_a = Rational(code.normal.order()) / Rational(a.order());
        ev.g_over_a = Rational(g.order()) / Rational(a.order());
        if (ev.stabilizer_dim == dim_q) dim_scan = true;
        verdict.evidence.push_back(std::move(ev));
    }

    // Maximal-order shortcut: dim Q = |Z(G)| phi(1) / |A| for maximal A.
    if (family.maximal.empty())
        throw InconsistencyError("admissible family lost its maximal members");
    const Subgroup& a_max = family.members[static_cast<std::size_t>(family.maximal.front())];
    if (!a_max.contains(center))
        throw InconsistencyError("a maximal admissible subgroup does not contain the center");
    bool max_order_test =
        Rational(center.order()) * phi1 / Rational(a_max.order()) == dim_q;

    // chi(1)^2 = |N|/|A| over members containing the center.
    bool chi_square_test = false;
    for (int idx : family.containing_center) {
        const Subgroup& a = family.members[static_cast<std::size_t>(idx)];
        if (Rational(code.normal.order()) / Rational(a.order()) == chi1_sq) chi_square_test = true;
    }

    if (dim_scan != max_order_test || max_order_test != chi_square_test)
        throw InconsistencyError(
            "stabilizer tests disagree: dim_scan=" + std::to_string(dim_scan) +
            " maximal=" + std::to_string(max_order_test) +
            " chi^2=" + std::to_string(chi_square_test) + " for |N|=" +
            std::to_string(code.normal.order()) + ", chi(1)=" + std::to_string(code.chi.degree));

    if (dim_scan) {
        verdict.kind = ClassificationVerdict::Kind::stabilizer;
        StabilizerWitness w = stabilizer_witness(code, a_max, rho);
        if (!CycMatrix::equivalent(w.projector, code.projector))
            throw InconsistencyError("stabilizer verdict but P_A != P");
        verdict.witness = std::move(w);
    } else {
        verdict.kind = ClassificationVerdict::Kind::true_clifford;
    }
    return verdict;
}

AnalyzedCode analyze_code(const CliffordCode& code, const UnitaryRep& rho,
                          const CentralCharacter& alpha, const Subgroup& center) {
    const FiniteGroup& g = *rho.group;
    AnalyzedCode out;
    out.original = code;
    CenterExtension ext = extend_by_center(code, rho, alpha, center);
    out.extended = std::move(ext.code);
    out.extension_changed = ext.changed;
    Subgroup t = inertia_group(g, out.extended.normal, out.extended.classes, out.extended.chi);
    out.inertia = inertia_character(out.extended, t, rho);
    out.family = admissible_family(g, out.inertia.quasikernel, center);
    out.verdict = classify(out.extended, out.inertia, out.family, center, rho);
    return out;
}

bool detectable(int element, const InertiaData& inertia) {
    return !inertia.inertia.contains(element) || inertia.quasikernel.contains(element);
}

DetectabilityCensus detectability_census(const FiniteGroup& g, const InertiaData& inertia) {
    DetectabilityCensus census;
    census.group_order = g.order();
    census.inertia_order = inertia.inertia.order();
    census.quasikernel_order = inertia.quasikernel.order();
    census.undetectable = census.inertia_order - census.quasikernel_order;
    return census;
}

} // namespace cliffcode
