#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "cliffcode/clifford_code.hpp"
#include "support/spectral_oracle.hpp"
#include "support/test_matrices.hpp"

using namespace cliffcode;
using namespace cliffcode::testing;

namespace {

struct Fixture {
    FiniteGroup group;
    UnitaryRep rho;
    Subgroup z;
    CentralCharacter alpha;

    explicit Fixture(std::vector<CycMatrix> gens)
        : group(close_generators(gens, 4096)), rho(UnitaryRep::natural(group)),
          z(center(group)), alpha(central_character(rho, z)) {}
};

Fixture& example1() {
    static Fixture f({example1_gen_a(), example1_gen_ab()});
    return f;
}

Fixture& example2() {
    static Fixture f({example2_gen_A(), example2_gen_B(), example2_gen_C()});
    return f;
}

Fixture& pauli2() {
    static Fixture f(pauli_generators(2));
    return f;
}

// Element indices a, b, c, d, e of the first example's presentation,
// recovered from the two shipped generators a and ab.
struct Example1Words {
    int a, b, c, d, e;
};

Example1Words example1_words() {
    const FiniteGroup& g = example1().group;
    Example1Words w{};
    w.a = g.generator_indices()[0];
    int ab = g.generator_indices()[1];
    w.b = g.mul(g.inv(w.a), ab);
    w.c = g.commutator(w.b, w.a);
    w.e = g.commutator(w.c, w.a);
    w.d = g.mul(w.a, w.a);
    return w;
}

// The reference (N, chi) of example 1: N = <b,c,d,e> and the degree-2
// character with values 2,-2,0,2,-2,0,... on its listed representatives.
std::pair<CliffordCode, CharacterTable> example1_reference_code() {
    Fixture& f = example1();
    Example1Words w = example1_words();
    Subgroup n = subgroup_generated(f.group, {w.b, w.c, w.d, w.e});
    CharacterTable t = character_table(n);
    std::vector<int> reps{f.group.identity(),
                          w.e,
                          w.d,
                          w.c,
                          f.group.mul(w.c, w.e),
                          f.group.mul(w.c, w.d),
                          w.b,
                          f.group.mul(w.b, w.d),
                          f.group.mul(w.b, w.c),
                          f.group.mul(f.group.mul(w.b, w.c), w.d)};
    std::vector<long long> values{2, -2, 0, 2, -2, 0, 0, 0, 0, 0};
    for (const Character& chi : t.characters) {
        if (chi.degree != 2) continue;
        bool ok = true;
        for (std::size_t i = 0; i < reps.size() && ok; ++i)
            ok = Cyclotomic::equivalent(
                chi.values[static_cast<std::size_t>(t.classes.class_of(reps[i]))],
                Cyclotomic(Rational(values[i])));
        if (!ok) continue;
        CliffordCode code;
        code.normal = n;
        code.classes = t.classes;
        code.chi = chi;
        code.projector = build_projector(n, t.classes, chi, f.rho);
        code.dim_q = code_dimension(code.projector);
        std::vector<Cyclotomic> phi_n = restrict_character(f.rho, t.classes);
        code.multiplicity = static_cast<int>(to_int64(numerator(
            *inner_product(chi.values, phi_n, t.classes, n.order()).as_rational())));
        return {code, t};
    }
    REQUIRE(false);
    return {};
}

CycMatrix diag_projector_1100(unsigned order) {
    CycMatrix p(4, 4, order);
    p.set(0, 0, Cyclotomic::one(order));
    p.set(1, 1, Cyclotomic::one(order));
    return p;
}

void check_code_properties(Fixture& f, const std::vector<CliffordCode>& codes) {
    const FiniteGroup& g = f.group;
    std::map<std::vector<int>, CycMatrix> isotypic_sums;
    for (const CliffordCode& code : codes) {
        const CycMatrix& p = code.projector;
        CHECK(p * p == p);
        CHECK(p.conj_transpose() == p);
        for (int n : code.normal.members()) CHECK(f.rho.at(n) * p == p * f.rho.at(n));

        // trace formula: tr P = chi(1)^2 phi(1) |N cap Z(G)| / |N|
        int cap = 0;
        for (int m : code.normal.members())
            if (f.z.contains(m)) ++cap;
        Rational expect = Rational(static_cast<long long>(code.chi.degree) * code.chi.degree) *
                          Rational(f.rho.degree) * Rational(cap) /
                          Rational(code.normal.order());
        CHECK(Rational(code.dim_q) == expect);
        CHECK(code.multiplicity >= 1);
        CHECK(code.dim_q == code.multiplicity * code.chi.degree);

        auto it = isotypic_sums.find(code.normal.members());
        if (it == isotypic_sums.end())
            isotypic_sums.emplace(code.normal.members(), p);
        else
            it->second = it->second + p;
    }
    // isotypic completeness per N
    for (const auto& [members, total] : isotypic_sums) CHECK(total.is_identity());

    // pipeline invariants per code
    for (const CliffordCode& code : codes) {
        AnalyzedCode ac = analyze_code(code, f.rho, f.alpha, f.z);
        CHECK(CycMatrix::equivalent(ac.extended.projector, code.projector));
        CHECK(ac.inertia.inertia.contains(ac.extended.normal));
        CHECK(ac.inertia.inertia.contains(ac.inertia.quasikernel));
        CHECK(ac.inertia.quasikernel.contains(f.z));
        CHECK(Cyclotomic::equivalent(ac.inertia.theta_at(g.identity()),
                                     Cyclotomic(Rational(code.dim_q))));

        // family closure: Z(G) * A stays in the family
        for (const Subgroup& a : ac.family.members) {
            std::vector<int> seed = a.gens();
            seed.insert(seed.end(), f.z.gens().begin(), f.z.gens().end());
            Subgroup za = subgroup_generated(g, seed);
            bool present = false;
            for (const Subgroup& m : ac.family.members) present |= m == za;
            CHECK(present);
        }

        if (ac.verdict.kind == ClassificationVerdict::Kind::stabilizer) {
            REQUIRE(ac.verdict.witness.has_value());
            CHECK(CycMatrix::equivalent(ac.verdict.witness->projector, code.projector));
        } else {
            // every admissible A strictly over-shoots the dimension
            for (const Subgroup& a : ac.family.members) {
                StabilizerWitness w = stabilizer_witness(ac.extended, a, f.rho);
                int ta = code_dimension(w.projector);
                CHECK(ta > code.dim_q);
                CHECK(CycMatrix::equivalent(w.projector * code.projector, code.projector));
            }
        }

        // abelian N (after extension) is a stabilizer code by definition
        if (is_abelian(ac.extended.normal))
            CHECK(ac.verdict.kind == ClassificationVerdict::Kind::stabilizer);
    }
}

void check_float_oracle(Fixture& f, const std::vector<CliffordCode>& codes) {
    std::map<std::vector<int>, std::vector<ComplexMatrix>> oracle_cache;
    const int d = f.rho.degree;
    for (const CliffordCode& code : codes) {
        auto it = oracle_cache.find(code.normal.members());
        if (it == oracle_cache.end()) {
            std::vector<ComplexMatrix> sums;
            for (const auto& cls : code.classes.classes) {
                ComplexMatrix s(static_cast<std::size_t>(d) * d, {0.0, 0.0});
                for (int n : cls) {
                    ComplexMatrix m = f.rho.at(n).to_complex();
                    for (std::size_t k = 0; k < s.size(); ++k) s[k] += m[k];
                }
                sums.push_back(std::move(s));
            }
            it = oracle_cache.emplace(code.normal.members(),
                                      joint_eigenprojectors(sums, d)).first;
        }
        ComplexMatrix exact = code.projector.to_complex();
        double best = 1e300;
        for (const ComplexMatrix& cand : it->second)
            best = std::min(best, max_entry_distance(exact, cand));
        CHECK(best < 1e-9);
    }
}

} // namespace

TEST_CASE("example 1 projector is diag(1,1,0,0)") {
    auto [code, table] = example1_reference_code();
    CHECK(code.normal.order() == 16);
    CHECK(code.chi.degree == 2);
    CHECK(code.multiplicity == 1);
    CHECK(code.dim_q == 2);
    CHECK(CycMatrix::equivalent(code.projector, diag_projector_1100(code.projector.order())));
}

TEST_CASE("example 2 projector matches the expected rank-3 matrix") {
    Fixture& f = example2();
    const FiniteGroup& g = f.group;
    int d_idx = g.find(example2_matrix_D());
    REQUIRE(d_idx >= 0); // D = B^4 lies in the closure
    int b = g.generator_indices()[1];
    CHECK(g.mul(g.mul(b, b), g.mul(b, b)) == d_idx);

    Subgroup n = subgroup_generated(g, {g.generator_indices()[0], g.generator_indices()[2], d_idx});
    REQUIRE(n.order() == 108);
    CharacterTable t = character_table(n);
    std::vector<Cyclotomic> phi_n = restrict_character(f.rho, t.classes);

    bool found = false;
    for (const Character& chi : t.characters) {
        auto m = inner_product(chi.values, phi_n, t.classes, n.order()).as_rational();
        if (!m || *m == 0) continue;
        CHECK(chi.degree == 3);
        CycMatrix p = build_projector(n, t.classes, chi, f.rho);
        CHECK(code_dimension(p) == 3);
        found |= CycMatrix::equivalent(p, example2_expected_projector());
    }
    CHECK(found);
}

TEST_CASE("degenerate projectors: trivial N and N = G") {
    Fixture& f = example1();
    const FiniteGroup& g = f.group;

    Subgroup triv = Subgroup::trivial(g);
    CharacterTable tt = character_table(triv);
    CycMatrix pt = build_projector(triv, tt.classes, tt.characters[0], f.rho);
    CHECK(pt.is_identity());

    Subgroup whole = Subgroup::whole(g);
    CharacterTable tw = character_table(whole);
    std::vector<Cyclotomic> phi = restrict_character(f.rho, tw.classes);
    for (const Character& chi : tw.characters) {
        auto m = inner_product(chi.values, phi, tw.classes, g.order()).as_rational();
        if (!m || *m == 0) continue;
        CHECK(chi.degree == 4); // chi = phi itself
        CycMatrix p = build_projector(whole, tw.classes, chi, f.rho);
        CHECK(p.is_identity());
    }

    // N = Z(G) with the central character: P = I
    CharacterTable tz = character_table(f.z);
    std::vector<Cyclotomic> phi_z = restrict_character(f.rho, tz.classes);
    for (const Character& chi : tz.characters) {
        auto m = inner_product(chi.values, phi_z, tz.classes, f.z.order()).as_rational();
        if (!m || *m == 0) continue;
        CHECK(*m == 4);
        CHECK(build_projector(f.z, tz.classes, chi, f.rho).is_identity());
    }
}

TEST_CASE("non-constituent characters are rejected") {
    auto [code, table] = example1_reference_code();
    Fixture& f = example1();
    std::vector<Cyclotomic> phi_n = restrict_character(f.rho, table.classes);
    bool rejected = false;
    for (const Character& chi : table.characters) {
        auto m = inner_product(chi.values, phi_n, table.classes, code.normal.order()).as_rational();
        if (*m != 0) continue;
        CHECK_THROWS_AS(build_projector(code.normal, table.classes, chi, f.rho), InputError);
        rejected = true;
        break;
    }
    CHECK(rejected);
}

TEST_CASE("closed-form dimension check for example 2") {
    // chi(1)^2 phi(1) |N cap Z| / |N| = 9 * 6 * 6 / 108 = 3
    Rational expect = Rational(9) * Rational(6) * Rational(6) / Rational(108);
    CHECK(expect == 3);
}

TEST_CASE("inertia groups of the worked examples equal N") {
    {
        auto [code, table] = example1_reference_code();
        Fixture& f = example1();
        Subgroup t = inertia_group(f.group, code.normal, code.classes, code.chi);
        CHECK(t.order() == 16);
        CHECK(t == code.normal);

        InertiaData data = inertia_character(code, t, f.rho);
        CHECK(data.theta_degree == 2);
        CHECK(data.quasikernel.order() == 4);
        CHECK(is_abelian(data.quasikernel));
        CHECK(exponent(data.quasikernel) == 2); // Z2 x Z2, not cyclic
        Example1Words w = example1_words();
        Subgroup ce = subgroup_generated(f.group, {w.c, w.e});
        CHECK(data.quasikernel == ce);
    }
    {
        Fixture& f = example2();
        const FiniteGroup& g = f.group;
        int d_idx = g.find(example2_matrix_D());
        Subgroup n =
            subgroup_generated(g, {g.generator_indices()[0], g.generator_indices()[2], d_idx});
        CharacterTable t = character_table(n);
        std::vector<Cyclotomic> phi_n = restrict_character(f.rho, t.classes);
        for (const Character& chi : t.characters) {
            auto m = inner_product(chi.values, phi_n, t.classes, n.order()).as_rational();
            if (!m || *m == 0) continue;
            Subgroup inert = inertia_group(g, n, t.classes, chi);
            CHECK(inert == n);
            CliffordCode code;
            code.normal = n;
            code.classes = t.classes;
            code.chi = chi;
            code.multiplicity = 1;
            code.projector = build_projector(n, t.classes, chi, f.rho);
            code.dim_q = code_dimension(code.projector);
            InertiaData data = inertia_character(code, inert, f.rho);
            CHECK(data.quasikernel.order() == 6);
            CHECK(data.quasikernel == f.z);
        }
    }
}

TEST_CASE("central N has inertia group G") {
    Fixture& f = example1();
    CharacterTable tz = character_table(f.z);
    std::vector<Cyclotomic> phi_z = restrict_character(f.rho, tz.classes);
    for (const Character& chi : tz.characters) {
        auto m = inner_product(chi.values, phi_z, tz.classes, f.z.order()).as_rational();
        if (!m || *m == 0) continue;
        Subgroup t = inertia_group(f.group, f.z, tz.classes, chi);
        CHECK(t.order() == f.group.order());
    }
}

TEST_CASE("admissible families of the worked examples") {
    {
        auto [code, table] = example1_reference_code();
        Fixture& f = example1();
        AnalyzedCode ac = analyze_code(code, f.rho, f.alpha, f.z);
        Example1Words w = example1_words();
        Subgroup ce = subgroup_generated(f.group, {w.c, w.e});
        REQUIRE(!ac.family.maximal.empty());
        bool ce_is_maximal = false;
        for (int idx : ac.family.maximal)
            ce_is_maximal |= ac.family.members[static_cast<std::size_t>(idx)] == ce;
        CHECK(ce_is_maximal);
        for (int idx : ac.family.maximal)
            CHECK(ac.family.members[static_cast<std::size_t>(idx)].order() == 4);
    }
    {
        Fixture& f = example2();
        const FiniteGroup& g = f.group;
        int d_idx = g.find(example2_matrix_D());
        Subgroup n =
            subgroup_generated(g, {g.generator_indices()[0], g.generator_indices()[2], d_idx});
        CharacterTable t = character_table(n);
        std::vector<Cyclotomic> phi_n = restrict_character(f.rho, t.classes);
        for (const Character& chi : t.characters) {
            auto m = inner_product(chi.values, phi_n, t.classes, n.order()).as_rational();
            if (!m || *m == 0) continue;
            CliffordCode code;
            code.normal = n;
            code.classes = t.classes;
            code.chi = chi;
            code.multiplicity = 1;
            code.projector = build_projector(n, t.classes, chi, f.rho);
            code.dim_q = code_dimension(code.projector);
            AnalyzedCode ac = analyze_code(code, f.rho, f.alpha, f.z);
            REQUIRE(ac.family.maximal.size() == 1);
            const Subgroup& amax =
                ac.family.members[static_cast<std::size_t>(ac.family.maximal[0])];
            CHECK(amax.order() == 6);
            CHECK(amax == f.z);
            // subgroup orders of the quasikernel: 1, 2, 3, 6
            std::multiset<int> orders;
            for (const Subgroup& s : subgroups_within(ac.inertia.quasikernel))
                orders.insert(s.order());
            CHECK(orders == std::multiset<int>{1, 2, 3, 6});
            break;
        }
    }
    {
        // trivial quasikernel: family is exactly the trivial subgroup.
        Fixture& f = example1();
        AdmissibleFamily fam =
            admissible_family(f.group, Subgroup::trivial(f.group), Subgroup::trivial(f.group));
        REQUIRE(fam.members.size() == 1);
        CHECK(fam.members[0].order() == 1);
    }
}

TEST_CASE("center extension: already-contained case and value consistency") {
    auto [code, table] = example1_reference_code();
    Fixture& f = example1();
    CHECK(code.normal.contains(f.z)); // e is central and lies in N
    CenterExtension ext = extend_by_center(code, f.rho, f.alpha, f.z);
    CHECK(!ext.changed);
    CHECK(ext.code.normal == code.normal);
    CHECK(ext.code.chi.values == code.chi.values);
    CHECK(Cyclotomic::equivalent(ext.code.chi.values[0], Cyclotomic(Rational(code.chi.degree))));
}

TEST_CASE("center extension grows subgroups missing central elements") {
    // In the 216-element group, normal subgroups need not contain the whole
    // order-6 center; every such code must keep its projector after the
    // extension (checked inside extend_by_center, invoked via analyze_code).
    Fixture& f = example2();
    std::vector<CliffordCode> codes = enumerate_codes(f.group, f.rho);
    int grew = 0;
    for (const CliffordCode& code : codes) {
        AnalyzedCode ac = analyze_code(code, f.rho, f.alpha, f.z);
        if (ac.extension_changed) {
            ++grew;
            CHECK(ac.extended.normal.order() > code.normal.order());
            CHECK(ac.extended.normal.contains(f.z));
            CHECK(ac.extended.chi.degree == code.chi.degree);
            CHECK(CycMatrix::equivalent(ac.extended.projector, code.projector));
        }
    }
    // the trivial subgroup at minimum misses the center
    CHECK(grew >= 1);
}

TEST_CASE("classification of the worked examples") {
    {
        auto [code, table] = example1_reference_code();
        Fixture& f = example1();
        AnalyzedCode ac = analyze_code(code, f.rho, f.alpha, f.z);
        CHECK(ac.verdict.kind == ClassificationVerdict::Kind::stabilizer);
        REQUIRE(ac.verdict.witness.has_value());
        const Subgroup& a = ac.verdict.witness->stabilizer;
        CHECK(code.chi.degree * code.chi.degree == 4);
        CHECK(code.normal.order() / a.order() == 4);
        CHECK(a == ac.inertia.quasikernel);
    }
    {
        Fixture& f = example2();
        const FiniteGroup& g = f.group;
        int d_idx = g.find(example2_matrix_D());
        Subgroup n =
            subgroup_generated(g, {g.generator_indices()[0], g.generator_indices()[2], d_idx});
        CharacterTable t = character_table(n);
        std::vector<Cyclotomic> phi_n = restrict_character(f.rho, t.classes);
        for (const Character& chi : t.characters) {
            auto m = inner_product(chi.values, phi_n, t.classes, n.order()).as_rational();
            if (!m || *m == 0) continue;
            CliffordCode code;
            code.normal = n;
            code.classes = t.classes;
            code.chi = chi;
            code.multiplicity = 1;
            code.projector = build_projector(n, t.classes, chi, f.rho);
            code.dim_q = code_dimension(code.projector);
            AnalyzedCode ac = analyze_code(code, f.rho, f.alpha, f.z);
            CHECK(ac.verdict.kind == ClassificationVerdict::Kind::true_clifford);
            // dim Q = 3 but |Z(G)| phi(1) / |A| = 6 for the unique maximal A
            const Subgroup& amax =
                ac.family.members[static_cast<std::size_t>(ac.family.maximal[0])];
            CHECK(Rational(f.z.order()) * Rational(6) / Rational(amax.order()) == Rational(6));
            CHECK(code.dim_q == 3);
        }
    }
}

TEST_CASE("the stabilizer witness of example 1") {
    auto [code, table] = example1_reference_code();
    Fixture& f = example1();
    AnalyzedCode ac = analyze_code(code, f.rho, f.alpha, f.z);
    REQUIRE(ac.verdict.witness.has_value());
    const StabilizerWitness& w = *ac.verdict.witness;
    Example1Words words = example1_words();
    const FiniteGroup& g = f.group;

    // theta on (1, e, c, ce) has value multiset {1, 1, -1, -1}. The
    // concrete values are forced by chi: theta(e) = -1 (rho(e) = -I) and
    // theta(c) = +1 (chi(c) = +2).
    std::vector<int> elements{g.identity(), words.e, words.c, g.mul(words.c, words.e)};
    std::multiset<std::string> values;
    for (int el : elements) values.insert(w.theta_at(el).str());
    Cyclotomic one = Cyclotomic::one(1);
    Cyclotomic minus_one(Rational(-1));
    CHECK(values == std::multiset<std::string>{one.str(), one.str(), minus_one.str(),
                                               minus_one.str()});
    CHECK(Cyclotomic::equivalent(w.theta_at(g.identity()), one));
    CHECK(Cyclotomic::equivalent(w.theta_at(words.e), minus_one));
    CHECK(Cyclotomic::equivalent(w.theta_at(words.c), one));
    CHECK(Cyclotomic::equivalent(w.theta_at(g.mul(words.c, words.e)), minus_one));

    // P_A equals P: the code for (G, rho, Z(theta), theta) is Q itself.
    CHECK(CycMatrix::equivalent(w.projector, code.projector));
}

TEST_CASE("witness for A = Z(G) projects onto the full space") {
    Fixture& f = example1();
    // use the trivial-N code, whose projector is the identity
    Subgroup triv = Subgroup::trivial(f.group);
    CharacterTable tt = character_table(triv);
    CliffordCode code;
    code.normal = triv;
    code.classes = tt.classes;
    code.chi = tt.characters[0];
    code.multiplicity = 4;
    code.projector = build_projector(triv, tt.classes, tt.characters[0], f.rho);
    code.dim_q = 4;
    StabilizerWitness w = stabilizer_witness(code, f.z, f.rho);
    CHECK(w.projector.is_identity());
    CHECK(Cyclotomic::equivalent(w.theta_at(f.group.identity()), Cyclotomic::one(1)));
}

TEST_CASE("detectability") {
    auto [code, table] = example1_reference_code();
    Fixture& f = example1();
    AnalyzedCode ac = analyze_code(code, f.rho, f.alpha, f.z);
    DetectabilityCensus census = detectability_census(f.group, ac.inertia);
    CHECK(census.group_order == 32);
    CHECK(census.inertia_order == 16);
    CHECK(census.quasikernel_order == 4);
    CHECK(census.undetectable == 12);

    for (int el : ac.inertia.quasikernel.members()) CHECK(detectable(el, ac.inertia));
    for (int el = 0; el < f.group.order(); ++el)
        if (!ac.inertia.inertia.contains(el)) CHECK(detectable(el, ac.inertia));
    int undetectable = 0;
    for (int el = 0; el < f.group.order(); ++el)
        if (!detectable(el, ac.inertia)) ++undetectable;
    CHECK(undetectable == census.undetectable);
}

TEST_CASE("enumeration is deterministic and contains the reference code") {
    Fixture& f = example1();
    std::vector<CliffordCode> codes = enumerate_codes(f.group, f.rho);
    std::vector<CliffordCode> again = enumerate_codes(f.group, f.rho);
    REQUIRE(codes.size() == again.size());
    for (std::size_t i = 0; i < codes.size(); ++i) {
        CHECK(codes[i].normal.members() == again[i].normal.members());
        CHECK(codes[i].projector == again[i].projector);
    }
    bool has_ref_code = false;
    for (const CliffordCode& code : codes)
        has_ref_code |= code.normal.order() == 16 && code.chi.degree == 2 && code.dim_q == 2;
    CHECK(has_ref_code);

    // N sorted ascending by order; identity-first degenerate codes present
    CHECK(codes.front().normal.order() == 1);
    CHECK(codes.front().projector.is_identity());
    bool whole_group_code = false;
    for (const CliffordCode& code : codes)
        whole_group_code |=
            code.normal.order() == f.group.order() && code.projector.is_identity();
    CHECK(whole_group_code);
}

TEST_CASE("full property suite over example1") {
    Fixture& f = example1();
    std::vector<CliffordCode> codes = enumerate_codes(f.group, f.rho);
    check_code_properties(f, codes);
    check_float_oracle(f, codes);
}

TEST_CASE("full property suite over pauli2") {
    Fixture& f = pauli2();
    std::vector<CliffordCode> codes = enumerate_codes(f.group, f.rho);
    check_code_properties(f, codes);
    check_float_oracle(f, codes);
    // two-qubit Pauli group: no true Clifford codes
    for (const CliffordCode& code : codes) {
        AnalyzedCode ac = analyze_code(code, f.rho, f.alpha, f.z);
        CHECK(ac.verdict.kind == ClassificationVerdict::Kind::stabilizer);
    }
}

TEST_CASE("full property suite over example2") {
    Fixture& f = example2();
    std::vector<CliffordCode> codes = enumerate_codes(f.group, f.rho);
    check_code_properties(f, codes);
    check_float_oracle(f, codes);
    int true_clifford = 0;
    for (const CliffordCode& code : codes) {
        AnalyzedCode ac = analyze_code(code, f.rho, f.alpha, f.z);
        if (ac.verdict.kind != ClassificationVerdict::Kind::true_clifford) continue;
        ++true_clifford;
        // every nonstabilizer code of this group matches the survey row
        // (|N|, chi(1), dim Q) = (108, 3, 3)
        CHECK(code.normal.order() == 108);
        CHECK(code.chi.degree == 3);
        CHECK(code.dim_q == 3);
        CHECK(ac.inertia.quasikernel.order() == 6);
    }
    // two order-108 normal subgroups carry a conjugate pair of degree-3
    // constituents each
    CHECK(true_clifford == 4);
}
