#include "cliffcode/error_group.hpp"

#include <algorithm>

namespace cliffcode {

UnitaryRep UnitaryRep::natural(const FiniteGroup& g) {
    return with_image(g, g.elements());
}

UnitaryRep UnitaryRep::with_image(const FiniteGroup& g, std::vector<CycMatrix> image) {
    if (static_cast<int>(image.size()) != g.order())
        throw InputError("representation image must cover every group element");
    UnitaryRep rep;
    rep.group = &g;
    rep.degree = image.empty() ? 0 : image[0].rows();
    rep.image = std::move(image);
    rep.character.reserve(rep.image.size());
    for (const CycMatrix& m : rep.image) rep.character.push_back(m.trace());
    return rep;
}

ErrorGroupCert verify_error_group(const FiniteGroup& g, const UnitaryRep& rho) {
    ErrorGroupCert cert;
    cert.degree = rho.degree;

    Subgroup z = center(g);
    cert.center_order = z.order();
    cert.index = g.order() / z.order();
    cert.degree_squared_equals_index = cert.degree * cert.degree == cert.index;

    cert.faithful = true;
    for (int i = 1; i < g.order() && cert.faithful; ++i)
        cert.faithful = !rho.at(i).is_identity();
    if (!rho.at(g.identity()).is_identity()) cert.faithful = false;

    // [phi, phi] = 1, summed element-wise; exact.
    Cyclotomic norm;
    for (int i = 0; i < g.order(); ++i) norm += rho.phi(i) * rho.phi(i).conj();
    norm = norm * Cyclotomic(Rational(BigInt(1), BigInt(g.order())));
    cert.irreducible = norm.is_one();
    return cert;
}

std::vector<Cyclotomic> character_of(const UnitaryRep& rho, const ConjugacyClassSet& classes) {
    std::vector<Cyclotomic> values;
    values.reserve(classes.representatives.size());
    for (int rep : classes.representatives) values.push_back(rho.phi(rep));
    return values;
}

const Cyclotomic& CentralCharacter::at(int element) const {
    auto it = std::lower_bound(members.begin(), members.end(), element);
    if (it == members.end() || *it != element)
        throw InputError("element is not central");
    return values[static_cast<std::size_t>(it - members.begin())];
}

CentralCharacter central_character(const UnitaryRep& rho, const Subgroup& z) {
    CentralCharacter out;
    out.members = z.members();
    out.values.reserve(out.members.size());
    for (int m : out.members) {
        auto scalar = rho.at(m).as_scalar();
        if (!scalar)
            throw InconsistencyError(
                "central element is not represented by a scalar matrix; "
                "the representation cannot be irreducible");
        out.values.push_back(*scalar);
    }
    // alpha must be a homomorphism on Z(G).
    const FiniteGroup& g = z.group();
    for (int a : out.members)
        for (int b : out.members) {
            if (!Cyclotomic::equivalent(out.at(g.mul(a, b)), out.at(a) * out.at(b)))
                throw InconsistencyError("central character is not multiplicative");
        }
    return out;
}

std::vector<Cyclotomic> restrict_character(const UnitaryRep& rho,
                                           const ConjugacyClassSet& h_classes) {
    std::vector<Cyclotomic> values;
    values.reserve(h_classes.representatives.size());
    for (int rep : h_classes.representatives) values.push_back(rho.phi(rep));
    return values;
}

} // namespace cliffcode
