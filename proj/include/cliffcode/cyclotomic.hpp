#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cliffcode/rational.hpp"

namespace cliffcode {

/// An exact element of the cyclotomic field Q(zeta_m).
///
/// Values are kept in the unique canonical form obtained by reducing modulo
/// the m-th cyclotomic polynomial: a coefficient vector over the power basis
/// {zeta^0, ..., zeta^(phi(m)-1)}. Equality of canonical vectors is equality
/// of field elements, so values can be hashed and compared directly.
///
/// Binary operations on elements of different orders embed both operands into
/// Q(zeta_lcm) first; the result carries the lcm order. Instances are
/// immutable after construction and safe to share across threads.
class Cyclotomic {
public:
    /// Zero in Q (order 1).
    Cyclotomic() : order_(1), coeffs_(1, Rational(0)) {}

    /// A rational constant viewed in Q(zeta_m).
    explicit Cyclotomic(const Rational& value, unsigned order = 1);

    static Cyclotomic zero(unsigned order) { return Cyclotomic(Rational(0), order); }
    static Cyclotomic one(unsigned order) { return Cyclotomic(Rational(1), order); }

    /// zeta_m^power (power taken mod m, negatives allowed).
    static Cyclotomic root_of_unity(unsigned order, long long power);

    /// Sum of coefficient*zeta_m^power terms, normalized.
    static Cyclotomic from_terms(unsigned order,
                                 const std::vector<std::pair<Rational, long long>>& terms);

    unsigned order() const { return order_; }
    /// Canonical coefficients, size phi(order()).
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    std::optional<Rational> as_rational() const;

    Cyclotomic operator+(const Cyclotomic& rhs) const;
    Cyclotomic operator-(const Cyclotomic& rhs) const;
    Cyclotomic operator*(const Cyclotomic& rhs) const;
    Cyclotomic operator/(const Cyclotomic& rhs) const;
    Cyclotomic operator-() const;

    Cyclotomic& operator+=(const Cyclotomic& rhs) { return *this = *this + rhs; }
    Cyclotomic& operator-=(const Cyclotomic& rhs) { return *this = *this - rhs; }
    Cyclotomic& operator*=(const Cyclotomic& rhs) { return *this = *this * rhs; }

    /// Complex conjugation zeta -> zeta^(m-1); an exact field automorphism.
    Cyclotomic conj() const;

    /// x * conj(x); always fixed by conj.
    Cyclotomic abs_squared() const { return *this * conj(); }

    /// Multiplicative inverse; throws InputError on zero.
    Cyclotomic inverse() const;

    /// Same field element re-expressed in Q(zeta_new_order); requires
    /// order() | new_order.
    Cyclotomic embedded(unsigned new_order) const;

    /// Integer power (negative allowed for nonzero values).
    Cyclotomic pow(long long k) const;

    /// Strict equality: same order and identical canonical coefficients.
    bool operator==(const Cyclotomic& rhs) const {
        return order_ == rhs.order_ && coeffs_ == rhs.coeffs_;
    }
    bool operator!=(const Cyclotomic& rhs) const { return !(*this == rhs); }

    /// Field-element equality across orders (embeds both into the lcm).
    static bool equivalent(const Cyclotomic& a, const Cyclotomic& b);

    /// Deterministic total order: by cyclotomic order, then lexicographic on
    /// canonical coefficients. Used for reproducible character sorting.
    static int compare(const Cyclotomic& a, const Cyclotomic& b);

    /// Numeric shadow with zeta_m -> exp(2*pi*i/m).
    std::complex<double> to_complex() const;

    std::string str() const;

    static unsigned totient(unsigned m);
    /// Coefficients of the m-th cyclotomic polynomial, constant term first,
    /// size phi(m)+1, leading coefficient 1.
    static const std::vector<BigInt>& cyclotomic_polynomial(unsigned m);

private:
    unsigned order_;
    std::vector<Rational> coeffs_;

    // Builds the canonical form from a raw coefficient vector of length m
    // (powers 0..m-1).
    static Cyclotomic reduce(unsigned order, std::vector<Rational> raw);
    static void align(Cyclotomic& a, Cyclotomic& b);
};

std::size_t hash_of(const Cyclotomic& x);

} // namespace cliffcode
