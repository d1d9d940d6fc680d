#include "cliffcode/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace cliffcode {

namespace {

// Exact division of integer polynomials, used for Phi_m = (x^m - 1) / prod.
// Both inputs monic; remainder must come out zero.
std::vector<BigInt> poly_divide_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
    const std::size_t dn = num.size() - 1;
    const std::size_t dd = den.size() - 1;
    std::vector<BigInt> quot(dn - dd + 1, BigInt(0));
    for (std::size_t i = dn + 1; i-- > dd;) {
        BigInt c = num[i]; // den is monic
        quot[i - dd] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (const BigInt& c : num)
        if (c != 0) throw InconsistencyError("cyclotomic polynomial division left a remainder");
    return quot;
}

std::map<unsigned, std::vector<BigInt>> g_phi_cache;
std::mutex g_phi_mutex;

} // namespace

unsigned Cyclotomic::totient(unsigned m) {
    unsigned result = m;
    unsigned n = m;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

const std::vector<BigInt>& Cyclotomic::cyclotomic_polynomial(unsigned m) {
    if (m == 0) throw InputError("cyclotomic order must be positive");
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    auto it = g_phi_cache.find(m);
    if (it != g_phi_cache.end()) return it->second;

    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, computed bottom-up so
    // every divisor is already cached.
    std::vector<unsigned> divisors;
    for (unsigned d = 1; d < m; ++d)
        if (m % d == 0) divisors.push_back(d);
    for (unsigned d : divisors) {
        if (g_phi_cache.count(d)) continue;
        // Recurse iteratively: divisors are processed in increasing order, so
        // by induction all proper divisors of d are present.
        std::vector<BigInt> num(d + 1, BigInt(0));
        num[0] = -1;
        num[d] = 1;
        for (unsigned dd = 1; dd < d; ++dd)
            if (d % dd == 0) num = poly_divide_exact(std::move(num), g_phi_cache.at(dd));
        g_phi_cache.emplace(d, std::move(num));
    }
    std::vector<BigInt> num(m + 1, BigInt(0));
    num[0] = -1;
    num[m] = 1;
    for (unsigned d : divisors) num = poly_divide_exact(std::move(num), g_phi_cache.at(d));
    auto [pos, inserted] = g_phi_cache.emplace(m, std::move(num));
    (void)inserted;
    return pos->second;
}

Cyclotomic Cyclotomic::reduce(unsigned order, std::vector<Rational> raw) {
    const std::vector<BigInt>& phi = cyclotomic_polynomial(order);
    const std::size_t deg = phi.size() - 1; // = totient(order)
    // Long division by the monic Phi_m.
    for (std::size_t i = raw.size(); i-- > deg;) {
        if (raw[i] == 0) continue;
        Rational c = raw[i];
        raw[i] = 0;
        for (std::size_t j = 0; j < deg; ++j) raw[i - deg + j] -= c * Rational(phi[j]);
    }
    Cyclotomic out;
    out.order_ = order;
    raw.resize(deg);
    out.coeffs_ = std::move(raw);
    return out;
}

Cyclotomic::Cyclotomic(const Rational& value, unsigned order) {
    if (order == 0) throw InputError("cyclotomic order must be positive");
    order_ = order;
    coeffs_.assign(totient(order), Rational(0));
    coeffs_[0] = value;
}

Cyclotomic Cyclotomic::root_of_unity(unsigned order, long long power) {
    if (order == 0) throw InputError("cyclotomic order must be positive");
    long long m = static_cast<long long>(order);
    long long p = ((power % m) + m) % m;
    std::vector<Rational> raw(order, Rational(0));
    raw[static_cast<std::size_t>(p)] = 1;
    return reduce(order, std::move(raw));
}

Cyclotomic Cyclotomic::from_terms(unsigned order,
                                  const std::vector<std::pair<Rational, long long>>& terms) {
    if (order == 0) throw InputError("cyclotomic order must be positive");
    long long m = static_cast<long long>(order);
    std::vector<Rational> raw(order, Rational(0));
    for (const auto& [coeff, power] : terms) {
        long long p = ((power % m) + m) % m;
        raw[static_cast<std::size_t>(p)] += coeff;
    }
    return reduce(order, std::move(raw));
}

bool Cyclotomic::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool Cyclotomic::is_one() const {
    if (coeffs_[0] != 1) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                       [](const Rational& c) { return c == 0; });
}

bool Cyclotomic::is_rational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                       [](const Rational& c) { return c == 0; });
}

std::optional<Rational> Cyclotomic::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return coeffs_[0];
}

void Cyclotomic::align(Cyclotomic& a, Cyclotomic& b) {
    if (a.order_ == b.order_) return;
    unsigned l = std::lcm(a.order_, b.order_);
    if (a.order_ != l) a = a.embedded(l);
    if (b.order_ != l) b = b.embedded(l);
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& rhs) const {
    Cyclotomic a = *this, b = rhs;
    align(a, b);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& rhs) const {
    Cyclotomic a = *this, b = rhs;
    align(a, b);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] -= b.coeffs_[i];
    return a;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic a = *this;
    for (Rational& c : a.coeffs_) c = -c;
    return a;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& rhs) const {
    Cyclotomic a = *this, b = rhs;
    align(a, b);
    const unsigned m = a.order_;
    std::vector<Rational> raw(m, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            raw[(i + j) % m] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return reduce(m, std::move(raw));
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw InputError("division by zero in Q(zeta)");
    if (auto r = as_rational()) return Cyclotomic(Rational(1) / *r, order_);

    // Extended Euclid in Q[x] against Phi_m: gcd is 1 because Phi_m is
    // irreducible and *this is nonzero of smaller degree.
    using Poly = std::vector<Rational>;
    auto degree = [](const Poly& p) -> long {
        for (std::size_t i = p.size(); i-- > 0;)
            if (p[i] != 0) return static_cast<long>(i);
        return -1;
    };
    const std::vector<BigInt>& phi = cyclotomic_polynomial(order_);
    Poly r0(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) r0[i] = Rational(phi[i]);
    Poly r1 = coeffs_;
    Poly s0(1, Rational(0)), s1(1, Rational(1)); // coefficients of *this in the Bezout identity

    while (true) {
        long d1 = degree(r1);
        if (d1 < 0) throw InconsistencyError("gcd with cyclotomic polynomial vanished");
        if (d1 == 0) break;
        long d0 = degree(r0);
        // r0 = q*r1 + rem; replace (r0, r1) by (r1, rem), tracking s.
        Poly q(static_cast<std::size_t>(d0 - d1 + 1), Rational(0));
        Poly rem = r0;
        for (long i = d0; i >= d1; --i) {
            Rational c = rem[static_cast<std::size_t>(i)] / r1[static_cast<std::size_t>(d1)];
            if (c == 0) continue;
            q[static_cast<std::size_t>(i - d1)] = c;
            for (long j = 0; j <= d1; ++j)
                rem[static_cast<std::size_t>(i - d1 + j)] -= c * r1[static_cast<std::size_t>(j)];
        }
        Poly s2(std::max(s0.size(), q.size() + s1.size()), Rational(0));
        for (std::size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is a nonzero constant c with s1 * this == c (mod Phi); scale.
    Rational c = r1[0];
    std::vector<Rational> raw(order_, Rational(0));
    for (std::size_t i = 0; i < s1.size() && i < raw.size(); ++i) raw[i] = s1[i] / c;
    for (std::size_t i = raw.size(); i < s1.size(); ++i)
        if (s1[i] != 0) throw InconsistencyError("inverse exceeded field degree");
    return reduce(order_, std::move(raw));
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& rhs) const {
    Cyclotomic a = *this, b = rhs;
    align(a, b);
    return a * b.inverse();
}

Cyclotomic Cyclotomic::conj() const {
    const unsigned m = order_;
    std::vector<Rational> raw(m, Rational(0));
    for (std::size_t t = 0; t < coeffs_.size(); ++t) {
        if (coeffs_[t] == 0) continue;
        raw[t == 0 ? 0 : m - t] += coeffs_[t];
    }
    return reduce(m, std::move(raw));
}

Cyclotomic Cyclotomic::embedded(unsigned new_order) const {
    if (new_order == order_) return *this;
    if (new_order == 0 || new_order % order_ != 0)
        throw InputError("cannot embed Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                         std::to_string(new_order) + ")");
    unsigned k = new_order / order_;
    std::vector<Rational> raw(new_order, Rational(0));
    for (std::size_t t = 0; t < coeffs_.size(); ++t)
        if (coeffs_[t] != 0) raw[t * k] = coeffs_[t];
    return reduce(new_order, std::move(raw));
}

Cyclotomic Cyclotomic::pow(long long k) const {
    if (k < 0) return inverse().pow(-k);
    Cyclotomic acc = one(order_);
    Cyclotomic base = *this;
    unsigned long long e = static_cast<unsigned long long>(k);
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Cyclotomic::equivalent(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ == b.order_) return a == b;
    unsigned l = std::lcm(a.order_, b.order_);
    return a.embedded(l) == b.embedded(l);
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ != b.order_) return a.order_ < b.order_ ? -1 : 1;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] < b.coeffs_[i]) return -1;
        if (b.coeffs_[i] < a.coeffs_[i]) return 1;
    }
    return 0;
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> acc(0.0, 0.0);
    const double two_pi = 2.0 * std::acos(-1.0);
    const double step = two_pi / static_cast<double>(order_);
    for (std::size_t t = 0; t < coeffs_.size(); ++t) {
        if (coeffs_[t] == 0) continue;
        double c = static_cast<double>(numerator(coeffs_[t])) /
                   static_cast<double>(denominator(coeffs_[t]));
        acc += c * std::polar(1.0, step * static_cast<double>(t));
    }
    return acc;
}

std::string Cyclotomic::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t t = 0; t < coeffs_.size(); ++t) {
        if (coeffs_[t] == 0) continue;
        if (!first) out << " + ";
        first = false;
        if (t == 0) {
            out << coeffs_[t].str();
        } else {
            if (coeffs_[t] != 1) out << coeffs_[t].str() << "*";
            out << "z" << order_;
            if (t > 1) out << "^" << t;
        }
    }
    return out.str();
}

std::size_t hash_of(const Cyclotomic& x) {
    std::size_t seed = std::hash<unsigned>()(x.order());
    for (const Rational& c : x.coeffs()) boost::hash_combine(seed, hash_of(c));
    return seed;
}

} // namespace cliffcode
