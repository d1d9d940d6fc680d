#include "cliffcode/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cliffcode {

std::uint64_t choose_prime(const Subgroup& h, std::uint64_t bound) {
    const std::uint64_t e = static_cast<std::uint64_t>(exponent(h));
    const std::uint64_t n = static_cast<std::uint64_t>(h.order());
    // p = 1 (mod e) and p^2 > 4|H|.
    for (std::uint64_t p = e + 1;; p += e == 1 ? 1 : e) {
        if (p > bound)
            throw InputError("no usable character-table prime below " + std::to_string(bound));
        if (p * p > 4 * n && fp::is_prime(p)) return p;
    }
}

PowerMaps power_maps(const Subgroup& h, const ConjugacyClassSet& classes) {
    const FiniteGroup& g = h.group();
    PowerMaps out;
    out.exponent = exponent(h);
    out.map.assign(static_cast<std::size_t>(out.exponent),
                   std::vector<int>(classes.classes.size(), -1));
    for (std::size_t c = 0; c < classes.classes.size(); ++c) {
        int x = g.identity();
        int rep = classes.representatives[c];
        for (int s = 0; s < out.exponent; ++s) {
            out.map[static_cast<std::size_t>(s)][c] = classes.class_of(x);
            x = g.mul(x, rep);
        }
    }
    return out;
}

Cyclotomic inner_product(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b,
                         const ConjugacyClassSet& classes, int group_order) {
    if (a.size() != classes.classes.size() || b.size() != classes.classes.size())
        throw InputError("class function length does not match class count");
    Cyclotomic sum;
    for (std::size_t c = 0; c < a.size(); ++c) {
        Cyclotomic size(Rational(static_cast<long long>(classes.classes[c].size())));
        sum += size * a[c] * b[c].conj();
    }
    return sum * Cyclotomic(Rational(BigInt(1), BigInt(group_order)));
}

namespace {

// Solve U*R = B where the columns of U are independent; U is k x w, B is
// k x w', R is w x w'. Throws when B is not in the column span.
FpMatrix solve_in_basis(const FpMatrix& u, const FpMatrix& b) {
    const int k = u.rows(), w = u.cols(), wp = b.cols();
    FpMatrix aug(k, w + wp, u.modulus());
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < w; ++j) aug.at(i, j) = u.at(i, j);
        for (int j = 0; j < wp; ++j) aug.at(i, w + j) = b.at(i, j);
    }
    std::vector<int> pivots = aug.rref();
    // U has independent columns, so the pivots must be exactly columns
    // 0..w-1; a pivot inside the B block means B left the span of U.
    if (static_cast<int>(pivots.size()) != w)
        throw InconsistencyError("class-sum image left the invariant subspace");
    for (int r = 0; r < w; ++r)
        if (pivots[static_cast<std::size_t>(r)] != r)
            throw InconsistencyError("subspace basis lost rank during splitting");
    FpMatrix res(w, wp, u.modulus());
    for (int r = 0; r < w; ++r)
        for (int j = 0; j < wp; ++j) res.at(r, j) = aug.at(r, w + j);
    return res;
}

std::vector<std::uint64_t> poly_roots(const std::vector<std::uint64_t>& poly, std::uint64_t p) {
    std::vector<std::uint64_t> roots;
    for (std::uint64_t lambda = 0; lambda < p; ++lambda) {
        std::uint64_t acc = 0;
        for (std::size_t t = poly.size(); t-- > 0;)
            acc = fp::add(fp::mul(acc, lambda, p), poly[t], p);
        if (acc == 0) roots.push_back(lambda);
    }
    return roots;
}

} // namespace

CharacterTable character_table(const Subgroup& h, std::uint64_t prime_bound) {
    if (h.order() > 255) throw InputError("character table limited to |H| <= 255");
    const FiniteGroup& g = h.group();

    CharacterTable table;
    table.group = h;
    table.classes = conjugacy_classes(h);
    table.exponent = exponent(h);
    table.prime = choose_prime(h, prime_bound);

    const int k = table.classes.size();
    const std::uint64_t p = table.prime;
    const int e = table.exponent;
    const std::uint64_t n_mod = static_cast<std::uint64_t>(h.order()) % p;

    // Class-sum multiplication matrices: M_i[j][k'] = #{(x,y) in C_i x C_j :
    // x y = rep_{k'}}. The vectors (omega(c_0), ..., omega(c_{k-1})) of the
    // central characters are their common eigenvectors.
    std::vector<FpMatrix> m;
    m.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        FpMatrix mi(k, k, p);
        for (int x : table.classes.classes[static_cast<std::size_t>(i)]) {
            int xi = g.inv(x);
            for (int kc = 0; kc < k; ++kc) {
                int y = g.mul(xi, table.classes.representatives[static_cast<std::size_t>(kc)]);
                int j = table.classes.class_of(y);
                std::uint64_t& cell = mi.at(j, kc);
                cell = fp::add(cell, 1, p);
            }
        }
        m.push_back(std::move(mi));
    }

    // Refine the full space into one-dimensional common eigenspaces,
    // processing class sums in class order.
    std::vector<FpMatrix> subspaces{FpMatrix::identity(k, p)};
    for (int i = 1; i < k; ++i) {
        bool all_split = std::all_of(subspaces.begin(), subspaces.end(),
                                     [](const FpMatrix& u) { return u.cols() == 1; });
        if (all_split) break;
        std::vector<FpMatrix> next;
        for (FpMatrix& u : subspaces) {
            if (u.cols() == 1) {
                next.push_back(std::move(u));
                continue;
            }
            FpMatrix r = solve_in_basis(u, m[static_cast<std::size_t>(i)] * u);
            std::vector<std::uint64_t> roots = poly_roots(r.char_poly(), p);
            if (roots.size() <= 1) {
                next.push_back(std::move(u));
                continue;
            }
            int recovered = 0;
            for (std::uint64_t lambda : roots) {
                auto kernel = r.shifted(lambda).kernel_basis();
                if (kernel.empty()) continue;
                FpMatrix xi(r.rows(), static_cast<int>(kernel.size()), p);
                for (std::size_t col = 0; col < kernel.size(); ++col)
                    for (int row = 0; row < r.rows(); ++row)
                        xi.at(row, static_cast<int>(col)) = kernel[col][static_cast<std::size_t>(row)];
                next.push_back(u * xi);
                recovered += static_cast<int>(kernel.size());
            }
            if (recovered != u.cols())
                throw InconsistencyError("class-sum matrix failed to diagonalize mod p");
        }
        subspaces = std::move(next);
    }
    if (static_cast<int>(subspaces.size()) != k)
        throw InconsistencyError("class algebra did not split into " + std::to_string(k) +
                                 " one-dimensional eigenspaces");

    // Inverse classes and the fixed e-th root of unity in F_p.
    PowerMaps pmaps = power_maps(h, table.classes);
    std::vector<int> inv_class(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c) {
        int rep = table.classes.representatives[static_cast<std::size_t>(c)];
        inv_class[static_cast<std::size_t>(c)] = table.classes.class_of(g.inv(rep));
    }
    const std::uint64_t z =
        fp::pow(fp::smallest_primitive_root(p), (p - 1) / static_cast<std::uint64_t>(e), p);
    std::vector<std::uint64_t> zpow(static_cast<std::size_t>(e));
    for (int s = 0; s < e; ++s) zpow[static_cast<std::size_t>(s)] = fp::pow(z, s, p);
    const std::uint64_t inv_e = fp::inv(static_cast<std::uint64_t>(e) % p, p);

    std::vector<std::uint64_t> class_size_inv(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c)
        class_size_inv[static_cast<std::size_t>(c)] =
            fp::inv(table.classes.classes[static_cast<std::size_t>(c)].size() % p, p);

    long long degree_square_sum = 0;
    for (const FpMatrix& u : subspaces) {
        // Normalize the eigenvector so its identity-class coordinate is 1;
        // then the coordinates are the central character values omega(c_j).
        std::vector<std::uint64_t> omega(static_cast<std::size_t>(k));
        if (u.at(0, 0) == 0)
            throw InconsistencyError("central character vanished on the identity class");
        std::uint64_t scale = fp::inv(u.at(0, 0), p);
        for (int j = 0; j < k; ++j) omega[static_cast<std::size_t>(j)] = fp::mul(u.at(j, 0), scale, p);

        // [chi, chi] = 1 pins the degree modulo p.
        std::uint64_t s = 0;
        for (int j = 0; j < k; ++j)
            s = fp::add(s,
                        fp::mul(fp::mul(omega[static_cast<std::size_t>(j)],
                                        omega[static_cast<std::size_t>(inv_class[static_cast<std::size_t>(j)])], p),
                                class_size_inv[static_cast<std::size_t>(j)], p),
                        p);
        std::uint64_t d_squared = fp::mul(n_mod, fp::inv(s, p), p);
        std::uint64_t degree = 0;
        for (std::uint64_t d = 1; d * d <= static_cast<std::uint64_t>(h.order()); ++d)
            if (fp::mul(d, d, p) == d_squared) {
                degree = d;
                break;
            }
        if (degree == 0) throw InconsistencyError("no integral character degree matches mod p");

        std::vector<std::uint64_t> lambda(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j)
            lambda[static_cast<std::size_t>(j)] =
                fp::mul(fp::mul(degree % p, omega[static_cast<std::size_t>(j)], p),
                        class_size_inv[static_cast<std::size_t>(j)], p);

        // Lift each value by counting the eigenvalue multiplicities m_s of
        // zeta_e^s: m_s = (1/e) sum_t lambda(class(g^t)) z^(-st), an exact
        // integer below p.
        Character chi;
        chi.degree = static_cast<int>(degree);
        chi.values.reserve(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j) {
            std::vector<std::pair<Rational, long long>> terms;
            std::uint64_t total = 0;
            for (int sdx = 0; sdx < e; ++sdx) {
                std::uint64_t acc = 0;
                for (int t = 0; t < e; ++t) {
                    int cls_t = pmaps.map[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)];
                    std::uint64_t zexp = zpow[static_cast<std::size_t>(((e - (sdx * t) % e) % e))];
                    acc = fp::add(acc, fp::mul(lambda[static_cast<std::size_t>(cls_t)], zexp, p), p);
                }
                std::uint64_t mult = fp::mul(acc, inv_e, p);
                total += mult;
                if (mult) terms.emplace_back(Rational(static_cast<long long>(mult)), sdx);
            }
            if (total != degree)
                throw InconsistencyError("lifted eigenvalue multiplicities do not sum to the degree");
            chi.values.push_back(Cyclotomic::from_terms(static_cast<unsigned>(e), terms));
        }
        degree_square_sum += static_cast<long long>(degree) * static_cast<long long>(degree);
        table.characters.push_back(std::move(chi));
    }

    if (degree_square_sum != h.order())
        throw InconsistencyError("character degrees violate sum of squares = |H|");

    std::sort(table.characters.begin(), table.characters.end(),
              [](const Character& a, const Character& b) {
                  if (a.degree != b.degree) return a.degree < b.degree;
                  for (std::size_t c = 0; c < a.values.size(); ++c) {
                      int cmp = Cyclotomic::compare(a.values[c], b.values[c]);
                      if (cmp) return cmp < 0;
                  }
                  return false;
              });
    return table;
}

std::uint64_t modular_residue(const Cyclotomic& value, std::uint64_t p, std::uint64_t zeta_residue) {
    std::uint64_t acc = 0;
    std::uint64_t zk = 1;
    for (std::size_t t = 0; t < value.coeffs().size(); ++t) {
        const Rational& c = value.coeffs()[t];
        if (c != 0) {
            if (!is_integer(c))
                throw InputError("modular residue of a non-integral cyclotomic value");
            BigInt num = numerator(c) % static_cast<long long>(p);
            if (num < 0) num += static_cast<long long>(p);
            acc = fp::add(acc, fp::mul(static_cast<std::uint64_t>(num), zk, p), p);
        }
        zk = fp::mul(zk, zeta_residue, p);
    }
    return acc;
}

} // namespace cliffcode
