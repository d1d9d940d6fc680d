#include "cliffcode/fp.hpp"

#include <string>

namespace cliffcode {

namespace {

void require_same_modulus(const FpScalar& a, const FpScalar& b) {
    if (a.modulus != b.modulus)
        throw InputError("mixed prime-field moduli: " + std::to_string(a.modulus) + " vs " +
                         std::to_string(b.modulus));
}

} // namespace

FpScalar FpScalar::operator+(const FpScalar& o) const {
    require_same_modulus(*this, o);
    return {fp::add(value, o.value, modulus), modulus};
}
FpScalar FpScalar::operator-(const FpScalar& o) const {
    require_same_modulus(*this, o);
    return {fp::sub(value, o.value, modulus), modulus};
}
FpScalar FpScalar::operator*(const FpScalar& o) const {
    require_same_modulus(*this, o);
    return {fp::mul(value, o.value, modulus), modulus};
}
FpScalar FpScalar::operator/(const FpScalar& o) const {
    require_same_modulus(*this, o);
    return {fp::mul(value, fp::inv(o.value, modulus), modulus), modulus};
}

namespace fp {

std::uint64_t pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) acc = mul(acc, base, p);
        base = mul(base, base, p);
        exp >>= 1;
    }
    return acc;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw InputError("division by zero mod " + std::to_string(p));
    return pow(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t smallest_primitive_root(std::uint64_t p) {
    if (p == 2) return 1;
    // Factor p-1, then test candidates against each prime factor.
    std::vector<std::uint64_t> factors;
    std::uint64_t n = p - 1;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        factors.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) factors.push_back(n);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (std::uint64_t q : factors)
            if (pow(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw InconsistencyError("no primitive root found mod " + std::to_string(p));
}

} // namespace fp

FpMatrix FpMatrix::identity(int n, std::uint64_t p) {
    FpMatrix m(n, n, p);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1 % p;
    return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
    if (cols_ != rhs.rows_ || p_ != rhs.p_) throw InputError("FpMatrix product mismatch");
    FpMatrix out(rows_, rhs.cols_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            std::uint64_t v = at(i, k);
            if (!v) continue;
            for (int j = 0; j < rhs.cols_; ++j)
                out.at(i, j) = fp::add(out.at(i, j), fp::mul(v, rhs.at(k, j), p_), p_);
        }
    return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& rhs) const {
    if (cols_ != rhs.cols_ || rows_ != rhs.rows_ || p_ != rhs.p_)
        throw InputError("FpMatrix difference mismatch");
    FpMatrix out(rows_, cols_, p_);
    for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = fp::sub(a_[k], rhs.a_[k], p_);
    return out;
}

FpMatrix FpMatrix::shifted(std::uint64_t lambda) const {
    FpMatrix out = *this;
    for (int i = 0; i < rows_ && i < cols_; ++i)
        out.at(i, i) = fp::sub(out.at(i, i), lambda % p_, p_);
    return out;
}

std::vector<int> FpMatrix::rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int pivot = -1;
        for (int r = row; r < rows_; ++r)
            if (at(r, col)) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < cols_; ++j) std::swap(at(pivot, j), at(row, j));
        std::uint64_t s = fp::inv(at(row, col), p_);
        for (int j = 0; j < cols_; ++j) at(row, j) = fp::mul(at(row, j), s, p_);
        for (int r = 0; r < rows_; ++r) {
            if (r == row || !at(r, col)) continue;
            std::uint64_t f = at(r, col);
            for (int j = 0; j < cols_; ++j)
                at(r, j) = fp::sub(at(r, j), fp::mul(f, at(row, j), p_), p_);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<std::uint64_t>> FpMatrix::kernel_basis() const {
    FpMatrix work = *this;
    std::vector<int> pivots = work.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<std::uint64_t>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint64_t> v(cols_, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = fp::sub(0, work.at(static_cast<int>(r), free), p_);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::uint64_t> FpMatrix::char_poly() const {
    if (rows_ != cols_) throw InputError("char_poly of non-square matrix");
    const int n = rows_;
    FpMatrix h = *this;

    // Similarity reduction to upper Hessenberg form.
    for (int col = 0; col + 2 < n; ++col) {
        int pivot = -1;
        for (int r = col + 1; r < n; ++r)
            if (h.at(r, col)) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != col + 1) {
            for (int j = 0; j < n; ++j) std::swap(h.at(pivot, j), h.at(col + 1, j));
            for (int i = 0; i < n; ++i) std::swap(h.at(i, pivot), h.at(i, col + 1));
        }
        std::uint64_t s = fp::inv(h.at(col + 1, col), p_);
        for (int r = col + 2; r < n; ++r) {
            std::uint64_t f = fp::mul(h.at(r, col), s, p_);
            if (!f) continue;
            for (int j = 0; j < n; ++j)
                h.at(r, j) = fp::sub(h.at(r, j), fp::mul(f, h.at(col + 1, j), p_), p_);
            for (int i = 0; i < n; ++i)
                h.at(i, col + 1) = fp::add(h.at(i, col + 1), fp::mul(f, h.at(i, r), p_), p_);
        }
    }

    // Leading-minor recurrence for det(xI - H) on the Hessenberg form.
    std::vector<std::vector<std::uint64_t>> p(static_cast<std::size_t>(n) + 1);
    p[0] = {1};
    for (int m = 1; m <= n; ++m) {
        // p_m = (x - h[m-1][m-1]) p_{m-1} - sum_i h[i-1][m-1] (prod subdiag) p_{i-1}
        std::vector<std::uint64_t> cur(static_cast<std::size_t>(m) + 1, 0);
        for (std::size_t t = 0; t < p[m - 1].size(); ++t) {
            cur[t + 1] = fp::add(cur[t + 1], p[m - 1][t], p_);
            cur[t] = fp::sub(cur[t], fp::mul(h.at(m - 1, m - 1), p[m - 1][t], p_), p_);
        }
        std::uint64_t subdiag = 1;
        for (int i = m - 1; i >= 1; --i) {
            subdiag = fp::mul(subdiag, h.at(i, i - 1), p_);
            if (!subdiag) break;
            std::uint64_t c = fp::mul(h.at(i - 1, m - 1), subdiag, p_);
            if (!c) continue;
            for (std::size_t t = 0; t < p[i - 1].size(); ++t)
                cur[t] = fp::sub(cur[t], fp::mul(c, p[i - 1][t], p_), p_);
        }
        p[m] = std::move(cur);
    }
    return p[n];
}

} // namespace cliffcode
