#pragma once

#include <cstdint>
#include <vector>

#include "cliffcode/errors.hpp"

namespace cliffcode {

/// One element of a prime field Z/p. Arithmetic between scalars of different
/// moduli is rejected. The character-table engine uses the raw helpers below
/// for its inner loops; this type is the public face of the same arithmetic.
struct FpScalar {
    std::uint64_t value = 0;
    std::uint64_t modulus = 2;

    FpScalar() = default;
    FpScalar(std::uint64_t v, std::uint64_t p) : value(v % p), modulus(p) {}

    FpScalar operator+(const FpScalar& o) const;
    FpScalar operator-(const FpScalar& o) const;
    FpScalar operator*(const FpScalar& o) const;
    FpScalar operator/(const FpScalar& o) const;
    bool operator==(const FpScalar& o) const = default;
};

namespace fp {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
std::uint64_t pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);

bool is_prime(std::uint64_t n);
/// Smallest generator of the multiplicative group of Z/p.
std::uint64_t smallest_primitive_root(std::uint64_t p);

} // namespace fp

/// Dense matrix over Z/p used by the modular character-table stage.
class FpMatrix {
public:
    FpMatrix(int rows, int cols, std::uint64_t p)
        : rows_(rows), cols_(cols), p_(p), a_(static_cast<std::size_t>(rows) * cols, 0) {}

    static FpMatrix identity(int n, std::uint64_t p);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::uint64_t modulus() const { return p_; }

    std::uint64_t at(int i, int j) const { return a_[idx(i, j)]; }
    std::uint64_t& at(int i, int j) { return a_[idx(i, j)]; }

    FpMatrix operator*(const FpMatrix& rhs) const;
    FpMatrix operator-(const FpMatrix& rhs) const;
    /// this - lambda * I
    FpMatrix shifted(std::uint64_t lambda) const;

    /// In-place reduced row echelon form; returns pivot column per pivot row.
    std::vector<int> rref();

    /// Basis of the right kernel, one column vector per basis element,
    /// deterministic order (free columns ascending).
    std::vector<std::vector<std::uint64_t>> kernel_basis() const;

    /// Characteristic polynomial (monic, constant term first) via Hessenberg
    /// reduction. Square matrices only.
    std::vector<std::uint64_t> char_poly() const;

private:
    int rows_, cols_;
    std::uint64_t p_;
    std::vector<std::uint64_t> a_;
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * cols_ + j; }
};

} // namespace cliffcode
