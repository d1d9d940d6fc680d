#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "cliffcode/cyclotomic.hpp"

namespace cliffcode {

/// Dense matrix over a single cyclotomic field Q(zeta_m). Every entry is
/// stored embedded at the matrix order, so strict entry equality doubles as
/// field-element equality and matrices can be hashed for group closure.
class CycMatrix {
public:
    CycMatrix() : rows_(0), cols_(0), order_(1) {}
    CycMatrix(int rows, int cols, unsigned order);

    static CycMatrix identity(int n, unsigned order);
    /// Kronecker product; operands are aligned to the lcm order.
    static CycMatrix kron(const CycMatrix& a, const CycMatrix& b);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    unsigned order() const { return order_; }

    const Cyclotomic& at(int i, int j) const { return entries_[idx(i, j)]; }
    /// Stores the value embedded at the matrix order.
    void set(int i, int j, const Cyclotomic& value);

    CycMatrix operator*(const CycMatrix& rhs) const;
    CycMatrix operator+(const CycMatrix& rhs) const;
    CycMatrix operator-(const CycMatrix& rhs) const;
    CycMatrix scaled(const Cyclotomic& c) const;
    CycMatrix conj_transpose() const;
    Cyclotomic trace() const;

    CycMatrix embedded(unsigned new_order) const;

    bool is_zero() const;
    bool is_identity() const;
    bool is_unitary() const;
    /// Returns c when the matrix equals c*I.
    std::optional<Cyclotomic> as_scalar() const;

    bool operator==(const CycMatrix& rhs) const {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && order_ == rhs.order_ &&
               entries_ == rhs.entries_;
    }
    bool operator!=(const CycMatrix& rhs) const { return !(*this == rhs); }

    /// Canonical equality across orders (embed both to the lcm, compare).
    static bool equivalent(const CycMatrix& a, const CycMatrix& b);

    /// Row-major complex shadow of the exact entries.
    std::vector<std::complex<double>> to_complex() const;

    std::string str() const;

private:
    int rows_, cols_;
    unsigned order_;
    std::vector<Cyclotomic> entries_;

    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * cols_ + j; }
    static void align(CycMatrix& a, CycMatrix& b);
    friend std::size_t hash_of(const CycMatrix& m);
};

std::size_t hash_of(const CycMatrix& m);

struct CycMatrixHash {
    std::size_t operator()(const CycMatrix& m) const { return hash_of(m); }
};

} // namespace cliffcode
