#include "cliffcode/cyc_matrix.hpp"

#include <numeric>
#include <sstream>

namespace cliffcode {

CycMatrix::CycMatrix(int rows, int cols, unsigned order)
    : rows_(rows), cols_(cols), order_(order),
      entries_(static_cast<std::size_t>(rows) * cols, Cyclotomic::zero(order)) {
    if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
    if (order == 0) throw InputError("cyclotomic order must be positive");
}

CycMatrix CycMatrix::identity(int n, unsigned order) {
    CycMatrix m(n, n, order);
    for (int i = 0; i < n; ++i) m.set(i, i, Cyclotomic::one(order));
    return m;
}

void CycMatrix::set(int i, int j, const Cyclotomic& value) {
    entries_[idx(i, j)] = value.order() == order_ ? value : value.embedded(order_);
}

void CycMatrix::align(CycMatrix& a, CycMatrix& b) {
    if (a.order_ == b.order_) return;
    unsigned l = std::lcm(a.order_, b.order_);
    if (a.order_ != l) a = a.embedded(l);
    if (b.order_ != l) b = b.embedded(l);
}

CycMatrix CycMatrix::embedded(unsigned new_order) const {
    if (new_order == order_) return *this;
    CycMatrix out(rows_, cols_, new_order);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        out.entries_[k] = entries_[k].embedded(new_order);
    return out;
}

CycMatrix CycMatrix::operator*(const CycMatrix& rhs) const {
    CycMatrix a = *this, b = rhs;
    align(a, b);
    if (a.cols_ != b.rows_) throw InputError("matrix dimension mismatch in product");
    CycMatrix out(a.rows_, b.cols_, a.order_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Cyclotomic& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const Cyclotomic& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                out.entries_[out.idx(i, j)] += aik * bkj;
            }
        }
    return out;
}

CycMatrix CycMatrix::operator+(const CycMatrix& rhs) const {
    CycMatrix a = *this, b = rhs;
    align(a, b);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw InputError("matrix dimension mismatch in sum");
    for (std::size_t k = 0; k < a.entries_.size(); ++k) a.entries_[k] += b.entries_[k];
    return a;
}

CycMatrix CycMatrix::operator-(const CycMatrix& rhs) const {
    CycMatrix a = *this, b = rhs;
    align(a, b);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw InputError("matrix dimension mismatch in difference");
    for (std::size_t k = 0; k < a.entries_.size(); ++k) a.entries_[k] -= b.entries_[k];
    return a;
}

CycMatrix CycMatrix::scaled(const Cyclotomic& c) const {
    CycMatrix a = *this;
    if (c.order() != a.order_) {
        unsigned l = std::lcm(c.order(), a.order_);
        a = a.embedded(l);
        Cyclotomic ce = c.embedded(l);
        for (Cyclotomic& e : a.entries_) e *= ce;
        return a;
    }
    for (Cyclotomic& e : a.entries_) e *= c;
    return a;
}

CycMatrix CycMatrix::conj_transpose() const {
    CycMatrix out(cols_, rows_, order_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.entries_[out.idx(j, i)] = at(i, j).conj();
    return out;
}

Cyclotomic CycMatrix::trace() const {
    Cyclotomic t = Cyclotomic::zero(order_);
    for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
    return t;
}

bool CycMatrix::is_zero() const {
    for (const Cyclotomic& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool CycMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const Cyclotomic& e = at(i, j);
            if (i == j ? !e.is_one() : !e.is_zero()) return false;
        }
    return true;
}

bool CycMatrix::is_unitary() const {
    if (rows_ != cols_) return false;
    return (*this * conj_transpose()).is_identity();
}

std::optional<Cyclotomic> CycMatrix::as_scalar() const {
    if (rows_ != cols_ || rows_ == 0) return std::nullopt;
    const Cyclotomic& c = at(0, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const Cyclotomic& e = at(i, j);
            if (i == j ? e != c : !e.is_zero()) return std::nullopt;
        }
    return c;
}

CycMatrix CycMatrix::kron(const CycMatrix& a_in, const CycMatrix& b_in) {
    CycMatrix a = a_in, b = b_in;
    align(a, b);
    CycMatrix out(a.rows_ * b.rows_, a.cols_ * b.cols_, a.order_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int k = 0; k < b.rows_; ++k)
                for (int l = 0; l < b.cols_; ++l)
                    out.set(i * b.rows_ + k, j * b.cols_ + l, a.at(i, j) * b.at(k, l));
        }
    return out;
}

bool CycMatrix::equivalent(const CycMatrix& a, const CycMatrix& b) {
    if (a.order() == b.order()) return a == b;
    unsigned l = std::lcm(a.order(), b.order());
    return a.embedded(l) == b.embedded(l);
}

std::vector<std::complex<double>> CycMatrix::to_complex() const {
    std::vector<std::complex<double>> out(entries_.size());
    for (std::size_t k = 0; k < entries_.size(); ++k) out[k] = entries_[k].to_complex();
    return out;
}

std::string CycMatrix::str() const {
    std::ostringstream out;
    for (int i = 0; i < rows_; ++i) {
        out << (i == 0 ? "[" : " ");
        out << "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) out << ", ";
            out << at(i, j).str();
        }
        out << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    return out.str();
}

std::size_t hash_of(const CycMatrix& m) {
    std::size_t seed = std::hash<int>()(m.rows_);
    boost::hash_combine(seed, std::hash<int>()(m.cols_));
    boost::hash_combine(seed, std::hash<unsigned>()(m.order_));
    for (const Cyclotomic& e : m.entries_) boost::hash_combine(seed, hash_of(e));
    return seed;
}

} // namespace cliffcode
