#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "coda/scalar.hpp"

namespace coda {

using Vector = std::vector<Scalar>;

inline bool vector_is_zero(const Vector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

/// Dense matrix over the Gaussian rationals. All arithmetic is exact.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }
    static ExactMatrix identity(int n) {
        ExactMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    friend bool operator==(const ExactMatrix& x, const ExactMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    ExactMatrix multiply(const ExactMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
        ExactMatrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Scalar& x = at(i, k);
                if (x.is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    const Scalar& y = o.at(k, j);
                    if (!y.is_zero()) r.at(i, j) += x * y;
                }
            }
        return r;
    }

    Vector apply(const Vector& v) const {
        if (static_cast<int>(v.size()) != cols_)
            throw std::invalid_argument("matrix-vector shape mismatch");
        Vector r(rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
        return r;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

private:
    int rows_, cols_;
    std::vector<Scalar> a_;
};

struct RrefResult {
    ExactMatrix reduced;
    int rank = 0;
    std::vector<int> pivot_cols;
};

/// Reduced row-echelon form. Pivot choice is the first row with a nonzero
/// entry in the current column, so the result is deterministic.
RrefResult rref(const ExactMatrix& m);

int rank(const ExactMatrix& m);

/// A subspace held as an echelonized basis: each basis vector is normalized
/// to a leading 1 in its pivot coordinate, pivots strictly increasing, and
/// every pivot coordinate is zero in the other basis vectors.
class Subspace {
public:
    explicit Subspace(int ambient = 0) : ambient_(ambient) {}
    static Subspace from_vectors(int ambient, const std::vector<Vector>& vs) {
        Subspace s(ambient);
        for (const auto& v : vs) s.insert(v);
        return s;
    }

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Vector>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /// Canonical representative of v + span(this): eliminate all pivot
    /// coordinates. Result is zero iff v lies in the subspace.
    Vector reduce(const Vector& v) const {
        if (static_cast<int>(v.size()) != ambient_)
            throw std::invalid_argument("reduce: ambient dimension mismatch");
        Vector r = v;
        for (size_t i = 0; i < basis_.size(); ++i) {
            const Scalar c = r[pivots_[i]];
            if (c.is_zero()) continue;
            for (int j = 0; j < ambient_; ++j)
                if (!basis_[i][j].is_zero()) r[j] -= c * basis_[i][j];
        }
        return r;
    }

    bool contains(const Vector& v) const { return vector_is_zero(reduce(v)); }

    /// Add v to the span. Returns true when the dimension grew.
    bool insert(const Vector& v) {
        Vector r = reduce(v);
        int p = -1;
        for (int j = 0; j < ambient_; ++j)
            if (!r[j].is_zero()) {
                p = j;
                break;
            }
        if (p < 0) return false;
        Scalar inv = r[p].inverse();
        for (auto& x : r) x *= inv;
        // Clear the new pivot coordinate from the existing basis.
        for (auto& b : basis_) {
            const Scalar c = b[p];
            if (c.is_zero()) continue;
            for (int j = 0; j < ambient_; ++j)
                if (!r[j].is_zero()) b[j] -= c * r[j];
        }
        size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
        basis_.insert(basis_.begin() + static_cast<long>(pos), std::move(r));
        pivots_.insert(pivots_.begin() + static_cast<long>(pos), p);
        return true;
    }

private:
    int ambient_;
    std::vector<Vector> basis_;
    std::vector<int> pivots_;
};

/// Basis of {x : Mx = 0} as an echelonized subspace of dimension cols - rank.
Subspace nullspace(const ExactMatrix& m);

/// Some x with Mx = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const ExactMatrix& m, const Vector& b);

}  // namespace coda
