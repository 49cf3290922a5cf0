#include "coda/linalg.hpp"

namespace coda {

RrefResult rref(const ExactMatrix& m) {
    RrefResult out{m, 0, {}};
    ExactMatrix& a = out.reduced;
    const int rows = a.rows(), cols = a.cols();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!a.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = c; j < cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
        const Scalar inv = a.at(r, c).inverse();
        for (int j = c; j < cols; ++j) a.at(r, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            const Scalar f = a.at(i, c);
            if (f.is_zero()) continue;
            for (int j = c; j < cols; ++j)
                if (!a.at(r, j).is_zero()) a.at(i, j) -= f * a.at(r, j);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

int rank(const ExactMatrix& m) { return rref(m).rank; }

Subspace nullspace(const ExactMatrix& m) {
    RrefResult rr = rref(m);
    const int cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int c : rr.pivot_cols) is_pivot[c] = true;
    Subspace out(cols);
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vector v(cols);
        v[f] = Scalar(1);
        for (size_t i = 0; i < rr.pivot_cols.size(); ++i)
            v[rr.pivot_cols[i]] = -rr.reduced.at(static_cast<int>(i), f);
        out.insert(v);
    }
    return out;
}

std::optional<Vector> solve(const ExactMatrix& m, const Vector& b) {
    if (static_cast<int>(b.size()) != m.rows())
        throw std::invalid_argument("solve: rhs dimension mismatch");
    ExactMatrix aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    RrefResult rr = rref(aug);
    for (int c : rr.pivot_cols)
        if (c == m.cols()) return std::nullopt;
    Vector x(m.cols());
    for (size_t i = 0; i < rr.pivot_cols.size(); ++i)
        x[rr.pivot_cols[i]] = rr.reduced.at(static_cast<int>(i), m.cols());
    return x;
}

}  // namespace coda
