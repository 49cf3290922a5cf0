#include "coda/algebra.hpp"

#include <stdexcept>

#include "coda/hochschild.hpp"

namespace coda {

std::string to_string(const GradedDim& g) {
    return std::to_string(g.even) + "|" + std::to_string(g.odd);
}

Vector Multiplication::multiply(const Vector& x, const Vector& y) const {
    const int n = dim();
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
        throw std::invalid_argument("multiply: dimension mismatch");
    Vector r(n);
    for (int a = 1; a <= n; ++a) {
        if (x[a - 1].is_zero()) continue;
        for (int b = 1; b <= n; ++b) {
            if (y[b - 1].is_zero()) continue;
            const Vector& p = basis_product(a, b);
            Scalar c = x[a - 1] * y[b - 1];
            for (int k = 0; k < n; ++k)
                if (!p[k].is_zero()) r[k] += c * p[k];
        }
    }
    return r;
}

bool Multiplication::is_associative() const {
    const int n = dim();
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c) {
                Vector lhs = multiply(basis_product(a, b), basis_vector_of(c));
                Vector rhs = multiply(basis_vector_of(a), basis_product(b, c));
                if (lhs != rhs) return false;
            }
    return true;
}

Multiplication to_multiplication(const Coderivation& d) {
    const GradedSpace& sp = d.space();
    Multiplication m(sp);
    for (const auto& [k, c] : d.terms()) {
        if (k.sources.size() != 2)
            throw std::invalid_argument("to_multiplication: arity-2 terms required");
        int a = k.sources[0], b = k.sources[1];
        Scalar v = m.parity_A(a) == Parity::odd ? -c : c;
        m.prod[a - 1][b - 1][k.target - 1] += v;
    }
    return m;
}

Coderivation from_multiplication(const Multiplication& m) {
    Coderivation d(m.w_space, Parity::odd);
    const int n = m.dim();
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            const Vector& p = m.basis_product(a, b);
            for (int k = 1; k <= n; ++k) {
                if (p[k - 1].is_zero()) continue;
                Scalar c = m.parity_A(a) == Parity::odd ? -p[k - 1] : p[k - 1];
                d.add_term(k, {a, b}, c);
            }
        }
    return d;
}

namespace {

/// Solve a homogeneous linear condition on elements of fixed A parity and
/// fold the result into a graded subspace (W parity convention for dims).
/// cond(x) must be linear; it maps a candidate element to a stack of vectors
/// that must all vanish.
template <class Cond>
void solve_graded(const Multiplication& m, Parity parity_in_A, Cond cond,
                  GradedSubspace& out) {
    const int n = m.dim();
    std::vector<int> coords;
    for (int i = 1; i <= n; ++i)
        if (m.parity_A(i) == parity_in_A) coords.push_back(i);
    if (coords.empty()) return;

    // Columns: condition applied to each basis vector of this parity.
    std::vector<Vector> cols;
    for (int i : coords) {
        Vector e(n);
        e[i - 1] = Scalar(1);
        cols.push_back(cond(e));
    }
    ExactMatrix mat(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t r = 0; r < cols[j].size(); ++r)
            mat.at(static_cast<int>(r), static_cast<int>(j)) = cols[j][r];
    Subspace ns = nullspace(mat);
    for (const Vector& v : ns.basis()) {
        Vector full(n);
        for (size_t j = 0; j < coords.size(); ++j) full[coords[j] - 1] = v[j];
        out.sub.insert(full);
    }
    // A-even elements sit on W-odd basis vectors and vice versa.
    (parity_in_A == Parity::odd ? out.dims.even : out.dims.odd) += ns.dim();
}

Vector stack(std::vector<Vector> parts) {
    Vector r;
    for (auto& p : parts) r.insert(r.end(), p.begin(), p.end());
    return r;
}

Vector basis_vec(int n, int i) {
    Vector e(n);
    e[i - 1] = Scalar(1);
    return e;
}

}  // namespace

Vector Multiplication::basis_vector_of(int i) const { return basis_vec(dim(), i); }

GradedSubspace center(const Multiplication& m) {
    const int n = m.dim();
    GradedSubspace out{Subspace(n), {}};
    for (Parity p : {Parity::even, Parity::odd}) {
        auto cond = [&](const Vector& x) {
            std::vector<Vector> rows;
            for (int b = 1; b <= n; ++b) {
                Vector e = basis_vec(n, b);
                Vector lhs = m.multiply(x, e);
                Vector rhs = m.multiply(e, x);
                int s = (p == Parity::odd && m.parity_A(b) == Parity::odd) ? -1 : 1;
                for (int k = 0; k < n; ++k) lhs[k] -= Scalar(s) * rhs[k];
                rows.push_back(std::move(lhs));
            }
            return stack(std::move(rows));
        };
        solve_graded(m, p, cond, out);
    }
    return out;
}

std::optional<Vector> unit(const Multiplication& m) {
    const int n = m.dim();
    // m(e, v_b) = v_b and m(v_b, e) = v_b for all b, linear in e.
    ExactMatrix mat(2 * n * n, n);
    Vector rhs(2 * n * n);
    for (int j = 1; j <= n; ++j) {
        Vector e = basis_vec(n, j);
        for (int b = 1; b <= n; ++b) {
            Vector l = m.multiply(e, basis_vec(n, b));
            Vector r = m.multiply(basis_vec(n, b), e);
            for (int k = 0; k < n; ++k) {
                mat.at((b - 1) * n + k, j - 1) = l[k];
                mat.at(n * n + (b - 1) * n + k, j - 1) = r[k];
            }
        }
    }
    for (int b = 1; b <= n; ++b) {
        rhs[(b - 1) * n + (b - 1)] = Scalar(1);
        rhs[n * n + (b - 1) * n + (b - 1)] = Scalar(1);
    }
    return solve(mat, rhs);
}

bool is_graded_commutative(const Multiplication& m) {
    const int n = m.dim();
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            int s = (m.parity_A(a) == Parity::odd && m.parity_A(b) == Parity::odd) ? -1 : 1;
            const Vector& ab = m.basis_product(a, b);
            const Vector& ba = m.basis_product(b, a);
            for (int k = 0; k < n; ++k)
                if (ab[k] != Scalar(s) * ba[k]) return false;
        }
    return true;
}

bool is_nilpotent(const Multiplication& m) {
    const int n = m.dim();
    Subspace power(n);
    for (int i = 1; i <= n; ++i) power.insert(basis_vec(n, i));
    for (int step = 0; step <= n + 1; ++step) {
        Subspace next(n);
        for (const Vector& x : power.basis())
            for (int b = 1; b <= n; ++b) next.insert(m.multiply(x, basis_vec(n, b)));
        if (next.dim() == 0) return true;
        if (next.dim() == power.dim()) return false;
        power = std::move(next);
    }
    return false;
}

GradedSubspace left_annihilator(const Multiplication& m) {
    const int n = m.dim();
    GradedSubspace out{Subspace(n), {}};
    for (Parity p : {Parity::even, Parity::odd}) {
        auto cond = [&](const Vector& x) {
            std::vector<Vector> rows;
            for (int b = 1; b <= n; ++b) rows.push_back(m.multiply(x, basis_vec(n, b)));
            return stack(std::move(rows));
        };
        solve_graded(m, p, cond, out);
    }
    return out;
}

GradedSubspace right_annihilator(const Multiplication& m) {
    const int n = m.dim();
    GradedSubspace out{Subspace(n), {}};
    for (Parity p : {Parity::even, Parity::odd}) {
        auto cond = [&](const Vector& x) {
            std::vector<Vector> rows;
            for (int b = 1; b <= n; ++b) rows.push_back(m.multiply(basis_vec(n, b), x));
            return stack(std::move(rows));
        };
        solve_graded(m, p, cond, out);
    }
    return out;
}

Coderivation opposite(const Coderivation& d) {
    Multiplication m = to_multiplication(d);
    Multiplication op(m.w_space);
    const int n = m.dim();
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            int s = (m.parity_A(a) == Parity::odd && m.parity_A(b) == Parity::odd) ? -1 : 1;
            const Vector& p = m.basis_product(b, a);
            for (int k = 0; k < n; ++k) op.prod[a - 1][b - 1][k] = Scalar(s) * p[k];
        }
    return from_multiplication(op);
}

std::string to_string(const Fingerprint& f) {
    std::string s = "h=" + to_string(f.h[0]);
    for (int i = 1; i < 4; ++i) s += "," + to_string(f.h[i]);
    s += " center=" + to_string(f.center);
    s += f.unital ? " unital" : " non-unital";
    s += f.commutative ? " commutative" : " non-commutative";
    s += f.nilpotent ? " nilpotent" : " non-nilpotent";
    s += " lann=" + to_string(f.lann);
    s += " rann=" + to_string(f.rann);
    return s;
}

Fingerprint fingerprint(const Coderivation& d) {
    Fingerprint f;
    HochschildContext ctx(d);
    for (int i = 0; i < 4; ++i) {
        auto [e, o] = ctx.graded_dims(i);
        f.h[i] = GradedDim{e, o};
    }
    Multiplication m = to_multiplication(d);
    GradedSubspace z = center(m);
    f.center = z.dims;
    f.unital = unit(m).has_value();
    f.commutative = is_graded_commutative(m);
    f.nilpotent = is_nilpotent(m);
    f.lann = left_annihilator(m).dims;
    f.rann = right_annihilator(m).dims;
    return f;
}

}  // namespace coda
