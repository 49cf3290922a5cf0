#include "coda/equivalence.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

#include "coda/algebra.hpp"
#include "coda/catalog.hpp"

namespace coda {

namespace {

Scalar det2(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
    return a * d - b * c;
}

}  // namespace

GradedAutomorphism::GradedAutomorphism() : m_(ExactMatrix::identity(3)), inv_(m_) {}

std::optional<GradedAutomorphism> GradedAutomorphism::from_blocks(const Scalar& s,
                                                                  const Scalar& a,
                                                                  const Scalar& b,
                                                                  const Scalar& c,
                                                                  const Scalar& d) {
    Scalar det = det2(a, b, c, d);
    if (s.is_zero() || det.is_zero()) return std::nullopt;
    GradedAutomorphism g;
    g.m_ = ExactMatrix(3, 3);
    g.m_.at(0, 0) = s;
    g.m_.at(1, 1) = a;
    g.m_.at(1, 2) = b;
    g.m_.at(2, 1) = c;
    g.m_.at(2, 2) = d;
    g.inv_ = ExactMatrix(3, 3);
    g.inv_.at(0, 0) = s.inverse();
    Scalar di = det.inverse();
    g.inv_.at(1, 1) = d * di;
    g.inv_.at(1, 2) = -b * di;
    g.inv_.at(2, 1) = -c * di;
    g.inv_.at(2, 2) = a * di;
    return g;
}

std::optional<GradedAutomorphism> GradedAutomorphism::from_matrix(const ExactMatrix& m) {
    if (m.rows() != 3 || m.cols() != 3) return std::nullopt;
    // The off-block entries must vanish (parity preservation).
    if (!m.at(0, 1).is_zero() || !m.at(0, 2).is_zero() || !m.at(1, 0).is_zero() ||
        !m.at(2, 0).is_zero())
        return std::nullopt;
    return from_blocks(m.at(0, 0), m.at(1, 1), m.at(1, 2), m.at(2, 1), m.at(2, 2));
}

GradedAutomorphism GradedAutomorphism::inverse() const {
    GradedAutomorphism g;
    g.m_ = inv_;
    g.inv_ = m_;
    return g;
}

GradedAutomorphism GradedAutomorphism::compose(const GradedAutomorphism& o) const {
    GradedAutomorphism g;
    g.m_ = m_.multiply(o.m_);
    g.inv_ = o.inv_.multiply(inv_);
    return g;
}

Coderivation transport(const GradedAutomorphism& g, const Coderivation& d) {
    const GradedSpace& sp = d.space();
    if (sp.dim() != 3)
        throw std::invalid_argument("transport: automorphisms act on the 1|2 space");
    const ExactMatrix& G = g.matrix();
    const ExactMatrix& Gi = g.inverse_matrix();
    Coderivation out(sp, d.parity());
    for (const auto& [k, c] : d.terms()) {
        const int n = static_cast<int>(k.sources.size());
        // g(v_i) expansion of the target, times the g^{-1} expansion of every
        // source slot: enumerate all result words.
        MultiIndex w(n, 1);
        for (;;) {
            Scalar factor = c;
            for (int p = 0; p < n && !factor.is_zero(); ++p)
                factor *= Gi.at(k.sources[p] - 1, w[p] - 1);
            if (!factor.is_zero()) {
                for (int i = 1; i <= 3; ++i) {
                    Scalar t = factor * G.at(i - 1, k.target - 1);
                    if (!t.is_zero()) out.add_term(i, w, t);
                }
            }
            int p = n - 1;
            while (p >= 0 && w[p] == 3) w[p--] = 1;
            if (p < 0) break;
            ++w[p];
        }
    }
    return out;
}

bool verify(const GradedAutomorphism& g, const Coderivation& d1, const Coderivation& d2) {
    return transport(g, d1) == d2;
}

namespace {

// Exact rational square root, when one exists.
std::optional<mpq_class> rat_sqrt(const mpq_class& q) {
    if (q < 0) return std::nullopt;
    mpz_class num = q.get_num(), den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 ||
        mpz_perfect_square_p(den.get_mpz_t()) == 0)
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return mpq_class(rn, rd);
}

// Exact rational e-th root for odd e (sign is preserved).
std::optional<mpq_class> rat_odd_root(const mpq_class& q, int e) {
    mpz_class num = abs(q.get_num()), den = q.get_den();
    mpz_class rn, rd;
    if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), e) == 0) return std::nullopt;
    if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), e) == 0) return std::nullopt;
    mpq_class r(rn, rd);
    return q < 0 ? -r : r;
}

std::vector<Scalar> gaussian_sqrts(const Scalar& v) {
    std::vector<Scalar> out;
    if (v.is_zero()) return out;
    if (v.is_real()) {
        if (auto r = rat_sqrt(v.re())) {
            out.emplace_back(*r);
        } else if (auto ri = rat_sqrt(-v.re())) {
            out.push_back(Scalar(mpq_class(0), *ri));
        }
    } else {
        // (u + wi)^2 = v: u^2 = (re + |v|)/2 must be a rational square.
        auto n = rat_sqrt(v.re() * v.re() + v.im() * v.im());
        if (n) {
            if (auto u = rat_sqrt((v.re() + *n) / 2)) {
                if (*u != 0) out.push_back(Scalar(*u, v.im() / (2 * *u)));
            }
        }
    }
    size_t k = out.size();
    for (size_t i = 0; i < k; ++i) out.push_back(-out[i]);
    return out;
}

// All Gaussian-rational solutions of x^e = v that this solver can reach
// (real and pure-imaginary odd roots; full square-root towers).
std::vector<Scalar> gaussian_roots(const Scalar& v, int e) {
    if (e == 1) return {v};
    std::vector<Scalar> out;
    if (e % 2 == 0) {
        for (const Scalar& y : gaussian_sqrts(v))
            for (const Scalar& x : gaussian_roots(y, e / 2)) out.push_back(x);
        return out;
    }
    if (v.is_real()) {
        if (auto r = rat_odd_root(v.re(), e)) out.emplace_back(*r);
    } else if (v.re() == 0) {
        // (yi)^e = y^e * i^e with i^e = +/- i for odd e.
        mpq_class target = (e % 4 == 1) ? v.im() : -v.im();
        if (auto r = rat_odd_root(target, e)) out.push_back(Scalar(mpq_class(0), *r));
    }
    return out;
}

struct DiagEquation {
    int e[3];  // exponents of (s, a, d)
    Scalar v;
};

// Solves (s, a, d)^eq = v for every equation, exactly; returns all solutions
// found. Variables not constrained by any equation are set to 1.
std::vector<std::array<Scalar, 3>> solve_diagonal(const std::vector<DiagEquation>& eqs) {
    auto satisfies = [&](const std::array<Scalar, 3>& x) {
        for (const auto& q : eqs) {
            Scalar lhs(1);
            for (int j = 0; j < 3; ++j) {
                for (int k = 0; k < q.e[j]; ++k) lhs *= x[j];
                for (int k = 0; k > q.e[j]; --k) lhs *= x[j].inverse();
            }
            if (lhs != q.v) return false;
        }
        return true;
    };
    std::array<Scalar, 3> ones = {Scalar(1), Scalar(1), Scalar(1)};
    if (satisfies(ones)) return {ones};

    // Rational row reduction to find the rank and a set of pivot rows.
    std::vector<int> active;
    for (int j = 0; j < 3; ++j)
        for (const auto& q : eqs)
            if (q.e[j] != 0) {
                active.push_back(j);
                break;
            }
    const int n = static_cast<int>(active.size());
    if (n == 0) return {};

    std::vector<std::array<Scalar, 3>> found;
    auto try_subset = [&](const std::vector<int>& rows) {
        // Integer matrix of the active columns; solve by the adjugate, taking
        // det-th roots componentwise.
        long m[3][3] = {};
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j] = eqs[rows[i]].e[active[j]];
        long det;
        long adj[3][3] = {};
        if (n == 1) {
            det = m[0][0];
            adj[0][0] = 1;
        } else if (n == 2) {
            det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
            adj[0][0] = m[1][1];
            adj[0][1] = -m[0][1];
            adj[1][0] = -m[1][0];
            adj[1][1] = m[0][0];
        } else {
            det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                  m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                  m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
                    int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
                    adj[j][i] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
                }
        }
        if (det == 0) return;
        int e = static_cast<int>(det < 0 ? -det : det);
        // x_j^det = prod_k v_k^adj[j][k]; for a negative det invert the value.
        std::vector<std::vector<Scalar>> roots(n);
        for (int j = 0; j < n; ++j) {
            Scalar w(1);
            for (int k = 0; k < n; ++k) {
                const Scalar& vk = eqs[rows[k]].v;
                for (long t = 0; t < adj[j][k]; ++t) w *= vk;
                for (long t = 0; t > adj[j][k]; --t) w *= vk.inverse();
            }
            if (det < 0) w = w.inverse();
            roots[j] = gaussian_roots(w, e);
            if (roots[j].empty()) return;
        }
        std::vector<int> pick(n, 0);
        for (;;) {
            std::array<Scalar, 3> x = {Scalar(1), Scalar(1), Scalar(1)};
            for (int j = 0; j < n; ++j) x[active[j]] = roots[j][pick[j]];
            if (satisfies(x)) found.push_back(x);
            int j = n - 1;
            while (j >= 0 && pick[j] + 1 == static_cast<int>(roots[j].size())) pick[j--] = 0;
            if (j < 0) break;
            ++pick[j];
        }
    };

    // Enumerate subsets of n rows, smallest exponents first, and keep the
    // solutions of every consistent subset (verified against all equations).
    std::vector<int> order(eqs.size());
    for (size_t i = 0; i < eqs.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int na = 0, nb = 0;
        for (int j = 0; j < 3; ++j) {
            na += eqs[a].e[j] < 0 ? -eqs[a].e[j] : eqs[a].e[j];
            nb += eqs[b].e[j] < 0 ? -eqs[b].e[j] : eqs[b].e[j];
        }
        return na < nb;
    });
    int tried = 0;
    const int cap = 120;
    std::vector<int> rows(n);
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (!found.empty() || tried > cap) return;
        if (depth == n) {
            ++tried;
            try_subset(rows);
            return;
        }
        for (size_t i = start; i < order.size(); ++i) {
            rows[depth] = order[i];
            self(self, static_cast<int>(i) + 1, depth + 1);
            if (!found.empty() || tried > cap) return;
        }
    };
    rec(rec, 0, 0);

    // Rank-deficient systems: pin one variable to 1 and retry on the rest.
    if (found.empty() && n > 1) {
        for (int drop = 0; drop < n && found.empty(); ++drop) {
            std::vector<DiagEquation> sub = eqs;
            DiagEquation pin{};
            pin.e[active[drop]] = 1;
            pin.v = Scalar(1);
            bool already = false;
            for (const auto& q : eqs)
                if (q.e[0] == pin.e[0] && q.e[1] == pin.e[1] && q.e[2] == pin.e[2])
                    already = true;
            if (already) continue;
            sub.push_back(pin);
            auto subsol = solve_diagonal(sub);
            for (auto& x : subsol)
                if (satisfies(x)) found.push_back(x);
        }
    }
    return found;
}

std::vector<Scalar> shear_candidates(const Coderivation& d1, const Coderivation& d2) {
    std::set<Scalar> s;
    auto add = [&](const Scalar& x) {
        if (!x.is_zero()) {
            s.insert(x);
            s.insert(-x);
            s.insert(x.inverse());
            s.insert(-x.inverse());
        }
    };
    for (long v : {1L, 2L, 3L}) add(Scalar(v));
    add(Scalar::rational(1, 2));
    add(Scalar::rational(2, 3));
    add(Scalar::rational(3, 2));
    add(Scalar::i());
    std::vector<Scalar> coeffs;
    for (const auto* d : {&d1, &d2})
        for (const auto& [k, c] : d->terms()) coeffs.push_back(c);
    for (const Scalar& a : coeffs)
        for (const Scalar& b : coeffs)
            if (!b.is_zero()) add(a * b.inverse());
    std::vector<Scalar> out = {Scalar(0)};
    out.insert(out.end(), s.begin(), s.end());
    if (out.size() > 28) out.resize(28);
    return out;
}

}  // namespace

IsoResult find_isomorphism(const Coderivation& d1, const Coderivation& d2, long budget) {
    IsoResult res;
    if (d1 == d2) {
        res.witness = GradedAutomorphism();
        return res;
    }
    if (!(fingerprint(d1) == fingerprint(d2))) {
        res.fingerprints_differ = true;
        return res;
    }
    // g = diag(s, a, d) * P * L(q) * U(r): P is the optional odd swap and
    // L, U are the lower and upper unipotent shears, so the odd block ranges
    // over all of GL(2) as q and r do. The shears are enumerated from a small
    // candidate list; the diagonal part is then solved exactly from the
    // multiplicative equations the structure constants must satisfy.
    std::vector<Scalar> shears = shear_candidates(d1, d2);
    long used = 0;
    for (int perm = 0; perm < 2; ++perm) {
        for (const Scalar& q : shears) {
            for (const Scalar& r : shears) {
                if (++used > budget) return res;
                // Odd block of P * L(q) * U(r).
                Scalar a(1), b = r, c = q, d = q * r + Scalar(1);
                if (perm == 1) {
                    std::swap(a, c);
                    std::swap(b, d);
                }
                auto shape = GradedAutomorphism::from_blocks(Scalar(1), a, b, c, d);
                if (!shape) continue;
                Coderivation d1s = transport(*shape, d1);
                // Diagonal transport rescales each structure constant by
                // w(target) / (w(src1) * w(src2)); collect the equations.
                std::map<std::array<int, 3>, Scalar> want;
                bool feasible = true;
                for (const auto& [k, c2] : d2.terms()) {
                    (void)c2;
                    if (d1s.terms().find(k) == d1s.terms().end()) {
                        feasible = false;
                        break;
                    }
                }
                if (!feasible) continue;
                std::vector<DiagEquation> eqs;
                for (const auto& [k, c1] : d1s.terms()) {
                    auto it = d2.terms().find(k);
                    if (it == d2.terms().end()) {
                        feasible = false;
                        break;
                    }
                    std::array<int, 3> e = {0, 0, 0};
                    e[k.target - 1] += 1;
                    for (int src : k.sources) e[src - 1] -= 1;
                    Scalar ratio = it->second / c1;
                    auto w = want.find(e);
                    if (w != want.end()) {
                        if (w->second != ratio) {
                            feasible = false;
                            break;
                        }
                        continue;
                    }
                    want.emplace(e, ratio);
                    DiagEquation q2{};
                    q2.e[0] = e[0];
                    q2.e[1] = e[1];
                    q2.e[2] = e[2];
                    q2.v = ratio;
                    eqs.push_back(q2);
                }
                if (!feasible) continue;
                for (const auto& x : solve_diagonal(eqs)) {
                    auto diag = GradedAutomorphism::from_blocks(x[0], x[1], Scalar(0),
                                                                Scalar(0), x[2]);
                    if (!diag) continue;
                    GradedAutomorphism g = diag->compose(*shape);
                    if (verify(g, d1, d2)) {
                        res.witness = g;
                        return res;
                    }
                }
            }
        }
    }
    return res;
}

int identify_in_catalog(const Coderivation& d) {
    if (d.is_zero()) return 0;
    for (const auto& e : catalog())
        if (d == e.d) return e.index;
    static const std::vector<Fingerprint> catalog_fps = [] {
        std::vector<Fingerprint> fps;
        for (const auto& e : catalog()) fps.push_back(fingerprint(e.d));
        return fps;
    }();
    Fingerprint f = fingerprint(d);
    for (const auto& e : catalog()) {
        if (!(catalog_fps[static_cast<size_t>(e.index - 1)] == f)) continue;
        IsoResult r = find_isomorphism(d, e.d);
        if (r.witness && verify(*r.witness, d, e.d)) return e.index;
        // The shear enumeration is not symmetric in its arguments, so a pair
        // can be reachable in one direction only.
        r = find_isomorphism(e.d, d);
        if (r.witness && verify(*r.witness, e.d, d)) return e.index;
    }
    return -1;
}

GradedAutomorphism random_automorphism(std::mt19937& rng) {
    std::uniform_int_distribution<int> entry(-3, 3);
    for (;;) {
        Scalar s1(entry(rng));
        Scalar a(entry(rng)), b(entry(rng)), c(entry(rng)), d(entry(rng));
        auto g = GradedAutomorphism::from_blocks(s1, a, b, c, d);
        if (g) return *g;
    }
}

}  // namespace coda
