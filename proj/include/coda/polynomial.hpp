#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "coda/scalar.hpp"

namespace coda {

/// Exponent vector of one monomial in t_1..t_r. Trailing zeros are trimmed so
/// the same monomial has one representation regardless of the ambient r.
using Monomial = std::vector<int>;

inline Monomial trim(Monomial m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
    return m;
}
inline int mono_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}
inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return trim(std::move(r));
}
inline Monomial mono_var(int i) {
    Monomial m(i + 1, 0);
    m[i] = 1;
    return m;
}

/// Sparse multivariate polynomial in t_1..t_r over the Gaussian rationals.
/// Zero is the empty term map; monomials are kept in a canonical order
/// (graded, then lexicographic on exponents).
class ParamPolynomial {
public:
    struct MonoLess {
        bool operator()(const Monomial& a, const Monomial& b) const {
            int da = mono_degree(a), db = mono_degree(b);
            if (da != db) return da < db;
            return a < b;
        }
    };
    using Terms = std::map<Monomial, Scalar, MonoLess>;

    ParamPolynomial() = default;
    ParamPolynomial(const Scalar& c) {
        if (!c.is_zero()) terms_.emplace(Monomial{}, c);
    }
    static ParamPolynomial variable(int i) {
        ParamPolynomial p;
        p.terms_.emplace(mono_var(i), Scalar(1));
        return p;
    }
    static ParamPolynomial monomial(Monomial m, const Scalar& c) {
        ParamPolynomial p;
        if (!c.is_zero()) p.terms_.emplace(trim(std::move(m)), c);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
        return d;
    }
    int num_vars() const {
        size_t n = 0;
        for (const auto& [m, c] : terms_) n = std::max(n, m.size());
        return static_cast<int>(n);
    }

    void add(Monomial m, const Scalar& c) {
        if (c.is_zero()) return;
        m = trim(std::move(m));
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    ParamPolynomial operator-() const {
        ParamPolynomial r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    ParamPolynomial& operator+=(const ParamPolynomial& o) {
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }
    ParamPolynomial& operator-=(const ParamPolynomial& o) {
        for (const auto& [m, c] : o.terms_) add(m, -c);
        return *this;
    }
    ParamPolynomial& operator*=(const ParamPolynomial& o) {
        ParamPolynomial r;
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_) r.add(mono_mul(m1, m2), c1 * c2);
        *this = std::move(r);
        return *this;
    }
    friend ParamPolynomial operator+(ParamPolynomial a, const ParamPolynomial& b) { return a += b; }
    friend ParamPolynomial operator-(ParamPolynomial a, const ParamPolynomial& b) { return a -= b; }
    friend ParamPolynomial operator*(ParamPolynomial a, const ParamPolynomial& b) { return a *= b; }

    friend bool operator==(const ParamPolynomial& a, const ParamPolynomial& b) {
        return a.terms_ == b.terms_;
    }

    /// Keep only terms of total degree <= cap.
    ParamPolynomial truncated(int cap) const {
        ParamPolynomial r;
        for (const auto& [m, c] : terms_)
            if (mono_degree(m) <= cap) r.terms_.emplace(m, c);
        return r;
    }
    /// Keep only terms of total degree == deg.
    ParamPolynomial homogeneous_part(int deg) const {
        ParamPolynomial r;
        for (const auto& [m, c] : terms_)
            if (mono_degree(m) == deg) r.terms_.emplace(m, c);
        return r;
    }

    Scalar evaluate(const std::vector<Scalar>& values) const {
        Scalar out(0);
        for (const auto& [m, c] : terms_) {
            Scalar t = c;
            for (size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (i >= values.size())
                    throw std::invalid_argument("ParamPolynomial: missing parameter value");
                for (int e = 0; e < m[i]; ++e) t *= values[i];
            }
            out += t;
        }
        return out;
    }

    /// Substitute t_i -> subs[i] (polynomials in fresh variables).
    ParamPolynomial substitute(const std::vector<ParamPolynomial>& subs) const {
        ParamPolynomial out;
        for (const auto& [m, c] : terms_) {
            ParamPolynomial t{c};
            for (size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (i >= subs.size())
                    throw std::invalid_argument("ParamPolynomial: missing substitution");
                for (int e = 0; e < m[i]; ++e) t *= subs[i];
            }
            out += t;
        }
        return out;
    }

    std::string to_string(const std::string& var = "t") const;

private:
    Terms terms_;
};

inline bool ring_is_zero(const ParamPolynomial& p) { return p.is_zero(); }

/// All monomials in num_vars variables of total degree <= cap, in the
/// canonical (graded, then lexicographic) order.
std::vector<Monomial> monomials_up_to(int num_vars, int cap);

/// Bounded-degree ideal membership over the Gaussian rationals: true when
/// target = sum_i c_i * gens_i with polynomial cofactors c_i such that every
/// product has total degree <= degree_cap. A true answer is a certificate of
/// membership; a false answer only means no certificate exists at this cap.
bool ideal_contains(const std::vector<ParamPolynomial>& gens, const ParamPolynomial& target,
                    int num_vars, int degree_cap);

/// Mutual bounded-degree membership of the two generating sets.
bool ideals_equal(const std::vector<ParamPolynomial>& a, const std::vector<ParamPolynomial>& b,
                  int num_vars, int degree_cap);

}  // namespace coda
