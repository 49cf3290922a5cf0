#include "coda/polynomial.hpp"

#include <map>

#include "coda/linalg.hpp"

namespace coda {

std::vector<Monomial> monomials_up_to(int num_vars, int cap) {
    std::vector<Monomial> out = {Monomial{}};
    std::vector<Monomial> layer = out;
    for (int d = 1; d <= cap; ++d) {
        std::vector<Monomial> next;
        for (const auto& m : layer) {
            // Extend only at or past the last nonzero slot to avoid duplicates.
            int lo = 0;
            for (int i = static_cast<int>(m.size()) - 1; i >= 0; --i)
                if (m[i] > 0) {
                    lo = i;
                    break;
                }
            for (int i = lo; i < num_vars; ++i) next.push_back(mono_mul(m, mono_var(i)));
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    std::sort(out.begin(), out.end(), ParamPolynomial::MonoLess{});
    return out;
}

bool ideal_contains(const std::vector<ParamPolynomial>& gens, const ParamPolynomial& target,
                    int num_vars, int degree_cap) {
    if (target.is_zero()) return true;
    if (target.degree() > degree_cap) return false;
    std::vector<Monomial> monos = monomials_up_to(num_vars, degree_cap);
    std::map<Monomial, int, ParamPolynomial::MonoLess> index;
    for (size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], static_cast<int>(i));
    auto vectorize = [&](const ParamPolynomial& p) {
        Vector v(monos.size());
        for (const auto& [m, c] : p.terms()) v[index.at(m)] = c;
        return v;
    };
    Subspace span(static_cast<int>(monos.size()));
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        int room = degree_cap - g.degree();
        if (room < 0) continue;
        for (const auto& m : monomials_up_to(num_vars, room))
            span.insert(vectorize(g * ParamPolynomial::monomial(m, Scalar(1))));
    }
    return span.contains(vectorize(target));
}

bool ideals_equal(const std::vector<ParamPolynomial>& a, const std::vector<ParamPolynomial>& b,
                  int num_vars, int degree_cap) {
    for (const auto& p : a)
        if (!ideal_contains(b, p, num_vars, degree_cap)) return false;
    for (const auto& p : b)
        if (!ideal_contains(a, p, num_vars, degree_cap)) return false;
    return true;
}

std::string ParamPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string mono;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += var + std::to_string(i + 1);
            if (m[i] > 1) mono += '^' + std::to_string(m[i]);
        }
        std::string coef = c.to_string();
        std::string piece;
        if (mono.empty()) {
            piece = coef;
        } else if (coef == "1") {
            piece = mono;
        } else if (coef == "-1") {
            piece = "-" + mono;
        } else {
            piece = coef + "*" + mono;
        }
        if (first) {
            s = piece;
        } else if (piece[0] == '-') {
            s += " - " + piece.substr(1);
        } else {
            s += " + " + piece;
        }
        first = false;
    }
    return s;
}

}  // namespace coda
