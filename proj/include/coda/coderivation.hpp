#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "coda/graded.hpp"
#include "coda/scalar.hpp"

namespace coda {

/// Key of one basis cochain phi_i^I: target index i, source word I.
struct TermKey {
    int target = 0;
    MultiIndex sources;

    friend bool operator==(const TermKey&, const TermKey&) = default;
    friend bool operator<(const TermKey& a, const TermKey& b) {
        return std::make_tuple(a.sources.size(), a.target, std::cref(a.sources)) <
               std::make_tuple(b.sources.size(), b.target, std::cref(b.sources));
    }
};

inline bool ring_is_zero(const Scalar& s) { return s.is_zero(); }

/// A finite sum of basis cochains phi_i^I with coefficients in R, together with
/// a declared parity. Every stored term must be homogeneous of that parity
/// (parity(v_i) + parity(v_I) == declared parity); zero coefficients are never
/// stored. Mixed arities are allowed (a sum over several cochain degrees).
template <class R>
class CoderivationT {
public:
    CoderivationT() : space_(one_two_space()), parity_(Parity::odd) {}
    CoderivationT(GradedSpace space, Parity parity) : space_(space), parity_(parity) {}

    const GradedSpace& space() const { return space_; }
    Parity parity() const { return parity_; }
    const std::map<TermKey, R>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    /// Common arity of all terms, or nullopt when mixed / zero.
    std::optional<int> arity() const {
        std::optional<int> a;
        for (const auto& [k, c] : terms_) {
            int n = static_cast<int>(k.sources.size());
            if (!a)
                a = n;
            else if (*a != n)
                return std::nullopt;
        }
        return a;
    }

    Parity term_parity(const TermKey& k) const {
        return space_.parity(k.target) + word_parity(space_, k.sources);
    }

    void add_term(int target, MultiIndex sources, R coeff) {
        if (ring_is_zero(coeff)) return;
        TermKey key{target, std::move(sources)};
        if (key.target < 1 || key.target > space_.dim())
            throw std::out_of_range("coderivation target out of range");
        for (int s : key.sources)
            if (s < 1 || s > space_.dim())
                throw std::out_of_range("coderivation source index out of range");
        if (term_parity(key) != parity_)
            throw std::invalid_argument("term parity does not match declared parity");
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), std::move(coeff));
        } else {
            it->second += coeff;
            if (ring_is_zero(it->second)) terms_.erase(it);
        }
    }

    R coeff(int target, const MultiIndex& sources) const {
        auto it = terms_.find(TermKey{target, sources});
        return it == terms_.end() ? R{} : it->second;
    }

    CoderivationT operator-() const {
        CoderivationT r(space_, parity_);
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }
    CoderivationT& operator+=(const CoderivationT& o) {
        if (o.is_zero()) return *this;
        if (is_zero() && parity_ != o.parity_) parity_ = o.parity_;
        if (parity_ != o.parity_)
            throw std::invalid_argument("adding coderivations of different parity");
        for (const auto& [k, c] : o.terms_) add_term(k.target, k.sources, c);
        return *this;
    }
    CoderivationT& operator-=(const CoderivationT& o) { return *this += -o; }
    friend CoderivationT operator+(CoderivationT a, const CoderivationT& b) { return a += b; }
    friend CoderivationT operator-(CoderivationT a, const CoderivationT& b) { return a -= b; }

    CoderivationT scaled(const R& s) const {
        CoderivationT r(space_, parity_);
        if (ring_is_zero(s)) return r;
        for (const auto& [k, c] : terms_) {
            R p = c * s;
            if (!ring_is_zero(p)) r.terms_.emplace(k, std::move(p));
        }
        return r;
    }

    friend bool operator==(const CoderivationT& a, const CoderivationT& b) {
        return a.space_ == b.space_ && a.terms_ == b.terms_;
    }

private:
    GradedSpace space_;
    Parity parity_;
    std::map<TermKey, R> terms_;
};

/// parity(v_i) + parity(v_I): the parity of the basis cochain phi_i^I.
inline Parity parity_of(const GradedSpace& space, int target, const MultiIndex& I) {
    return space.parity(target) + word_parity(space, I);
}

/// Gerstenhaber circle product. For basis cochains,
///   phi_i^I o phi_j^J = sum_k (-1)^{(|v_{i_1}|+...+|v_{i_{k-1}}|)|phi_j^J|}
///                       delta^{i_k}_j phi_i^{(I,J,k)},
/// where (I,J,k) replaces the k-th letter of I with J. Extended bilinearly.
template <class R>
CoderivationT<R> compose(const CoderivationT<R>& f, const CoderivationT<R>& g) {
    if (!(f.space() == g.space()))
        throw std::invalid_argument("compose: mismatched spaces");
    const GradedSpace& sp = f.space();
    CoderivationT<R> out(sp, f.parity() + g.parity());
    const int gp = static_cast<int>(g.parity());
    for (const auto& [fk, fc] : f.terms()) {
        for (const auto& [gk, gc] : g.terms()) {
            int prefix = 0;  // parity of v_{i_1}..v_{i_{k-1}}
            for (size_t k = 0; k < fk.sources.size(); ++k) {
                if (fk.sources[k] == gk.target) {
                    MultiIndex spliced;
                    spliced.reserve(fk.sources.size() + gk.sources.size() - 1);
                    spliced.insert(spliced.end(), fk.sources.begin(),
                                   fk.sources.begin() + static_cast<long>(k));
                    spliced.insert(spliced.end(), gk.sources.begin(), gk.sources.end());
                    spliced.insert(spliced.end(),
                                   fk.sources.begin() + static_cast<long>(k) + 1,
                                   fk.sources.end());
                    R c = fc * gc;
                    if ((prefix & gp) != 0) c = -c;
                    out.add_term(fk.target, std::move(spliced), std::move(c));
                }
                prefix ^= static_cast<int>(sp.parity(fk.sources[k]));
            }
        }
    }
    return out;
}

/// Graded commutator [f,g] = f o g - (-1)^{|f||g|} g o f.
template <class R>
CoderivationT<R> bracket(const CoderivationT<R>& f, const CoderivationT<R>& g) {
    CoderivationT<R> out = compose(f, g);
    CoderivationT<R> rev = compose(g, f);
    if (f.parity() == Parity::odd && g.parity() == Parity::odd)
        out += rev;
    else
        out -= rev;
    return out;
}

/// True iff d is an odd coderivation with [d,d] = 0 exactly.
template <class R>
bool is_codifferential(const CoderivationT<R>& d) {
    if (d.parity() != Parity::odd) return false;
    return bracket(d, d).is_zero();
}

/// Hochschild coboundary D(f) = [d, f] for a codifferential d.
template <class R>
CoderivationT<R> coboundary(const CoderivationT<R>& d, const CoderivationT<R>& f) {
    if (!is_codifferential(d))
        throw std::invalid_argument("coboundary: d is not a codifferential");
    return bracket(d, f);
}

/// Formal sum of tensor words with coefficients in R.
template <class R>
using WordSum = std::map<MultiIndex, R>;

/// Apply the coderivation extension of f to a basis word:
///   f(v_1..v_n) = sum_p (-1)^{(|v_1|+...+|v_p|)|f|}
///                 v_1..v_p f(v_{p+1}..v_{p+k}) v_{p+k+1}..v_n.
/// Words shorter than a term's arity contribute nothing.
template <class R>
WordSum<R> evaluate(const CoderivationT<R>& f, const MultiIndex& word) {
    const GradedSpace& sp = f.space();
    WordSum<R> out;
    const int fp = static_cast<int>(f.parity());
    for (const auto& [k, c] : f.terms()) {
        const int arity = static_cast<int>(k.sources.size());
        const int n = static_cast<int>(word.size());
        int prefix = 0;
        for (int p = 0; p + arity <= n; ++p) {
            bool match = true;
            for (int j = 0; j < arity; ++j)
                if (word[p + j] != k.sources[j]) {
                    match = false;
                    break;
                }
            if (match) {
                MultiIndex w;
                w.reserve(n - arity + 1);
                w.insert(w.end(), word.begin(), word.begin() + p);
                w.push_back(k.target);
                w.insert(w.end(), word.begin() + p + arity, word.end());
                R term = (prefix & fp) != 0 ? -c : c;
                auto it = out.find(w);
                if (it == out.end()) {
                    out.emplace(std::move(w), std::move(term));
                } else {
                    it->second += term;
                    if (ring_is_zero(it->second)) out.erase(it);
                }
            }
            if (p < n) prefix ^= static_cast<int>(sp.parity(word[p]));
        }
    }
    return out;
}

using Coderivation = CoderivationT<Scalar>;

std::string to_string(const Coderivation& c);

}  // namespace coda
