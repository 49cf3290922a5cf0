#include "coda/deformations.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "coda/catalog.hpp"
#include "coda/equivalence.hpp"
#include "coda/hochschild.hpp"
#include "coda/linalg.hpp"

namespace coda {

namespace {

Coderivation cod(std::vector<std::tuple<int, MultiIndex, int>> terms) {
    Coderivation f(one_two_space(), Parity::odd);
    for (auto& [t, w, c] : terms) f.add_term(t, w, Scalar(c));
    return f;
}

Monomial mono(std::initializer_list<int> e) { return trim(Monomial(e)); }

ParamPolynomial pv(int i) { return ParamPolynomial::variable(i); }

using CorrectionMap = std::map<Monomial, Coderivation, ParamPolynomial::MonoLess>;

}  // namespace

CoderivationT<ParamPolynomial> DeformationFamily::total() const {
    CoderivationT<ParamPolynomial> T(base.space(), Parity::odd);
    for (const auto& [k, c] : base.terms()) T.add_term(k.target, k.sources, ParamPolynomial(c));
    for (size_t i = 0; i < directions.size(); ++i)
        for (const auto& [k, c] : directions[i].terms())
            T.add_term(k.target, k.sources, ParamPolynomial::monomial(mono_var(static_cast<int>(i)), c));
    for (const auto& [m, f] : corrections)
        for (const auto& [k, c] : f.terms())
            T.add_term(k.target, k.sources, ParamPolynomial::monomial(m, c));
    return T;
}

CoderivationT<ParamPolynomial> DeformationFamily::residual() const {
    CoderivationT<ParamPolynomial> T = total();
    CoderivationT<ParamPolynomial> r =
        bracket(T, T).scaled(ParamPolynomial(Scalar::rational(1, 2)));
    for (size_t j = 0; j < relations.size(); ++j) {
        CoderivationT<ParamPolynomial> x(base.space(), Parity::even);
        for (const auto& [k, c] : relation_reps[j].terms())
            x.add_term(k.target, k.sources, relations[j] * ParamPolynomial(c));
        r -= x;
    }
    return r;
}

namespace {

// True when every coefficient of the residual lies in the relation ideal, so
// the family squares to zero at every relation-satisfying parameter value.
bool residual_in_ideal(const DeformationFamily& fam) {
    int cap = 2;
    for (const auto& r : fam.relations) cap = std::max(cap, r.degree());
    auto res = fam.residual();
    for (const auto& [k, p] : res.terms())
        if (!ideal_contains(fam.relations, p, fam.params(), std::max(p.degree(), cap) + 2))
            return false;
    return true;
}

}  // namespace

DeformationFamily infinitesimal_universal(const Coderivation& d) {
    HochschildContext ctx(d);
    DeformationFamily fam;
    fam.base = d;
    fam.directions = ctx.representatives(2, Parity::odd);
    fam.order = 1;
    fam.closed = residual_in_ideal(fam);
    return fam;
}

DeformationFamily infinitesimal_universal(const Coderivation& d,
                                          const std::vector<Coderivation>& frame) {
    HochschildContext ctx(d);
    const auto& reps = ctx.representatives(2, Parity::odd);
    if (frame.size() != reps.size())
        throw std::invalid_argument(
            "frame size does not match the odd degree-2 cohomology dimension");
    ExactMatrix classes(static_cast<int>(reps.size()), static_cast<int>(frame.size()));
    for (size_t j = 0; j < frame.size(); ++j) {
        if (frame[j].parity() != Parity::odd || frame[j].arity() != 2)
            throw std::invalid_argument("frame entries must be odd degree-2 cochains");
        auto dec = ctx.decompose(frame[j]);
        if (!dec.is_cocycle) throw std::invalid_argument("frame entry is not a cocycle");
        for (size_t i = 0; i < reps.size(); ++i)
            classes.at(static_cast<int>(i), static_cast<int>(j)) = dec.h_coords[i];
    }
    if (rank(classes) != static_cast<int>(frame.size()))
        throw std::invalid_argument("frame classes are not a cohomology basis");
    DeformationFamily fam;
    fam.base = d;
    fam.directions = frame;
    fam.order = 1;
    fam.closed = residual_in_ideal(fam);
    return fam;
}

void extend_order(DeformationFamily& fam, int target_order) {
    const GradedSpace sp = fam.base.space();
    const int dim3 = cochain_dim(sp, 3);
    std::vector<int> odd2;
    for (int i = 0; i < cochain_dim(sp, 2); ++i) {
        TermKey k = cochain_key(sp, 2, i);
        if (parity_of(sp, k.target, k.sources) == Parity::odd) odd2.push_back(i);
    }
    ExactMatrix cob2 = coboundary_matrix(fam.base, 2);
    ExactMatrix cob3 = coboundary_matrix(fam.base, 3);

    for (int deg = fam.order + 1; deg <= target_order; ++deg) {
        auto res = fam.residual();
        std::map<Monomial, Coderivation, ParamPolynomial::MonoLess> obstructions;
        for (const auto& [key, poly] : res.terms()) {
            for (const auto& [m, c] : poly.terms()) {
                // Lower-degree terms are leftovers accepted at an earlier
                // degree; they stay in the residual and are certified against
                // the relation ideal by the final closure test.
                int dm = mono_degree(m);
                if (dm != deg) continue;
                auto it = obstructions.find(m);
                if (it == obstructions.end())
                    it = obstructions.emplace(m, Coderivation(sp, Parity::even)).first;
                it->second.add_term(key.target, key.sources, c);
            }
        }
        auto build = [&]() {
            int J = static_cast<int>(fam.relation_reps.size());
            ExactMatrix A(dim3, J + static_cast<int>(odd2.size()));
            for (int j = 0; j < J; ++j) {
                Vector x = cochain_vector(sp, 3, fam.relation_reps[j]);
                for (int r = 0; r < dim3; ++r) A.at(r, j) = x[r];
            }
            for (size_t p = 0; p < odd2.size(); ++p)
                for (int r = 0; r < dim3; ++r)
                    A.at(r, J + static_cast<int>(p)) = cob2.at(r, odd2[p]);
            return A;
        };
        auto apply = [&](const Monomial& m, const Vector& sol) {
            int J = static_cast<int>(fam.relations.size());
            for (int j = 0; j < J; ++j) {
                const Scalar& a = sol[static_cast<size_t>(j)];
                if (!a.is_zero())
                    fam.relations[static_cast<size_t>(j)] += ParamPolynomial::monomial(m, a);
            }
            Vector psi_coords(odd2.size());
            for (size_t p = 0; p < odd2.size(); ++p)
                psi_coords[p] = sol[static_cast<size_t>(J) + p];
            Coderivation psi = cochain_from_vector(sp, 2, Parity::odd, psi_coords, &odd2);
            if (psi.is_zero()) return;
            auto it = fam.corrections.find(m);
            if (it == fam.corrections.end()) {
                fam.corrections.emplace(m, -psi);
            } else {
                it->second -= psi;
                if (it->second.is_zero()) fam.corrections.erase(it);
            }
        };

        std::vector<std::pair<Monomial, Vector>> deferred;
        for (const auto& [m, C] : obstructions) {
            Vector b = cochain_vector(sp, 3, C);
            // Try C = sum_j a_j * rep_j + D(psi) with the current reps.
            ExactMatrix A = build();
            auto sol = solve(A, b);
            if (sol) {
                apply(m, *sol);
                continue;
            }
            // The cohomology class of C falls outside the span of the current
            // reps. When the leftover is a cocycle it starts a new relation,
            // with this monomial as its first term; otherwise it is deferred
            // to the relation-multiple check below.
            std::vector<Vector> cols;
            for (int c = 0; c < A.cols(); ++c) {
                Vector v(dim3);
                for (int r = 0; r < dim3; ++r) v[static_cast<size_t>(r)] = A.at(r, c);
                cols.push_back(std::move(v));
            }
            Subspace span = Subspace::from_vectors(dim3, cols);
            Vector rest = span.reduce(b);
            if (!vector_is_zero(cob3.apply(rest))) {
                deferred.emplace_back(m, std::move(b));
                continue;
            }
            Coderivation xnew = cochain_from_vector(sp, 3, Parity::even, rest, nullptr);
            fam.relation_reps.push_back(xnew);
            fam.relations.push_back(ParamPolynomial::monomial(m, Scalar(1)));
            Vector remainder = b;
            for (int r = 0; r < dim3; ++r)
                remainder[static_cast<size_t>(r)] -= rest[static_cast<size_t>(r)];
            A = build();
            sol = solve(A, remainder);
            if (!sol) throw std::logic_error("deformation span reduction is inconsistent");
            // The new rep's own coefficient was split off already; clear it.
            (*sol)[fam.relation_reps.size() - 1] = Scalar(0);
            apply(m, *sol);
        }
        // New reps found during the sweep may resolve earlier deferrals; for
        // the rest, split off the rep and coboundary components and leave only
        // the span-reduced remainder in the residual. That remainder must lie
        // in the relation ideal for the family to be closed, but membership
        // can hinge on relations that only appear at a later degree, so the
        // check is left to the final closure test.
        for (auto& [m, b] : deferred) {
            ExactMatrix A = build();
            auto sol = solve(A, b);
            if (sol) {
                apply(m, *sol);
                continue;
            }
            std::vector<Vector> cols;
            for (int c = 0; c < A.cols(); ++c) {
                Vector v(dim3);
                for (int r = 0; r < dim3; ++r) v[static_cast<size_t>(r)] = A.at(r, c);
                cols.push_back(std::move(v));
            }
            Subspace span = Subspace::from_vectors(dim3, cols);
            Vector rest = span.reduce(b);
            Vector covered = b;
            for (int r = 0; r < dim3; ++r)
                covered[static_cast<size_t>(r)] -= rest[static_cast<size_t>(r)];
            sol = solve(A, covered);
            if (!sol) throw std::logic_error("deformation span reduction is inconsistent");
            apply(m, *sol);
        }
        fam.order = deg;
    }
    fam.closed = residual_in_ideal(fam);
}

Coderivation evaluate_at(const DeformationFamily& fam, const std::vector<Scalar>& values) {
    if (static_cast<int>(values.size()) != fam.params())
        throw std::invalid_argument("wrong number of parameter values");
    for (const auto& r : fam.relations)
        if (!r.evaluate(values).is_zero())
            throw std::invalid_argument("relation " + r.to_string() + " is violated");
    Coderivation out = fam.base;
    for (size_t i = 0; i < fam.directions.size(); ++i)
        out += fam.directions[i].scaled(values[i]);
    for (const auto& [m, f] : fam.corrections)
        out += f.scaled(ParamPolynomial::monomial(m, Scalar(1)).evaluate(values));
    return out;
}

JumpReport detect_jumps(const DeformationFamily& fam, const std::vector<Branch>& plan) {
    JumpReport rep;
    rep.source = identify_in_catalog(fam.base);
    for (const auto& br : plan) {
        if (br.samples.size() < 3)
            throw std::invalid_argument("branch " + br.label + " needs at least 3 samples");
        if (static_cast<int>(br.param_map.size()) != fam.params())
            throw std::invalid_argument("branch " + br.label + " has the wrong parameter count");
        int target = -2;
        bool consistent = true;
        for (const auto& u : br.samples) {
            std::vector<Scalar> vals;
            vals.reserve(br.param_map.size());
            for (const auto& p : br.param_map) vals.push_back(p.evaluate(u));
            Coderivation dt = evaluate_at(fam, vals);
            if (!is_codifferential(dt)) {
                consistent = false;
                break;
            }
            int id = identify_in_catalog(dt);
            if (id <= 0 || (target != -2 && target != id)) {
                consistent = false;
                break;
            }
            target = id;
        }
        if (!consistent)
            rep.unidentified.push_back(br.label);
        else if (target != rep.source)
            rep.targets.insert(target);
    }
    return rep;
}

std::vector<Coderivation> deformation_frame(int catalog_index) {
    switch (catalog_index) {
        case 2:
            return {cod({{2, {2, 2}, 1}})};
        case 6:
            return {cod({{2, {1, 1}, 1}})};
        case 8:
            return {cod({{3, {1, 1}, -1}, {2, {2, 2}, 1}})};
        case 9:
            return {cod({{1, {1, 2}, -1}, {1, {2, 1}, 1}, {2, {2, 2}, 1}})};
        case 20:
            return {cod({{3, {2, 2}, 1}})};
        case 21:
            return {cod({{1, {2, 1}, 1}}), cod({{2, {2, 2}, 1}})};
        case 22:
            return {cod({{2, {2, 2}, 1}}), cod({{1, {1, 2}, 1}})};
        case 23:
            return {cod({{3, {1, 1}, 1}}), cod({{2, {2, 2}, 1}})};
        case 24:
            return {cod({{2, {2, 2}, 1}}), cod({{1, {1, 2}, 1}}), cod({{2, {1, 1}, 1}})};
        case 25:
            return {cod({{2, {2, 2}, 1}}), cod({{1, {2, 1}, 1}}), cod({{1, {1, 2}, 1}}),
                    cod({{2, {1, 1}, 1}})};
        case 26:
            return {cod({{3, {3, 3}, 1}}),
                    cod({{3, {1, 1}, 1}, {1, {3, 1}, 1}, {1, {1, 3}, -1}})};
        case 27:
            return {cod({{2, {3, 3}, 1}}),
                    cod({{1, {1, 2}, -1}, {1, {2, 1}, 1}, {2, {2, 2}, 1}}),
                    cod({{2, {2, 3}, 1}, {2, {3, 2}, 1}, {1, {3, 1}, 1}, {1, {1, 3}, -1}}),
                    cod({{3, {3, 3}, 1}})};
        case 28:
            // The third direction needs the psi_3 completion to be a cocycle;
            // psi_2^{23} + psi_2^{32} alone is cohomologous to psi_3^{33}, so
            // the completed cochain still represents the intended class.
            return {cod({{2, {1, 1}, 1}}), cod({{3, {3, 3}, 1}}),
                    cod({{2, {2, 2}, 1},
                         {2, {2, 3}, 1},
                         {2, {3, 2}, 1},
                         {3, {2, 3}, 1},
                         {3, {3, 2}, 1}}),
                    cod({{1, {3, 1}, 1}}), cod({{1, {1, 3}, 1}})};
        default:
            return {};
    }
}

CorrectionMap deformation_corrections(int catalog_index) {
    CorrectionMap out;
    switch (catalog_index) {
        case 24:
            out.emplace(mono({1, 0, 1}), cod({{3, {1, 1}, -1}}));
            out.emplace(mono({0, 1, 1}), cod({{3, {1, 1}, -1}}));
            out.emplace(mono({1, 1, 0}), cod({{3, {2, 2}, 1}}));
            out.emplace(mono({0, 2, 0}), cod({{3, {2, 2}, 1}}));
            break;
        case 26: {
            Coderivation y = cod({{1, {1, 2}, -1},
                                  {1, {2, 1}, 1},
                                  {2, {2, 2}, 1},
                                  {3, {2, 3}, 1},
                                  {3, {3, 2}, 1}});
            out.emplace(mono({0, 2}), y);
            out.emplace(mono({1, 1}), -y);
            break;
        }
        case 28:
            out.emplace(mono({1, 0, 0, 0, 1}), cod({{3, {1, 1}, -1}}));
            out.emplace(mono({0, 1, 0, 0, 1}), cod({{1, {1, 2}, -1}}));
            out.emplace(mono({0, 0, 0, 0, 2}), cod({{1, {1, 2}, -1}}));
            out.emplace(mono({0, 0, 0, 2, 0}), cod({{1, {2, 1}, 1}}));
            out.emplace(mono({0, 1, 0, 1, 0}), cod({{1, {2, 1}, -1}}));
            break;
        default:
            break;
    }
    return out;
}

namespace {

Branch br(std::string label, std::vector<ParamPolynomial> pm,
          std::vector<std::vector<int>> samples) {
    Branch b;
    b.label = std::move(label);
    b.param_map = std::move(pm);
    for (const auto& s : samples) {
        std::vector<Scalar> v;
        v.reserve(s.size());
        for (int x : s) v.emplace_back(x);
        b.samples.push_back(std::move(v));
    }
    return b;
}

Branch brq(std::string label, std::vector<ParamPolynomial> pm,
           std::vector<std::vector<Scalar>> samples) {
    Branch b;
    b.label = std::move(label);
    b.param_map = std::move(pm);
    b.samples = std::move(samples);
    return b;
}

const ParamPolynomial z{};  // the zero polynomial

}  // namespace

std::vector<Branch> branch_plan(int catalog_index) {
    ParamPolynomial u0 = pv(0), u1 = pv(1), u2 = pv(2);
    ParamPolynomial two{Scalar(2)};
    switch (catalog_index) {
        case 2:
            return {br("line", {u0}, {{1}, {2}, {3}})};
        case 6:
        case 8:
        case 9:
        case 20:
            // The witness search works over the Gaussian rationals, so the
            // diagonal part of a witness may need square roots of the
            // parameter; perfect squares keep every sample identifiable.
            return {br("line", {u0}, {{1}, {4}, {9}})};
        case 21:
            return {br("t1=0", {z, u0}, {{1}, {2}, {3}}),
                    br("t1=t2", {u0, u0}, {{1}, {2}, {3}})};
        case 22:
            return {br("t2=0", {u0, z}, {{1}, {2}, {3}}),
                    br("t1=-t2", {-u0, u0}, {{1}, {2}, {3}})};
        case 23:
            return {br("generic", {u0, u1}, {{1, 1}, {1, 3}, {4, 2}}),
                    br("t2=0", {u0, z}, {{1}, {4}, {9}}),
                    br("t1=0", {z, u0}, {{1}, {2}, {3}})};
        case 24:
            return {br("generic", {u0, z, u1}, {{1, 1}, {1, 4}, {4, 1}}),
                    br("t3=0", {u0, z, z}, {{1}, {2}, {3}}),
                    br("t1=0", {z, z, u0}, {{1}, {2}, {3}}),
                    br("t2=-t1", {u0, -u0, z}, {{1}, {2}, {3}})};
        case 25:
            return {br("line t1", {u0, z, z, z}, {{1}, {2}, {3}}),
                    br("line t1=t2", {u0, u0, z, z}, {{1}, {2}, {3}}),
                    br("line t1=-t3", {-u0, z, u0, z}, {{1}, {2}, {3}}),
                    br("plane generic", {u0, u0, -u0, u1}, {{1, 1}, {1, 4}, {4, 1}}),
                    br("plane t4=0", {u0, u0, -u0, z}, {{1}, {2}, {3}}),
                    br("plane t1=0", {z, z, z, u0}, {{1}, {2}, {3}})};
        case 26:
            return {br("generic", {u0, u1}, {{3, 1}, {-3, -1}, {4, -2}}),
                    br("t1=t2", {u0, u0}, {{1}, {2}, {3}}),
                    br("t1=2t2", {two * u0, u0}, {{1}, {2}, {3}}),
                    br("t2=0", {u0, z}, {{1}, {2}, {3}})};
        case 27:
            return {br("generic", {u1 * (u1 - u2), u0 * u0, u0 * u1, u0 * u2},
                       {{1, 1, 2}, {1, 2, 3}, {2, 1, 3}}),
                    br("t4=0", {u1 * u1, u0 * u0, u0 * u1, z}, {{1, 1}, {2, 1}, {1, 2}}),
                    br("t2=t3=0", {u0, z, z, u1}, {{1, 1}, {2, 1}, {1, 2}}),
                    br("t1 axis", {u0, z, z, z}, {{1}, {4}, {9}}),
                    br("t3=t4", {u0, z, u1, u1}, {{1, 1}, {2, 1}, {1, 2}})};
        case 28: {
            // The components with t5 involved carry the constraint
            //   t3 * (1 - t2 - t5) = t5 * (t2 + t5),
            // so t3 is supplied as an extra sample coordinate (u2 below) with
            // rational values satisfying the constraint; the analogous t5 = 0
            // component uses t3 * (1 + t4 - t2) = t4 * (t4 - t2). The branch
            // with t4 and t5 both nonzero and t4 != -t5 additionally satisfies
            //   t4 * (t2 + t5 - 1) = (t2 - 1) * (t2 + t5).
            auto q = [](long n, long d) { return Scalar::rational(n, d); };
            // Sample points below were chosen so the isomorphism witness
            // exists over the Gaussian rationals; at many points of the same
            // stratum the diagonal part of a witness needs irrational roots.
            return {br("s1 generic", {z, u0, u1, z, z}, {{-1, -6}, {3, 2}, {4, 4}}),
                    br("s1 special curve", {z, u0, u1, z, z}, {{-3, -1}, {-3, -9}, {0, -4}}),
                    br("s1 t3=0", {z, u0, z, z, z}, {{1}, {2}, {3}}),
                    brq("s2 generic", {z, u0, u2, z, u1},
                        {{Scalar(0), Scalar(-1), q(1, 2)},
                         {Scalar(2), Scalar(1), q(-3, 2)},
                         {Scalar(-1), Scalar(3), Scalar(-6)}}),
                    brq("s2 special curve", {z, u0, u2, z, u1},
                        {{Scalar(-3), Scalar(2), Scalar(-1)},
                         {Scalar(0), Scalar(2), Scalar(-4)},
                         {Scalar(-3), Scalar(6), Scalar(-9)}}),
                    br("s2 t5=-t2", {z, u0, z, z, -u0}, {{1}, {2}, {3}}),
                    brq("s3 generic", {z, u0, u2, u1, z},
                        {{Scalar(0), Scalar(1), q(1, 2)},
                         {Scalar(2), Scalar(-1), q(-3, 2)},
                         {Scalar(-1), Scalar(-3), Scalar(-6)}}),
                    brq("s3 special curve", {z, u0, u2, u1, z},
                        {{Scalar(-3), Scalar(-2), Scalar(-1)},
                         {Scalar(0), Scalar(-2), Scalar(-4)},
                         {Scalar(-3), Scalar(-6), Scalar(-9)}}),
                    br("s3 t4=t2", {z, u0, z, u0, z}, {{1}, {2}, {3}}),
                    brq("s4 generic", {z, u0, u2, -u1, u1},
                        {{Scalar(0), Scalar(-1), q(1, 2)},
                         {Scalar(2), Scalar(1), q(-3, 2)},
                         {Scalar(-2), Scalar(1), q(-1, 2)}}),
                    brq("s4 special curve", {z, u0, u2, -u1, u1},
                        {{Scalar(-3), Scalar(2), Scalar(-1)},
                         {Scalar(0), Scalar(2), Scalar(-4)},
                         {Scalar(-3), Scalar(6), Scalar(-9)}}),
                    br("s4 t5=-t2", {z, u0, z, u0, -u0}, {{1}, {2}, {3}}),
                    brq("s5 generic", {z, u0, u2, pv(3), u1},
                        {{Scalar(2), Scalar(1), q(-3, 2), q(3, 2)},
                         {Scalar(0), Scalar(-1), q(1, 2), q(-1, 2)},
                         {Scalar(-1), Scalar(3), Scalar(-6), Scalar(-4)}}),
                    brq("s6 generic", {pv(3), u0, u2, -u1, u1},
                        {{Scalar(-1), Scalar(4), Scalar(-6), Scalar(1)},
                         {Scalar(-1), Scalar(4), Scalar(-6), Scalar(4)},
                         {Scalar(-1), Scalar(4), Scalar(-6), Scalar(9)}}),
                    brq("s6 t5=-t2", {u1, u0, z, u0, -u0},
                        {{Scalar(-1), Scalar(1)},
                         {Scalar(2), Scalar(1)},
                         {Scalar(-1), Scalar(4)}}),
                    brq("s6 special curve", {pv(3), u0, u2, -u1, u1},
                        {{Scalar(-3), Scalar(2), Scalar(-1), Scalar(1)},
                         {Scalar(0), Scalar(2), Scalar(-4), Scalar(1)},
                         {Scalar(-3), Scalar(2), Scalar(-1), Scalar(4)}}),
                    br("s6 t4=t5=0", {u0, u1, z, z, z}, {{1, 1}, {2, 1}, {1, 2}}),
                    brq("s6 t2=t5=0", {u0, z, z, z, z},
                        {{Scalar(1)}, {Scalar(4)}, {Scalar(9)}})};
        }
        default:
            return {};
    }
}

std::vector<int> deformable_entries() {
    return {2, 6, 8, 9, 20, 21, 22, 23, 24, 25, 26, 27, 28};
}

DeformationFamily reference_family(int catalog_index, int order) {
    std::vector<Coderivation> frame = deformation_frame(catalog_index);
    if (frame.empty())
        throw std::invalid_argument("catalog entry has no reference deformation frame");
    DeformationFamily fam = infinitesimal_universal(catalog_get(catalog_index).d, frame);
    fam.corrections = deformation_corrections(catalog_index);
    extend_order(fam, order);
    return fam;
}

JumpGraph jump_graph() {
    JumpGraph g;
    for (int k = 1; k <= 28; ++k) g.direct[k] = {};
    for (int k : deformable_entries()) {
        DeformationFamily fam = reference_family(k);
        JumpReport rep = detect_jumps(fam, branch_plan(k));
        if (!rep.unidentified.empty())
            throw std::runtime_error("unidentified deformation branch of d" + std::to_string(k) +
                                     ": " + rep.unidentified.front());
        if (rep.source != k)
            throw std::logic_error("reference family base identifies as the wrong entry");
        g.direct[k] = rep.targets;
    }
    g.closure = g.direct;
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto& [k, outs] : g.closure) {
            std::set<int> add;
            for (int t : outs)
                for (int t2 : g.closure[t])
                    if (!outs.count(t2)) add.insert(t2);
            if (!add.empty()) {
                outs.insert(add.begin(), add.end());
                grew = true;
            }
        }
    }
    for (const auto& [k, outs] : g.closure)
        if (outs.count(k)) throw std::logic_error("jump graph has a cycle through d" + std::to_string(k));
    return g;
}

std::string jump_graph_dot(const JumpGraph& g) {
    std::string out = "digraph jumps {\n";
    for (int k = 1; k <= 28; ++k) out += "  d" + std::to_string(k) + ";\n";
    for (const auto& [k, outs] : g.direct)
        for (int t : outs)
            out += "  d" + std::to_string(k) + " -> d" + std::to_string(t) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace coda
