#include "coda/hochschild.hpp"

#include <stdexcept>

namespace coda {

namespace {
long int_pow(int b, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}
}  // namespace

int cochain_dim(const GradedSpace& space, int n) {
    if (n < 0) throw std::invalid_argument("cochain degree must be nonnegative");
    return static_cast<int>(int_pow(space.dim(), n)) * space.dim();
}

TermKey cochain_key(const GradedSpace& space, int n, int index) {
    const int m = space.dim();
    const long words = int_pow(m, n);
    if (index < 0 || index >= cochain_dim(space, n))
        throw std::out_of_range("cochain index out of range");
    TermKey k;
    k.target = static_cast<int>(index / words) + 1;
    long w = index % words;
    k.sources.assign(n, 1);
    for (int j = n - 1; j >= 0; --j) {
        k.sources[j] = static_cast<int>(w % m) + 1;
        w /= m;
    }
    return k;
}

int cochain_index(const GradedSpace& space, const TermKey& key) {
    const int m = space.dim();
    const int n = static_cast<int>(key.sources.size());
    long w = 0;
    for (int j = 0; j < n; ++j) w = w * m + (key.sources[j] - 1);
    return static_cast<int>((key.target - 1) * int_pow(m, n) + w);
}

Vector cochain_vector(const GradedSpace& space, int n, const Coderivation& f) {
    Vector v(cochain_dim(space, n));
    for (const auto& [k, c] : f.terms()) {
        if (static_cast<int>(k.sources.size()) != n)
            throw std::invalid_argument("cochain_vector: mixed or wrong arity");
        v[cochain_index(space, k)] = c;
    }
    return v;
}

Coderivation cochain_from_vector(const GradedSpace& space, int n, Parity parity,
                                 const Vector& v, const std::vector<int>* positions) {
    Coderivation f(space, parity);
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        int idx = positions ? (*positions)[i] : static_cast<int>(i);
        TermKey k = cochain_key(space, n, idx);
        f.add_term(k.target, k.sources, v[i]);
    }
    return f;
}

ExactMatrix coboundary_matrix(const Coderivation& d, int n) {
    if (!is_codifferential(d))
        throw std::invalid_argument("coboundary_matrix: not a codifferential");
    const GradedSpace& sp = d.space();
    ExactMatrix out(cochain_dim(sp, n + 1), cochain_dim(sp, n));
    for (int c = 0; c < out.cols(); ++c) {
        TermKey k = cochain_key(sp, n, c);
        Coderivation f(sp, parity_of(sp, k.target, k.sources));
        f.add_term(k.target, k.sources, Scalar(1));
        Coderivation df = bracket(d, f);
        for (const auto& [dk, dc] : df.terms()) out.at(cochain_index(sp, dk), c) = dc;
    }
    return out;
}

HochschildContext::HochschildContext(Coderivation d) : d_(std::move(d)) {
    if (!is_codifferential(d_))
        throw std::invalid_argument("HochschildContext: not a codifferential");
}

HochschildContext::Degree& HochschildContext::degree(int n) { return degrees_[n]; }

const std::vector<int>& HochschildContext::positions(int n, Parity p) {
    return block(n, p).positions;
}

HochschildContext::Block& HochschildContext::block(int n, Parity p) {
    Degree& deg = degree(n);
    Block& b = deg.block[static_cast<int>(p)];
    if (b.ready) return b;
    const GradedSpace& sp = d_.space();
    const int total = cochain_dim(sp, n);
    for (int i = 0; i < total; ++i) {
        TermKey k = cochain_key(sp, n, i);
        if (parity_of(sp, k.target, k.sources) == p) b.positions.push_back(i);
    }
    // Row index lookup for the flip-parity block of degree n+1.
    const int next_total = cochain_dim(sp, n + 1);
    std::vector<int> row_of(next_total, -1);
    int rows = 0;
    for (int i = 0; i < next_total; ++i) {
        TermKey k = cochain_key(sp, n + 1, i);
        if (parity_of(sp, k.target, k.sources) == flip(p)) row_of[i] = rows++;
    }
    b.mat = ExactMatrix(rows, static_cast<int>(b.positions.size()));
    for (size_t c = 0; c < b.positions.size(); ++c) {
        TermKey k = cochain_key(sp, n, b.positions[c]);
        Coderivation f(sp, p);
        f.add_term(k.target, k.sources, Scalar(1));
        Coderivation df = bracket(d_, f);
        for (const auto& [dk, dc] : df.terms()) {
            int r = row_of[cochain_index(sp, dk)];
            if (r < 0) throw std::logic_error("coboundary did not flip parity");
            b.mat.at(r, static_cast<int>(c)) = dc;
        }
    }
    b.rank = rank(b.mat);
    b.kernel_dim = b.mat.cols() - b.rank;
    b.ready = true;
    return b;
}

void HochschildContext::ensure_boundaries(int n, Parity p) {
    Degree& deg = degree(n);
    const int pi = static_cast<int>(p);
    if (deg.boundaries_ready[pi]) return;
    Block& here = block(n, p);  // defines positions/ambient
    Subspace sub(static_cast<int>(here.positions.size()));
    if (n > 0) {
        Block& prev = block(n - 1, flip(p));
        for (int c = 0; c < prev.mat.cols(); ++c) {
            Vector col(prev.mat.rows());
            for (int r = 0; r < prev.mat.rows(); ++r) col[r] = prev.mat.at(r, c);
            sub.insert(col);
        }
    }
    deg.boundaries[pi] = std::move(sub);
    deg.boundaries_ready[pi] = true;
}

void HochschildContext::ensure_reps(int n, Parity p) {
    Degree& deg = degree(n);
    const int pi = static_cast<int>(p);
    if (deg.reps_ready[pi]) return;
    Block& b = block(n, p);
    ensure_boundaries(n, p);
    const Subspace& bnd = deg.boundaries[pi];
    Subspace indep(static_cast<int>(b.positions.size()));
    Subspace kernel = nullspace(b.mat);
    for (const Vector& z : kernel.basis()) {
        Vector r = bnd.reduce(z);
        if (vector_is_zero(r)) continue;
        if (!indep.insert(r)) continue;
        deg.rep_coords[pi].push_back(r);
        deg.reps[pi].push_back(
            cochain_from_vector(d_.space(), n, p, r, &b.positions));
    }
    deg.reps_ready[pi] = true;
}

const std::vector<Coderivation>& HochschildContext::representatives(int n, Parity p) {
    ensure_reps(n, p);
    return degree(n).reps[static_cast<int>(p)];
}

std::pair<int, int> HochschildContext::graded_dims(int n) {
    std::pair<int, int> out;
    for (Parity p : {Parity::even, Parity::odd}) {
        Block& b = block(n, p);
        int boundary_rank = n > 0 ? block(n - 1, flip(p)).rank : 0;
        int h = b.kernel_dim - boundary_rank;
        (p == Parity::even ? out.first : out.second) = h;
    }
    return out;
}

CohomologyReport HochschildContext::cohomology(int n) {
    CohomologyReport rep;
    rep.degree = n;
    auto [e, o] = graded_dims(n);
    rep.even_dim = e;
    rep.odd_dim = o;
    for (Parity p : {Parity::even, Parity::odd})
        for (const Coderivation& r : representatives(n, p)) rep.representatives.push_back(r);
    return rep;
}

std::optional<Coderivation> HochschildContext::reduce(const Coderivation& f) {
    if (f.is_zero()) return f;
    auto ar = f.arity();
    if (!ar) throw std::invalid_argument("reduce: mixed arity");
    const int n = *ar;
    const Parity p = f.parity();
    Block& b = block(n, p);
    ensure_boundaries(n, p);
    Vector full = cochain_vector(d_.space(), n, f);
    Vector v(b.positions.size());
    for (size_t i = 0; i < b.positions.size(); ++i) v[i] = full[b.positions[i]];
    if (!vector_is_zero(b.mat.apply(v))) return std::nullopt;  // not a cocycle
    Vector r = degree(n).boundaries[static_cast<int>(p)].reduce(v);
    return cochain_from_vector(d_.space(), n, p, r, &b.positions);
}

HochschildContext::Decomposition HochschildContext::decompose(const Coderivation& f) {
    Decomposition out;
    out.preimage = Coderivation(d_.space(), flip(f.parity()));
    out.defect = Coderivation(d_.space(), f.parity());
    if (f.is_zero()) {
        out.is_cocycle = true;
        return out;
    }
    auto ar = f.arity();
    if (!ar) throw std::invalid_argument("decompose: mixed arity");
    const int n = *ar;
    const Parity p = f.parity();
    Block& b = block(n, p);
    ensure_boundaries(n, p);
    ensure_reps(n, p);
    Degree& deg = degree(n);
    const int pi = static_cast<int>(p);

    Vector full = cochain_vector(d_.space(), n, f);
    Vector v(b.positions.size());
    for (size_t i = 0; i < b.positions.size(); ++i) v[i] = full[b.positions[i]];
    Vector r = deg.boundaries[pi].reduce(v);

    // Split r into its span(reps) part and a defect.
    const auto& reps = deg.rep_coords[pi];
    Subspace rep_span = Subspace::from_vectors(static_cast<int>(b.positions.size()), reps);
    Vector defect = rep_span.reduce(r);
    Vector in_span(r.size());
    for (size_t i = 0; i < r.size(); ++i) in_span[i] = r[i] - defect[i];
    if (!reps.empty()) {
        ExactMatrix R(static_cast<int>(b.positions.size()), static_cast<int>(reps.size()));
        for (size_t j = 0; j < reps.size(); ++j)
            for (size_t i = 0; i < reps[j].size(); ++i)
                R.at(static_cast<int>(i), static_cast<int>(j)) = reps[j][i];
        auto c = solve(R, in_span);
        if (!c) throw std::logic_error("decompose: inconsistent representative solve");
        out.h_coords = *c;
    }
    out.defect = cochain_from_vector(d_.space(), n, p, defect, &b.positions);
    out.is_cocycle = vector_is_zero(defect) &&
                     vector_is_zero(b.mat.apply(v));

    // Boundary part: v - (in_span + defect) = D(x).
    Vector g(v.size());
    for (size_t i = 0; i < v.size(); ++i) g[i] = v[i] - r[i];
    if (n > 0 && !vector_is_zero(g)) {
        Block& prev = block(n - 1, flip(p));
        auto x = solve(prev.mat, g);
        if (!x) throw std::logic_error("decompose: boundary part not solvable");
        out.preimage =
            cochain_from_vector(d_.space(), n - 1, flip(p), *x, &prev.positions);
    }
    return out;
}

}  // namespace coda
