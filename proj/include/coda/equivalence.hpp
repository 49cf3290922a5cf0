#pragma once

#include <optional>
#include <random>
#include <vector>

#include "coda/coderivation.hpp"
#include "coda/linalg.hpp"

namespace coda {

/// Parity-preserving invertible linear map of the 1|2 space: a 1x1 block on
/// v1 and a 2x2 block on <v2, v3>.
class GradedAutomorphism {
public:
    GradedAutomorphism();  // identity
    static std::optional<GradedAutomorphism> from_matrix(const ExactMatrix& m);
    /// Build from the scalar on v1 and the 2x2 block (row-major a,b,c,d).
    static std::optional<GradedAutomorphism> from_blocks(const Scalar& s, const Scalar& a,
                                                         const Scalar& b, const Scalar& c,
                                                         const Scalar& d);

    const ExactMatrix& matrix() const { return m_; }
    const ExactMatrix& inverse_matrix() const { return inv_; }
    GradedAutomorphism inverse() const;
    GradedAutomorphism compose(const GradedAutomorphism& o) const;  // this after o

private:
    ExactMatrix m_, inv_;
};

/// Transport of a coderivation along g: (g d)(w) = g(d(g^{-1} w)) applied
/// termwise; a left group action, so transport(g h, d) =
/// transport(g, transport(h, d)). g is even, so no Koszul signs appear.
Coderivation transport(const GradedAutomorphism& g, const Coderivation& d);

bool verify(const GradedAutomorphism& g, const Coderivation& d1, const Coderivation& d2);

/// Witness search: fingerprint screen, then a deterministic sweep of
/// template automorphisms (permutation x shear x diagonal, with scalar
/// entries drawn from a small set extended by coefficient ratios of the
/// inputs). "nullopt" is a proof of non-equivalence only when the
/// fingerprints already differ; otherwise it just means "not found within
/// budget".
struct IsoResult {
    std::optional<GradedAutomorphism> witness;
    bool fingerprints_differ = false;
};
IsoResult find_isomorphism(const Coderivation& d1, const Coderivation& d2,
                           long budget = 200000);

/// Uniformly sampled invertible automorphism with small rational entries.
GradedAutomorphism random_automorphism(std::mt19937& rng);

/// Catalog index of d, established by a verified witness: 0 for the zero
/// coderivation, -1 when no verified match is found. Exact term equality is
/// tried first, then the fingerprint screen plus witness search.
int identify_in_catalog(const Coderivation& d);

}  // namespace coda
