#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coda/coderivation.hpp"
#include "coda/linalg.hpp"
#include "coda/polynomial.hpp"

namespace coda {

/// Splitting V = M (+) W with algebra structures mu on M and delta on W. The
/// full structure on V decomposes as d = delta + mu + lambda + psi, where
/// lambda has one M source and one W source and psi has two W sources, both
/// with target in M.
struct ExtensionSetup {
    GradedSpace space = one_two_space();
    std::vector<int> m_letters;
    std::vector<int> w_letters;
    Coderivation delta{one_two_space(), Parity::odd};
    Coderivation mu{one_two_space(), Parity::odd};

    bool in_m(int letter) const;
    bool in_w(int letter) const;
    /// Index of letter inside m_letters / w_letters, or -1.
    int m_pos(int letter) const;
    int w_pos(int letter) const;

    /// Checks the partition, that delta and mu are supported on W and M alone,
    /// and that both square to zero. Throws invalid_argument on violation.
    void validate() const;
};

/// Named setups used by the enumeration drivers and the CLI:
///   s4-mu1 / s4-mu0 : W = <v1,v3> simple, M = <v2>, mu in {psi_2^{22}, 0}
///   s5              : W = <v2,v3> = C^2, M = <v1>, mu = 0
///   s6-mu1 / s6-mu0 : M = <v1,v2>, W = <v3> simple, mu in {psi_2^{11}, 0}
///   s6d0-mu1/-mu0   : M = <v1,v2>, W = <v3> trivial (delta = 0)
///   s7-mu1 / s7-mu0 : M = <v2,v3>, W = <v1> trivial, mu in {psi_2^{33}, 0}
ExtensionSetup extension_case(const std::string& name);

/// W = C^n (all odd), M one-dimensional of the requested parity, mu = 0.
/// Used for the stable-count checks.
ExtensionSetup stable_case(int n, Parity m_parity);

/// Bidegree (k,l) of a single cochain term: target in M, exactly k sources in
/// M and l in W. nullopt when the target lies in W.
std::optional<std::pair<int, int>> term_bidegree(const ExtensionSetup& s, const TermKey& key);

/// Ordered basis of the cochains of bidegree (k,l), optionally restricted to
/// one parity.
std::vector<Coderivation> bidegree_basis(const ExtensionSetup& s, int k, int l,
                                         std::optional<Parity> parity = std::nullopt);

/// The three components of [d,d] = 0 for d = delta + mu + lambda + psi:
/// the Maurer-Cartan part, the compatibility part, and the cocycle part.
template <class R>
struct McResidualsT {
    CoderivationT<R> mc, compat, cocycle;
    bool all_zero() const { return mc.is_zero() && compat.is_zero() && cocycle.is_zero(); }
};
using McResiduals = McResidualsT<Scalar>;
using PolyMcResiduals = McResidualsT<ParamPolynomial>;

McResiduals mc_residual(const ExtensionSetup& s, const Coderivation& lambda,
                        const Coderivation& psi);
PolyMcResiduals mc_residual(const ExtensionSetup& s, const CoderivationT<ParamPolynomial>& lambda,
                            const CoderivationT<ParamPolynomial>& psi);

/// lambda written as one pair of M x M matrices per W letter: the entry
/// L_k[i][j] multiplies the term with source word (w(k), m(j)) and target
/// m(i); R_k[i][j] the term with source word (m(j), w(k)).
struct LambdaMatrices {
    std::vector<ExactMatrix> L, R;
};

LambdaMatrices lambda_matrix_form(const ExtensionSetup& s, const Coderivation& lambda);
Coderivation lambda_from_matrices(const ExtensionSetup& s, const LambdaMatrices& lm);

/// Reconstruction of (1/2)[lambda,lambda] from matrix products, valid when
/// every W letter is odd and lambda is odd (so the matrices are even maps).
Coderivation half_bracket_from_matrices(const ExtensionSetup& s, const LambdaMatrices& lm);

struct ExtensionClass {
    Coderivation d;
    LambdaMatrices lm;
};

/// All equivalence classes of lambda for a semisimple delta (either C^n on an
/// all-odd W, or the two-dimensional simple algebra) and nilpotent mu, each
/// returned as the codifferential delta + mu + lambda. Diagonal eigenvalue
/// templates are filtered by the exact Maurer-Cartan and compatibility
/// residuals and deduplicated under permutation of the W letters.
std::vector<ExtensionClass> enumerate_semisimple_extensions(const ExtensionSetup& s);

/// Proof that every solution of the Maurer-Cartan plus compatibility system
/// is a coboundary shift [mu, beta] of lambda = 0, so the restricted class of
/// lambda vanishes. The Maurer-Cartan residual is taken modulo the [mu, psi]
/// freedom, and a power of every transverse lambda coordinate is exhibited
/// inside the residual ideal (a Nullstellensatz certificate).
bool lambda_forced_zero(const ExtensionSetup& s);

/// Orbit representatives of the tau classes (odd psi-space cocycles modulo
/// the stabilizer group of (delta, mu)), returned as full codifferentials
/// delta + mu + lambda + tau, the tau = 0 representative last. The group
/// action is evaluated on exactly verified stabilizer samples; each orbit is
/// collapsed along scalings only after two distinct nonzero scaling factors
/// have been exhibited.
std::vector<Coderivation> classify_tau(const ExtensionSetup& s, const Coderivation& lambda);

/// End-to-end driver for a named case. "s4" runs both of its mu variants;
/// the semisimple cases run the eigenvalue enumeration; the trivial-delta
/// cases prove lambda = 0 and classify tau.
struct ExtensionCaseReport {
    std::string name;
    std::vector<Coderivation> classes;
};
ExtensionCaseReport run_extension_case(const std::string& name);

}  // namespace coda
