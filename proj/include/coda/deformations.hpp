#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "coda/coderivation.hpp"
#include "coda/polynomial.hpp"

namespace coda {

/// A parameterized family d(t) = base + sum_i directions[i] t_i + corrections,
/// together with the obstruction data that cuts out its base variety. The
/// defining identity is
///   (1/2)[d(t), d(t)] = sum_j relations[j] * relation_reps[j],
/// where the relation_reps are fixed even degree-3 cocycles, so d(t) is an
/// exact codifferential at every parameter value where all relations vanish.
struct DeformationFamily {
    Coderivation base;
    std::vector<Coderivation> directions;  // odd degree-2 cocycles, independent in cohomology
    std::map<Monomial, Coderivation, ParamPolynomial::MonoLess> corrections;
    std::vector<ParamPolynomial> relations;
    std::vector<Coderivation> relation_reps;
    int order = 1;  // highest parameter degree resolved so far
    // Every coefficient of the residual lies in the relation ideal (it is
    // often identically zero), so the family squares to zero exactly at every
    // relation-satisfying parameter value.
    bool closed = false;

    int params() const { return static_cast<int>(directions.size()); }
    CoderivationT<ParamPolynomial> total() const;
    /// Defect of the defining identity; zero exactly when the family is closed.
    CoderivationT<ParamPolynomial> residual() const;
};

/// Order-1 family along the canonical basis of the odd part of the degree-2
/// cohomology of d.
DeformationFamily infinitesimal_universal(const Coderivation& d);

/// Order-1 family along a caller-chosen frame. Every frame entry must be an
/// odd degree-2 cocycle and the cohomology classes must form a basis of the
/// odd part of the degree-2 cohomology; throws otherwise.
DeformationFamily infinitesimal_universal(const Coderivation& d,
                                          const std::vector<Coderivation>& frame);

/// Extends the family one parameter degree at a time up to target_order. At
/// degree k the coefficient of each degree-k monomial in the residual is
/// written as (combination of relation_reps) + (coboundary): the first part
/// adds degree-k terms to the relations, the second is cancelled by a new
/// correction term. A coefficient whose cohomology class lies outside the
/// span of the current relation_reps starts a new relation; one that is not
/// even a cocycle is left in the residual, where the closure test requires
/// its coefficients to lie in the relation ideal (so it vanishes on the base
/// variety).
/// Supplied corrections of degree <= target_order are kept as given and only
/// adjusted when they fail to cancel the coboundary part on their own.
void extend_order(DeformationFamily& fam, int target_order);

/// Specializes the parameters to exact scalar values. Throws invalid_argument
/// naming the first violated relation. When the family is closed the result
/// is an exact codifferential.
Coderivation evaluate_at(const DeformationFamily& fam, const std::vector<Scalar>& values);

/// One solution branch of the relations: a polynomial parametrization of the
/// family parameters in auxiliary variables, with at least three sample
/// points that must identify the same catalog entry.
struct Branch {
    std::string label;
    std::vector<ParamPolynomial> param_map;       // one polynomial per family parameter
    std::vector<std::vector<Scalar>> samples;     // values of the auxiliary variables
};

struct JumpReport {
    int source = 0;                         // catalog index of the base
    std::set<int> targets;                  // catalog indices reached by a jump
    std::vector<std::string> unidentified;  // branches without a consistent verified match
};

/// Evaluates the family at every sample of every branch and identifies the
/// result in the catalog by fingerprint plus a verified isomorphism witness.
/// A branch yields an edge only when all of its samples identify the same
/// entry; disagreeing or unmatched branches are reported, never dropped.
/// Matches equal to the base itself are not edges.
JumpReport detect_jumps(const DeformationFamily& fam, const std::vector<Branch>& plan);

/// Reference deformation frame of a catalog entry (the directions its versal
/// family is written in), empty when the entry has none.
std::vector<Coderivation> deformation_frame(int catalog_index);
/// Known higher-order correction terms of the reference family.
std::map<Monomial, Coderivation, ParamPolynomial::MonoLess> deformation_corrections(
    int catalog_index);
/// Solution branches with sample plans for the reference family.
std::vector<Branch> branch_plan(int catalog_index);
/// Catalog indices that carry a reference frame, ascending.
std::vector<int> deformable_entries();

/// Reference family of one catalog entry: frame directions, known correction
/// terms, extended to the requested order.
DeformationFamily reference_family(int catalog_index, int order = 3);

struct JumpGraph {
    std::map<int, std::set<int>> direct;   // detected out-edges for every entry 1..28
    std::map<int, std::set<int>> closure;  // transitive closure of direct
};

/// Builds every reference family, runs its branch plan, and closes the edge
/// set transitively. Throws when any branch stays unidentified.
JumpGraph jump_graph();
std::string jump_graph_dot(const JumpGraph& g);

}  // namespace coda
