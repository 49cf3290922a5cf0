#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "coda/coderivation.hpp"
#include "coda/linalg.hpp"

namespace coda {

/// The ordered basis of C^n(W) = Hom(W^n, W): target-major, then the source
/// word in lexicographic order. Index 0 is (target 1, word (1,..,1)).
int cochain_dim(const GradedSpace& space, int n);
TermKey cochain_key(const GradedSpace& space, int n, int index);
int cochain_index(const GradedSpace& space, const TermKey& key);

/// Coordinates of an arity-n coderivation in the C^n basis.
Vector cochain_vector(const GradedSpace& space, int n, const Coderivation& f);
Coderivation cochain_from_vector(const GradedSpace& space, int n, Parity parity,
                                 const Vector& v, const std::vector<int>* positions = nullptr);

struct CohomologyReport {
    int degree = 0;
    int even_dim = 0;
    int odd_dim = 0;
    std::vector<Coderivation> representatives;  // even reps first, then odd

    int total() const { return even_dim + odd_dim; }
};

/// Matrix of D = [d, .] : C^n -> C^{n+1} in the documented bases.
ExactMatrix coboundary_matrix(const Coderivation& d, int n);

/// Cached cohomology data for one codifferential. The coboundary flips
/// parity, so everything is computed in per-parity blocks.
class HochschildContext {
public:
    explicit HochschildContext(Coderivation d);

    const Coderivation& differential() const { return d_; }

    CohomologyReport cohomology(int n);
    std::pair<int, int> graded_dims(int n);  // (even, odd)

    /// Representatives of H^n of one parity, canonically reduced mod B^n.
    const std::vector<Coderivation>& representatives(int n, Parity p);

    /// Canonical coset representative of a pure-degree cocycle f, or nullopt
    /// when f is not a cocycle.
    std::optional<Coderivation> reduce(const Coderivation& f);

    /// Splits a pure-degree cochain f as
    ///   f = sum_j h_coords[j] * rep_j + D(preimage) + defect,
    /// where rep_j are representatives(n, parity(f)). defect is zero exactly
    /// when f is a cocycle.
    struct Decomposition {
        std::vector<Scalar> h_coords;
        Coderivation preimage;
        Coderivation defect;
        bool is_cocycle = false;
    };
    Decomposition decompose(const Coderivation& f);

private:
    struct Block {
        std::vector<int> positions;  // C^n indices of this parity
        ExactMatrix mat;             // D restricted, rows = next-degree flip-parity block
        int kernel_dim = 0;
        int rank = 0;
        bool ready = false;
    };
    struct Degree {
        Block block[2];  // indexed by parity
        // Boundaries inside C^n of each parity, in block coordinates.
        Subspace boundaries[2] = {Subspace(0), Subspace(0)};
        bool boundaries_ready[2] = {false, false};
        std::vector<Coderivation> reps[2];
        std::vector<Vector> rep_coords[2];  // block coords, canonically reduced
        bool reps_ready[2] = {false, false};
    };

    Block& block(int n, Parity p);
    Degree& degree(int n);
    void ensure_boundaries(int n, Parity p);
    void ensure_reps(int n, Parity p);
    const std::vector<int>& positions(int n, Parity p);

    Coderivation d_;
    std::map<int, Degree> degrees_;
};

}  // namespace coda
