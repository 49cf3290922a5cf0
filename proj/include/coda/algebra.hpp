#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coda/coderivation.hpp"
#include "coda/linalg.hpp"

namespace coda {

/// Dimensions of a graded subspace, reported in the W parity convention
/// (the A = PW parities are the flips).
struct GradedDim {
    int even = 0;
    int odd = 0;

    int total() const { return even + odd; }
    friend bool operator==(const GradedDim&, const GradedDim&) = default;
};

std::string to_string(const GradedDim& g);

/// The algebra A = PW presented by structure constants m(v_a, v_b). Basis
/// indices are the same 1-based indices as W, but v_i is even in A exactly
/// when it is odd in W.
struct Multiplication {
    GradedSpace w_space;
    // prod[a-1][b-1] = coefficient vector of m(v_a, v_b).
    std::vector<std::vector<Vector>> prod;

    explicit Multiplication(GradedSpace sp = one_two_space())
        : w_space(sp),
          prod(sp.dim(), std::vector<Vector>(sp.dim(), Vector(sp.dim()))) {}

    int dim() const { return w_space.dim(); }
    Parity parity_A(int i) const { return flip(w_space.parity(i)); }

    const Vector& basis_product(int a, int b) const { return prod[a - 1][b - 1]; }
    Vector basis_vector_of(int i) const;
    Vector multiply(const Vector& x, const Vector& y) const;
    bool is_associative() const;
};

/// m(a, b) = (-1)^{|a|_A} d(pi a, pi b): the decalage sign convention, pinned
/// by associativity <=> [d,d]=0 and by the catalog's unit/center facts.
Multiplication to_multiplication(const Coderivation& d);
Coderivation from_multiplication(const Multiplication& m);

struct GradedSubspace {
    Subspace sub;  // in basis coordinates of A
    GradedDim dims;
};

/// Graded center: {a : m(a,b) = (-1)^{|a||b|} m(b,a) for all b} (A parities).
GradedSubspace center(const Multiplication& m);

/// Two-sided unit, when one exists.
std::optional<Vector> unit(const Multiplication& m);

bool is_graded_commutative(const Multiplication& m);

/// True iff A^n = 0 for some n <= dim + 1.
bool is_nilpotent(const Multiplication& m);

GradedSubspace left_annihilator(const Multiplication& m);
GradedSubspace right_annihilator(const Multiplication& m);

/// Codifferential of the opposite algebra m^op(a,b) = (-1)^{|a||b|} m(b,a).
Coderivation opposite(const Coderivation& d);

/// Isomorphism-invariant summary used to separate the catalog entries.
struct Fingerprint {
    GradedDim h[4];  // h^0..h^3
    GradedDim center;
    bool unital = false;
    bool commutative = false;
    bool nilpotent = false;
    GradedDim lann;
    GradedDim rann;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

std::string to_string(const Fingerprint& f);

Fingerprint fingerprint(const Coderivation& d);

}  // namespace coda
