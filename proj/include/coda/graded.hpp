#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace coda {

/// Z_2 degree. Addition is mod 2.
enum class Parity : int { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
    return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) & 1);
}
inline int sign_of(Parity p) { return p == Parity::even ? 1 : -1; }
inline Parity flip(Parity p) { return p == Parity::even ? Parity::odd : Parity::even; }

/// Graded vector space with basis v_1..v_{even+odd}; v_i is even iff i <= even_dim.
struct GradedSpace {
    int even_dim = 0;
    int odd_dim = 0;

    int dim() const { return even_dim + odd_dim; }
    Parity parity(int i) const {
        if (i < 1 || i > dim()) throw std::out_of_range("basis index out of range");
        return i <= even_dim ? Parity::even : Parity::odd;
    }
    friend bool operator==(const GradedSpace&, const GradedSpace&) = default;
};

/// The default ambient space of the catalog: W = <v1 (even), v2, v3 (odd)>.
inline GradedSpace one_two_space() { return GradedSpace{1, 2}; }

/// Ordered tuple of basis indices (i_1, ..., i_n); the source word of a cochain.
using MultiIndex = std::vector<int>;

inline Parity word_parity(const GradedSpace& space, const MultiIndex& I) {
    Parity p = Parity::even;
    for (int i : I) p = p + space.parity(i);
    return p;
}

inline std::string multiindex_to_string(const MultiIndex& I) {
    std::string s;
    for (size_t k = 0; k < I.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(I[k]);
    }
    return s;
}

}  // namespace coda
