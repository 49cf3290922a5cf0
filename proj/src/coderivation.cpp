#include "coda/coderivation.hpp"

namespace coda {

std::string to_string(const Coderivation& c) {
    if (c.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, v] : c.terms()) {
        std::string coef = v.to_string();
        if (first) {
            if (coef == "1")
                coef.clear();
            else if (coef == "-1")
                coef = "-";
            else
                coef += "*";
        } else {
            if (coef == "1")
                coef = " + ";
            else if (coef == "-1")
                coef = " - ";
            else if (coef[0] == '-')
                coef = " - " + coef.substr(1) + "*";
            else
                coef = " + " + coef + "*";
        }
        s += coef;
        s += c.term_parity(k) == Parity::odd ? "psi" : "phi";
        s += std::to_string(k.target);
        s += '^';
        s += '(';
        s += multiindex_to_string(k.sources);
        s += ')';
        first = false;
    }
    return s;
}

}  // namespace coda
