#include "coda/scalar.hpp"

#include <ostream>

namespace coda {

std::string Scalar::to_string() const {
    if (im_ == 0) return rat_to_string(re_);
    std::string im_part;
    if (im_ == 1)
        im_part = "i";
    else if (im_ == -1)
        im_part = "-i";
    else
        im_part = rat_to_string(im_) + "*i";
    if (re_ == 0) return im_part;
    std::string s = rat_to_string(re_);
    if (im_part[0] != '-') s += '+';
    return s + im_part;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace coda
