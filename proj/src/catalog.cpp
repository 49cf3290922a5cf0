#include "coda/catalog.hpp"

#include <stdexcept>

namespace coda {

namespace {

struct Term {
    int target;
    int s1, s2;
    int coeff;
};

Coderivation build(std::initializer_list<Term> terms) {
    Coderivation d(one_two_space(), Parity::odd);
    for (const Term& t : terms) d.add_term(t.target, {t.s1, t.s2}, Scalar(t.coeff));
    return d;
}

std::vector<CatalogEntry> make_catalog() {
    std::vector<CatalogEntry> v(28);

    auto set = [&](int k, Coderivation d, std::array<int, 5> h) {
        CatalogEntry& e = v[k - 1];
        e.index = k;
        e.name = "d" + std::to_string(k);
        e.d = std::move(d);
        e.expected_h = h;
        e.opposite_partner = k;
    };

    set(1, build({{1, 1, 3, 1}, {1, 3, 1, -1}, {3, 1, 1, 1}, {2, 2, 2, 1}, {3, 3, 3, -1}}),
        {2, 0, 0, 0, 0});
    set(2, build({{1, 1, 3, 1}, {1, 3, 1, -1}, {3, 1, 1, 1}, {3, 3, 3, -1}}), {2, 1, 1, 1, 1});
    set(3, build({{2, 2, 2, 1}, {3, 3, 3, 1}, {1, 1, 2, -1}}), {1, 0, 0, 0, 0});
    set(4, build({{2, 2, 2, 1}, {3, 3, 3, 1}, {1, 2, 1, 1}}), {1, 0, 0, 0, 0});
    set(5, build({{2, 2, 2, 1}, {3, 3, 3, 1}, {1, 2, 1, 1}, {1, 1, 3, -1}}), {1, 0, 0, 0, 0});
    set(6, build({{2, 2, 2, 1}, {3, 3, 3, 1}, {1, 2, 1, 1}, {1, 1, 2, -1}}), {3, 2, 2, 2, 2});
    set(7, build({{2, 2, 2, 1}, {3, 3, 3, 1}}), {3, 1, 1, 1, 1});
    set(8, build({{3, 3, 3, 1}, {2, 1, 1, 1}, {1, 3, 1, 1}, {1, 1, 3, -1}, {2, 3, 2, 1}, {2, 2, 3, 1}}),
        {2, 1, 1, 1, 1});
    set(9, build({{3, 3, 3, 1}, {2, 1, 1, 1}}), {2, 1, 2, 2, 1});
    set(10, build({{3, 3, 3, 1}, {1, 1, 3, -1}, {2, 2, 3, 1}}), {0, 3, 0, 0, 0});
    set(11, build({{3, 3, 3, 1}, {1, 3, 1, 1}, {2, 3, 2, 1}}), {0, 3, 0, 0, 0});
    set(12, build({{3, 3, 3, 1}, {1, 3, 1, 1}, {2, 2, 3, 1}}), {0, 1, 0, 1, 0});
    set(13, build({{3, 3, 3, 1}, {1, 1, 3, -1}, {2, 3, 2, 1}}), {0, 1, 0, 1, 0});
    set(14, build({{3, 3, 3, 1}, {1, 3, 1, 1}, {1, 1, 3, -1}, {2, 2, 3, 1}}), {1, 1, 1, 1, 1});
    set(15, build({{3, 3, 3, 1}, {1, 3, 1, 1}, {1, 1, 3, -1}, {2, 3, 2, 1}}), {1, 1, 1, 1, 1});
    set(16, build({{3, 3, 3, 1}, {2, 2, 3, 1}}), {1, 1, 2, 2, 2});
    set(17, build({{3, 3, 3, 1}, {2, 3, 2, 1}}), {1, 1, 2, 2, 2});
    set(18, build({{3, 3, 3, 1}, {1, 1, 3, -1}, {2, 2, 3, 1}, {2, 3, 2, 1}}), {1, 1, 1, 1, 1});
    set(19, build({{3, 3, 3, 1}, {1, 3, 1, 1}, {2, 2, 3, 1}, {2, 3, 2, 1}}), {1, 1, 1, 1, 1});
    set(20, build({{3, 3, 3, 1}, {2, 2, 3, 1}, {2, 3, 2, 1}}), {3, 2, 2, 2, 2});
    set(21, build({{3, 3, 3, 1}, {1, 1, 3, -1}}), {1, 1, 2, 2, 2});
    set(22, build({{3, 3, 3, 1}, {1, 3, 1, 1}}), {1, 1, 2, 2, 2});
    set(23, build({{3, 3, 3, 1}, {1, 1, 3, -1}, {1, 3, 1, 1}}), {3, 3, 3, 3, 3});
    set(24, build({{3, 3, 3, 1}, {1, 1, 3, -1}, {1, 3, 1, 1}, {2, 2, 3, 1}, {2, 3, 2, 1}}),
        {3, 4, 6, 12, 24});
    set(25, build({{3, 3, 3, 1}}), {3, 4, 8, 16, 32});
    set(26, build({{2, 1, 1, 1}, {2, 3, 3, 1}}), {2, 2, 3, 5, 6});
    set(27, build({{2, 1, 1, 1}}), {3, 4, 9, 18, 32});
    set(28, build({{2, 3, 3, 1}}), {3, 5, 9, 17, 33});

    auto split = [&](int k, int degree, int even, int odd) {
        v[k - 1].expected_splits[degree] = GradedDim{even, odd};
    };
    split(1, 0, 0, 2);
    split(7, 2, 1, 0);
    split(9, 2, 1, 1);
    split(16, 2, 2, 0);
    split(17, 2, 2, 0);
    split(24, 2, 3, 3);
    split(25, 2, 4, 4);
    split(25, 3, 8, 8);
    split(27, 2, 5, 4);
    split(27, 3, 6, 11);
    split(28, 2, 5, 4);
    split(28, 3, 9, 8);

    for (int k : {1, 6, 8, 24}) v[k - 1].unital = true;
    for (int k : {6, 7, 20, 23, 24, 25, 28}) v[k - 1].commutative = true;
    for (int k : {26, 27, 28}) v[k - 1].nilpotent = true;

    auto ctr = [&](int k, int even, int odd) { v[k - 1].expected_center = GradedDim{even, odd}; };
    for (int k : {1, 2, 8, 9, 26, 27}) ctr(k, 0, 2);
    for (int k : {3, 4, 5, 21, 22}) ctr(k, 0, 1);
    for (int k : {16, 17}) ctr(k, 1, 0);
    ctr(20, 1, 2);

    auto pair = [&](int a, int b) {
        v[a - 1].opposite_partner = b;
        v[b - 1].opposite_partner = a;
    };
    pair(3, 4);
    pair(10, 11);
    pair(12, 13);
    pair(14, 15);
    pair(16, 17);
    pair(18, 19);
    pair(21, 22);

    auto jumps = [&](int k, std::vector<int> to) { v[k - 1].jump_targets = std::move(to); };
    jumps(2, {1});
    jumps(6, {1});
    jumps(8, {1});
    jumps(9, {1});
    jumps(20, {7});
    jumps(21, {3, 5});
    jumps(22, {4, 5});
    jumps(23, {1, 2, 7});
    jumps(24, {1, 5, 7, 8});
    jumps(25, {1, 3, 4, 6, 7, 9});
    jumps(26, {1, 2, 8, 9});
    jumps(27, {1, 2, 8, 9, 26});
    jumps(28, {1, 2, 3, 4, 5, 6, 7, 8, 9, 18, 19, 20, 21, 22, 23, 24, 25, 26});

    return v;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> c = make_catalog();
    return c;
}

const CatalogEntry& catalog_get(int k) {
    if (k < 1 || k > 28) throw std::out_of_range("catalog index must be 1..28");
    return catalog()[k - 1];
}

const CatalogEntry& catalog_get(const std::string& name) {
    if (name.size() < 2 || name[0] != 'd')
        throw std::invalid_argument("algebra name must look like dK");
    int k;
    try {
        k = std::stoi(name.substr(1));
    } catch (const std::exception&) {
        throw std::invalid_argument("algebra name must look like dK");
    }
    return catalog_get(k);
}

}  // namespace coda
