#include "coda/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace coda {

using nlohmann::json;

json scalar_to_json(const Scalar& s) {
    return json{{"re", Scalar::rat_to_string(s.re())}, {"im", Scalar::rat_to_string(s.im())}};
}

Scalar scalar_from_json(const json& j) {
    if (!j.is_object() || !j.contains("re") || !j.contains("im"))
        throw std::invalid_argument("coefficient must be an object with \"re\" and \"im\"");
    if (!j["re"].is_string() || !j["im"].is_string())
        throw std::invalid_argument("coefficient parts must be rational strings like \"p/q\"");
    return Scalar(Scalar::rat_from_string(j["re"].get<std::string>()),
                  Scalar::rat_from_string(j["im"].get<std::string>()));
}

json coderivation_to_json(const Coderivation& d) {
    json terms = json::array();
    for (const auto& [k, c] : d.terms())
        terms.push_back(json{{"target", k.target},
                             {"sources", k.sources},
                             {"coeff", scalar_to_json(c)}});
    return json{{"space", {{"even", d.space().even_dim}, {"odd", d.space().odd_dim}}},
                {"terms", std::move(terms)}};
}

Coderivation coderivation_from_json(const json& j) {
    if (!j.is_object() || !j.contains("space") || !j.contains("terms"))
        throw std::invalid_argument("codifferential JSON needs \"space\" and \"terms\"");
    const json& sp = j["space"];
    if (!sp.contains("even") || !sp.contains("odd") || !sp["even"].is_number_integer() ||
        !sp["odd"].is_number_integer())
        throw std::invalid_argument("\"space\" needs integer \"even\" and \"odd\" dimensions");
    GradedSpace space{sp["even"].get<int>(), sp["odd"].get<int>()};
    if (space.even_dim < 0 || space.odd_dim < 0 || space.dim() == 0)
        throw std::invalid_argument("space dimensions must be nonnegative and not both zero");

    // The parity is inferred from the first nonzero term; homogeneity of the
    // remaining terms is then enforced.
    std::optional<Coderivation> d;
    if (!j["terms"].is_array()) throw std::invalid_argument("\"terms\" must be an array");
    for (const json& t : j["terms"]) {
        if (!t.is_object() || !t.contains("target") || !t.contains("sources") ||
            !t.contains("coeff"))
            throw std::invalid_argument("term needs \"target\", \"sources\", \"coeff\"");
        if (!t["target"].is_number_integer() || !t["sources"].is_array())
            throw std::invalid_argument("term \"target\" must be an integer and \"sources\" an array");
        int target = t["target"].get<int>();
        MultiIndex sources;
        for (const json& s : t["sources"]) {
            if (!s.is_number_integer())
                throw std::invalid_argument("source indices must be integers");
            sources.push_back(s.get<int>());
        }
        if (target < 1 || target > space.dim())
            throw std::out_of_range("term target index out of range for the space");
        for (int s : sources)
            if (s < 1 || s > space.dim())
                throw std::out_of_range("term source index out of range for the space");
        Scalar c = scalar_from_json(t["coeff"]);
        if (c.is_zero()) continue;
        if (!d) d = Coderivation(space, parity_of(space, target, sources));
        try {
            d->add_term(target, sources, c);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("terms are not parity homogeneous");
        }
    }
    if (!d) return Coderivation(space, Parity::odd);
    return *d;
}

Coderivation load_coderivation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    return coderivation_from_json(j);
}

void save_coderivation(const std::string& path, const Coderivation& d) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << coderivation_to_json(d).dump(2) << "\n";
}

Errata load_errata(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    Errata e;
    e.raw = j;
    for (const json& rec : j.value("entries", json::array())) {
        std::string kind = rec.value("kind", "");
        int alg = rec.value("algebra", 0);
        if (kind == "h_total")
            e.h_total.insert({alg, rec.value("degree", -1)});
        else if (kind == "h_split")
            e.h_split.insert({alg, rec.value("degree", -1)});
        else if (kind == "flag")
            e.flags.insert({alg, rec.value("flag", "")});
    }
    return e;
}

}  // namespace coda
