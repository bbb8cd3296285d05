#pragma once

#include "foxforge/alexander.hpp"
#include "foxforge/group_ring.hpp"
#include "foxforge/laurent.hpp"
#include "foxforge/multipoly.hpp"
#include "foxforge/presentation.hpp"

#include <json.hpp>

#include <string>

namespace foxforge {

// Coefficients are serialized as decimal strings so arbitrary-precision
// values survive the round trip exactly.

inline nlohmann::json to_json(const LaurentPoly& p) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [e, c] : p.coeffs())
        j[std::to_string(e)] = c.str();
    return j;
}

inline LaurentPoly laurent_from_json(const nlohmann::json& j) {
    LaurentPoly p;
    for (auto it = j.begin(); it != j.end(); ++it)
        p = p + LaurentPoly::monomial(std::stoll(it.key()), Int(it.value().get<std::string>()));
    return p;
}

inline std::string rat_to_string(const Rat& r) {
    if (boost::multiprecision::denominator(r) == 1)
        return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

inline nlohmann::json to_json(const MultiPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::json term;
        term["exponents"] = e;
        term["coefficient"] = rat_to_string(c);
        terms.push_back(term);
    }
    nlohmann::json j;
    j["nvars"] = p.nvars();
    j["terms"] = terms;
    return j;
}

inline MultiPoly multipoly_from_json(const nlohmann::json& j) {
    MultiPoly p = MultiPoly::zero(j.at("nvars").get<int>());
    for (const auto& term : j.at("terms")) {
        std::vector<int> e = term.at("exponents").get<std::vector<int>>();
        std::string c = term.at("coefficient").get<std::string>();
        p = p + MultiPoly::monomial(p.nvars(), e, Rat(c));
    }
    return p;
}

inline nlohmann::json to_json(const Presentation& p) {
    nlohmann::json j;
    j["generators"] = p.alphabet()->names();
    nlohmann::json rels = nlohmann::json::array();
    for (const Word& r : p.relators())
        rels.push_back(r.str());
    j["relators"] = rels;
    return j;
}

inline nlohmann::json to_json(const LaurentMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols; ++j)
            row.push_back(to_json(m.entries[i][j]));
        rows.push_back(row);
    }
    return rows;
}

inline nlohmann::json to_json(const AlexanderResult& r, const Presentation& p) {
    nlohmann::json j = to_json(p);
    j["matrix"] = to_json(r.matrix);
    j["minor_size"] = r.minor_size;
    j["polynomial"] = to_json(r.polynomial);
    j["polynomial_text"] = r.polynomial.str();
    j["normalized"] = true;
    return j;
}

} // namespace foxforge
