#pragma once

#include "bernpoly/dependence.hpp"
#include "bernpoly/games.hpp"
#include "bernpoly/polytope.hpp"

#include <json.hpp>

#include <string>

namespace bernpoly {

// Pmf file format:
//   {"d": int, "p": "s/t", "order": "revlex", "values": ["num/den", x 2^d]}
// Rationals travel as canonical "num/den" strings; the parser rejects
// non-canonical or negative-denominator forms. "p" is the common margin and
// is null when the margins differ.
nlohmann::json pmf_to_json(const BernoulliPmf& f);
BernoulliPmf pmf_from_json(const nlohmann::json& j);
std::string pmf_to_json_string(const BernoulliPmf& f);
BernoulliPmf pmf_from_json_string(const std::string& text);

// Extremal set format:
//   {"p": "s/t", "d": int, "vertices": [pmf-format], "tags": [string]}
nlohmann::json extremal_set_to_json(const ExtremalSet& es);
ExtremalSet extremal_set_from_json(const nlohmann::json& j);

// CSV with one row per vertex in table order and the atoms as columns in
// reverse-lex order, plus the provenance tag.
std::string extremal_set_to_csv(const ExtremalSet& es);

nlohmann::json correlation_profile_to_json(const CorrelationProfile& profile);

// Allocation report: per-player phi, the grand-coalition value, and the
// modularity label.
nlohmann::json allocation_to_json(const ShapleyAllocation& allocation,
                                  const Rational& grand_value, Modularity modularity);
std::string allocation_to_csv(const ShapleyAllocation& allocation,
                              const Rational& grand_value, Modularity modularity);

}  // namespace bernpoly
