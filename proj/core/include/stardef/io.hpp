#pragma once

#include "stardef/deformation.hpp"
#include "stardef/presets.hpp"
#include "stardef/verify.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace stardef {

using Json = nlohmann::json;

// Configuration documents:
//   {"preset": "smash", "dim": 2, "pi": [["0","1"],["-1","0"]],
//    "group_generators": [[["-1","0"],["0","-1"]]], "c": {"1": "2/3"},
//    "order": 2, "p_cutoff": "auto", "seed": 1}
// Rationals are strings "a/b" (plain integers are accepted as numbers).
// Malformed JSON throws ParseError; missing or ill-typed fields and unknown
// keys throw ValidationError.
PresetConfig parse_config(Json const &doc);
PresetConfig parse_config_text(std::string const &text);
PresetConfig load_config(std::string const &path);
Json config_to_json(PresetConfig const &cfg);

Json rational_json(Rational const &q);
Rational rational_from_json(Json const &v, char const *what);

// Group elements as matrices of rational strings, in canonical index order.
Json group_elements_json(MatrixGroup const &group);

// [{"coeff": "a/b", "monomial": [e_1..e_n], "group": g}] for a p-free 0-form.
Json element_terms_json(Element const &e);
Element element_from_terms_json(Json const &terms, int dim, int group_order);

// {"preset", "order", "group_elements", "coefficients": [{"order", "terms"}],
//  "p_cutoff_used", "checks"}
Json compute_document(Preset const &preset, StarResult const &result);
// Coefficients c_0..c_N read back from a compute document.
std::vector<Element> coefficients_from_document(Json const &doc, int dim, int group_order);

// Star commutators x^i * x^j - x^j * x^i for all ordered generator pairs,
// per order: {"preset", "order", "group_elements",
//  "table": [{"i", "j", "coefficients"}], "p_cutoff_used"}
Json table_document(Preset const &preset, StarEngine const &engine);

// {"preset", "order", "seed", "trials", "ok", "suites": [{"suite", "ok",
//  "checks": [{"name", "trials", "failures", "counterexample"?}]}]}
Json verify_document(Preset const &preset, int order, int trials, std::uint64_t seed,
                     std::vector<SuiteResult> const &suites);

} // namespace stardef
