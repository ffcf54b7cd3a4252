#pragma once

#include <optional>

#include "stg/hermitian.hpp"

#include "json.hpp"

namespace stg {

// Structure files are JSON, rationals as "p/q" strings, coframe names e1..en:
//   { "format": 1, "dim": 7,
//     "d": { "e5": [["-1","e1","e2"], ["1","e3","e4"]], ... },
//     "metric": "orthonormal" | [[...]],
//     "xi": "e5" | ["0","0","1"],          (absent: Hermitian, phi encodes J)
//     "phi": [["e1","-1","e2"], ...],      (partial tables allowed)
//     "label": "..." }
// Parsing completes partial phi tables and eagerly runs the Jacobi and
// structure validations; failures throw the error type matching the CLI exit
// taxonomy.

struct ParsedStructure {
    std::optional<ACMStructure> acm;
    std::optional<HermitianStructure> hermitian;
    std::string label;

    bool is_acm() const { return acm.has_value(); }
};

// eager_validate = false defers the structure-invariant checks to the caller
// (parse-level errors, phi contradictions and metric definiteness still throw).
ParsedStructure parse_structure_text(const std::string& text, bool eager_validate = true);
ParsedStructure parse_structure_file(const std::string& path, bool eager_validate = true);

nlohmann::json structure_to_json(const ACMStructure& s, const std::string& label = "");
nlohmann::json structure_to_json(const HermitianStructure& h, const std::string& label = "");

// 2-form files: { "format": 1, "dim": 4, "degree": 2,
//                 "terms": [["1","e1","e2"], ...] }.
KForm parse_form_text(const std::string& text);
KForm parse_form_file(const std::string& path);
nlohmann::json form_file_json(const KForm& f);

// Machine encodings shared by the CLI --json output: forms as sorted monomial
// lists with "p/q" coefficients.
nlohmann::json form_to_json(const KForm& f);
nlohmann::json vector_to_json(const Vector& v);
nlohmann::json matrix_to_json(const Mat& m);

} // namespace stg
