#pragma once

// JSON and ASCII forms of every object, plus verification reports.
//
// JSON layouts:
//   entry    {"level": 3, "barred": true, "primed": false}
//   tableau  {"kind": "t"|"st"|"qt", "n": 5, "shape": [..], "rows": [[entry, ..], ..]}
//   uasm     [[1, 0, ..], ..]            2n rows in the order 1, 1-, 2, 2-, ..
//   cpm      [["WE", "SE", ..], ..]
//   gtp      {"kind": "gtp", "n": 5, "rows": [[..], ..]}   bottom row first
// The "kind" and "n" fields are optional on input.

#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "sptok/identities.hpp"
#include "sptok/matrices.hpp"
#include "sptok/tableaux.hpp"

namespace sptok::io {

using json = nlohmann::json;

using AnyObject =
    std::variant<SymplecticTableau, ShiftedTableau, PrimedShiftedTableau, UTurnASM, CompassPointMatrix, SympGTPattern>;

/// "t", "st", "qt", "uasm", "cpm" or "gtp".
std::string kind_of(const AnyObject& obj);

json to_json(Letter l, bool primed = false);
json to_json(const SymplecticTableau& t);
json to_json(const ShiftedTableau& st);
json to_json(const PrimedShiftedTableau& qt);
json to_json(const UTurnASM& a);
json to_json(const CompassPointMatrix& c);
json to_json(const SympGTPattern& g);
json to_json(const AnyObject& obj);

/// Throws ParseError on malformed input. Shapes are checked; the family
/// conditions are not (use the validators).
AnyObject object_from_json(const json& j);
AnyObject parse_object(const std::string& text);

/// `include_timing` = false drops "millis" so reports compare byte for byte.
json to_json(const VerificationReport& r, bool include_timing = true);
json to_json(const AmbiguityFinding& f, bool include_timing = true);

std::string render_ascii(const SymplecticTableau& t);
/// Row i indented by i-1 cells.
std::string render_ascii(const ShiftedTableau& st);
std::string render_ascii(const PrimedShiftedTableau& qt);
/// Bracketed rows, labelled by letter.
std::string render_ascii(const UTurnASM& a);
std::string render_ascii(const CompassPointMatrix& c);
/// Staggered layout, top row first, each lower row shifted half a cell.
std::string render_ascii(const SympGTPattern& g);
std::string render_ascii(const AnyObject& obj);

/// Per-cell weights laid out like render_ascii(ShiftedTableau).
std::string render_annotated(const ShiftedTableau& st, const std::vector<std::vector<LaurentPoly>>& cells);

}  // namespace sptok::io
