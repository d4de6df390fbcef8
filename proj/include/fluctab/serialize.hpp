#pragma once

#include <string>

#include "fluctab/grid.hpp"
#include "fluctab/growth.hpp"
#include "fluctab/tableau.hpp"

namespace fluctab {

// Text format: letters as brace-delimited sorted integer lists separated by
// spaces, singletons unbraced, barred entries as negative integers, the empty
// letter as {}. Example: `{1,2} -4 {1,3,4} 2 {-3,-2} {3,4} -1`.
std::string word_to_text(const Word& w);
Word word_from_text(const std::string& text);  // throws Error{bad_input}

// JSON: {"r": int, "initial_shape": [int...], "word": [[int...]...]}.
std::string tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const std::string& json);  // throws Error{bad_input}

// {"t": int, "blocks": [int...], "entries": [[[lo,hi]|null ...]...]}.
std::string promotion_matrix_to_json(const PromotionMatrix& pm);
PromotionMatrix promotion_matrix_from_json(const std::string& json, int rows);

// {"kind": str, "r": int, "type": [...], "offsets": [...], "rows": [[[int...]...]...]}.
std::string diagram_to_json(const GrowthDiagram& d);

// Layout matching the diagram's staircase: one row per line, indented by its
// offset, shapes printed as comma-separated tuples.
std::string diagram_pretty(const GrowthDiagram& d);

std::string count_matrix_to_json(const CountMatrix& m);

}  // namespace fluctab
