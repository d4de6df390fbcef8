#pragma once

#include <map>
#include <vector>

#include "fluctab/tableau.hpp"

namespace fluctab {

// Cells are addressed by (row, column) in diagram coordinates: rows 1..r top
// down, columns arbitrary integers (generalized partitions extend left of
// column 1).
using Cell = std::pair<int, int>;

enum class CellTag { free_cell, forced, moving, open_cell, plain };

// Classification of the cells relevant to BK_i. Cells not present carry no
// relevant label ("plain" is only reported for labelled-but-inert cells).
struct CellClassification {
  int i = 0;
  bool same_sign_case = false;  // c_i * c_{i+1} >= 0
  std::map<Cell, CellTag> tags;
};

// Tags the cells carrying labels i, i+1, -i, -(i+1) according to the sign
// pattern of (c_i, c_{i+1}); locates open cells for the mixed-sign case.
// 1 <= i <= n-1, else Error{index_out_of_range}.
CellClassification classify_cells(const Tableau& t, int i);

// Bender-Knuth involution: replaces shape i by
// sort(lambda^{i+1} + lambda^{i-1} - lambda^i). Only that shape changes.
Tableau bender_knuth(const Tableau& t, int i);

// The same involution computed by manipulating cell labels per the
// classification (segment swaps / moving-cell relocation / forced relabel).
// Used as the independent oracle for bender_knuth.
Tableau bender_knuth_combinatorial(const Tableau& t, int i);

// Promotion, evacuation and dual evacuation as Bender-Knuth compositions:
//   P  = BK_{n-1} ... BK_1
//   E  = BK_1 (BK_2 BK_1) ... (BK_{n-1} ... BK_1)
//   E' = (BK_{n-1} ... BK_1) ... (BK_{n-1} BK_{n-2}) BK_{n-1}
Tableau bk_promote(const Tableau& t);
Tableau bk_evacuate(const Tableau& t);
Tableau bk_devacuate(const Tableau& t);

}  // namespace fluctab
