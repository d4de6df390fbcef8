#pragma once

#include <optional>
#include <vector>

#include "fluctab/grid.hpp"
#include "fluctab/tableau.hpp"

namespace fluctab {

// Words over A_r with no lattice requirement are the vertices of the tensor
// crystal; raising/lowering operators act through the bracketing rule.

struct BracketScan {
  // 1-indexed positions; 0 when absent.
  int leftmost_unmatched_open = 0;   // where f_i acts
  int rightmost_unmatched_close = 0; // where e_i acts
  std::vector<int> phi;  // per letter: 1 if the letter carries '['
  std::vector<int> eps;  // per letter: 1 if the letter carries ']'
};

BracketScan bracket_scan(const Word& w, int level, int rows);

std::optional<Word> apply_f(const Word& w, int level, int rows);
std::optional<Word> apply_e(const Word& w, int level, int rows);

bool is_highest_weight(const Word& w, int rows);
bool is_lowest_weight(const Word& w, int rows);

struct RaisingStep {
  int level;
  int pos;  // 1-indexed position in the word acted on
};
using RaisingLog = std::vector<RaisingStep>;

// Applies raising operators until highest weight, choosing the smallest
// applicable level at every step. Terminates; the endpoint is the unique
// highest-weight element of the connected component.
std::pair<Word, RaisingLog> raise_to_highest(const Word& w, int rows);

// Dual: lowering operators until lowest weight. On a lattice word this
// computes the Lusztig involution of the component.
std::pair<Word, RaisingLog> lower_to_lowest(const Word& w, int rows);

// --- promotion through the crystal ------------------------------------------

// One cut-raise-append pass per singleton of the first letter.
struct CrystalPromotionTrace {
  // One log per pass; positions are 1-indexed in the word the pass raised.
  std::vector<RaisingLog> pass_logs;
  std::vector<Letter> appended;
  // The word each pass started from, before cutting its first singleton.
  std::vector<Word> pass_inputs;
};

Tableau promote_via_crystal(const Tableau& t,
                            CrystalPromotionTrace* trace = nullptr);

// --- balance points ----------------------------------------------------------

// #i - #(-i) - #(i+1) + #(-(i+1)) over the prefix w_0..w_j (0-indexed).
int balance_slack(const Word& w, int level, int j);

struct BalancePath {
  std::vector<int> levels;     // i_1, ..., i_k
  std::vector<int> positions;  // j_1 <= ... <= j_k, 0-indexed in w
  Letter appended;
};

// For a lattice word with |c_1| = 1: the predicted raising path of the cut
// word. Throws Error{bad_input} unless the first letter is a singleton.
BalancePath first_balance_path(const Word& w, int rows);

// Reduced promotion matrices recomputed by counting raising-operator
// applications along the promotion orbit. Must equal reduced_matrices().
std::vector<CountMatrix> reduced_matrices_via_crystal(const Tableau& t);

}  // namespace fluctab
