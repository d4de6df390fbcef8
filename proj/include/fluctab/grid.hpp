#pragma once

#include <optional>
#include <vector>

#include "fluctab/growth.hpp"
#include "fluctab/tableau.hpp"

namespace fluctab {

// A possibly-empty integer interval [lo, hi]. Half-open (j, k] is stored as
// [j+1, k]. Grid values live in 0..r.
struct Interval {
  int lo = 0;
  int hi = -1;

  static Interval empty_interval() { return {0, -1}; }
  static Interval single(int v) { return {v, v}; }
  static Interval half_open(int j, int k) { return {j + 1, k}; }

  bool empty() const { return lo > hi; }
  bool contains(int v) const { return lo <= v && v <= hi; }
  int count() const { return empty() ? 0 : hi - lo + 1; }
  bool operator==(const Interval&) const = default;
};

// |c| x |d| grid of intervals recording the row crossings of one local rule
// square. Rows are indexed by bullets (bottom to top when c >= 0, top to
// bottom when c <= 0), columns by the other letter's cells (top to bottom
// when d >= 0, bottom to top when d <= 0).
using GridBlock = std::vector<std::vector<Interval>>;

GridBlock local_rule_grid(int rows, const Part& kappa, const Part& lambda,
                          const Part& nu);

// The degenerate boundary blocks: |c| x |c| upper (U) or lower (L) triangular
// grids of singletons.
GridBlock triangular_grid(int c, int rows, bool upper);

// Block grid of a growth diagram: one GridBlock per unit square, triangular
// grids at the degenerate boundary triangles. blocks[u][k] follows the
// diagram's row u; for the promotion-evacuation kind position 0 is the U
// triangle, positions 1..n-1 the interior squares, position n the L triangle.
struct BlockGrid {
  DiagramKind kind;
  int rows;
  std::vector<int> type;
  std::vector<std::vector<GridBlock>> blocks;
};

BlockGrid block_grid(const GrowthDiagram& d);

// The t x t promotion matrix: upper triangle from the evacuation grid, lower
// triangle from the dual-evacuation grid of the n-th promotion power,
// diagonal reduced mod r to {0}.
struct PromotionMatrix {
  int rows = 0;  // r
  int t = 0;
  std::vector<int> block_sizes;  // |c_1|, ..., |c_n|
  std::vector<std::vector<Interval>> entries;

  int block_start(int u) const;  // 0-indexed start of block u (1-indexed)
  bool operator==(const PromotionMatrix&) const = default;
};

PromotionMatrix promotion_matrix(const Tableau& t);
// Assembles the matrix from a prebuilt promotion-evacuation block grid.
PromotionMatrix promotion_matrix(const BlockGrid& bg);

// r matrices (levels 0..r-1), each n x n: entry (u,v) counts the entries of
// block (u,v) containing the level.
using CountMatrix = std::vector<std::vector<int>>;
std::vector<CountMatrix> reduced_matrices(const Tableau& t);
std::vector<CountMatrix> reduced_matrices(const PromotionMatrix& pm);

// Partial function [t] -> [t]; entry 0 means undefined.
struct PromotionFunction {
  int level = 0;
  std::vector<int> map;  // 1-indexed values, 0 = undefined

  bool total() const;
  bool is_permutation() const;
  PromotionFunction inverse() const;  // requires a permutation
  bool operator==(const PromotionFunction&) const = default;
};

// Levels 0..r; prom_0 = prom_r = identity.
std::vector<PromotionFunction> promotion_functions(const Tableau& t);
std::vector<PromotionFunction> promotion_functions(const PromotionMatrix& pm);

// {i : p^{-1}(i) > i}. Throws Error{not_a_bijection} on partial input.
std::vector<int> antiexcedance_set(const PromotionFunction& p);

// --- reconstructions --------------------------------------------------------

// From the evacuation grid (upper-triangle blocks, as produced by
// promotion_matrix on the same type). Throws Error{inconsistent} when no
// preimage exists.
Tableau reconstruct_from_egrid(int rows, const std::vector<int>& type,
                               const PromotionMatrix& pm);

// From reduced promotion matrices (levels 1..r-1 suffice).
Tableau reconstruct_from_reduced(int rows, const std::vector<int>& type,
                                 const std::vector<CountMatrix>& pmr);

// From promotion permutations prom_1..prom_floor(r/2) of a rectangular
// tableau, via antiexcedance decoding.
Tableau reconstruct_from_permutations(int rows, const std::vector<int>& type,
                                      std::vector<PromotionFunction> perms);

}  // namespace fluctab
