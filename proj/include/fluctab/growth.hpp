#pragma once

#include <vector>

#include "fluctab/tableau.hpp"

namespace fluctab {

// --- local rules -----------------------------------------------------------
//
// A local rule diagram is a square of shapes
//
//     lambda --d--> nu
//       ^            ^
//       c            c
//       |            |
//     kappa --d--> mu
//
// with mu = sort(nu + kappa - lambda) and lambda = sort(nu + kappa - mu).
// Either relation implies the other.

// Completes the lower-right corner. Throws Error{invalid_step} when the
// inputs are not a two-step chain kappa -> lambda -> nu.
Part complete_square_se(const Part& kappa, const Part& lambda, const Part& nu);

// Completes the upper-left corner from kappa -> mu -> nu.
Part complete_square_nw(const Part& kappa, const Part& mu, const Part& nu);

// True when kappa -> lambda is a single skew-column step.
bool is_step(const Part& kappa, const Part& lambda);
// The letter of a step; throws Error{invalid_step} if not a step.
Letter step_letter(const Part& kappa, const Part& lambda);

// --- growth diagrams -------------------------------------------------------

enum class DiagramKind { promotion, evacuation, dual_evacuation, promotion_evacuation };

// Dense storage over the diagram's index region.
//   promotion:            rows 0..1,   row u holds n+1 shapes, offset u
//   evacuation:           rows 0..n,   row u holds n+1-u shapes, offset u
//   dual_evacuation:      rows 0..n,   row u holds n+1-u shapes, offset 0
//                         (row u is the u-th filled row above the base)
//   promotion_evacuation: rows 0..n,   row u holds n+1 shapes, offset u;
//                         row u is the chain of the u-th promotion power
struct GrowthDiagram {
  DiagramKind kind;
  int rows;                             // r
  std::vector<int> type;                // type of the base tableau
  std::vector<std::vector<Part>> grid;  // see offsets above
  int offset(int u) const;              // display column of grid[u][0]
};

// P accepts skew tableaux; the other kinds require initial shape zero.
GrowthDiagram build_diagram(DiagramKind kind, const Tableau& t);

// Refines every edge into singleton steps and refills; for the E, Ed and PE
// kinds the result equals build_diagram(kind, oscillize(T)). The P strip
// refines into |c_1|+1 rows (one per bullet of the first step).
GrowthDiagram oscillize_diagram(const GrowthDiagram& d);

// The (|c|+1) x (|d|+1) oscillization of one local rule square; row 0 is the
// refined top edge, row |c| the refined bottom edge.
std::vector<std::vector<Part>> refine_square(int rows, const Part& kappa,
                                             const Part& lambda,
                                             const Part& nu);

// Boundary reads.
Tableau promote(const Tableau& t);
Tableau inverse_promote(const Tableau& t);
Tableau evacuate(const Tableau& t);
Tableau devacuate(const Tableau& t);

Tableau promote_power(const Tableau& t, int k);  // k may be negative

}  // namespace fluctab
