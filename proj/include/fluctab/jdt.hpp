#pragma once

#include <vector>

#include "fluctab/growth.hpp"
#include "fluctab/tableau.hpp"

namespace fluctab {

// A fluctuating tableau with one step replaced by bullet markers. The chain
// is initial -> (before letters) -> bullet step -> (after letters).
struct MarkedTableau {
  int rows = 0;
  Part initial;
  Word before;
  Letter bullet;
  Word after;

  int position() const { return static_cast<int>(before.size()) + 1; }
  Part shape_before_bullet() const;
  // The full chain as a plain tableau (bullet treated as an ordinary step).
  Tableau to_tableau() const;
};

// Marks step pos (1-indexed) of t with bullets.
MarkedTableau mark_step(const Tableau& t, int pos = 1);

// Row-crossing record of one slide: entry (bullet_no, value_no, lo, hi)
// meaning rows (lo, hi] were crossed, 0-indexed from the top. Singleton
// crossings have hi == lo + 1 stored as (lo, hi].
struct SlideEvent {
  int bullet_no;
  int value_no;
  int lo;
  int hi;
  bool pair;
};

// Exchanges the bullet step with the step immediately after it, using the
// cell rules: same-sign bullets slide right then down (barred: left then up),
// mixed-sign pairs slide through open cells and shift one column.
// Throws Error{malformed_marking} when there is no following step.
MarkedTableau jdt_slide(const MarkedTableau& m,
                        std::vector<SlideEvent>* events = nullptr);

// Inverse slide: exchanges the bullet step with the step before it.
MarkedTableau jdt_slide_back(const MarkedTableau& m);

// Promotion, evacuation and dual evacuation recomputed entirely through
// slides; each must agree with the growth-diagram route.
Tableau promote_via_jdt(const Tableau& t);
Tableau evacuate_via_jdt(const Tableau& t);
Tableau devacuate_via_jdt(const Tableau& t);

// All intermediate marked frames of promote_via_jdt, starting with the
// freshly marked tableau and ending just before the final relabel.
std::vector<MarkedTableau> jdt_promotion_trace(const Tableau& t);

namespace detail {

// Single slide over the base shape kappa; shared with the grid module.
struct SlideOutcome {
  Letter new_value;
  Letter new_bullet;
  std::vector<SlideEvent> events;
};

SlideOutcome slide_cells(int rows, const Part& kappa, const Letter& bullet,
                         const Letter& value);

}  // namespace detail

}  // namespace fluctab
