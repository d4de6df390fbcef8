#pragma once

#include <string>
#include <vector>

#include "fluctab/grid.hpp"
#include "fluctab/tableau.hpp"

namespace fluctab {

enum class OrbitOp { promotion, evacuation };

// Iterates the operator until the starting tableau recurs; the result lists
// the orbit starting at t (t itself is the first entry).
std::vector<Tableau> orbit(const Tableau& t, OrbitOp op);

enum class RenderFormat { svg, dot };

// Chord-diagram picture of the promotion permutations: t vertices on a
// circle in n clockwise groups of sizes |c_1|..|c_n| (group 1 topmost), one
// colored edge a->b per prom_i(a) = b for 1 <= i <= r-1. Mutual pairs are
// drawn as single undirected chords. Output is byte-stable for fixed input.
// Throws Error{not_rectangular} on non-rectangular input.
std::string render_dihedral(const Tableau& t, RenderFormat format);

}  // namespace fluctab
