#include "fluctab/bk.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "fluctab/growth.hpp"

namespace fluctab {

namespace {

std::set<int> row_set(const Letter& l) {
  std::set<int> out;
  for (int v : l.elems()) out.insert(std::abs(v));
  return out;
}

struct Segment {
  int column;
  std::vector<int> rows;  // sorted ascending (top to bottom)
};

// Groups rows by their column key, requiring each group to be contiguous.
std::vector<Segment> group_segments(const std::map<int, int>& row_to_col) {
  std::map<int, std::vector<int>> by_col;
  for (auto [row, col] : row_to_col) by_col[col].push_back(row);
  std::vector<Segment> out;
  for (auto& [col, rows] : by_col) {
    std::sort(rows.begin(), rows.end());
    for (size_t k = 1; k < rows.size(); ++k)
      check(rows[k] == rows[k - 1] + 1, Errc::inconsistent,
            "classification segment is not contiguous");
    out.push_back({col, rows});
  }
  return out;
}

}  // namespace

CellClassification classify_cells(const Tableau& t, int i) {
  check(1 <= i && i < t.length(), Errc::index_out_of_range,
        "classification index out of range", i);
  const Part& lo = t.shape(i - 1);
  const Part& mid = t.shape(i);
  const Part& hi = t.shape(i + 1);
  int ci = t.letter(i).signed_size();
  int cj = t.letter(i + 1).signed_size();
  std::set<int> a = row_set(t.letter(i));
  std::set<int> b = row_set(t.letter(i + 1));

  CellClassification out;
  out.i = i;
  out.same_sign_case = static_cast<long>(ci) * cj >= 0;

  auto cell_i = [&](int row) {
    return Cell{row, ci >= 0 ? mid[row - 1] : lo[row - 1]};
  };
  auto cell_j = [&](int row) {
    return Cell{row, cj >= 0 ? hi[row - 1] : mid[row - 1]};
  };

  if (out.same_sign_case) {
    for (int row = 1; row <= t.rows(); ++row) {
      bool in_a = a.count(row), in_b = b.count(row);
      if (in_a && in_b) {
        out.tags[cell_i(row)] = CellTag::plain;
        out.tags[cell_j(row)] = CellTag::plain;
      } else if (in_a) {
        out.tags[cell_i(row)] = CellTag::free_cell;
      } else if (in_b) {
        out.tags[cell_j(row)] = CellTag::free_cell;
      }
    }
  } else {
    for (int row = 1; row <= t.rows(); ++row) {
      bool in_a = a.count(row), in_b = b.count(row);
      if (in_a && in_b) {
        // Added then removed (or removed then re-added): one moving cell.
        out.tags[cell_i(row)] = CellTag::moving;
      } else if (in_a) {
        out.tags[cell_i(row)] = CellTag::forced;
      } else if (in_b) {
        out.tags[cell_j(row)] = CellTag::forced;
      } else {
        int col = ci >= 0 ? lo[row - 1] + 1 : lo[row - 1];
        out.tags[{row, col}] = CellTag::open_cell;
      }
    }
  }
  return out;
}

Tableau bender_knuth(const Tableau& t, int i) {
  check(1 <= i && i < t.length(), Errc::index_out_of_range,
        "Bender-Knuth index out of range", i);
  Part mid = sort_weights(
      add(t.shape(i + 1), sub(t.shape(i - 1), t.shape(i))));
  Word w = t.word();
  auto diff_letter = [&](const Part& from, const Part& to) {
    std::vector<int> elems;
    for (int row = 1; row <= t.rows(); ++row) {
      int d = to[row - 1] - from[row - 1];
      if (d != 0) elems.push_back(d * row);
    }
    return Letter::make(std::move(elems));
  };
  w[i - 1] = diff_letter(t.shape(i - 1), mid);
  w[i] = diff_letter(mid, t.shape(i + 1));
  return Tableau::build(t.rows(), t.initial_shape(), std::move(w));
}

Tableau bender_knuth_combinatorial(const Tableau& t, int i) {
  check(1 <= i && i < t.length(), Errc::index_out_of_range,
        "Bender-Knuth index out of range", i);
  const Part& lo = t.shape(i - 1);
  const Part& mid = t.shape(i);
  const Part& hi = t.shape(i + 1);
  int ci = t.letter(i).signed_size();
  int cj = t.letter(i + 1).signed_size();
  std::set<int> a = row_set(t.letter(i));
  std::set<int> b = row_set(t.letter(i + 1));

  std::set<int> step_i_rows;  // rows of the new i-th step
  int new_ci_sign;

  if (static_cast<long>(ci) * cj >= 0) {
    int sign = (ci < 0 || cj < 0) ? -1 : 1;
    new_ci_sign = sign;
    std::set<int> paired;
    std::map<int, int> free_top, free_bottom;  // row -> column
    for (int row = 1; row <= t.rows(); ++row) {
      bool in_a = a.count(row), in_b = b.count(row);
      if (in_a && in_b) paired.insert(row);
      if (sign >= 0) {
        // Top group X: label i at column mid[row]; bottom Y: label i+1.
        if (in_a && !in_b) free_top[row] = mid[row - 1];
        if (in_b && !in_a) free_bottom[row] = hi[row - 1];
      } else {
        // Top group X: barred i+1 at column mid[row]; bottom Y: barred i.
        if (in_b && !in_a) free_top[row] = mid[row - 1];
        if (in_a && !in_b) free_bottom[row] = lo[row - 1];
      }
    }
    std::map<int, int> all_free = free_top;
    all_free.insert(free_bottom.begin(), free_bottom.end());
    step_i_rows = paired;
    for (const Segment& seg : group_segments(all_free)) {
      size_t top_count = 0;
      while (top_count < seg.rows.size() &&
             free_top.count(seg.rows[top_count]))
        ++top_count;
      for (size_t k = top_count; k < seg.rows.size(); ++k)
        check(free_bottom.count(seg.rows[k]) > 0, Errc::inconsistent,
              "free segment is not top-justified");
      size_t bottom_count = seg.rows.size() - top_count;
      // Swap the group sizes within the segment: the first bottom_count rows
      // now carry X-labels, the rest Y-labels. X belongs to step i exactly
      // when the common sign is positive.
      for (size_t k = 0; k < seg.rows.size(); ++k) {
        bool now_x = k < bottom_count;
        if (now_x == (sign >= 0)) step_i_rows.insert(seg.rows[k]);
      }
    }
  } else {
    new_ci_sign = cj >= 0 ? 1 : -1;
    std::set<int> moving;
    std::set<int> forced_a, forced_b;
    std::map<int, int> seg_rows;  // moving + open rows -> column key
    for (int row = 1; row <= t.rows(); ++row) {
      bool in_a = a.count(row), in_b = b.count(row);
      if (in_a && in_b)
        moving.insert(row);
      else if (in_a)
        forced_a.insert(row);
      else if (in_b)
        forced_b.insert(row);
    }
    for (int row = 1; row <= t.rows(); ++row) {
      bool relevant = a.count(row) || b.count(row);
      if (moving.count(row))
        seg_rows[row] = ci >= 0 ? lo[row - 1] + 1 : lo[row - 1];
      else if (!relevant)
        seg_rows[row] = ci >= 0 ? lo[row - 1] + 1 : lo[row - 1];
    }
    // Relocated rows: for ci > 0 the bottom |moving| rows of each segment,
    // for ci < 0 the top |moving| rows.
    std::set<int> relocated;
    for (const Segment& seg : group_segments(seg_rows)) {
      size_t m = 0;
      for (int row : seg.rows)
        if (moving.count(row)) ++m;
      if (m == 0) continue;
      if (ci >= 0) {
        // moving cells above open cells; relocate to the segment's bottom.
        for (size_t k = 0; k < m; ++k)
          check(moving.count(seg.rows[k]) > 0, Errc::inconsistent,
                "moving cells are not above the open cells");
        for (size_t k = seg.rows.size() - m; k < seg.rows.size(); ++k)
          relocated.insert(seg.rows[k]);
      } else {
        for (size_t k = seg.rows.size() - m; k < seg.rows.size(); ++k)
          check(moving.count(seg.rows[k]) > 0, Errc::inconsistent,
                "moving cells are not below the open cells");
        for (size_t k = 0; k < m; ++k) relocated.insert(seg.rows[k]);
      }
    }
    // New step i carries the sign of c_{i+1}. Its rows: the relabelled forced
    // cells of step i+1 plus the relocated moving cells.
    (void)forced_a;
    step_i_rows = forced_b;
    for (int row : relocated) step_i_rows.insert(row);
  }

  Part new_mid = lo;
  for (int row : step_i_rows) new_mid[row - 1] += new_ci_sign;
  check(is_weakly_decreasing(new_mid), Errc::inconsistent,
        "combinatorial Bender-Knuth produced a non-partition");

  Word w = t.word();
  auto diff_letter = [&](const Part& from, const Part& to) {
    std::vector<int> elems;
    for (int row = 1; row <= t.rows(); ++row) {
      int d = to[row - 1] - from[row - 1];
      if (d != 0) elems.push_back(d * row);
    }
    return Letter::make(std::move(elems));
  };
  w[i - 1] = diff_letter(lo, new_mid);
  w[i] = diff_letter(new_mid, hi);
  return Tableau::build(t.rows(), t.initial_shape(), std::move(w));
}

namespace {

// In-place Bender-Knuth on a shape chain.
void bk_chain(std::vector<Part>& chain, int i) {
  Part& mid = chain[i];
  const Part& lo = chain[i - 1];
  const Part& hi = chain[i + 1];
  for (size_t k = 0; k < mid.size(); ++k) mid[k] = hi[k] + lo[k] - mid[k];
  mid = sort_weights(std::move(mid));
}

Tableau chain_tableau(int rows, std::vector<Part> chain) {
  Word w;
  w.reserve(chain.size() - 1);
  for (size_t j = 1; j < chain.size(); ++j)
    w.push_back(step_letter(chain[j - 1], chain[j]));
  return detail::tableau_from_chain(rows, std::move(chain), std::move(w));
}

}  // namespace

Tableau bk_promote(const Tableau& t) {
  std::vector<Part> chain = t.shapes();
  for (int i = 1; i <= t.length() - 1; ++i) bk_chain(chain, i);
  return chain_tableau(t.rows(), std::move(chain));
}

Tableau bk_evacuate(const Tableau& t) {
  std::vector<Part> chain = t.shapes();
  for (int m = t.length() - 1; m >= 1; --m)
    for (int i = 1; i <= m; ++i) bk_chain(chain, i);
  return chain_tableau(t.rows(), std::move(chain));
}

Tableau bk_devacuate(const Tableau& t) {
  std::vector<Part> chain = t.shapes();
  for (int m = t.length() - 1; m >= 1; --m)
    for (int i = m; i <= t.length() - 1; ++i) bk_chain(chain, i);
  return chain_tableau(t.rows(), std::move(chain));
}

}  // namespace fluctab
