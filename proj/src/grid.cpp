#include "fluctab/grid.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

#include "fluctab/jdt.hpp"

namespace fluctab {

namespace {

GridBlock empty_block(int nrows, int ncols) {
  return GridBlock(nrows, std::vector<Interval>(ncols, Interval::empty_interval()));
}

GridBlock grid_from_slide(int rows, const Part& kappa, const Letter& bullet,
                          const Letter& value) {
  auto outcomes = detail::slide_cells(rows, kappa, bullet, value);
  GridBlock m = empty_block(bullet.size(), value.size());
  for (const SlideEvent& e : outcomes.events)
    if (e.lo < e.hi)  // pairs that only shift sideways record nothing
      m[e.bullet_no - 1][e.value_no - 1] = Interval::half_open(e.lo, e.hi);
  return m;
}

}  // namespace

GridBlock local_rule_grid(int rows, const Part& kappa, const Part& lambda,
                          const Part& nu) {
  return grid_from_slide(rows, kappa, step_letter(kappa, lambda),
                         step_letter(lambda, nu));
}

GridBlock triangular_grid(int c, int rows, bool upper) {
  int m = std::abs(c);
  GridBlock g = empty_block(m, m);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      if (upper && i <= j)
        g[i - 1][j - 1] = Interval::single(c >= 0 ? j - i : rows - j + i);
      if (!upper && j <= i)
        g[i - 1][j - 1] = Interval::single(c >= 0 ? rows - i + j : i - j);
    }
  return g;
}

BlockGrid block_grid(const GrowthDiagram& d) {
  int n = static_cast<int>(d.type.size());
  BlockGrid out;
  out.kind = d.kind;
  out.rows = d.rows;
  out.type = d.type;
  const auto& g = d.grid;
  switch (d.kind) {
    case DiagramKind::promotion:
    case DiagramKind::promotion_evacuation: {
      int passes = d.kind == DiagramKind::promotion ? std::min(n, 1) : n;
      for (int u = 1; u <= passes; ++u) {
        const auto& top = g[u - 1];
        const auto& bot = g[u];
        std::vector<GridBlock> row;
        int c = d.type[(u - 1) % n];
        row.push_back(triangular_grid(c, d.rows, true));
        for (int j = 1; j + 1 <= n; ++j)
          row.push_back(grid_from_slide(d.rows, bot[j - 1],
                                        step_letter(bot[j - 1], top[j]),
                                        step_letter(top[j], top[j + 1])));
        row.push_back(triangular_grid(c, d.rows, false));
        out.blocks.push_back(std::move(row));
      }
      return out;
    }
    case DiagramKind::evacuation: {
      for (int u = 1; u <= n; ++u) {
        const auto& top = g[u - 1];  // diagram columns u-1..n
        const auto& bot = g[u];      // diagram columns u..n
        std::vector<GridBlock> row;
        row.push_back(triangular_grid(d.type[u - 1], d.rows, true));
        for (int v = u + 1; v <= n; ++v)
          row.push_back(grid_from_slide(
              d.rows, bot[v - 1 - u],
              step_letter(bot[v - 1 - u], top[v - 1 - (u - 1)]),
              step_letter(top[v - 1 - (u - 1)], top[v - (u - 1)])));
        out.blocks.push_back(std::move(row));
      }
      return out;
    }
    case DiagramKind::dual_evacuation: {
      for (int u = 1; u <= n; ++u) {
        const auto& bot = g[u - 1];  // columns 0..n-u+1
        const auto& top = g[u];      // columns 0..n-u
        std::vector<GridBlock> row;
        for (int j = 0; j + 1 <= n - u; ++j)
          row.push_back(grid_from_slide(d.rows, bot[j],
                                        step_letter(bot[j], top[j]),
                                        step_letter(top[j], top[j + 1])));
        row.push_back(triangular_grid(d.type[n - u], d.rows, false));
        out.blocks.push_back(std::move(row));
      }
      return out;
    }
  }
  fail(Errc::bad_input, "unknown diagram kind");
}

int PromotionMatrix::block_start(int u) const {
  int s = 0;
  for (int k = 0; k + 1 < u; ++k) s += block_sizes[k];
  return s;
}

PromotionMatrix promotion_matrix(const Tableau& t) {
  check(!t.is_skew(), Errc::bad_input,
        "promotion matrices require initial shape zero");
  return promotion_matrix(
      block_grid(build_diagram(DiagramKind::promotion_evacuation, t)));
}

PromotionMatrix promotion_matrix(const BlockGrid& bg) {
  check(bg.kind == DiagramKind::promotion_evacuation, Errc::bad_input,
        "promotion matrices are read off the promotion-evacuation grid");
  int n = static_cast<int>(bg.type.size());

  PromotionMatrix pm;
  pm.rows = bg.rows;
  pm.block_sizes.reserve(n);
  for (int c : bg.type) pm.block_sizes.push_back(std::abs(c));
  pm.t = std::accumulate(pm.block_sizes.begin(), pm.block_sizes.end(), 0);
  pm.entries.assign(pm.t, std::vector<Interval>(pm.t, Interval::empty_interval()));

  for (int u = 1; u <= n; ++u) {
    int rbase = pm.block_start(u);
    int su = pm.block_sizes[u - 1];
    // Diagonal: upper triangle from U, lower from L, diagonal reduced to {0}.
    const GridBlock& uu = bg.blocks[u - 1].front();
    const GridBlock& ll = bg.blocks[u - 1].back();
    for (int a = 0; a < su; ++a)
      for (int b = 0; b < su; ++b) {
        if (a == b)
          pm.entries[rbase + a][rbase + b] = Interval::single(0);
        else if (a < b)
          pm.entries[rbase + a][rbase + b] = uu[a][b];
        else
          pm.entries[rbase + a][rbase + b] = ll[a][b];
      }
    for (int k = 1; k + 1 <= n; ++k) {
      int v = (u - 1 + k) % n + 1;
      int cbase = pm.block_start(v);
      const GridBlock& blk = bg.blocks[u - 1][k];
      for (size_t a = 0; a < blk.size(); ++a)
        for (size_t b = 0; b < blk[a].size(); ++b)
          pm.entries[rbase + a][cbase + b] = blk[a][b];
    }
  }
  return pm;
}

std::vector<CountMatrix> reduced_matrices(const PromotionMatrix& pm) {
  int n = static_cast<int>(pm.block_sizes.size());
  std::vector<CountMatrix> out(pm.rows,
                               CountMatrix(n, std::vector<int>(n, 0)));
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v) {
      int rb = pm.block_start(u), cb = pm.block_start(v);
      for (int a = 0; a < pm.block_sizes[u - 1]; ++a)
        for (int b = 0; b < pm.block_sizes[v - 1]; ++b)
          for (int i = 0; i < pm.rows; ++i)
            if (pm.entries[rb + a][cb + b].contains(i)) ++out[i][u - 1][v - 1];
    }
  return out;
}

std::vector<CountMatrix> reduced_matrices(const Tableau& t) {
  return reduced_matrices(promotion_matrix(t));
}

bool PromotionFunction::total() const {
  return std::all_of(map.begin(), map.end(), [](int v) { return v != 0; });
}

bool PromotionFunction::is_permutation() const {
  std::vector<bool> seen(map.size(), false);
  for (int v : map) {
    if (v <= 0 || v > static_cast<int>(map.size()) || seen[v - 1]) return false;
    seen[v - 1] = true;
  }
  return true;
}

PromotionFunction PromotionFunction::inverse() const {
  check(is_permutation(), Errc::not_a_bijection,
        "cannot invert a partial promotion function");
  PromotionFunction out;
  out.level = level;
  out.map.assign(map.size(), 0);
  for (size_t a = 0; a < map.size(); ++a) out.map[map[a] - 1] = static_cast<int>(a + 1);
  return out;
}

std::vector<PromotionFunction> promotion_functions(const PromotionMatrix& pm) {
  std::vector<PromotionFunction> out;
  for (int level = 0; level <= pm.rows; ++level) {
    PromotionFunction f;
    f.level = level;
    f.map.assign(pm.t, 0);
    int probe = level == pm.rows ? 0 : level;
    for (int a = 0; a < pm.t; ++a)
      for (int b = 0; b < pm.t; ++b)
        if (pm.entries[a][b].contains(probe)) {
          check(f.map[a] == 0, Errc::inconsistent,
                "two entries of one promotion-matrix row share a level");
          f.map[a] = b + 1;
        }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<PromotionFunction> promotion_functions(const Tableau& t) {
  return promotion_functions(promotion_matrix(t));
}

std::vector<int> antiexcedance_set(const PromotionFunction& p) {
  check(p.is_permutation(), Errc::not_a_bijection,
        "antiexcedances need a total bijection");
  std::vector<int> out;
  PromotionFunction inv = p.inverse();
  for (int i = 1; i <= static_cast<int>(p.map.size()); ++i)
    if (inv.map[i - 1] > i) out.push_back(i);
  return out;
}

// --- reconstructions ---------------------------------------------------------

namespace {

Part single_column_shape(int rows, int c) {
  Part p(rows, 0);
  if (c >= 0)
    for (int k = 0; k < c; ++k) p[k] = 1;
  else
    for (int k = 0; k < -c; ++k) p[rows - 1 - k] = -1;
  return p;
}

// Counts per level of one block.
std::vector<int> block_counts(const GridBlock& blk, int rows) {
  std::vector<int> cnt(rows, 0);
  for (const auto& row : blk)
    for (const Interval& e : row)
      for (int i = 0; i < rows; ++i)
        if (e.contains(i)) ++cnt[i];
  return cnt;
}

Tableau reconstruct_from_counts_impl(
    int rows, const std::vector<int>& type,
    const std::function<std::vector<int>(int u, int v)>& counts) {
  int n = static_cast<int>(type.size());
  // lambda[u][v] for 0 <= u <= v <= n, filled by diagonals.
  std::vector<std::vector<Part>> lam(n + 1, std::vector<Part>(n + 1));
  for (int u = 0; u <= n; ++u) lam[u][u] = zero_part(rows);
  for (int u = 0; u + 1 <= n; ++u)
    lam[u][u + 1] = single_column_shape(rows, type[u]);
  for (int delta = 2; delta <= n; ++delta)
    for (int u = 0; u + delta <= n; ++u) {
      int v = u + delta;
      Part ea = sub(lam[u][v - 1], lam[u + 1][v - 1]);
      std::vector<int> cnt = counts(u + 1, v);
      Part eb = ea;
      for (int i = 1; i <= rows - 1; ++i) {
        eb[i] += cnt[i];      // +e_{i+1}
        eb[i - 1] -= cnt[i];  // -e_i
      }
      Part nu = add(lam[u + 1][v], eb);
      check(is_weakly_decreasing(nu), Errc::inconsistent,
            "reconstruction produced a non-partition");
      check(is_step(lam[u + 1][v], nu) && is_step(lam[u][v - 1], nu),
            Errc::inconsistent, "reconstruction produced an invalid square");
      check(complete_square_se(lam[u + 1][v - 1], lam[u][v - 1], nu) ==
                lam[u + 1][v],
            Errc::inconsistent, "reconstructed square violates the local rule");
      lam[u][v] = std::move(nu);
    }
  Word w;
  for (int v = 1; v <= n; ++v)
    w.push_back(step_letter(lam[0][v - 1], lam[0][v]));
  return Tableau::build(rows, zero_part(rows), std::move(w));
}

Tableau reconstruct_from_counts(
    int rows, const std::vector<int>& type,
    const std::function<std::vector<int>(int u, int v)>& counts) {
  try {
    return reconstruct_from_counts_impl(rows, type, counts);
  } catch (const Error& e) {
    if (e.code() == Errc::inconsistent) throw;
    fail(Errc::inconsistent, std::string("no preimage: ") + e.what());
  }
}

}  // namespace

Tableau reconstruct_from_egrid(int rows, const std::vector<int>& type,
                               const PromotionMatrix& pm) {
  int n = static_cast<int>(type.size());
  check(static_cast<int>(pm.block_sizes.size()) == n, Errc::inconsistent,
        "grid block count does not match the type");
  for (int u = 1; u <= n; ++u)
    check(pm.block_sizes[u - 1] == std::abs(type[u - 1]), Errc::inconsistent,
          "grid block sizes do not match the type");
  auto counts = [&](int u, int v) {
    GridBlock blk(pm.block_sizes[u - 1],
                  std::vector<Interval>(pm.block_sizes[v - 1]));
    int rb = pm.block_start(u), cb = pm.block_start(v);
    for (int a = 0; a < pm.block_sizes[u - 1]; ++a)
      for (int b = 0; b < pm.block_sizes[v - 1]; ++b)
        blk[a][b] = pm.entries[rb + a][cb + b];
    return block_counts(blk, rows);
  };
  return reconstruct_from_counts(rows, type, counts);
}

Tableau reconstruct_from_reduced(int rows, const std::vector<int>& type,
                                 const std::vector<CountMatrix>& pmr) {
  check(static_cast<int>(pmr.size()) >= rows, Errc::inconsistent,
        "need reduced matrices for levels 0..r-1");
  auto counts = [&](int u, int v) {
    std::vector<int> cnt(rows, 0);
    for (int i = 1; i <= rows - 1; ++i) cnt[i] = pmr[i][u - 1][v - 1];
    return cnt;
  };
  return reconstruct_from_counts(rows, type, counts);
}

Tableau reconstruct_from_permutations(int rows, const std::vector<int>& type,
                                      std::vector<PromotionFunction> perms) {
  int t = 0;
  for (int c : type) t += std::abs(c);
  check(static_cast<int>(perms.size()) == rows / 2, Errc::inconsistent,
        "need promotion permutations for levels 1..floor(r/2)");
  std::vector<PromotionFunction> all(rows + 1);
  all[0].level = 0;
  all[0].map.resize(t);
  for (int a = 1; a <= t; ++a) all[0].map[a - 1] = a;
  all[rows] = all[0];
  all[rows].level = rows;
  for (int i = 1; i <= rows / 2; ++i) {
    check(static_cast<int>(perms[i - 1].map.size()) == t &&
              perms[i - 1].is_permutation(),
          Errc::inconsistent, "promotion permutations must be bijections");
    all[i] = perms[i - 1];
    all[i].level = i;
    all[rows - i] = perms[i - 1].inverse();
    all[rows - i].level = rows - i;
  }

  // Decode the row of every oscillized entry from the antiexcedance sets.
  std::vector<std::vector<bool>> aexc(rows, std::vector<bool>(t + 1, false));
  for (int i = 1; i <= rows - 1; ++i)
    for (int a : antiexcedance_set(all[i])) aexc[i][a] = true;

  std::vector<int> sign_at(t + 1, 1);
  {
    int pos = 1;
    for (int c : type)
      for (int k = 0; k < std::abs(c); ++k) sign_at[pos++] = c >= 0 ? 1 : -1;
  }
  Word osc;
  for (int a = 1; a <= t; ++a) {
    int row;
    if (sign_at[a] > 0) {
      row = rows;
      for (int i = 1; i <= rows - 1; ++i)
        if (aexc[i][a]) {
          row = i;
          break;
        }
      osc.push_back(Letter::make({row}));
    } else {
      row = 1;
      for (int i = rows - 1; i >= 1; --i)
        if (aexc[i][a]) {
          row = i + 1;
          break;
        }
      osc.push_back(Letter::make({-row}));
    }
  }

  auto err = Tableau::validate(rows, zero_part(rows), osc);
  check(!err, Errc::inconsistent,
        "decoded word is not a lattice word: no preimage");
  Tableau osc_t = Tableau::build(rows, zero_part(rows), osc);
  Tableau out = [&] {
    try {
      return unoscillize(osc_t, type);
    } catch (const Error&) {
      fail(Errc::inconsistent, "decoded word does not regroup to the type");
    }
  }();
  check(out.is_rectangular(), Errc::inconsistent,
        "decoded tableau is not rectangular");
  // The decoding must reproduce the given permutations.
  auto round = promotion_functions(out);
  for (int i = 1; i <= rows / 2; ++i)
    check(round[i].map == all[i].map, Errc::inconsistent,
          "permutations are not realized by any tableau of this type");
  return out;
}

}  // namespace fluctab
