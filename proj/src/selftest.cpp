#include "fluctab/selftest.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

#include "fluctab/bk.hpp"
#include "fluctab/crystal.hpp"
#include "fluctab/dihedral.hpp"
#include "fluctab/enumerate.hpp"
#include "fluctab/grid.hpp"
#include "fluctab/growth.hpp"
#include "fluctab/jdt.hpp"
#include "fluctab/serialize.hpp"

namespace fluctab {

namespace {

using Clock = std::chrono::steady_clock;

Word make_word(const std::vector<std::vector<int>>& letters) {
  Word w;
  for (const auto& l : letters) w.push_back(Letter::make(l));
  return w;
}

Tableau running_example() {
  return Tableau::build(
      4, make_word({{1, 2}, {-4}, {1, 3, 4}, {2}, {-3, -2}, {3, 4}, {-1}}));
}

// Thread-safe failure sink keeping the first witness.
struct Failures {
  std::atomic<bool> ok{true};
  std::mutex mu;
  std::string detail;

  void report(const std::string& what) {
    bool expected = true;
    if (ok.compare_exchange_strong(expected, false)) {
      std::lock_guard<std::mutex> lk(mu);
      detail = what;
    }
  }
  void expect(bool cond, const std::string& what) {
    if (!cond) report(what);
  }
};

CheckResult finish(const std::string& name, const Failures& f,
                   std::uint64_t cases, Clock::time_point start) {
  CheckResult r;
  r.name = name;
  r.pass = f.ok.load();
  r.cases = cases;
  r.seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
  r.detail = f.detail;
  return r;
}

std::string witness(const Tableau& t, const char* what);

// Runs the body and converts any stray exception into a failure report.
template <typename Body>
void guarded(const Tableau& t, Failures& f, Body&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    f.report(witness(t, "unexpected exception") + ": " + e.what());
  }
}

std::string witness(const Tableau& t, const char* what) {
  return std::string(what) + " at " + word_to_text(t.word()) + " (r=" +
         std::to_string(t.rows()) + ")";
}

bool equal_interval_matrix(const PromotionMatrix& a, const PromotionMatrix& b) {
  return a.t == b.t && a.entries == b.entries;
}

PromotionMatrix transform_entries(
    const PromotionMatrix& pm,
    const std::function<Interval(int a, int b)>& f) {
  PromotionMatrix out = pm;
  for (int a = 0; a < pm.t; ++a)
    for (int b = 0; b < pm.t; ++b) out.entries[a][b] = f(a, b);
  return out;
}

Interval reflect_levels(const Interval& e, int rows) {
  if (e.empty()) return e;
  return {rows - e.hi, rows - e.lo};
}

}  // namespace

// --- criterion 1 -------------------------------------------------------------

CheckResult check_golden_running_example() {
  auto start = Clock::now();
  Failures f;
  std::uint64_t cases = 0;
  Tableau t = running_example();

  auto expect_word = [&](const Tableau& got,
                         const std::vector<std::vector<int>>& want,
                         const char* what) {
    ++cases;
    f.expect(got.word() == make_word(want),
             std::string(what) + " mismatch: got " + word_to_text(got.word()));
  };

  expect_word(promote(t), {{-4}, {1, 2, 4}, {1}, {-4, -2}, {2, 4}, {-1}, {3, 4}},
              "L(P(T))");
  expect_word(evacuate(t), {{-4}, {1, 2}, {-3, -2}, {3}, {1, 2, 4}, {-1}, {3, 4}},
              "L(E(T))");
  expect_word(devacuate(t),
              {{-4}, {1, 2}, {-3, -2}, {3}, {1, 2, 4}, {-1}, {3, 4}},
              "L(dual E(T))");

  // The 12x12 promotion matrix, given as (row, column, level) triples of the
  // singleton entries; every other entry is empty.
  const std::vector<std::array<int, 3>> pm_entries = {
      {1, 1, 0},  {1, 2, 1},  {1, 5, 2},  {1, 8, 3},   {2, 1, 3},  {2, 2, 0},
      {2, 7, 1},  {2, 10, 2}, {3, 3, 0},  {3, 6, 3},   {3, 9, 2},  {3, 12, 1},
      {4, 4, 0},  {4, 5, 1},  {4, 6, 2},  {4, 11, 3},  {5, 1, 2},  {5, 4, 3},
      {5, 5, 0},  {5, 6, 1},  {6, 3, 1},  {6, 4, 2},   {6, 5, 3},  {6, 6, 0},
      {7, 2, 3},  {7, 7, 0},  {7, 10, 1}, {7, 12, 2},  {8, 1, 1},  {8, 8, 0},
      {8, 9, 3},  {8, 11, 2}, {9, 3, 2},  {9, 8, 1},   {9, 9, 0},  {9, 12, 3},
      {10, 2, 2}, {10, 7, 3}, {10, 10, 0}, {10, 11, 1}, {11, 4, 1}, {11, 8, 2},
      {11, 10, 3}, {11, 11, 0}, {12, 3, 3}, {12, 7, 2}, {12, 9, 1}, {12, 12, 0},
  };
  PromotionMatrix pm = promotion_matrix(t);
  ++cases;
  if (pm.t != 12) {
    f.report("PM(T) has wrong size");
  } else {
    std::vector<std::vector<Interval>> want(
        12, std::vector<Interval>(12, Interval::empty_interval()));
    for (auto [a, b, lvl] : pm_entries) want[a - 1][b - 1] = Interval::single(lvl);
    f.expect(pm.entries == want, "PM(T) does not match the golden matrix");
  }

  const std::vector<CountMatrix> pmr_want = {
      {{2, 0, 0, 0, 0, 0, 0},
       {0, 1, 0, 0, 0, 0, 0},
       {0, 0, 3, 0, 0, 0, 0},
       {0, 0, 0, 1, 0, 0, 0},
       {0, 0, 0, 0, 2, 0, 0},
       {0, 0, 0, 0, 0, 2, 0},
       {0, 0, 0, 0, 0, 0, 1}},
      {{1, 0, 0, 1, 0, 0, 0},
       {0, 0, 0, 0, 0, 0, 1},
       {0, 1, 2, 0, 0, 0, 0},
       {0, 0, 0, 0, 0, 1, 0},
       {1, 0, 0, 0, 1, 0, 0},
       {0, 0, 1, 0, 0, 1, 0},
       {0, 0, 0, 0, 1, 0, 0}},
      {{0, 0, 1, 0, 0, 1, 0},
       {0, 0, 0, 0, 1, 0, 0},
       {1, 0, 2, 0, 0, 0, 0},
       {0, 0, 0, 0, 0, 0, 1},
       {0, 1, 0, 0, 0, 1, 0},
       {1, 0, 0, 0, 1, 0, 0},
       {0, 0, 0, 1, 0, 0, 0}},
      {{1, 0, 0, 0, 1, 0, 0},
       {0, 0, 1, 0, 0, 0, 0},
       {0, 0, 2, 0, 0, 1, 0},
       {1, 0, 0, 0, 0, 0, 0},
       {0, 0, 0, 0, 1, 0, 1},
       {0, 0, 0, 1, 0, 1, 0},
       {0, 1, 0, 0, 0, 0, 0}},
  };
  auto pmr = reduced_matrices(pm);
  ++cases;
  f.expect(std::vector<CountMatrix>(pmr.begin(), pmr.end()) == pmr_want,
           "reduced promotion matrices mismatch");

  auto perms = promotion_functions(pm);
  const std::vector<int> prom1 = {2, 7, 12, 5, 6, 3, 10, 1, 8, 11, 4, 9};
  const std::vector<int> prom2 = {5, 10, 9, 6, 1, 4, 12, 11, 3, 2, 8, 7};
  const std::vector<int> prom3 = {8, 1, 6, 11, 4, 5, 2, 9, 12, 7, 10, 3};
  const std::vector<int> ident = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  ++cases;
  f.expect(perms[1].map == prom1 && perms[2].map == prom2 &&
               perms[3].map == prom3 && perms[0].map == ident &&
               perms[4].map == ident,
           "promotion permutations mismatch");
  ++cases;
  f.expect(antiexcedance_set(perms[1]) == std::vector<int>({1, 3, 4, 8, 9}) &&
               antiexcedance_set(perms[2]) ==
                   std::vector<int>({1, 2, 3, 4, 7, 8}) &&
               antiexcedance_set(perms[3]) ==
                   std::vector<int>({1, 2, 3, 4, 5, 7, 10}),
           "antiexcedance sets mismatch");

  // Promotion orbit of the oscillization, all twelve frames.
  const std::vector<std::vector<int>> orbit_frames = {
      {1, 2, -4, 1, 3, 4, 2, -3, -2, 3, 4, -1},
      {1, -4, 1, 2, 4, 2, -4, -2, 3, 4, -1, 4},
      {-4, 1, 2, 4, 1, -4, -2, 2, 4, -1, 3, 4},
      {1, 2, 3, 1, -4, -3, 2, 4, -2, 3, 4, -1},
      {1, 2, 1, -4, -3, 2, 3, -2, 3, 4, -1, 4},
      {1, 1, -4, -3, 2, 3, -2, 2, 4, -1, 3, 4},
      {1, -4, -3, 2, 3, -2, 2, 4, -2, 2, 3, 4},
      {-4, -3, 1, 3, -3, 2, 3, -2, 2, 3, 4, 4},
      {-4, 1, 2, -3, 1, 3, -2, 2, 3, 4, 4, -1},
      {1, 2, -4, 1, 3, -3, 2, 3, 4, 4, -2, -1},
      {1, -4, 1, 2, -3, 2, 3, 4, 3, -2, -1, 4},
      {-4, 1, 2, -3, 1, 3, 4, 3, -3, -1, 3, 4},
  };
  std::vector<Tableau> orb = orbit(oscillize(t), OrbitOp::promotion);
  ++cases;
  if (orb.size() != 12) {
    f.report("promotion orbit of std(T) has length " +
             std::to_string(orb.size()));
  } else {
    for (int k = 0; k < 12; ++k) {
      std::vector<std::vector<int>> frame;
      for (int v : orbit_frames[k]) frame.push_back({v});
      if (orb[k].word() != make_word(frame)) {
        f.report("orbit frame " + std::to_string(k) + " mismatch: got " +
                 word_to_text(orb[k].word()));
        break;
      }
    }
    ++cases;
  }

  CheckResult r = finish("criterion 1: golden running example", f, cases, start);
  if (r.pass && r.seconds >= 1.0) {
    r.pass = false;
    r.detail = "exceeded the 1 s budget";
  }
  return r;
}

// --- criterion 2 -------------------------------------------------------------

CheckResult check_golden_standard_example() {
  auto start = Clock::now();
  Failures f;
  std::uint64_t cases = 0;

  // 4x4 standard tableau with rows {1,2,5,6}, {3,4,7,10}, {8,9,11,14},
  // {12,13,15,16}, encoded by the row of each entry.
  const std::vector<int> entry_rows = {1, 1, 2, 2, 1, 1, 2, 3,
                                       3, 2, 3, 4, 4, 3, 4, 4};
  Word w;
  for (int row : entry_rows) w.push_back(Letter::make({row}));
  Tableau e = Tableau::build(4, std::move(w));

  auto perms = promotion_functions(e);
  const std::vector<int> prom1 = {4, 3, 14, 10, 9, 7, 8, 16,
                                  13, 11, 12, 6, 5, 15, 2, 1};
  const std::vector<int> prom2 = {14, 9, 16, 15, 11, 8, 13, 6,
                                  2, 12, 5, 10, 7, 1, 4, 3};
  const std::vector<int> prom3 = {16, 15, 2, 1, 13, 12, 6, 7,
                                  5, 4, 10, 11, 9, 3, 14, 8};
  ++cases;
  f.expect(perms[1].map == prom1, "prom_1 of the standard example mismatch");
  ++cases;
  f.expect(perms[2].map == prom2, "prom_2 of the standard example mismatch");
  ++cases;
  f.expect(perms[3].map == prom3, "prom_3 of the standard example mismatch");
  ++cases;
  f.expect(perms[3].map == perms[1].inverse().map,
           "prom_3 is not the inverse of prom_1");
  ++cases;
  {
    bool fpf_involution = true;
    for (int a = 1; a <= 16; ++a) {
      int b = perms[2].map[a - 1];
      if (b == a || perms[2].map[b - 1] != a) fpf_involution = false;
    }
    f.expect(fpf_involution, "prom_2 is not a fixed-point free involution");
  }
  ++cases;
  f.expect(antiexcedance_set(perms[1]) == std::vector<int>({1, 2, 5, 6}),
           "prom_1 antiexcedances mismatch");
  ++cases;
  f.expect(antiexcedance_set(perms[2]) ==
               std::vector<int>({1, 2, 3, 4, 5, 6, 7, 10}),
           "prom_2 antiexcedances mismatch");
  ++cases;
  f.expect(antiexcedance_set(perms[3]) ==
               std::vector<int>({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 14}),
           "prom_3 antiexcedances mismatch");

  CheckResult r =
      finish("criterion 2: golden standard example", f, cases, start);
  if (r.pass && r.seconds >= 1.0) {
    r.pass = false;
    r.detail = "exceeded the 1 s budget";
  }
  return r;
}

// --- criterion 3 -------------------------------------------------------------

CheckResult check_promotion_agreement(const SelftestOptions& o) {
  auto start = Clock::now();
  Failures f;
  std::atomic<std::uint64_t> cases{0};
  for (int rows = 1; rows <= o.max_rows; ++rows)
    for (int total = 1; total <= o.tmax; ++total)
      for_each_tableau_parallel(
          rows, total, rows, o.threads, [&](const Tableau& t) {
            if (!f.ok.load(std::memory_order_relaxed)) return;
            cases.fetch_add(1, std::memory_order_relaxed);
            guarded(t, f, [&] {
              Tableau a = promote(t);
              if (bk_promote(t) != a)
                f.report(witness(t, "BK promotion disagrees"));
              else if (promote_via_jdt(t) != a)
                f.report(witness(t, "jdt promotion disagrees"));
              else if (promote_via_crystal(t) != a)
                f.report(witness(t, "crystal promotion disagrees"));
            });
          });
  return finish("criterion 3: four-way promotion agreement", f, cases.load(),
                start);
}

// --- criterion 4 -------------------------------------------------------------

namespace {

void rectangular_checks(const Tableau& t, Failures& f) {
  int n = t.length(), total = t.total_size(), rows = t.rows();
  Tableau e = evacuate(t);
  if (promote_power(t, n) != t) {
    f.report(witness(t, "P^n != id"));
    return;
  }
  if (e != epsilon(t)) {
    f.report(witness(t, "E != epsilon"));
    return;
  }
  if (evacuate(e) != t) {
    f.report(witness(t, "E^2 != id"));
    return;
  }
  if (devacuate(e) != t) {
    f.report(witness(t, "E'E != P^n"));
    return;
  }

  auto perms = promotion_functions(t);
  auto perms_p = promotion_functions(promote(t));
  auto perms_e = promotion_functions(e);
  int s = n == 0 ? 0 : std::abs(t.type().front());
  auto sigma = [&](int x, int k) {  // x + k mod total, 1-indexed
    return (x - 1 + k % total + total) % total + 1;
  };
  for (int i = 0; i <= rows; ++i) {
    if (!perms[i].is_permutation()) {
      f.report(witness(t, "prom_i is not a permutation"));
      return;
    }
    if (perms[i].inverse().map != perms[rows - i].map) {
      f.report(witness(t, "prom_i != prom_{r-i}^{-1}"));
      return;
    }
    for (int x = 1; x <= total; ++x) {
      if (perms_p[i].map[x - 1] != sigma(perms[i].map[sigma(x, s) - 1], -s)) {
        f.report(witness(t, "prom_i(P(T)) != sigma conjugate"));
        return;
      }
      if (perms_e[i].map[x - 1] !=
          total + 1 - perms[rows - i].map[total - x]) {
        f.report(witness(t, "prom_i(E(T)) != w0 conjugate"));
        return;
      }
    }
    if (1 <= i && i <= rows - 1)
      for (int x = 1; x <= total; ++x)
        if (perms[i].map[x - 1] == x) {
          f.report(witness(t, "prom_i has a fixed point"));
          return;
        }
    if (rows % 2 == 0 && i == rows / 2)
      for (int x = 1; x <= total; ++x)
        if (perms[i].map[perms[i].map[x - 1] - 1] != x) {
          f.report(witness(t, "prom_{r/2} is not an involution"));
          return;
        }
  }

  // Antiexcedance decoding against oscillized membership.
  Tableau osc = oscillize(t);
  for (int i = 1; i <= rows - 1; ++i) {
    std::vector<int> aexc = antiexcedance_set(perms[i]);
    std::vector<bool> in_aexc(total + 1, false);
    for (int a : aexc) in_aexc[a] = true;
    for (int a = 1; a <= total; ++a) {
      const Letter& l = osc.letter(a);
      int row = std::abs(l.elems()[0]);
      bool want = l.negative() ? row > i : row <= i;
      if (in_aexc[a] != want) {
        f.report(witness(t, "antiexcedance decoding mismatch"));
        return;
      }
    }
  }

  // Reconstruction from the first floor(r/2) promotion permutations.
  std::vector<PromotionFunction> evidence(perms.begin() + 1,
                                          perms.begin() + 1 + rows / 2);
  try {
    if (reconstruct_from_permutations(rows, t.type(), evidence) != t) {
      f.report(witness(t, "permutation reconstruction roundtrip failed"));
      return;
    }
  } catch (const Error& err) {
    f.report(witness(t, "permutation reconstruction threw") + ": " +
             err.what());
  }
}

}  // namespace

CheckResult check_rectangular_theorems(const SelftestOptions& o) {
  auto start = Clock::now();
  Failures f;
  std::atomic<std::uint64_t> cases{0};
  for (int rows = 1; rows <= o.max_rows; ++rows)
    for (int total = 1; total <= o.tmax; ++total)
      for_each_tableau_parallel(rows, total, rows, o.threads,
                                [&](const Tableau& t) {
                                  if (!t.is_rectangular()) return;
                                  if (!f.ok.load(std::memory_order_relaxed))
                                    return;
                                  cases.fetch_add(1,
                                                  std::memory_order_relaxed);
                                  guarded(t, f,
                                          [&] { rectangular_checks(t, f); });
                                });
  return finish("criterion 4: rectangular theorem sweep", f, cases.load(),
                start);
}

// --- criterion 5 -------------------------------------------------------------

namespace {

void grid_checks(const Tableau& t, Failures& f) {
  int rows = t.rows(), n = t.length();
  GrowthDiagram pe = build_diagram(DiagramKind::promotion_evacuation, t);
  BlockGrid bg = block_grid(pe);
  PromotionMatrix pm = promotion_matrix(bg);

  // Oscillization invariance of the whole matrix. The lower triangle reads
  // the dual-evacuation grid of the n-th promotion power, and
  // std(P^n(T)) = P^t(std(T)) needs the rectangular case.
  if (t.is_rectangular() &&
      !equal_interval_matrix(pm, promotion_matrix(oscillize(t)))) {
    f.report(witness(t, "PM(std T) != PM(T)"));
    return;
  }
  // The matrix diagonal is reduced mod r, so level reflection fixes it.
  {
    PromotionMatrix want = transform_entries(pm, [&](int a, int b) {
      return a == b ? Interval::single(0)
                    : reflect_levels(pm.entries[a][b], rows);
    });
    if (!equal_interval_matrix(promotion_matrix(varpi(t)), want)) {
      f.report(witness(t, "PM(varpi T) != r - PM(T)"));
      return;
    }
  }
  if (t.is_rectangular()) {
    PromotionMatrix rt = transform_entries(pm, [&](int a, int b) {
      return a == b ? Interval::single(0)
                    : reflect_levels(pm.entries[b][a], rows);
    });
    if (!equal_interval_matrix(pm, rt)) {
      f.report(witness(t, "PM(T) != r - PM(T)^T"));
      return;
    }
    PromotionMatrix anti = transform_entries(pm, [&](int a, int b) {
      return pm.entries[pm.t - 1 - b][pm.t - 1 - a];
    });
    anti.block_sizes.assign(pm.block_sizes.rbegin(), pm.block_sizes.rend());
    if (!equal_interval_matrix(promotion_matrix(evacuate(t)), anti)) {
      f.report(witness(t, "PM(E[T]) != antitranspose"));
      return;
    }
  }

  // Weight-transfer identity on every off-diagonal block of the
  // promotion-evacuation grid, plus the row-reading pattern.
  for (int u = 1; u <= n; ++u) {
    const auto& top = pe.grid[u - 1];
    const auto& bot = pe.grid[u];
    for (int k = 1; k + 1 <= n; ++k) {
      Part ea = sub(top[k], bot[k - 1]);
      Part eb = sub(top[k + 1], bot[k]);
      Part acc = ea;
      const GridBlock& blk = bg.blocks[u - 1][k];
      for (const auto& row : blk)
        for (const Interval& e : row)
          for (int i = 1; i <= rows - 1; ++i)
            if (e.contains(i)) {
              acc[i] += 1;
              acc[i - 1] -= 1;
            }
      if (acc != eb) {
        f.report(witness(t, "block weight-transfer identity failed"));
        return;
      }
    }
    // Row reading: nonempty entries run from [0,..] to (..,r], increasing
    // and disjoint; on rectangular tableaux they chain with no gaps.
    int su = std::abs(t.type()[u - 1]);
    for (int a = 0; a < su; ++a) {
      std::vector<Interval> entries;
      for (const GridBlock& blk : bg.blocks[u - 1])
        for (const Interval& e : blk[a])
          if (!e.empty()) entries.push_back(e);
      if (t.type()[u - 1] < 0) std::reverse(entries.begin(), entries.end());
      bool good = !entries.empty() && entries.front().lo == 0 &&
                  entries.back().hi == rows;
      for (size_t k = 1; good && k < entries.size(); ++k)
        good = t.is_rectangular() ? entries[k].lo == entries[k - 1].hi + 1
                                  : entries[k].lo > entries[k - 1].hi;
      if (!good) {
        f.report(witness(t, "grid row-reading pattern failed"));
        return;
      }
    }
  }
}

}  // namespace

CheckResult check_grid_identities(const SelftestOptions& o) {
  auto start = Clock::now();
  Failures f;
  std::atomic<std::uint64_t> cases{0};
  // Matrix construction is quadratic per tableau, so this sweep caps the
  // total size at 8.
  for (int rows = 1; rows <= o.max_rows; ++rows)
    for (int total = 1; total <= std::min(o.tmax, 8); ++total)
      for_each_tableau_parallel(rows, total, rows, o.threads,
                                [&](const Tableau& t) {
                                  if (!f.ok.load(std::memory_order_relaxed))
                                    return;
                                  cases.fetch_add(1,
                                                  std::memory_order_relaxed);
                                  guarded(t, f, [&] { grid_checks(t, f); });
                                });
  return finish("criterion 5: grid identities sweep", f, cases.load(), start);
}

// --- criterion 6 -------------------------------------------------------------

namespace {

std::vector<Letter> small_alphabet(int rows, int max_size) {
  std::vector<Letter> out;
  for (int m = 1; m <= std::min(rows, max_size); ++m) {
    std::vector<int> pick(m);
    for (int k = 0; k < m; ++k) pick[k] = k + 1;
    for (;;) {
      std::vector<int> pos, neg;
      for (int row : pick) {
        pos.push_back(row);
        neg.push_back(-row);
      }
      out.push_back(Letter::make(pos));
      out.push_back(Letter::make(neg));
      int k = m - 1;
      while (k >= 0 && pick[k] == rows - (m - 1 - k)) --k;
      if (k < 0) break;
      ++pick[k];
      for (int j = k + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

void for_all_words(int rows, int max_len, int max_size,
                   const std::function<void(const Word&)>& fn) {
  std::vector<Letter> alphabet = small_alphabet(rows, max_size);
  Word w;
  std::function<void()> rec = [&] {
    fn(w);
    if (static_cast<int>(w.size()) == max_len) return;
    for (const Letter& l : alphabet) {
      w.push_back(l);
      rec();
      w.pop_back();
    }
  };
  rec();
}

bool crystal_axiom_checks(const Word& w, int rows, Failures& f) {
  for (int level = 1; level <= rows - 1; ++level) {
    Part alpha(rows, 0);
    alpha[level - 1] = 1;
    alpha[level] = -1;
    auto down = apply_f(w, level, rows);
    if (down) {
      auto back = apply_e(*down, level, rows);
      if (!back || *back != w) {
        f.report("f/e partial inverse failed at " + word_to_text(w));
        return false;
      }
      if (word_weight(*down, rows) != sub(word_weight(w, rows), alpha)) {
        f.report("f weight shift failed at " + word_to_text(w));
        return false;
      }
    }
    auto up = apply_e(w, level, rows);
    if (up) {
      auto back = apply_f(*up, level, rows);
      if (!back || *back != w) {
        f.report("e/f partial inverse failed at " + word_to_text(w));
        return false;
      }
      if (word_weight(*up, rows) != add(word_weight(w, rows), alpha)) {
        f.report("e weight shift failed at " + word_to_text(w));
        return false;
      }
    }
  }
  return true;
}

void balance_checks(const Tableau& t, Failures& f) {
  CrystalPromotionTrace trace;
  Tableau p = promote_via_crystal(t, &trace);
  if (p != promote(t)) {
    f.report(witness(t, "crystal promotion disagrees with growth"));
    return;
  }
  for (size_t pass = 0; pass < trace.pass_inputs.size(); ++pass) {
    BalancePath path = first_balance_path(trace.pass_inputs[pass], t.rows());
    const RaisingLog& log = trace.pass_logs[pass];
    bool good = path.levels.size() == log.size() &&
                path.appended == trace.appended[pass];
    for (size_t k = 0; good && k < log.size(); ++k)
      good = path.levels[k] == log[k].level && path.positions[k] == log[k].pos;
    if (!good) {
      f.report(witness(t, "balance-point prediction mismatch"));
      return;
    }
  }
}

}  // namespace

CheckResult check_crystal_layer(const SelftestOptions& o) {
  auto start = Clock::now();
  Failures f;
  std::atomic<std::uint64_t> cases{0};

  // Axiom (A1), highest-weight/lattice equivalence, isolated/balanced
  // equivalence over all words of length <= 4, r <= 3, letter sizes <= 2.
  for (int rows = 1; rows <= 3; ++rows)
    for_all_words(rows, 4, 2, [&](const Word& w) {
      if (!f.ok.load(std::memory_order_relaxed)) return;
      cases.fetch_add(1, std::memory_order_relaxed);
      if (!crystal_axiom_checks(w, rows, f)) return;
      bool lattice = !Tableau::validate(rows, zero_part(rows), w);
      if (is_highest_weight(w, rows) != lattice) {
        f.report("hw/lattice equivalence failed at " + word_to_text(w));
        return;
      }
      if (lattice != lattice_word_naive(w, rows)) {
        f.report("validator/naive mismatch at " + word_to_text(w));
        return;
      }
      Part wt = word_weight(w, rows);
      bool balanced =
          lattice && std::all_of(wt.begin(), wt.end(),
                                 [&](int v) { return v == wt[0]; });
      bool isolated = is_highest_weight(w, rows) && is_lowest_weight(w, rows);
      if (balanced != isolated)
        f.report("isolated/balanced equivalence failed at " + word_to_text(w));
    });

  // Balance-point path prediction on every instance arising in the box.
  for (int rows = 1; rows <= o.max_rows && f.ok.load(); ++rows)
    for (int total = 1; total <= o.tmax; ++total)
      for_each_tableau_parallel(rows, total, rows, o.threads,
                                [&](const Tableau& t) {
                                  if (!f.ok.load(std::memory_order_relaxed))
                                    return;
                                  cases.fetch_add(1,
                                                  std::memory_order_relaxed);
                                  guarded(t, f, [&] { balance_checks(t, f); });
                                });

  // Reduced promotion matrices: raising-operator route equals the grid route.
  for (int rows = 1; rows <= std::min(o.max_rows, 3) && f.ok.load(); ++rows)
    for (int total = 1; total <= o.crystal_tmax; ++total)
      for_each_tableau_parallel(
          rows, total, rows, o.threads, [&](const Tableau& t) {
            if (!f.ok.load(std::memory_order_relaxed)) return;
            cases.fetch_add(1, std::memory_order_relaxed);
            guarded(t, f, [&] {
              if (reduced_matrices_via_crystal(t) != reduced_matrices(t))
                f.report(witness(t, "reduced-matrix routes disagree"));
            });
          });
  if (o.max_rows >= 4 && f.ok.load())
    for (int total = 1; total <= std::min(o.tmax, 8); ++total)
      for_each_tableau_parallel(
          4, total, 4, o.threads, [&](const Tableau& t) {
            if (!t.is_rectangular()) return;
            if (!f.ok.load(std::memory_order_relaxed)) return;
            cases.fetch_add(1, std::memory_order_relaxed);
            guarded(t, f, [&] {
              if (reduced_matrices_via_crystal(t) != reduced_matrices(t))
                f.report(witness(t, "reduced-matrix routes disagree"));
            });
          });

  // Lusztig involution: lowering evacuation gives the fundamental involution,
  // and its epsilon-twist gives dual evacuation.
  for (int rows = 1; rows <= std::min(o.max_rows, 3) && f.ok.load(); ++rows)
    for (int total = 1; total <= o.crystal_tmax; ++total)
      for_each_tableau_parallel(
          rows, total, rows, o.threads, [&](const Tableau& t) {
            if (!f.ok.load(std::memory_order_relaxed)) return;
            cases.fetch_add(1, std::memory_order_relaxed);
            guarded(t, f, [&] {
              Word eps = complemented_reversed(t.word(), t.rows());
              if (lower_to_lowest(evacuate(t).word(), t.rows()).first != eps) {
                f.report(witness(t, "eta(E(T)) != epsilon(T)"));
                return;
              }
              // The lowered word is a skew tableau anchored at the negated
              // reversal of the final shape; its dual evacuation recovers
              // the fundamental involution.
              Word low = lower_to_lowest(t.word(), t.rows()).first;
              Part init(t.final_shape().rbegin(), t.final_shape().rend());
              for (int& v : init) v = -v;
              Tableau eta_t = Tableau::build(t.rows(), init, low);
              if (bk_devacuate(eta_t).word() != eps)
                f.report(witness(t, "dual E(eta(T)) != epsilon(T)"));
            });
          });

  return finish("criterion 6: crystal layer", f, cases.load(), start);
}

// --- criterion 7 -------------------------------------------------------------

CheckResult check_counting_oracle(const SelftestOptions& o) {
  auto start = Clock::now();
  Failures f;
  std::uint64_t cases = 0;

  for (int rows = 1; rows <= std::min(o.max_rows, 3); ++rows)
    for (int n = 1; n <= 4 && f.ok.load(); ++n) {
      std::vector<std::vector<int>> types;
      std::function<void(std::vector<int>&)> rec = [&](std::vector<int>& cur) {
        if (static_cast<int>(cur.size()) == n) {
          types.push_back(cur);
          return;
        }
        for (int m = 1; m <= std::min(rows, 2); ++m)
          for (int sign : {1, -1}) {
            cur.push_back(sign * m);
            rec(cur);
            cur.pop_back();
          }
      };
      std::vector<int> cur;
      rec(cur);
      for (const auto& type : types) {
        ++cases;
        // Counts per final shape from the enumerator...
        std::map<Part, std::uint64_t> by_shape;
        EnumSpec spec;
        spec.rows = rows;
        spec.type = type;
        enumerate_ft(spec, [&](const Tableau& t) {
          ++by_shape[t.final_shape()];
          return true;
        });
        // ...must match the brute-force highest-weight counts per weight.
        std::map<Part, std::uint64_t> by_weight;
        std::vector<std::vector<Letter>> alphabet;
        for (int c : type) {
          std::vector<Letter> letters;
          for (const Letter& l : small_alphabet(rows, std::abs(c)))
            if (l.size() == std::abs(c) && (l.negative() == (c < 0)))
              letters.push_back(l);
          alphabet.push_back(std::move(letters));
        }
        Word w(type.size());
        std::function<void(size_t)> wrec = [&](size_t depth) {
          if (depth == type.size()) {
            if (is_highest_weight(w, rows)) ++by_weight[word_weight(w, rows)];
            return;
          }
          for (const Letter& l : alphabet[depth]) {
            w[depth] = l;
            wrec(depth + 1);
          }
        };
        wrec(0);
        if (by_shape != by_weight) {
          f.report("counting oracle mismatch for r=" + std::to_string(rows));
          break;
        }
      }
    }

  // Rearrangement invariance over full permutation orbits of three types.
  const std::vector<std::pair<int, std::vector<int>>> samples = {
      {3, {1, -1, 2}}, {3, {2, 1}}, {2, {1, 1, -2}}};
  for (const auto& [rows, type] : samples) {
    int n = static_cast<int>(type.size());
    std::vector<int> perm(n);
    for (int k = 0; k < n; ++k) perm[k] = k + 1;
    std::map<Part, std::uint64_t> base;
    EnumSpec spec;
    spec.rows = rows;
    spec.type = type;
    enumerate_ft(spec, [&](const Tableau& t) {
      ++base[t.final_shape()];
      return true;
    });
    do {
      ++cases;
      std::vector<int> permuted(n);
      for (int k = 0; k < n; ++k) permuted[k] = type[perm[k] - 1];
      std::map<Part, std::uint64_t> got;
      EnumSpec pspec;
      pspec.rows = rows;
      pspec.type = permuted;
      enumerate_ft(pspec, [&](const Tableau& t) {
        ++got[t.final_shape()];
        return true;
      });
      if (got != base) {
        f.report("rearrangement invariance failed");
        break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  return finish("criterion 7: counting oracle", f, cases, start);
}

std::vector<CheckResult> run_selftest(const SelftestOptions& o) {
  std::vector<CheckResult> out;
  out.push_back(check_golden_running_example());
  out.push_back(check_golden_standard_example());
  out.push_back(check_promotion_agreement(o));
  out.push_back(check_rectangular_theorems(o));
  out.push_back(check_grid_identities(o));
  out.push_back(check_crystal_layer(o));
  out.push_back(check_counting_oracle(o));
  return out;
}

}  // namespace fluctab
