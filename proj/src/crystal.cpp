#include "fluctab/crystal.hpp"

#include <algorithm>
#include <cstdlib>

#include "fluctab/growth.hpp"

namespace fluctab {

namespace {

// +1 for '[', -1 for ']', 0 when the letter carries no bracket at this level.
int bracket_of(const Letter& l, int level) {
  bool open = (l.contains(level) && !l.contains(level + 1)) ||
              (l.contains(-(level + 1)) && !l.contains(-level));
  bool close = (l.contains(level + 1) && !l.contains(level)) ||
               (l.contains(-level) && !l.contains(-(level + 1)));
  if (open) return 1;
  if (close) return -1;
  return 0;
}

Letter raise_letter(const Letter& l, int level) {
  std::vector<int> elems = l.elems();
  for (int& v : elems) {
    if (v == level + 1) { v = level; return Letter::make(std::move(elems)); }
    if (v == -level) { v = -(level + 1); return Letter::make(std::move(elems)); }
  }
  fail(Errc::inconsistent, "raising operator applied to a non-']' letter");
}

Letter lower_letter(const Letter& l, int level) {
  std::vector<int> elems = l.elems();
  for (int& v : elems) {
    if (v == level) { v = level + 1; return Letter::make(std::move(elems)); }
    if (v == -(level + 1)) { v = -level; return Letter::make(std::move(elems)); }
  }
  fail(Errc::inconsistent, "lowering operator applied to a non-'[' letter");
}

// Allocation-free scans used by the hot loops. Unmatched '[' form a suffix
// of the pushes, so the leftmost one is found by a reverse scan.
int rightmost_unmatched_close(const Word& w, int level) {
  int open = 0, pos = 0;
  for (size_t j = 0; j < w.size(); ++j) {
    int b = bracket_of(w[j], level);
    if (b > 0) {
      ++open;
    } else if (b < 0) {
      if (open > 0)
        --open;
      else
        pos = static_cast<int>(j + 1);
    }
  }
  return pos;
}

int leftmost_unmatched_open(const Word& w, int level) {
  int close = 0, pos = 0;
  for (size_t j = w.size(); j-- > 0;) {
    int b = bracket_of(w[j], level);
    if (b < 0) {
      ++close;
    } else if (b > 0) {
      if (close > 0)
        --close;
      else
        pos = static_cast<int>(j + 1);
    }
  }
  return pos;
}

}  // namespace

BracketScan bracket_scan(const Word& w, int level, int rows) {
  check(1 <= level && level <= rows - 1, Errc::index_out_of_range,
        "crystal level out of range", level);
  BracketScan out;
  out.phi.assign(w.size(), 0);
  out.eps.assign(w.size(), 0);
  std::vector<int> open_stack;
  for (size_t j = 0; j < w.size(); ++j) {
    int b = bracket_of(w[j], level);
    if (b > 0) {
      out.phi[j] = 1;
      open_stack.push_back(static_cast<int>(j + 1));
    } else if (b < 0) {
      out.eps[j] = 1;
      if (!open_stack.empty())
        open_stack.pop_back();
      else
        out.rightmost_unmatched_close = static_cast<int>(j + 1);
    }
  }
  if (!open_stack.empty()) out.leftmost_unmatched_open = open_stack.front();
  return out;
}

std::optional<Word> apply_f(const Word& w, int level, int rows) {
  BracketScan s = bracket_scan(w, level, rows);
  if (s.leftmost_unmatched_open == 0) return std::nullopt;
  Word out = w;
  out[s.leftmost_unmatched_open - 1] =
      lower_letter(out[s.leftmost_unmatched_open - 1], level);
  return out;
}

std::optional<Word> apply_e(const Word& w, int level, int rows) {
  BracketScan s = bracket_scan(w, level, rows);
  if (s.rightmost_unmatched_close == 0) return std::nullopt;
  Word out = w;
  out[s.rightmost_unmatched_close - 1] =
      raise_letter(out[s.rightmost_unmatched_close - 1], level);
  return out;
}

bool is_highest_weight(const Word& w, int rows) {
  for (int level = 1; level <= rows - 1; ++level)
    if (rightmost_unmatched_close(w, level) != 0) return false;
  return true;
}

bool is_lowest_weight(const Word& w, int rows) {
  for (int level = 1; level <= rows - 1; ++level)
    if (leftmost_unmatched_open(w, level) != 0) return false;
  return true;
}

namespace {

RaisingLog raise_in_place(Word& cur, int rows) {
  RaisingLog log;
  for (;;) {
    bool acted = false;
    for (int level = 1; level <= rows - 1 && !acted; ++level) {
      int pos = rightmost_unmatched_close(cur, level);
      if (pos != 0) {
        cur[pos - 1] = raise_letter(cur[pos - 1], level);
        log.push_back({level, pos});
        acted = true;
      }
    }
    if (!acted) return log;
  }
}

}  // namespace

std::pair<Word, RaisingLog> raise_to_highest(const Word& w, int rows) {
  Word cur = w;
  RaisingLog log = raise_in_place(cur, rows);
  return {std::move(cur), std::move(log)};
}

std::pair<Word, RaisingLog> lower_to_lowest(const Word& w, int rows) {
  Word cur = w;
  RaisingLog log;
  for (;;) {
    bool acted = false;
    for (int level = 1; level <= rows - 1 && !acted; ++level) {
      int pos = leftmost_unmatched_open(cur, level);
      if (pos != 0) {
        cur[pos - 1] = lower_letter(cur[pos - 1], level);
        log.push_back({level, pos});
        acted = true;
      }
    }
    if (!acted) return {cur, log};
  }
}

// --- promotion ----------------------------------------------------------------

namespace {

Letter letter_from_weight_delta(const Part& delta) {
  std::vector<int> elems;
  for (size_t i = 0; i < delta.size(); ++i) {
    check(delta[i] == 0 || delta[i] == 1 || delta[i] == -1, Errc::inconsistent,
          "appended letter is not a column");
    if (delta[i] != 0) elems.push_back(delta[i] * static_cast<int>(i + 1));
  }
  return Letter::make(std::move(elems));
}

}  // namespace

Tableau promote_via_crystal(const Tableau& t, CrystalPromotionTrace* trace) {
  check(!t.is_skew(), Errc::bad_input,
        "crystal promotion requires initial shape zero");
  if (t.length() == 0) return t;
  int rows = t.rows();
  const Letter first = t.word().front();
  int passes = first.size();

  // Oscillize the first letter only; cut one singleton per pass.
  Word cur;
  cur.reserve(t.length() + passes);
  for (int v : first.elems()) cur.push_back(Letter::make({v}));
  cur.insert(cur.end(), t.word().begin() + 1, t.word().end());

  for (int pass = 0; pass < passes; ++pass) {
    if (trace) trace->pass_inputs.push_back(cur);
    Letter head = std::move(cur.front());
    cur.erase(cur.begin());
    RaisingLog log = raise_in_place(cur, rows);
    // The raising steps transfer weight e_{level+1} -> e_level; whatever is
    // left of the cut singleton's weight gets appended.
    Part delta = head.indicator(rows);
    for (const RaisingStep& s : log) {
      delta[s.level - 1] -= 1;
      delta[s.level] += 1;
    }
    Letter appended = letter_from_weight_delta(delta);
    check(appended.size() == 1, Errc::inconsistent,
          "crystal promotion pass must append one singleton");
    cur.push_back(appended);
    if (trace) {
      trace->pass_logs.push_back(std::move(log));
      trace->appended.push_back(std::move(appended));
    }
  }

  // Merge the appended singletons back into one letter.
  Word out(cur.begin(), cur.end() - std::max(passes, 0));
  if (passes == 0) {
    out.push_back(Letter{});  // a zero step cycles to a zero step
  } else {
    std::vector<int> elems;
    for (int k = 0; k < passes; ++k)
      elems.push_back(cur[cur.size() - passes + k].elems()[0]);
    out.push_back(Letter::make(std::move(elems)));
  }
  return Tableau::build(rows, t.initial_shape(), std::move(out));
}

// --- balance points ------------------------------------------------------------

int balance_slack(const Word& w, int level, int j) {
  check(0 <= j && j < static_cast<int>(w.size()), Errc::index_out_of_range,
        "prefix index out of range", j);
  int slack = 0;
  for (int k = 0; k <= j; ++k) {
    if (w[k].contains(level)) ++slack;
    if (w[k].contains(-level)) --slack;
    if (w[k].contains(level + 1)) --slack;
    if (w[k].contains(-(level + 1))) ++slack;
  }
  return slack;
}

BalancePath first_balance_path(const Word& w, int rows) {
  check(!w.empty() && w.front().size() == 1, Errc::bad_input,
        "balance prediction needs a singleton first letter");
  int n = static_cast<int>(w.size());
  bool positive = !w.front().negative();
  BalancePath out;
  int j = 0;
  for (int h = 1; h <= rows - 1; ++h) {
    int level = positive ? h : rows - h;
    int found = -1;
    for (int k = j; k < n; ++k)
      if (balance_slack(w, level, k) == 0) {
        found = k;
        break;
      }
    if (found < 0) {
      out.appended =
          Letter::make({positive ? h : -(rows - h + 1)});
      return out;
    }
    out.levels.push_back(level);
    out.positions.push_back(found);
    j = found;
  }
  out.appended = Letter::make({positive ? rows : -1});
  return out;
}

// --- reduced matrices via the raising algorithm --------------------------------

std::vector<CountMatrix> reduced_matrices_via_crystal(const Tableau& t) {
  check(!t.is_skew(), Errc::bad_input,
        "crystal route requires initial shape zero");
  int rows = t.rows();
  int n = t.length();
  std::vector<CountMatrix> out(rows, CountMatrix(n, std::vector<int>(n, 0)));

  // Off-diagonal entries: count raising applications per original index.
  Tableau cur = t;
  for (int u = 1; u <= n; ++u) {
    int s = std::abs(cur.type().front());
    CrystalPromotionTrace trace;
    Tableau next = promote_via_crystal(cur, &trace);
    for (int pass = 0; pass < static_cast<int>(trace.pass_logs.size());
         ++pass) {
      int remnants = s - 1 - pass;  // singletons of the first letter left
      for (const RaisingStep& st : trace.pass_logs[pass]) {
        int j = st.pos - remnants;  // index in the original word, 1..n-1
        if (j >= 1 && j <= n - 1)
          ++out[st.level][u - 1][(u - 1 + j) % n];
      }
    }
    cur = next;
  }

  // Diagonal entries come from the triangular grids.
  for (int u = 1; u <= n; ++u) {
    int c = t.type()[u - 1];
    int m = std::abs(c);
    out[0][u - 1][u - 1] = m;
    for (int i = 1; i <= rows - 1; ++i) {
      int from_u = c >= 0 ? std::max(m - i, 0) : std::max(m - (rows - i), 0);
      int from_l = c >= 0 ? std::max(m - (rows - i), 0) : std::max(m - i, 0);
      out[i][u - 1][u - 1] = from_u + from_l;
    }
  }
  return out;
}

}  // namespace fluctab
