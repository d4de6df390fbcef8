#include "fluctab/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "fluctab/crystal.hpp"

namespace fluctab {

namespace {

// All letters of the given signed size addable to `shape`.
std::vector<Letter> valid_letters(int rows, const Part& shape, int c) {
  std::vector<Letter> out;
  int m = std::abs(c);
  if (m > rows) return out;
  std::vector<int> pick(m);
  // Iterate over m-subsets of {1..rows}.
  for (int k = 0; k < m; ++k) pick[k] = k + 1;
  auto emit = [&] {
    std::vector<int> elems;
    Part next = shape;
    for (int row : pick) {
      elems.push_back(c >= 0 ? row : -row);
      next[row - 1] += c >= 0 ? 1 : -1;
    }
    if (is_weakly_decreasing(next)) out.push_back(Letter::make(elems));
  };
  if (m == 0) {
    out.push_back(Letter{});
    return out;
  }
  for (;;) {
    emit();
    int k = m - 1;
    while (k >= 0 && pick[k] == rows - (m - 1 - k)) --k;
    if (k < 0) break;
    ++pick[k];
    for (int j = k + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

struct DfsCtx {
  const EnumSpec* spec;
  const std::function<bool(const Tableau&)>* fn;
  Word word;
  std::uint64_t count = 0;
  bool stopped = false;
};

void dfs(DfsCtx& ctx, const Part& shape, size_t depth) {
  if (ctx.stopped) return;
  const EnumSpec& spec = *ctx.spec;
  if (depth == spec.type.size()) {
    if (spec.final_shape && shape != *spec.final_shape) return;
    if (spec.rectangular_only &&
        !std::all_of(shape.begin(), shape.end(),
                     [&](int v) { return v == shape[0]; }))
      return;
    ++ctx.count;
    Tableau t = Tableau::build(spec.rows, spec.initial.empty()
                                              ? zero_part(spec.rows)
                                              : spec.initial,
                               ctx.word);
    if (!(*ctx.fn)(t)) ctx.stopped = true;
    return;
  }
  for (const Letter& l : valid_letters(spec.rows, shape, spec.type[depth])) {
    ctx.word.push_back(l);
    dfs(ctx, add(shape, l.indicator(spec.rows)), depth + 1);
    ctx.word.pop_back();
    if (ctx.stopped) return;
  }
}

}  // namespace

std::uint64_t enumerate_ft(const EnumSpec& spec,
                           const std::function<bool(const Tableau&)>& fn) {
  check(spec.rows >= 1, Errc::bad_input, "need at least one row");
  Part initial = spec.initial.empty() ? zero_part(spec.rows) : spec.initial;
  check(static_cast<int>(initial.size()) == spec.rows, Errc::bad_input,
        "initial shape has wrong length");
  check(is_weakly_decreasing(initial), Errc::bad_input,
        "initial shape is not weakly decreasing");
  DfsCtx ctx;
  ctx.spec = &spec;
  ctx.fn = &fn;
  dfs(ctx, initial, 0);
  return ctx.count;
}

std::uint64_t count_ft(const EnumSpec& spec) {
  return enumerate_ft(spec, [](const Tableau&) { return true; });
}

std::uint64_t count_hw_oracle(int rows, const std::vector<int>& type,
                              const Part& final_shape) {
  // Enumerate every word of the given letter sizes, with no pruning, and
  // test highest weight through the bracketing rule.
  std::vector<std::vector<Letter>> alphabet;
  for (int c : type) {
    std::vector<Letter> letters;
    int m = std::abs(c);
    std::vector<int> pick(m);
    for (int k = 0; k < m; ++k) pick[k] = k + 1;
    if (m == 0) {
      letters.push_back(Letter{});
    } else {
      for (;;) {
        std::vector<int> elems;
        for (int row : pick) elems.push_back(c >= 0 ? row : -row);
        letters.push_back(Letter::make(elems));
        int k = m - 1;
        while (k >= 0 && pick[k] == rows - (m - 1 - k)) --k;
        if (k < 0) break;
        ++pick[k];
        for (int j = k + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
    alphabet.push_back(std::move(letters));
  }
  std::uint64_t count = 0;
  Word w(type.size());
  std::function<void(size_t)> rec = [&](size_t depth) {
    if (depth == type.size()) {
      if (word_weight(w, rows) == final_shape && is_highest_weight(w, rows))
        ++count;
      return;
    }
    for (const Letter& l : alphabet[depth]) {
      w[depth] = l;
      rec(depth + 1);
    }
  };
  rec(0);
  return count;
}

std::pair<std::uint64_t, std::uint64_t> rearrangement_check(
    int rows, const std::vector<int>& type, const Part& final_shape,
    const std::vector<int>& permutation) {
  check(permutation.size() == type.size(), Errc::bad_input,
        "permutation length mismatch");
  std::vector<int> permuted(type.size());
  std::vector<bool> seen(type.size(), false);
  for (size_t k = 0; k < type.size(); ++k) {
    int p = permutation[k];
    check(1 <= p && p <= static_cast<int>(type.size()) && !seen[p - 1],
          Errc::bad_input, "not a permutation");
    seen[p - 1] = true;
    permuted[k] = type[p - 1];
  }
  EnumSpec a{rows, type, final_shape, {}, false};
  EnumSpec b{rows, permuted, final_shape, {}, false};
  return {count_ft(a), count_ft(b)};
}

std::vector<std::vector<int>> all_types(int t, int max_letter) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int rest) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int m = 1; m <= std::min(rest, max_letter); ++m)
      for (int sign : {1, -1}) {
        cur.push_back(sign * m);
        rec(rest - m);
        cur.pop_back();
      }
  };
  rec(t);
  return out;
}

int default_thread_count() {
  if (const char* env = std::getenv("FLUCTAB_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

void for_each_tableau_parallel(int rows, int total, int max_letter,
                               int threads,
                               const std::function<void(const Tableau&)>& fn) {
  if (threads <= 0) threads = default_thread_count();
  std::vector<std::vector<int>> types = all_types(total, max_letter);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t k = next.fetch_add(1);
      if (k >= types.size()) return;
      EnumSpec spec;
      spec.rows = rows;
      spec.type = types[k];
      enumerate_ft(spec, [&](const Tableau& t) {
        fn(t);
        return true;
      });
    }
  };
  if (threads == 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace fluctab
