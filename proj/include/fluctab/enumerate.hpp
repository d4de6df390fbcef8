#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fluctab/tableau.hpp"

namespace fluctab {

struct EnumSpec {
  int rows = 1;
  std::vector<int> type;               // required: signed step sizes
  std::optional<Part> final_shape;
  Part initial;                        // empty = zero shape
  bool rectangular_only = false;
};

// Depth-first streaming enumeration, duplicate-free. The callback returns
// false to stop early. Returns the number of tableaux visited.
std::uint64_t enumerate_ft(const EnumSpec& spec,
                           const std::function<bool(const Tableau&)>& fn);

std::uint64_t count_ft(const EnumSpec& spec);

// Counts all words of the given letter sizes (not only lattice words) that
// are highest weight with the given weight. Independent of the lattice-word
// validator; must agree with count_ft.
std::uint64_t count_hw_oracle(int rows, const std::vector<int>& type,
                              const Part& final_shape);

// Counts for a type and a permutation of it; equal by rearrangement symmetry.
std::pair<std::uint64_t, std::uint64_t> rearrangement_check(
    int rows, const std::vector<int>& type, const Part& final_shape,
    const std::vector<int>& permutation);

// All signed types c with entries |c_i| in [1, max_letter] and total size
// exactly t.
std::vector<std::vector<int>> all_types(int t, int max_letter);

// Runs fn over every tableau of every type with total size total, letter
// sizes 1..max_letter, initial shape zero, splitting the first-letter choices
// across up to `threads` workers. fn must be thread-safe.
void for_each_tableau_parallel(int rows, int total, int max_letter,
                               int threads,
                               const std::function<void(const Tableau&)>& fn);

int default_thread_count();

}  // namespace fluctab
