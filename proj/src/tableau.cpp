#include "fluctab/tableau.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace fluctab {

Tableau Tableau::build(int rows, Part initial, Word word) {
  check(rows >= 1, Errc::bad_input, "need at least one row");
  if (initial.empty()) initial = zero_part(rows);
  check(static_cast<int>(initial.size()) == rows, Errc::bad_input,
        "initial shape has wrong length");
  check(is_weakly_decreasing(initial), Errc::not_a_partition,
        "initial shape is not weakly decreasing", 0);

  Tableau t;
  t.rows_ = rows;
  t.shapes_.reserve(word.size() + 1);
  t.shapes_.push_back(std::move(initial));
  for (size_t i = 0; i < word.size(); ++i) {
    const Letter& l = word[i];
    check(l.in_range(rows), Errc::bad_letter,
          "letter entry out of range at step " + std::to_string(i + 1),
          static_cast<int>(i + 1));
    Part next = add(t.shapes_.back(), l.indicator(rows));
    check(is_weakly_decreasing(next), Errc::not_a_partition,
          "shape at step " + std::to_string(i + 1) +
              " is not weakly decreasing",
          static_cast<int>(i + 1));
    t.shapes_.push_back(std::move(next));
  }
  t.word_ = std::move(word);
  return t;
}

Tableau Tableau::build(int rows, Word word) {
  return build(rows, zero_part(rows), std::move(word));
}

namespace detail {

Tableau tableau_from_chain(int rows, std::vector<Part> shapes, Word word) {
#ifndef NDEBUG
  Tableau reference = Tableau::build(rows, shapes.front(), word);
  if (reference.shapes() != shapes)
    fail(Errc::inconsistent, "chain does not match the word");
#endif
  Tableau t;
  t.rows_ = rows;
  t.shapes_ = std::move(shapes);
  t.word_ = std::move(word);
  return t;
}

}  // namespace detail

std::optional<Error> Tableau::validate(int rows, const Part& initial,
                                       const Word& word) {
  try {
    build(rows, initial, word);
  } catch (const Error& e) {
    return e;
  }
  return std::nullopt;
}

std::vector<int> Tableau::type() const {
  std::vector<int> out;
  out.reserve(word_.size());
  for (const Letter& l : word_) out.push_back(l.signed_size());
  return out;
}

int Tableau::total_size() const {
  int t = 0;
  for (const Letter& l : word_) t += l.size();
  return t;
}

bool Tableau::is_skew() const {
  return std::any_of(initial_shape().begin(), initial_shape().end(),
                     [](int v) { return v != 0; });
}

bool Tableau::is_rectangular() const {
  const Part& f = final_shape();
  return std::all_of(f.begin(), f.end(), [&](int v) { return v == f[0]; });
}

bool Tableau::is_oscillating() const {
  return std::all_of(word_.begin(), word_.end(),
                     [](const Letter& l) { return l.size() == 1; });
}

// --- involutions -----------------------------------------------------------

Word apply_involution(Involution kind, const Word& w, int rows) {
  switch (kind) {
    case Involution::tau: return barred_reversed(w);
    case Involution::varpi: return dualized_letterwise(w, rows);
    case Involution::epsilon: return complemented_reversed(w, rows);
    case Involution::eta: return complemented_letterwise(w, rows);
  }
  fail(Errc::bad_input, "unknown involution");
}

namespace {

Part negated_reversed(const Part& p) {
  Part out(p.rbegin(), p.rend());
  for (int& v : out) v = -v;
  return out;
}

Part shifted(const Part& p, int c) {
  Part out = p;
  for (int& v : out) v -= c;
  return out;
}

}  // namespace

Tableau tau(const Tableau& t) {
  Part initial = t.final_shape();
  if (t.is_rectangular() && !initial.empty()) initial = shifted(initial, initial[0]);
  return Tableau::build(t.rows(), std::move(initial),
                        barred_reversed(t.word()));
}

Tableau varpi(const Tableau& t) {
  return Tableau::build(t.rows(), negated_reversed(t.initial_shape()),
                        dualized_letterwise(t.word(), t.rows()));
}

Tableau epsilon(const Tableau& t) {
  Part initial = negated_reversed(t.final_shape());
  if (t.is_rectangular() && !initial.empty()) initial = shifted(initial, initial[0]);
  return Tableau::build(t.rows(), std::move(initial),
                        complemented_reversed(t.word(), t.rows()));
}

Tableau apply_involution(Involution kind, const Tableau& t) {
  switch (kind) {
    case Involution::tau: return tau(t);
    case Involution::varpi: return varpi(t);
    case Involution::epsilon: return epsilon(t);
    case Involution::eta:
      return Tableau::build(t.rows(), t.initial_shape(),
                            complemented_letterwise(t.word(), t.rows()));
  }
  fail(Errc::bad_input, "unknown involution");
}

// --- switch ------------------------------------------------------------------

Tableau toggle(const Tableau& t, int i) {
  check(1 <= i && i <= t.length(), Errc::index_out_of_range,
        "toggle index out of range", i);
  const Letter& l = t.letter(i);
  if (l.empty()) return t;
  Word w = t.word();
  w[i - 1] = l.switched(t.rows());
  return Tableau::build(t.rows(), t.initial_shape(), std::move(w));
}

// --- oscillization -----------------------------------------------------------

Word oscillize_word(const Word& w) {
  Word out;
  for (const Letter& l : w)
    for (int v : l.elems()) out.push_back(Letter::make({v}));
  return out;
}

Tableau oscillize(const Tableau& t) {
  return Tableau::build(t.rows(), t.initial_shape(), oscillize_word(t.word()));
}

Tableau unoscillize(const Tableau& t, const std::vector<int>& type) {
  check(t.is_oscillating(), Errc::inconsistent,
        "unoscillize expects an oscillating-type tableau");
  int total = 0;
  for (int c : type) total += std::abs(c);
  check(total == t.length(), Errc::inconsistent,
        "type does not match the word length");
  Word out;
  int pos = 0;
  for (int c : type) {
    std::vector<int> elems;
    std::vector<int> seen;
    for (int k = 0; k < std::abs(c); ++k) {
      const Letter& l = t.letter(pos + k + 1);
      int v = l.elems()[0];
      check((v > 0) == (c > 0), Errc::inconsistent,
            "singleton sign does not match the type");
      elems.push_back(v);
    }
    // Elements of a letter oscillize in increasing order.
    std::vector<int> sorted = elems;
    std::sort(sorted.begin(), sorted.end());
    check(sorted == elems, Errc::inconsistent,
          "singletons are not in the oscillization order");
    out.push_back(Letter::make(std::move(elems)));
    pos += std::abs(c);
  }
  return Tableau::build(t.rows(), t.initial_shape(), std::move(out));
}

// --- extremal, weight --------------------------------------------------------

Tableau extremal_tableau(int rows, const std::vector<int>& type) {
  Word w;
  for (int c : type) {
    std::vector<int> elems;
    if (c >= 0)
      for (int row = 1; row <= c; ++row) elems.push_back(row);
    else
      for (int row = rows + c + 1; row <= rows; ++row) elems.push_back(-row);
    w.push_back(Letter::make(std::move(elems)));
  }
  return Tableau::build(rows, std::move(w));
}

Part weight_class(const Tableau& t) {
  Part f = t.final_shape();
  int c = f.back();
  for (int& v : f) v -= c;
  return f;
}

bool lattice_word_naive(const Word& w, int rows) {
  for (size_t k = 1; k <= w.size(); ++k) {
    Part wt(rows, 0);
    for (size_t j = 0; j < k; ++j)
      for (int v : w[j].elems()) {
        if (std::abs(v) > rows) return false;
        wt[std::abs(v) - 1] += (v > 0) ? 1 : -1;
      }
    for (int a = 0; a < rows; ++a)
      for (int b = a; b < rows; ++b)
        if (wt[a] < wt[b]) return false;
  }
  return true;
}

}  // namespace fluctab
