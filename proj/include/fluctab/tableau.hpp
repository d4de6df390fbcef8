#pragma once

#include <optional>
#include <vector>

#include "fluctab/letter.hpp"

namespace fluctab {

class Tableau;

namespace detail {
// Trusted constructor for internal call sites that already hold a verified
// shape chain; the word must match the chain.
Tableau tableau_from_chain(int rows, std::vector<Part> shapes, Word word);
}  // namespace detail

// A fluctuating tableau: a chain of generalized partitions
//   lambda^0 -> lambda^1 -> ... -> lambda^n
// where consecutive shapes differ by a skew column (one Letter per step).
// Canonical storage is (rows, initial shape, word); shapes are derived and
// cached at construction. Immutable after construction.
class Tableau {
 public:
  // Throws Error{not_a_partition, i} if lambda^i fails weak decrease,
  // Error{bad_letter} on malformed letters.
  static Tableau build(int rows, Part initial, Word word);
  // Convenience: initial shape zero.
  static Tableau build(int rows, Word word);

  // Non-throwing validation; returns the error instead.
  static std::optional<Error> validate(int rows, const Part& initial,
                                       const Word& word);

  int rows() const { return rows_; }
  int length() const { return static_cast<int>(word_.size()); }
  const Part& initial_shape() const { return shapes_.front(); }
  const Part& final_shape() const { return shapes_.back(); }
  const Part& shape(int i) const { return shapes_.at(i); }
  const std::vector<Part>& shapes() const { return shapes_; }
  const Word& word() const { return word_; }
  const Letter& letter(int i) const { return word_.at(i - 1); }  // 1-indexed

  std::vector<int> type() const;
  // t = sum of |c_i|.
  int total_size() const;
  bool is_skew() const;
  bool is_rectangular() const;
  bool is_oscillating() const;

  bool operator==(const Tableau&) const = default;

 private:
  friend Tableau detail::tableau_from_chain(int, std::vector<Part>, Word);
  Tableau() = default;
  int rows_ = 0;
  Word word_;
  std::vector<Part> shapes_;
};

// --- fundamental involutions ----------------------------------------------

enum class Involution { tau, varpi, epsilon, eta };

Word apply_involution(Involution kind, const Word& w, int rows);

// Tableau versions. tau and epsilon swap the boundary shapes; rectangular
// results are re-anchored so the initial shape is zero. eta rebuilds from the
// complemented word and may therefore throw on words that stop being valid.
Tableau apply_involution(Involution kind, const Tableau& t);

Tableau tau(const Tableau& t);
Tableau varpi(const Tableau& t);
Tableau epsilon(const Tableau& t);

// --- switch, oscillization, extremal --------------------------------------

// Replaces step i (1-indexed) of size c by the complementary step of size
// -sgn(c)*(r-|c|) and shifts all later shapes by -sgn(c)*(1,...,1).
// An involution; fixes steps of size zero.
Tableau toggle(const Tableau& t, int i);

// Refines every letter into singleton steps, elements in increasing order;
// empty letters are dropped. The result is of oscillating type.
Tableau oscillize(const Tableau& t);
Word oscillize_word(const Word& w);

// Regroups an oscillating-type tableau into the given type. Throws
// Error{inconsistent} when the grouping does not produce valid letters.
Tableau unoscillize(const Tableau& t, const std::vector<int>& type);

// Starts from the zero shape and adds top-justified columns (c_i >= 0) or
// removes bottom-justified columns (c_i < 0).
Tableau extremal_tableau(int rows, const std::vector<int>& type);

// Final shape reduced modulo the all-ones vector; representative with last
// coordinate zero. The zero class is exactly the rectangular tableaux.
Part weight_class(const Tableau& t);

// Re-check the lattice condition prefix by prefix, coordinate pair by
// coordinate pair, without reusing the incremental validator. Test oracle.
bool lattice_word_naive(const Word& w, int rows);

}  // namespace fluctab
