#pragma once

#include <vector>

#include "fluctab/base.hpp"

namespace fluctab {

// A letter of the alphabet A_r: a set of nonzero integers in
// {-r,...,-1,1,...,r}, all of the same sign. Negative entries stand for
// barred values. The empty letter is allowed and counts as positive.
class Letter {
 public:
  Letter() = default;

  // Validates sign-uniformity and distinctness; entries are stored sorted
  // ascending. Range against r is checked where r is known (tableau ops).
  static Letter make(std::vector<int> elems);

  const std::vector<int>& elems() const { return elems_; }
  bool empty() const { return elems_.empty(); }
  int size() const { return static_cast<int>(elems_.size()); }
  bool negative() const { return !elems_.empty() && elems_.front() < 0; }
  int sign() const { return negative() ? -1 : 1; }
  // c: the signed step size, |c| = number of cells.
  int signed_size() const { return sign() * size(); }

  // Rows touched, in 1..r, sorted ascending.
  std::vector<int> rows() const;
  bool contains(int v) const;
  bool in_range(int rows) const;

  // e_S as a vector in Z^r.
  Part indicator(int rows) const;

  // Same rows, opposite sign.
  Letter barred() const;
  // v -> sgn(v)*(r+1-|v|): row complementation, sign kept.
  Letter complemented(int rows) const;
  // v -> -sgn(v)*(r-|v|+1): dualization.
  Letter dualized(int rows) const;
  // The switch companion: opposite sign, complementary row set in [r].
  Letter switched(int rows) const;

  bool operator==(const Letter&) const = default;

 private:
  std::vector<int> elems_;
};

using Word = std::vector<Letter>;

Word barred_reversed(const Word& w);                // tau on words
Word dualized_letterwise(const Word& w, int rows);  // varpi on words
Word complemented_reversed(const Word& w, int rows);  // epsilon on words
Word complemented_letterwise(const Word& w, int rows);  // eta on words

Part word_weight(const Word& w, int rows);

}  // namespace fluctab
