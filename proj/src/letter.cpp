#include "fluctab/letter.hpp"

#include <algorithm>
#include <cstdlib>

namespace fluctab {

Letter Letter::make(std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  for (size_t i = 0; i < elems.size(); ++i) {
    check(elems[i] != 0, Errc::bad_letter, "letter entries must be nonzero");
    if (i > 0) {
      check(elems[i - 1] != elems[i], Errc::bad_letter,
            "letter entries must be distinct");
      check((elems[i - 1] > 0) == (elems[i] > 0), Errc::bad_letter,
            "letter entries must share one sign");
    }
  }
  Letter l;
  l.elems_ = std::move(elems);
  return l;
}

std::vector<int> Letter::rows() const {
  std::vector<int> out;
  out.reserve(elems_.size());
  for (int v : elems_) out.push_back(std::abs(v));
  std::sort(out.begin(), out.end());
  return out;
}

bool Letter::contains(int v) const {
  return std::find(elems_.begin(), elems_.end(), v) != elems_.end();
}

bool Letter::in_range(int rows) const {
  for (int v : elems_)
    if (std::abs(v) > rows) return false;
  return true;
}

Part Letter::indicator(int rows) const {
  Part out(rows, 0);
  for (int v : elems_) out[std::abs(v) - 1] += (v > 0) ? 1 : -1;
  return out;
}

Letter Letter::barred() const {
  std::vector<int> e;
  e.reserve(elems_.size());
  for (int v : elems_) e.push_back(-v);
  return make(std::move(e));
}

Letter Letter::complemented(int rows) const {
  std::vector<int> e;
  e.reserve(elems_.size());
  for (int v : elems_) e.push_back(v > 0 ? rows + 1 - v : -(rows + 1 + v));
  return make(std::move(e));
}

Letter Letter::dualized(int rows) const { return complemented(rows).barred(); }

Letter Letter::switched(int rows) const {
  if (empty()) return *this;
  int s = sign();
  std::vector<bool> in(rows + 1, false);
  for (int v : elems_) in[std::abs(v)] = true;
  std::vector<int> e;
  for (int row = 1; row <= rows; ++row)
    if (!in[row]) e.push_back(-s * row);
  return make(std::move(e));
}

Word barred_reversed(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->barred());
  return out;
}

Word dualized_letterwise(const Word& w, int rows) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) out.push_back(l.dualized(rows));
  return out;
}

Word complemented_reversed(const Word& w, int rows) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back(it->complemented(rows));
  return out;
}

Word complemented_letterwise(const Word& w, int rows) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) out.push_back(l.complemented(rows));
  return out;
}

Part word_weight(const Word& w, int rows) {
  Part wt(rows, 0);
  for (const Letter& l : w)
    for (int v : l.elems()) wt[std::abs(v) - 1] += (v > 0) ? 1 : -1;
  return wt;
}

}  // namespace fluctab
