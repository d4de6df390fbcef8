#include "fluctab/jdt.hpp"

#include <algorithm>
#include <cstdlib>

namespace fluctab {

namespace detail {

namespace {
struct Token {
  int no;   // 1-indexed number per the grid conventions
  int row;  // 0-indexed from the top
  int col;
};
}  // namespace

// Slides the bullet step past the following value step over the base shape
// kappa, by the cell rules. Returns the two letters in their new order and
// the recorded row crossings.
SlideOutcome slide_cells(int rows, const Part& kappa, const Letter& bullet,
                         const Letter& value) {
  int sb = bullet.sign(), sv = value.sign();

  std::vector<Token> bt, vt;
  bt.reserve(bullet.size());
  vt.reserve(value.size());
  // Cell columns follow from the base shape: an added cell sits one right of
  // the base row end, a removed cell on it; the value letter additionally
  // sees the bullet's change.
  for (int v : bullet.elems()) {
    int row = std::abs(v) - 1;
    bt.push_back({0, row, sb >= 0 ? kappa[row] + 1 : kappa[row]});
  }
  for (int v : value.elems()) {
    int row = std::abs(v) - 1;
    int base = kappa[row] + (bullet.contains(row + 1)      ? 1
                             : bullet.contains(-(row + 1)) ? -1
                                                           : 0);
    vt.push_back({0, row, sv >= 0 ? base + 1 : base});
  }
  // Numbering: bullets bottom-to-top when positive, top-to-bottom when
  // negative; the other letter the opposite way.
  std::sort(bt.begin(), bt.end(), [&](const Token& x, const Token& y) {
    return sb >= 0 ? x.row > y.row : x.row < y.row;
  });
  std::sort(vt.begin(), vt.end(), [&](const Token& x, const Token& y) {
    return sv >= 0 ? x.row < y.row : x.row > y.row;
  });
  for (size_t k = 0; k < bt.size(); ++k) bt[k].no = static_cast<int>(k + 1);
  for (size_t k = 0; k < vt.size(); ++k) vt[k].no = static_cast<int>(k + 1);

  SlideOutcome out;

  auto value_at = [&](int row, int col) -> Token* {
    for (Token& v : vt)
      if (v.row == row && v.col == col) return &v;
    return nullptr;
  };

  if (!bullet.empty() && !value.empty()) {
    if (sb >= 0 && sv >= 0) {
      // Bullets move right past values, then down as far as possible.
      for (Token& b : bt)
        if (Token* v = value_at(b.row, b.col + 1)) {
          std::swap(b.col, v->col);
        }
      bool moved = true;
      while (moved) {
        moved = false;
        for (Token& b : bt)
          if (Token* v = value_at(b.row + 1, b.col)) {
            std::swap(b.row, v->row);
            out.events.push_back({b.no, v->no, b.row - 1, b.row, false});
            moved = true;
          }
      }
    } else if (sb < 0 && sv < 0) {
      // Barred bullets move left past barred values, then up.
      for (Token& b : bt)
        if (Token* v = value_at(b.row, b.col - 1)) {
          std::swap(b.col, v->col);
        }
      bool moved = true;
      while (moved) {
        moved = false;
        for (Token& b : bt)
          if (Token* v = value_at(b.row - 1, b.col)) {
            std::swap(b.row, v->row);
            out.events.push_back({b.no, v->no, b.row, b.row + 1, false});
            moved = true;
          }
      }
    } else {
      // Mixed signs: cells holding both markers pair up and slide through
      // the free cells directly below (resp. above), then shift one column;
      // everything else stays put. Rows vacated by an earlier pair of the
      // same stack become free, so stacked pairs cascade.
      std::vector<bool> occupied(rows, false);
      for (const Token& b : bt) occupied[b.row] = true;
      for (const Token& v : vt) occupied[v.row] = true;
      for (Token& b : bt) {
        Token* v = value_at(b.row, b.col);
        if (!v) continue;
        int start = b.row;
        int x = b.col;
        occupied[start] = false;
        int row = start;
        if (sb >= 0) {
          while (row + 1 < rows && !occupied[row + 1] && kappa[row + 1] + 1 == x)
            ++row;
          b.col = v->col = x - 1;
          out.events.push_back({b.no, v->no, start, row, true});
        } else {
          while (row - 1 >= 0 && !occupied[row - 1] && kappa[row - 1] == x)
            --row;
          b.col = v->col = x + 1;
          out.events.push_back({b.no, v->no, row, start, true});
        }
        b.row = v->row = row;
        occupied[row] = true;
      }
    }
  }

  auto to_letter = [&](const std::vector<Token>& ts, int sign) {
    std::vector<int> elems;
    elems.reserve(ts.size());
    for (const Token& tk : ts)
      elems.push_back(sign >= 0 ? tk.row + 1 : -(tk.row + 1));
    return Letter::make(std::move(elems));
  };
  out.new_value = to_letter(vt, sv);
  out.new_bullet = to_letter(bt, sb);

#ifndef NDEBUG
  // The exchanged chain must still be a tableau.
  Part mid = add(kappa, bullet.indicator(rows));
  Part nu = add(mid, value.indicator(rows));
  Part new_mid = add(kappa, out.new_value.indicator(rows));
  check(is_weakly_decreasing(new_mid) &&
            add(new_mid, out.new_bullet.indicator(rows)) == nu,
        Errc::malformed_marking, "slide produced an invalid chain");
#endif
  return out;
}

}  // namespace detail

Part MarkedTableau::shape_before_bullet() const {
  Part p = initial;
  for (const Letter& l : before) p = add(p, l.indicator(rows));
  return p;
}

Tableau MarkedTableau::to_tableau() const {
  Word w = before;
  w.push_back(bullet);
  w.insert(w.end(), after.begin(), after.end());
  return Tableau::build(rows, initial, std::move(w));
}

MarkedTableau mark_step(const Tableau& t, int pos) {
  check(1 <= pos && pos <= t.length(), Errc::index_out_of_range,
        "marked step out of range", pos);
  MarkedTableau m;
  m.rows = t.rows();
  m.initial = t.initial_shape();
  m.before.assign(t.word().begin(), t.word().begin() + (pos - 1));
  m.bullet = t.word()[pos - 1];
  m.after.assign(t.word().begin() + pos, t.word().end());
  return m;
}

MarkedTableau jdt_slide(const MarkedTableau& m,
                        std::vector<SlideEvent>* events) {
  check(!m.after.empty(), Errc::malformed_marking,
        "no step after the bullets to slide past");
  Part base = m.shape_before_bullet();
  {
    Part mid = add(base, m.bullet.indicator(m.rows));
    check(is_weakly_decreasing(base) && is_weakly_decreasing(mid) &&
              is_weakly_decreasing(
                  add(mid, m.after.front().indicator(m.rows))),
          Errc::malformed_marking, "marked chain is not a tableau");
  }
  auto outcome = detail::slide_cells(m.rows, base, m.bullet, m.after.front());
  if (events)
    events->insert(events->end(), outcome.events.begin(),
                   outcome.events.end());
  MarkedTableau out;
  out.rows = m.rows;
  out.initial = m.initial;
  out.before = m.before;
  out.before.push_back(outcome.new_value);
  out.bullet = outcome.new_bullet;
  out.after.assign(m.after.begin() + 1, m.after.end());
  return out;
}

MarkedTableau jdt_slide_back(const MarkedTableau& m) {
  check(!m.before.empty(), Errc::malformed_marking,
        "no step before the bullets to slide past");
  // Reverse time: slide the barred bullet forward over the barred
  // predecessor, then reverse again.
  Part base = m.shape_before_bullet();
  check(is_weakly_decreasing(sub(base, m.before.back().indicator(m.rows))) &&
            is_weakly_decreasing(base) &&
            is_weakly_decreasing(add(base, m.bullet.indicator(m.rows))),
        Errc::malformed_marking, "marked chain is not a tableau");
  base = add(base, m.bullet.indicator(m.rows));  // shape after the bullet
  auto outcome = detail::slide_cells(m.rows, base, m.bullet.barred(),
                                     m.before.back().barred());
  MarkedTableau out;
  out.rows = m.rows;
  out.initial = m.initial;
  out.before.assign(m.before.begin(), m.before.end() - 1);
  out.bullet = outcome.new_bullet.barred();
  out.after = m.after;
  out.after.insert(out.after.begin(), outcome.new_value.barred());
  return out;
}

Tableau promote_via_jdt(const Tableau& t) {
  if (t.length() == 0) return t;
  Part base = t.initial_shape();
  Letter bullet = t.word().front();
  Word out;
  out.reserve(t.length());
  for (int k = 1; k < t.length(); ++k) {
    auto o = detail::slide_cells(t.rows(), base, bullet, t.word()[k]);
    base = add(base, o.new_value.indicator(t.rows()));
    out.push_back(std::move(o.new_value));
    bullet = std::move(o.new_bullet);
  }
  out.push_back(std::move(bullet));
  return Tableau::build(t.rows(), t.initial_shape(), std::move(out));
}

std::vector<MarkedTableau> jdt_promotion_trace(const Tableau& t) {
  std::vector<MarkedTableau> frames;
  if (t.length() == 0) return frames;
  MarkedTableau m = mark_step(t, 1);
  frames.push_back(m);
  while (!m.after.empty()) {
    m = jdt_slide(m);
    frames.push_back(m);
  }
  return frames;
}

Tableau evacuate_via_jdt(const Tableau& t) {
  if (t.length() == 0) return t;
  check(!t.is_skew(), Errc::bad_input, "evacuation requires initial shape zero");
  int n = t.length();
  Word frozen(n, Letter{});
  Word current = t.word();
  for (int pass = 0; pass < n; ++pass) {
    MarkedTableau m;
    m.rows = t.rows();
    m.initial = t.initial_shape();
    m.bullet = current.front();
    m.after.assign(current.begin() + 1, current.end());
    while (!m.after.empty()) m = jdt_slide(m);
    frozen[n - 1 - pass] = m.bullet;
    current = m.before;
  }
  return Tableau::build(t.rows(), t.initial_shape(), std::move(frozen));
}

Tableau devacuate_via_jdt(const Tableau& t) {
  if (t.length() == 0) return t;
  check(!t.is_skew(), Errc::bad_input,
        "dual evacuation requires initial shape zero");
  int n = t.length();
  Word frozen(n, Letter{});
  Word current = t.word();
  Part base = t.initial_shape();  // shape after the frozen prefix
  for (int pass = 0; pass < n; ++pass) {
    MarkedTableau m;
    m.rows = t.rows();
    m.initial = base;
    m.before.assign(current.begin(), current.end() - 1);
    m.bullet = current.back();
    while (!m.before.empty()) m = jdt_slide_back(m);
    frozen[pass] = m.bullet;
    current = m.after;
    base = add(base, m.bullet.indicator(t.rows()));
  }
  return Tableau::build(t.rows(), t.initial_shape(), std::move(frozen));
}

}  // namespace fluctab
