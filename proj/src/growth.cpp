#include "fluctab/growth.hpp"

#include <algorithm>
#include <cstdlib>

namespace fluctab {

bool is_step(const Part& kappa, const Part& lambda) {
  if (kappa.size() != lambda.size()) return false;
  if (!is_weakly_decreasing(kappa) || !is_weakly_decreasing(lambda))
    return false;
  int sign = 0;
  for (size_t i = 0; i < kappa.size(); ++i) {
    int d = lambda[i] - kappa[i];
    if (d == 0) continue;
    if (d != 1 && d != -1) return false;
    if (sign == 0) sign = d;
    if (d != sign) return false;
  }
  return true;
}

Letter step_letter(const Part& kappa, const Part& lambda) {
  check(is_step(kappa, lambda), Errc::invalid_step,
        "shapes do not differ by a skew column");
  std::vector<int> elems;
  for (size_t i = 0; i < kappa.size(); ++i) {
    int d = lambda[i] - kappa[i];
    if (d != 0) elems.push_back(d * static_cast<int>(i + 1));
  }
  return Letter::make(std::move(elems));
}

Part complete_square_se(const Part& kappa, const Part& lambda,
                        const Part& nu) {
  check(is_step(kappa, lambda) && is_step(lambda, nu), Errc::invalid_step,
        "inputs are not a two-step chain");
  return sort_weights(add(nu, sub(kappa, lambda)));
}

Part complete_square_nw(const Part& kappa, const Part& mu, const Part& nu) {
  check(is_step(kappa, mu) && is_step(mu, nu), Errc::invalid_step,
        "inputs are not a two-step chain");
  return sort_weights(add(nu, sub(kappa, mu)));
}

namespace {

// Bottom chain of a one-row promotion fill: B[0] = A[0], interior by local
// rules, B[n] = A[n].
std::vector<Part> promote_fill(const std::vector<Part>& a) {
  size_t n = a.size() - 1;
  std::vector<Part> b(a.size());
  b[0] = a[0];
  for (size_t j = 1; j + 1 <= n; ++j)
    b[j] = complete_square_se(b[j - 1], a[j], a[j + 1]);
  b[n] = a[n];
  return b;
}

std::vector<Part> inverse_promote_fill(const std::vector<Part>& b) {
  size_t n = b.size() - 1;
  std::vector<Part> a(b.size());
  a[n] = b[n];
  a[0] = b[0];
  for (size_t j = n - 1; j >= 1; --j)
    a[j] = complete_square_nw(b[j - 1], b[j], a[j + 1]);
  return a;
}

Tableau chain_to_tableau(int rows, std::vector<Part> chain) {
  Word w;
  w.reserve(chain.size() - 1);
  for (size_t j = 1; j < chain.size(); ++j)
    w.push_back(step_letter(chain[j - 1], chain[j]));
  return detail::tableau_from_chain(rows, std::move(chain), std::move(w));
}

void require_non_skew(const Tableau& t, const char* what) {
  check(!t.is_skew(), Errc::bad_input,
        std::string(what) + " requires initial shape zero");
}

}  // namespace

Tableau promote(const Tableau& t) {
  if (t.length() == 0) return t;
  return chain_to_tableau(t.rows(), promote_fill(t.shapes()));
}

Tableau inverse_promote(const Tableau& t) {
  if (t.length() == 0) return t;
  return chain_to_tableau(t.rows(), inverse_promote_fill(t.shapes()));
}

Tableau promote_power(const Tableau& t, int k) {
  Tableau out = t;
  for (int i = 0; i < std::abs(k); ++i)
    out = (k >= 0) ? promote(out) : inverse_promote(out);
  return out;
}

int GrowthDiagram::offset(int u) const {
  return kind == DiagramKind::dual_evacuation ? 0 : u;
}

GrowthDiagram build_diagram(DiagramKind kind, const Tableau& t) {
  int n = t.length();
  GrowthDiagram d;
  d.kind = kind;
  d.rows = t.rows();
  d.type = t.type();
  switch (kind) {
    case DiagramKind::promotion: {
      d.grid.push_back(t.shapes());
      if (n > 0) d.grid.push_back(promote_fill(t.shapes()));
      return d;
    }
    case DiagramKind::evacuation: {
      require_non_skew(t, "evacuation diagram");
      d.grid.push_back(t.shapes());
      for (int u = 1; u <= n; ++u) {
        const auto& prev = d.grid.back();  // diagram columns u-1 .. n
        std::vector<Part> row;
        row.push_back(zero_part(t.rows()));
        for (int v = u + 1; v <= n; ++v)
          row.push_back(
              complete_square_se(row.back(), prev[v - u], prev[v - u + 1]));
        d.grid.push_back(std::move(row));
      }
      return d;
    }
    case DiagramKind::dual_evacuation: {
      require_non_skew(t, "dual evacuation diagram");
      d.grid.push_back(t.shapes());
      for (int u = 1; u <= n; ++u) {
        const auto& prev = d.grid.back();  // columns 0 .. n-u+1
        std::vector<Part> row(n - u + 1);
        row[n - u] = t.final_shape();
        for (int j = n - u - 1; j >= 0; --j)
          row[j] = complete_square_nw(prev[j], prev[j + 1], row[j + 1]);
        d.grid.push_back(std::move(row));
      }
      return d;
    }
    case DiagramKind::promotion_evacuation: {
      require_non_skew(t, "promotion-evacuation diagram");
      d.grid.push_back(t.shapes());
      for (int u = 1; u <= n; ++u)
        d.grid.push_back(promote_fill(d.grid.back()));
      return d;
    }
  }
  fail(Errc::bad_input, "unknown diagram kind");
}

Tableau evacuate(const Tableau& t) {
  if (t.length() == 0) return t;
  require_non_skew(t, "evacuation");
  GrowthDiagram d = build_diagram(DiagramKind::evacuation, t);
  int n = t.length();
  std::vector<Part> chain;
  chain.reserve(n + 1);
  for (int u = n; u >= 0; --u) chain.push_back(d.grid[u].back());
  return chain_to_tableau(t.rows(), std::move(chain));
}

Tableau devacuate(const Tableau& t) {
  if (t.length() == 0) return t;
  require_non_skew(t, "dual evacuation");
  GrowthDiagram d = build_diagram(DiagramKind::dual_evacuation, t);
  int n = t.length();
  std::vector<Part> chain;
  chain.reserve(n + 1);
  for (int u = 0; u <= n; ++u) chain.push_back(d.grid[u].front());
  return chain_to_tableau(t.rows(), std::move(chain));
}

// --- oscillization of diagrams ----------------------------------------------

std::vector<std::vector<Part>> refine_square(int rows, const Part& kappa,
                                             const Part& lambda,
                                             const Part& nu) {
  Word left = oscillize_word({step_letter(kappa, lambda)});
  Word top = oscillize_word({step_letter(lambda, nu)});
  size_t c = left.size(), d = top.size();
  std::vector<std::vector<Part>> g(c + 1, std::vector<Part>(d + 1));
  g[0][0] = lambda;
  for (size_t b = 1; b <= d; ++b)
    g[0][b] = add(g[0][b - 1], top[b - 1].indicator(rows));
  for (size_t a = 1; a <= c; ++a)
    g[a][0] = sub(g[a - 1][0], left[c - a].indicator(rows));
  for (size_t a = 1; a <= c; ++a)
    for (size_t b = 1; b <= d; ++b)
      g[a][b] = complete_square_se(g[a][b - 1], g[a - 1][b - 1], g[a - 1][b]);
  return g;
}

GrowthDiagram oscillize_diagram(const GrowthDiagram& d) {
  // The refined diagram is the diagram of the oscillized base tableau; the
  // square-local refinement (refine_square) reproduces it block by block.
  const std::vector<Part>& base = d.grid.front();
  int rows = d.rows;
  Tableau t = [&] {
    Word w;
    for (size_t j = 1; j < base.size(); ++j)
      w.push_back(step_letter(base[j - 1], base[j]));
    return Tableau::build(rows, base.front(), std::move(w));
  }();
  return build_diagram(d.kind, oscillize(t));
}

}  // namespace fluctab
