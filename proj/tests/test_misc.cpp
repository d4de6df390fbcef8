#include <doctest.h>

#include <algorithm>
#include <atomic>

#include "fluctab/dihedral.hpp"
#include "fluctab/enumerate.hpp"
#include "fluctab/growth.hpp"
#include "fluctab/serialize.hpp"

using namespace fluctab;

namespace {

Word W(const std::vector<std::vector<int>>& letters) {
  Word w;
  for (const auto& l : letters) w.push_back(Letter::make(l));
  return w;
}

Tableau running_t() {
  return Tableau::build(
      4, W({{1, 2}, {-4}, {1, 3, 4}, {2}, {-3, -2}, {3, 4}, {-1}}));
}

}  // namespace

TEST_CASE("orbits") {
  Tableau t = running_t();
  CHECK(orbit(t, OrbitOp::promotion).size() == 7);
  CHECK(orbit(oscillize(t), OrbitOp::promotion).size() == 12);
  CHECK(orbit(t, OrbitOp::evacuation).size() <= 2);
  // Orbit lengths divide the word length on rectangular tableaux.
  for (const auto& type : all_types(6, 1)) {
    EnumSpec spec;
    spec.rows = 3;
    spec.type = type;
    spec.rectangular_only = true;
    enumerate_ft(spec, [&](const Tableau& u) {
      CHECK(6 % orbit(u, OrbitOp::promotion).size() == 0);
      return true;
    });
  }
}

TEST_CASE("dihedral rendering") {
  Tableau t = running_t();
  std::string svg = render_dihedral(t, RenderFormat::svg);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg == render_dihedral(t, RenderFormat::svg));  // byte stable
  std::string dot = render_dihedral(t, RenderFormat::dot);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("v1 ") != std::string::npos);

  // prom_2 is an involution, so its chords render undirected: six lines
  // without arrowheads beyond those of levels 1 and 3.
  int undirected = 0;
  size_t pos = 0;
  while ((pos = dot.find("dir=none", pos)) != std::string::npos) {
    ++undirected;
    pos += 8;
  }
  CHECK(undirected == 6);

  CHECK_THROWS_AS(render_dihedral(Tableau::build(2, W({{1}})),
                                  RenderFormat::svg),
                  Error);

  // A single full column: the triangular grids make prom_1 the long cycle
  // and prom_2 its inverse, six directed edges in all.
  Tableau col = extremal_tableau(3, {3});
  auto perms = promotion_functions(col);
  CHECK(perms[1].map == std::vector<int>{2, 3, 1});
  CHECK(perms[2].map == std::vector<int>{3, 1, 2});
  std::string one = render_dihedral(col, RenderFormat::dot);
  size_t arrows = 0, at = 0;
  while ((at = one.find("->", at)) != std::string::npos) {
    ++arrows;
    at += 2;
  }
  CHECK(arrows == 6);
}

TEST_CASE("promotion rotates the rendered diagram") {
  Tableau t = running_t();
  // Edge sets agree after relabeling a -> a - |c_1| (mod t).
  auto edges = [&](const Tableau& u) {
    auto perms = promotion_functions(u);
    std::vector<std::tuple<int, int, int>> out;
    for (int level = 1; level <= u.rows() - 1; ++level)
      for (int a = 1; a <= u.total_size(); ++a)
        out.emplace_back(level, a, perms[level].map[a - 1]);
    std::sort(out.begin(), out.end());
    return out;
  };
  int s = std::abs(t.type().front());
  int total = t.total_size();
  auto shift = [&](int x) { return (x - 1 - s + total) % total + 1; };
  std::vector<std::tuple<int, int, int>> want;
  for (auto [level, a, b] : edges(t))
    want.emplace_back(level, shift(a), shift(b));
  std::sort(want.begin(), want.end());
  CHECK(edges(promote(t)) == want);
}

TEST_CASE("enumeration basics") {
  EnumSpec empty;
  empty.rows = 3;
  CHECK(count_ft(empty) == 1);  // the empty tableau
  EnumSpec spec;
  spec.rows = 2;
  spec.type = {1, 1, 1, 1, 1, 1};
  spec.rectangular_only = true;
  CHECK(count_ft(spec) == 5);
  // Streaming stops early when asked.
  int seen = 0;
  spec.rectangular_only = false;
  enumerate_ft(spec, [&](const Tableau&) { return ++seen < 3; });
  CHECK(seen == 3);
  // Skew enumeration.
  EnumSpec skew;
  skew.rows = 2;
  skew.type = {-1, 1};
  skew.initial = {1, 0};
  CHECK(count_ft(skew) == 3);  // parts may go negative
}

TEST_CASE("every enumerated word validates") {
  for (const auto& type : all_types(4, 2)) {
    EnumSpec spec;
    spec.rows = 2;
    spec.type = type;
    enumerate_ft(spec, [&](const Tableau& t) {
      CHECK_FALSE(Tableau::validate(2, t.initial_shape(), t.word()));
      return true;
    });
  }
}

TEST_CASE("parallel sweep matches the serial count") {
  std::atomic<std::uint64_t> par{0};
  for_each_tableau_parallel(3, 5, 3, 4, [&](const Tableau&) {
    par.fetch_add(1, std::memory_order_relaxed);
  });
  std::uint64_t ser = 0;
  for (const auto& type : all_types(5, 3)) {
    EnumSpec spec;
    spec.rows = 3;
    spec.type = type;
    ser += count_ft(spec);
  }
  CHECK(par.load() == ser);
}

TEST_CASE("diagram serialization") {
  Tableau t = Tableau::build(2, W({{1}, {2}, {1}, {2}}));
  GrowthDiagram d = build_diagram(DiagramKind::evacuation, t);
  std::string js = diagram_to_json(d);
  CHECK(js.find("\"kind\":\"e\"") != std::string::npos);
  std::string pretty = diagram_pretty(d);
  CHECK(std::count(pretty.begin(), pretty.end(), '\n') == 5);
  CHECK(pretty.find("(2,2)") != std::string::npos);
}

TEST_CASE("promotion matrix serialization round trip") {
  Tableau t = running_t();
  PromotionMatrix pm = promotion_matrix(t);
  PromotionMatrix back =
      promotion_matrix_from_json(promotion_matrix_to_json(pm), 4);
  CHECK(back.t == pm.t);
  CHECK(back.block_sizes == pm.block_sizes);
  CHECK(back.entries == pm.entries);
}
