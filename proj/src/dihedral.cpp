#include "fluctab/dihedral.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "fluctab/growth.hpp"

namespace fluctab {

std::vector<Tableau> orbit(const Tableau& t, OrbitOp op) {
  std::vector<Tableau> out{t};
  for (;;) {
    Tableau next = op == OrbitOp::promotion ? promote(out.back())
                                            : evacuate(out.back());
    if (next == t) return out;
    out.push_back(std::move(next));
  }
}

namespace {

constexpr const char* kPalette[] = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
    "#8c564b", "#17becf", "#e377c2", "#bcbd22",
};
constexpr int kPaletteSize = 9;

struct Layout {
  std::vector<double> x, y;
};

// Group g (1-indexed) is centered at angle pi/2 - 2*pi*(g-1)/n, clockwise;
// within a group the vertices spread clockwise over 60% of the group arc.
Layout layout_vertices(const std::vector<int>& sizes, double radius,
                       double cx, double cy) {
  int n = static_cast<int>(sizes.size());
  Layout out;
  for (int g = 1; g <= n; ++g) {
    double center = M_PI / 2 - 2 * M_PI * (g - 1) / n;
    int m = sizes[g - 1];
    double width = 0.6 * (2 * M_PI / n);
    for (int k = 0; k < m; ++k) {
      double frac = m == 1 ? 0.0 : (k - (m - 1) / 2.0) / (m - 1);
      double angle = center - frac * width / 2.0 * 2.0;
      out.x.push_back(cx + radius * std::cos(angle));
      out.y.push_back(cy - radius * std::sin(angle));
    }
  }
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

std::string render_dihedral(const Tableau& t, RenderFormat format) {
  check(t.is_rectangular(), Errc::not_rectangular,
        "dihedral diagrams require a rectangular tableau");
  std::vector<int> sizes;
  for (int c : t.type()) sizes.push_back(std::abs(c));
  int total = 0;
  for (int s : sizes) total += s;

  auto perms = promotion_functions(t);
  // Edge list: (level, a, b, undirected?) with mutual pairs drawn once.
  struct Edge {
    int level, a, b;
    bool undirected;
  };
  std::vector<Edge> edges;
  for (int level = 1; level <= t.rows() - 1; ++level) {
    const auto& f = perms[level].map;
    for (int a = 1; a <= total; ++a) {
      int b = f[a - 1];
      if (b == 0) continue;
      bool mutual = f[b - 1] == a;
      if (mutual && b < a) continue;  // drawn from the smaller endpoint
      edges.push_back({level, a, b, mutual});
    }
  }

  if (format == RenderFormat::dot) {
    std::ostringstream os;
    os << "digraph promotion {\n  graph [layout=neato];\n"
       << "  node [shape=circle, fixedsize=true, width=0.3];\n";
    Layout l = layout_vertices(sizes, 10.0, 0.0, 0.0);
    for (int a = 1; a <= total; ++a)
      os << "  v" << a << " [pos=\"" << fmt(l.x[a - 1]) << ','
         << fmt(-l.y[a - 1]) << "!\"];\n";
    for (const Edge& e : edges)
      os << "  v" << e.a << " -> v" << e.b << " [color=\""
         << kPalette[(e.level - 1) % kPaletteSize] << "\""
         << (e.undirected ? ", dir=none" : "") << "];\n";
    os << "}\n";
    return os.str();
  }

  double size = 440, cx = size / 2, cy = size / 2, radius = 180;
  Layout l = layout_vertices(sizes, radius, cx, cy);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size
     << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << ' ' << size
     << "\">\n";
  os << "<defs>\n";
  for (int level = 1; level <= t.rows() - 1; ++level)
    os << "<marker id=\"arr" << level
       << "\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" "
          "markerHeight=\"6\" orient=\"auto-start-reverse\">"
       << "<path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\""
       << kPalette[(level - 1) % kPaletteSize] << "\"/></marker>\n";
  os << "</defs>\n";
  os << "<circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" r=\""
     << fmt(radius) << "\" fill=\"none\" stroke=\"#cccccc\"/>\n";
  for (const Edge& e : edges) {
    double x1 = l.x[e.a - 1], y1 = l.y[e.a - 1];
    double x2 = l.x[e.b - 1], y2 = l.y[e.b - 1];
    // Pull the arrow end slightly off the vertex dot.
    double dx = x2 - x1, dy = y2 - y1;
    double len = std::sqrt(dx * dx + dy * dy);
    if (len > 1e-9 && !e.undirected) {
      x2 -= dx / len * 8;
      y2 -= dy / len * 8;
    }
    os << "<line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\""
       << fmt(x2) << "\" y2=\"" << fmt(y2) << "\" stroke=\""
       << kPalette[(e.level - 1) % kPaletteSize] << "\" stroke-width=\"1.5\"";
    if (!e.undirected) os << " marker-end=\"url(#arr" << e.level << ")\"";
    os << "/>\n";
  }
  for (int a = 1; a <= total; ++a) {
    os << "<circle cx=\"" << fmt(l.x[a - 1]) << "\" cy=\"" << fmt(l.y[a - 1])
       << "\" r=\"5\" fill=\"#333333\"/>\n";
    double ox = (l.x[a - 1] - cx) / radius, oy = (l.y[a - 1] - cy) / radius;
    os << "<text x=\"" << fmt(l.x[a - 1] + 14 * ox) << "\" y=\""
       << fmt(l.y[a - 1] + 14 * oy + 4)
       << "\" font-size=\"11\" font-family=\"sans-serif\" "
          "text-anchor=\"middle\">"
       << a << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace fluctab
