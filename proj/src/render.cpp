#include "latcon/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace latcon {

  namespace {
    std::string num(double v) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.1f", v);
      return buf;
    }

    void classify(Layout& lay) {
      for (auto const& [a, b] : lay.edges) {
        double dx = lay.position[b].x - lay.position[a].x;
        double dy = lay.position[b].y - lay.position[a].y;
        lay.steep.push_back(std::abs(std::abs(dx) - std::abs(dy)) > 1e-9);
      }
    }
  }  // namespace

  Layout layout(RectLattice const& R) {
    auto const& L = R.lattice;
    Layout      lay;
    lay.position.resize(L.size());
    for (Element x = 0; x < L.size(); ++x) {
      auto [i, k]     = coordinates(R, x);
      lay.position[x] = {double(k) - double(i), double(i + k)};
    }
    for (auto const& c : cells(R)) {
      auto const  b = lay.position[c.bottom];
      auto const  l = lay.position[c.left];
      auto const  r = lay.position[c.right];
      std::size_t m = c.middles.size();
      for (std::size_t j = 0; j < m; ++j) {
        if (!std::binary_search(R.eyes.begin(), R.eyes.end(), c.middles[j])) {
          continue;
        }
        double t                  = double(j + 1) / double(m + 1);
        lay.position[c.middles[j]] = {l.x + t * (r.x - l.x), b.y + 1.0};
      }
    }
    lay.edges = L.covers();
    classify(lay);
    return lay;
  }

  Layout layout(FiniteLattice const& L) {
    std::vector<std::size_t> rank(L.size(), 0);
    for (Element x : L.poset().linear_extension()) {
      for (Element y : L.upper_covers(x)) {
        rank[y] = std::max(rank[y], rank[x] + 1);
      }
    }
    std::vector<std::vector<Element>> layers(*std::max_element(rank.begin(), rank.end()) + 1);
    for (Element x = 0; x < L.size(); ++x) {
      layers[rank[x]].push_back(x);
    }
    Layout lay;
    lay.position.resize(L.size());
    for (std::size_t h = 0; h < layers.size(); ++h) {
      double w = double(layers[h].size() - 1);
      for (std::size_t i = 0; i < layers[h].size(); ++i) {
        lay.position[layers[h][i]] = {2.0 * double(i) - w, 2.0 * double(h)};
      }
    }
    lay.edges = L.covers();
    classify(lay);
    return lay;
  }

  std::string render_svg(FiniteLattice const& L, Layout const& lay) {
    double const unit = 40, margin = 30;
    double       minx = 0, maxx = 0, maxy = 0;
    for (auto const& p : lay.position) {
      minx = std::min(minx, p.x);
      maxx = std::max(maxx, p.x);
      maxy = std::max(maxy, p.y);
    }
    auto sx = [&](double x) { return num(margin + (x - minx) * unit); };
    auto sy = [&](double y) { return num(margin + (maxy - y) * unit); };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
           + num(2 * margin + (maxx - minx) * unit) + "\" height=\""
           + num(2 * margin + maxy * unit) + "\">\n";
    out += "<style>line{stroke:#000;stroke-width:1.5}line.steep{stroke:#555;"
           "stroke-dasharray:4 2}circle{fill:#fff;stroke:#000}"
           "text{font:10px sans-serif;text-anchor:middle}</style>\n";
    for (std::size_t i = 0; i < lay.edges.size(); ++i) {
      auto [a, b] = lay.edges[i];
      out += "<line class=\"" + std::string(lay.steep[i] ? "steep" : "normal")
             + "\" x1=\"" + sx(lay.position[a].x) + "\" y1=\"" + sy(lay.position[a].y)
             + "\" x2=\"" + sx(lay.position[b].x) + "\" y2=\""
             + sy(lay.position[b].y) + "\"/>\n";
    }
    for (Element x = 0; x < L.size(); ++x) {
      auto px = sx(lay.position[x].x), py = sy(lay.position[x].y);
      out += "<circle id=\"e" + std::to_string(x) + "\" cx=\"" + px + "\" cy=\"" + py
             + "\" r=\"6\"/>\n";
      out += "<text x=\"" + px + "\" y=\"" + num(margin + (maxy - lay.position[x].y) * unit - 9)
             + "\">" + std::to_string(x) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
  }

  std::string render_dot(FiniteLattice const& L, Layout const& lay) {
    std::string out = "graph lattice {\n  node [shape=circle, width=0.3, fixedsize=true];\n";
    for (Element x = 0; x < L.size(); ++x) {
      out += "  " + std::to_string(x) + " [pos=\"" + num(lay.position[x].x) + ","
             + num(lay.position[x].y) + "!\"];\n";
    }
    for (std::size_t i = 0; i < lay.edges.size(); ++i) {
      out += "  " + std::to_string(lay.edges[i].lower) + " -- "
             + std::to_string(lay.edges[i].upper) + " [class=\""
             + (lay.steep[i] ? "steep" : "normal") + "\""
             + (lay.steep[i] ? ", style=dashed" : "") + "];\n";
    }
    out += "}\n";
    return out;
  }

}  // namespace latcon
