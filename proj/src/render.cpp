#include "qpt/render.h"

#include "qpt/error.h"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

namespace qpt {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const Drawing& d, const std::vector<std::string>& highlight) {
  const std::set<std::string> marked(highlight.begin(), highlight.end());
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  bool first = true;
  auto extend = [&](const RationalPoint& p) {
    const double x = p.x.get_d();
    const double y = p.y.get_d();
    if (first) {
      min_x = max_x = x;
      min_y = max_y = y;
      first = false;
    }
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  };
  for (const auto& v : d.vertices()) extend(v.point);
  for (const auto& e : d.edges()) {
    for (const auto& p : e.curve.points()) extend(p);
  }

  const double span = std::max({max_x - min_x, max_y - min_y, 1.0});
  const double margin = span * 0.08;
  const double unit = span / 100.0;
  // SVG's y axis points down; flip so the picture matches the coordinates.
  auto sx = [&](const Rational& x) { return fmt(x.get_d() - min_x + margin); };
  auto sy = [&](const Rational& y) { return fmt(max_y - y.get_d() + margin); };

  std::ostringstream o;
  const double w = first ? 100.0 : max_x - min_x + 2 * margin;
  const double h = first ? 100.0 : max_y - min_y + 2 * margin;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << fmt(w) << " " << fmt(h)
    << "\" width=\"600\" height=\"" << fmt(600.0 * h / w) << "\">\n";
  o << "<rect x=\"0\" y=\"0\" width=\"" << fmt(w) << "\" height=\"" << fmt(h)
    << "\" fill=\"white\"/>\n";

  for (const auto& e : d.edges()) {
    const bool hl = marked.count(e.id) > 0;
    o << "<polyline id=\"edge-" << escape(e.id) << "\" fill=\"none\" stroke=\""
      << (hl ? "#d62728" : "#1f3b73") << "\" stroke-width=\"" << fmt(unit * (hl ? 0.9 : 0.4))
      << "\" points=\"";
    for (std::size_t i = 0; i < e.curve.points().size(); ++i) {
      const auto& p = e.curve.points()[i];
      o << (i ? " " : "") << sx(p.x) << "," << sy(p.y);
    }
    o << "\"/>\n";
  }

  const auto& edges = d.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      std::vector<CrossingRecord> recs;
      try {
        recs = curve_crossings(edges[i].curve, edges[j].curve);
      } catch (const Error&) {
        continue;
      }
      for (const auto& r : recs) {
        if (r.kind != ContactKind::kProperCross) continue;
        const double s = unit * 1.2;
        o << "<rect class=\"crossing\" x=\"" << fmt(r.point.x.get_d() - min_x + margin - s / 2)
          << "\" y=\"" << fmt(max_y - r.point.y.get_d() + margin - s / 2) << "\" width=\""
          << fmt(s) << "\" height=\"" << fmt(s) << "\" fill=\"#ff9900\"/>\n";
      }
    }
  }

  for (const auto& v : d.vertices()) {
    o << "<circle id=\"vertex-" << escape(v.id) << "\" cx=\"" << sx(v.point.x) << "\" cy=\""
      << sy(v.point.y) << "\" r=\"" << fmt(unit * 1.2) << "\" fill=\"black\"/>\n";
    o << "<text x=\"" << sx(v.point.x) << "\" y=\"" << fmt(max_y - v.point.y.get_d() + margin - unit * 2)
      << "\" font-size=\"" << fmt(unit * 3.5) << "\" text-anchor=\"middle\">" << escape(v.id)
      << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace qpt
