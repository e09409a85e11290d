#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>

#include "threepage/presentation.hpp"

namespace threepage {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const ThreePagePresentation& p, const SvgOptions& o) {
  const double r = o.radius;
  const double c = o.margin + r;
  const double size = 2 * c;
  const int N = static_cast<int>(p.points.size());

  std::map<int, int> position;
  for (int i = 0; i < N; ++i) position.emplace(p.points[i], i);
  // Clockwise from the top; SVG's y axis points down.
  auto angle = [&](int i) { return -std::numbers::pi / 2 + 2 * std::numbers::pi * i / std::max(N, 1); };
  auto at = [&](int i, double scale) {
    return std::make_pair(c + scale * r * std::cos(angle(i)), c + scale * r * std::sin(angle(i)));
  };

  const auto crossings = crossing_pairs(p);
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(size) << "\" height=\"" << num(size)
    << "\" viewBox=\"0 0 " << num(size) << ' ' << num(size) << "\">\n";
  if (!o.title.empty()) s << "  <title>" << escape(o.title) << "</title>\n";
  s << "  <g class=\"presentation\" data-points=\"" << N << "\" data-arcs=\"" << p.arcs.size()
    << "\" data-crossings=\"" << crossings.size() << "\">\n";
  s << "    <circle class=\"binding\" cx=\"" << num(c) << "\" cy=\"" << num(c) << "\" r=\"" << num(r)
    << "\" fill=\"none\" stroke=\"#222\" stroke-width=\"1.5\"/>\n";

  auto known = [&](const Chord& ch) { return position.count(ch.a) && position.count(ch.b); };

  s << "    <g class=\"page3\" fill=\"none\" stroke=\"#2a8a2a\" stroke-width=\"2\">\n";
  for (const auto& ch : p.arcs) {
    if (ch.page != Page::Outside || !known(ch)) continue;
    const int i = position[ch.a];
    const int j = position[ch.b];
    const int gap = std::abs(i - j);
    const double span = std::min(gap, N - gap) / static_cast<double>(std::max(N, 1));
    const double lift = 1.12 + 1.1 * span;
    auto [x0, y0] = at(i, 1.0);
    auto [x1, y1] = at(i, lift);
    auto [x2, y2] = at(j, lift);
    auto [x3, y3] = at(j, 1.0);
    s << "      <path d=\"M " << num(x0) << ' ' << num(y0) << " C " << num(x1) << ' ' << num(y1) << ", " << num(x2)
      << ' ' << num(y2) << ", " << num(x3) << ' ' << num(y3) << "\"/>\n";
  }
  s << "    </g>\n";

  auto line = [&](const Chord& ch, const char* extra) {
    auto [x0, y0] = at(position[ch.a], 1.0);
    auto [x1, y1] = at(position[ch.b], 1.0);
    s << "      <line x1=\"" << num(x0) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(x1) << "\" y2=\"" << num(y1)
      << '"' << extra << "/>\n";
  };
  s << "    <g class=\"page1\" stroke=\"#1f4fbf\" stroke-width=\"2\" stroke-dasharray=\"6 3\">\n";
  for (const auto& ch : p.arcs) {
    if (ch.page == Page::Under && known(ch)) line(ch, "");
  }
  s << "    </g>\n";
  s << "    <g class=\"page2\" stroke-width=\"2\">\n";
  for (const auto& ch : p.arcs) {
    if (ch.page != Page::Over || !known(ch)) continue;
    line(ch, " stroke=\"#fff\" stroke-width=\"7\"");
    line(ch, " stroke=\"#c0392b\"");
  }
  s << "    </g>\n";

  s << "    <g class=\"points\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">\n";
  for (int i = 0; i < N; ++i) {
    auto [x, y] = at(i, 1.0);
    s << "      <circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"3\" fill=\"#222\"/>\n";
    if (o.labels) {
      auto [lx, ly] = at(i, 0.9);
      s << "      <text x=\"" << num(lx) << "\" y=\"" << num(ly + 4) << "\">" << (i + 1) << "</text>\n";
    }
  }
  s << "    </g>\n";
  s << "  </g>\n</svg>\n";
  return s.str();
}

}  // namespace threepage
