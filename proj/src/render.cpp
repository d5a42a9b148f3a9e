#include "hn/render.hpp"

#include <algorithm>
#include <sstream>

#include "hn/errors.hpp"

namespace hn {

namespace {

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                         "#8c564b"};
const char kSymbols[] = {'*', 'o', '+', 'x', '@', '#'};

struct Bounds {
  long long max_x = 1;
  long long min_y = 0;
  long long max_y = 1;
};

Bounds bounds_of(const std::vector<HNPolygon>& polygons) {
  Bounds b;
  for (const auto& p : polygons) {
    b.max_x = std::max(b.max_x, p.width());
    for (const auto& v : p.vertices()) {
      b.min_y = std::min(b.min_y, v.y);
      b.max_y = std::max(b.max_y, v.y);
    }
  }
  return b;
}

}  // namespace

std::string render_svg(const std::vector<HNPolygon>& polygons,
                       const std::vector<std::string>& labels) {
  if (polygons.empty()) throw DomainError("invalid-argument", "nothing to plot");
  Bounds b = bounds_of(polygons);
  const long long scale = 48;
  const long long margin = 56;
  const long long width = 2 * margin + b.max_x * scale;
  const long long height = 2 * margin + (b.max_y - b.min_y) * scale;
  auto px = [&](long long x) { return margin + x * scale; };
  auto py = [&](long long y) { return margin + (b.max_y - y) * scale; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
      << "\">\n";
  svg << "  <rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";

  // Lattice gridlines at every integer coordinate, with the axes darker.
  for (long long x = 0; x <= b.max_x; ++x) {
    svg << "  <line x1=\"" << px(x) << "\" y1=\"" << py(b.max_y) << "\" x2=\"" << px(x)
        << "\" y2=\"" << py(b.min_y) << "\" stroke=\""
        << (x == 0 ? "#888888" : "#dddddd") << "\" stroke-width=\"1\"/>\n";
  }
  for (long long y = b.min_y; y <= b.max_y; ++y) {
    svg << "  <line x1=\"" << px(0) << "\" y1=\"" << py(y) << "\" x2=\"" << px(b.max_x)
        << "\" y2=\"" << py(y) << "\" stroke=\"" << (y == 0 ? "#888888" : "#dddddd")
        << "\" stroke-width=\"1\"/>\n";
  }

  for (std::size_t k = 0; k < polygons.size(); ++k) {
    const char* color = kColors[k % std::size(kColors)];
    std::ostringstream pts;
    for (const auto& v : polygons[k].vertices())
      pts << px(v.x) << "," << py(v.y) << " ";
    svg << "  <polyline points=\"" << pts.str() << "\" fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    for (const auto& v : polygons[k].vertices()) {
      svg << "  <circle cx=\"" << px(v.x) << "\" cy=\"" << py(v.y)
          << "\" r=\"3\" fill=\"" << color << "\"/>\n";
      svg << "  <text x=\"" << px(v.x) + 6 << "\" y=\"" << py(v.y) - 6
          << "\" font-size=\"12\" fill=\"" << color << "\">(" << v.x << ", " << v.y
          << ")</text>\n";
    }
    std::string label = k < labels.size() ? labels[k] : "polygon " + std::to_string(k);
    svg << "  <text x=\"" << margin << "\" y=\"" << 16 + 16 * static_cast<long long>(k)
        << "\" font-size=\"13\" fill=\"" << color << "\">" << label << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string render_ascii(const std::vector<HNPolygon>& polygons,
                         const std::vector<std::string>& labels, int cols, int rows) {
  if (polygons.empty()) throw DomainError("invalid-argument", "nothing to plot");
  if (cols < 8 || rows < 4) throw DomainError("invalid-argument", "plot grid too small");
  Bounds b = bounds_of(polygons);
  const long long span_y = b.max_y - b.min_y;

  std::vector<std::string> grid(rows, std::string(cols, ' '));
  auto col_of = [&](const Rational& x) {
    Rational t = x * Rational(cols - 1) / Rational(b.max_x);
    long long c = floor_ll(t + Rational(1, 2));
    return std::clamp<long long>(c, 0, cols - 1);
  };
  auto row_of = [&](const Rational& y) {
    Rational t = (Rational(b.max_y) - y) * Rational(rows - 1) / Rational(span_y == 0 ? 1 : span_y);
    long long r = floor_ll(t + Rational(1, 2));
    return std::clamp<long long>(r, 0, rows - 1);
  };

  // Axes first so the curves draw over them.
  if (b.min_y <= 0 && 0 <= b.max_y) {
    long long r0 = row_of(Rational(0));
    for (int c = 0; c < cols; ++c) grid[r0][c] = '-';
  }
  for (int r = 0; r < rows; ++r) grid[r][0] = '|';

  for (std::size_t k = 0; k < polygons.size(); ++k) {
    const HNPolygon& p = polygons[k];
    char sym = kSymbols[k % std::size(kSymbols)];
    for (int c = 0; c < cols; ++c) {
      Rational x = Rational(static_cast<long long>(c) * b.max_x, cols - 1);
      if (x > Rational(p.width())) break;
      grid[row_of(p.evaluate(x))][col_of(x)] = sym;
    }
    for (const auto& v : p.vertices())
      grid[row_of(Rational(v.y))][col_of(Rational(v.x))] = sym;
  }

  std::ostringstream out;
  out << "x: 0.." << b.max_x << "   y: " << b.min_y << ".." << b.max_y << "\n";
  for (const auto& line : grid) out << line << "\n";
  for (std::size_t k = 0; k < polygons.size(); ++k) {
    std::string label = k < labels.size() ? labels[k] : "polygon " + std::to_string(k);
    out << kSymbols[k % std::size(kSymbols)] << " = " << label << "\n";
  }
  return out.str();
}

}  // namespace hn
