// Minimal SVG emission: polylines, markers, and heat grids over [-1,1]^2.
// Fixed-precision formatting keeps output bytes deterministic.
#ifndef REMEZRIG_SVG_HPP
#define REMEZRIG_SVG_HPP

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "remezrig/core.hpp"
#include "remezrig/levelset.hpp"

namespace remezrig {

class SvgCanvas {
 public:
  explicit SvgCanvas(int px = 640, double world_half = 1.05) : px_(px), half_(world_half) {
    char head[256];
    std::snprintf(head, sizeof(head),
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" "
                  "viewBox=\"0 0 %d %d\">\n",
                  px_, px_, px_, px_);
    body_ = head;
    body_ += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  }

  void polyline(const std::vector<Point2>& pts, bool closed, const std::string& color,
                double width = 1.5) {
    if (pts.empty()) return;
    body_ += closed ? "<polygon points=\"" : "<polyline points=\"";
    for (const Point2& p : pts) body_ += fmt(X(p[0])) + "," + fmt(Y(p[1])) + " ";
    body_ += "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" + fmt(width) + "\"/>\n";
  }

  void circle(double cx, double cy, double r_world, const std::string& stroke) {
    body_ += "<circle cx=\"" + fmt(X(cx)) + "\" cy=\"" + fmt(Y(cy)) + "\" r=\"" +
             fmt(r_world * scale()) + "\" fill=\"none\" stroke=\"" + stroke + "\"/>\n";
  }

  void dot(double x, double y, const std::string& color, double r_px = 3.0) {
    body_ += "<circle cx=\"" + fmt(X(x)) + "\" cy=\"" + fmt(Y(y)) + "\" r=\"" + fmt(r_px) +
             "\" fill=\"" + color + "\"/>\n";
  }

  void rect(double x0, double y0, double x1, double y1, const std::string& stroke) {
    body_ += "<rect x=\"" + fmt(X(x0)) + "\" y=\"" + fmt(Y(y1)) + "\" width=\"" +
             fmt((x1 - x0) * scale()) + "\" height=\"" + fmt((y1 - y0) * scale()) +
             "\" fill=\"none\" stroke=\"" + stroke + "\"/>\n";
  }

  /// Diverging red/blue heat grid of a scalar field over the unit square.
  template <typename F>
  void heat(F&& field, int cells, double vmax) {
    if (vmax <= 0.0) vmax = 1.0;
    const double step = 2.0 * half_ / cells;
    for (int i = 0; i < cells; ++i)
      for (int j = 0; j < cells; ++j) {
        const double x = -half_ + (i + 0.5) * step;
        const double y = -half_ + (j + 0.5) * step;
        if (x * x + y * y > 1.0) continue;
        const double v = std::clamp(field(x, y) / vmax, -1.0, 1.0);
        const int r = v > 0 ? 255 : static_cast<int>(255 * (1.0 + v));
        const int b = v < 0 ? 255 : static_cast<int>(255 * (1.0 - v));
        const int g = static_cast<int>(255 * (1.0 - std::abs(v)));
        char cell[160];
        std::snprintf(cell, sizeof(cell),
                      "<rect x=\"%s\" y=\"%s\" width=\"%s\" height=\"%s\" fill=\"rgb(%d,%d,%d)\"/>\n",
                      fmt(X(x - 0.5 * step)).c_str(), fmt(Y(y + 0.5 * step)).c_str(),
                      fmt(step * scale()).c_str(), fmt(step * scale()).c_str(), r, g, b);
        body_ += cell;
      }
  }

  std::string str() const { return body_ + "</svg>\n"; }

 private:
  double scale() const { return px_ / (2.0 * half_); }
  double X(double x) const { return (x + half_) * scale(); }
  double Y(double y) const { return (half_ - y) * scale(); }
  static std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
  }

  int px_;
  double half_;
  std::string body_;
};

}  // namespace remezrig

#endif  // REMEZRIG_SVG_HPP
