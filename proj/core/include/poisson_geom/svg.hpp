#pragma once

#include <string>

namespace poisson_geom {

// Minimal deterministic SVG 1.1 builder. Coordinates are written with six
// fixed decimals so identical inputs produce identical bytes on every
// platform.
class SvgWriter {
 public:
  // viewBox "minx miny width height" in user units.
  SvgWriter(double min_x, double min_y, double width, double height);

  void comment(const std::string& text);
  void circle(double cx, double cy, double r, const std::string& cls,
              const std::string& style);
  // Axis-aligned ellipse rotated by `angle_deg` about its center.
  void ellipse(double cx, double cy, double rx, double ry, double angle_deg,
               const std::string& cls, const std::string& style);
  void line(double x1, double y1, double x2, double y2, const std::string& cls,
            const std::string& style);
  // Small filled disc used for point markers.
  void marker(double cx, double cy, double r, const std::string& cls,
              const std::string& style);
  void text(double x, double y, const std::string& content,
            const std::string& style);

  std::string finish();

  static std::string num(double v);

 private:
  std::string body_;
  bool finished_ = false;
};

}  // namespace poisson_geom
