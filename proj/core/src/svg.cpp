#include "poisson_geom/svg.hpp"

#include <cmath>
#include <cstdio>

#include "poisson_geom/errors.hpp"

namespace poisson_geom {

namespace {

void require_finite(double v) {
  if (!std::isfinite(v)) {
    throw UsageError("svg: non-finite coordinate");
  }
}

}  // namespace

std::string SvgWriter::num(double v) {
  require_finite(v);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

SvgWriter::SvgWriter(double min_x, double min_y, double width, double height) {
  body_ = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  body_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
           "viewBox=\"" +
           num(min_x) + " " + num(min_y) + " " + num(width) + " " +
           num(height) + "\">\n";
}

void SvgWriter::comment(const std::string& text) {
  body_ += "<!-- " + text + " -->\n";
}

void SvgWriter::circle(double cx, double cy, double r, const std::string& cls,
                       const std::string& style) {
  body_ += "<circle class=\"" + cls + "\" cx=\"" + num(cx) + "\" cy=\"" +
           num(cy) + "\" r=\"" + num(r) + "\" style=\"" + style + "\"/>\n";
}

void SvgWriter::line(double x1, double y1, double x2, double y2,
                     const std::string& cls, const std::string& style) {
  body_ += "<line class=\"" + cls + "\" x1=\"" + num(x1) + "\" y1=\"" +
           num(y1) + "\" x2=\"" + num(x2) + "\" y2=\"" + num(y2) +
           "\" style=\"" + style + "\"/>\n";
}

void SvgWriter::ellipse(double cx, double cy, double rx, double ry,
                        double angle_deg, const std::string& cls,
                        const std::string& style) {
  body_ += "<ellipse class=\"" + cls + "\" cx=\"" + num(cx) + "\" cy=\"" +
           num(cy) + "\" rx=\"" + num(rx) + "\" ry=\"" + num(ry) +
           "\" transform=\"rotate(" + num(angle_deg) + " " + num(cx) + " " +
           num(cy) + ")\" style=\"" + style + "\"/>\n";
}

void SvgWriter::marker(double cx, double cy, double r, const std::string& cls,
                       const std::string& style) {
  body_ += "<circle class=\"" + cls + "\" cx=\"" + num(cx) + "\" cy=\"" +
           num(cy) + "\" r=\"" + num(r) + "\" style=\"" + style + "\"/>\n";
}

void SvgWriter::text(double x, double y, const std::string& content,
                     const std::string& style) {
  body_ += "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" style=\"" + style +
           "\">" + content + "</text>\n";
}

std::string SvgWriter::finish() {
  if (!finished_) {
    body_ += "</svg>\n";
    finished_ = true;
  }
  return body_;
}

}  // namespace poisson_geom
