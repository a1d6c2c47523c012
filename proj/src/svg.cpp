#include "toric/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "toric/io.hpp"

namespace toric {
namespace {

constexpr double kSize = 480.0;
constexpr double kMargin = 40.0;
const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

struct Frame {
  double x0, x1, y0, y1;
  double sx(double x) const { return kMargin + (x - x0) / (x1 - x0) * (kSize - 2 * kMargin); }
  double sy(double y) const { return kSize - kMargin - (y - y0) / (y1 - y0) * (kSize - 2 * kMargin); }
};

std::string num(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

std::string header() {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kSize) + "\" height=\"" + num(kSize) +
         "\" viewBox=\"0 0 " + num(kSize) + " " + num(kSize) + "\">\n";
}

std::string axes(const Frame& f, const std::string& xl, const std::string& yl) {
  std::ostringstream os;
  os << "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n"
     << "<line x1=\"" << num(f.sx(f.x0)) << "\" y1=\"" << num(f.sy(f.y0)) << "\" x2=\"" << num(f.sx(f.x1))
     << "\" y2=\"" << num(f.sy(f.y0)) << "\"/>\n"
     << "<line x1=\"" << num(f.sx(f.x0)) << "\" y1=\"" << num(f.sy(f.y0)) << "\" x2=\"" << num(f.sx(f.x0))
     << "\" y2=\"" << num(f.sy(f.y1)) << "\"/>\n</g>\n"
     << "<text x=\"" << num(kSize - kMargin) << "\" y=\"" << num(kSize - 10) << "\" text-anchor=\"end\">" << xl
     << "</text>\n"
     << "<text x=\"10\" y=\"" << num(kMargin - 10) << "\">" << yl << "</text>\n";
  return os.str();
}

}  // namespace

SvgOverlay sector_overlay(const StrangulationSpec& s, double length) {
  const Point lo{std::cos(s.ray_angle - s.theta), std::sin(s.ray_angle - s.theta)};
  const Point hi{std::cos(s.ray_angle + s.theta), std::sin(s.ray_angle + s.theta)};
  return {"sector", {s.notch, s.notch + length * lo, s.notch + length * hi}, true, "#d62728"};
}

SvgOverlay triangle_overlay(const StrainSpec& s) {
  return {"triangle", {{0.0, 0.0}, {s.w_star_eps, s.eps}, {s.spike_intercept, 0.0}}, true, "#2ca02c"};
}

SvgOverlay gc_overlay(double b, double c, int samples) {
  const MomentProfile f = fc_domain(b, c, std::max(2, samples));
  SvgOverlay o{"gc", {}, false, "#d62728"};
  for (std::size_t s = 0; s < f.segment_count(); ++s)
    for (int j = 0; j < 4; ++j) o.points.push_back(curve_point(f, s, j / 4.0));
  o.points.push_back(f.vertices().back());
  return o;
}

std::string profile_svg(const MomentProfile& p, const std::vector<SvgOverlay>& overlays) {
  double xm = p.a_intercept(), ym = p.b_intercept();
  for (const Point& v : p.vertices()) xm = std::max(xm, v.w1), ym = std::max(ym, v.w2);
  for (const auto& o : overlays)
    for (const Point& q : o.points) xm = std::max(xm, q.w1), ym = std::max(ym, q.w2);
  const double m = 1.05 * std::max(xm, ym);
  const Frame f{0.0, m, 0.0, m};

  std::ostringstream os;
  os << header() << axes(f, "w1", "w2");
  for (const auto& o : overlays) {
    os << '<' << (o.closed ? "polygon" : "polyline") << " class=\"" << o.name << "\" fill=\""
       << (o.closed ? o.color : "none") << "\" fill-opacity=\"0.25\" stroke=\"" << o.color << "\" points=\"";
    for (const Point& q : o.points) os << num(f.sx(q.w1)) << ',' << num(f.sy(q.w2)) << ' ';
    os << "\"/>\n";
  }
  os << "<path class=\"profile\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" d=\"M "
     << num(f.sx(p.vertex(0).w1)) << ' ' << num(f.sy(p.vertex(0).w2));
  for (std::size_t s = 0; s < p.segment_count(); ++s) {
    const int steps = p.tag(s).kind == CurveKind::Line ? 1 : 8;
    for (int j = 1; j <= steps; ++j) {
      const Point q = curve_point(p, s, static_cast<double>(j) / steps);
      os << " L " << num(f.sx(q.w1)) << ' ' << num(f.sy(q.w2));
    }
  }
  os << "\"/>\n";
  for (const Point& q : {p.vertices().front(), p.vertices().back()})
    os << "<circle class=\"endpoint\" cx=\"" << num(f.sx(q.w1)) << "\" cy=\"" << num(f.sy(q.w2))
       << "\" r=\"4\" fill=\"black\"/>\n";
  os << "</svg>\n";
  return os.str();
}

void emit_profile_svg(const MomentProfile& p, const std::string& path, const std::vector<SvgOverlay>& overlays) {
  write_text_file(path, profile_svg(p, overlays));
}

std::string loglog_svg(const std::vector<SvgSeries>& series, const std::string& x_label,
                       const std::string& y_label) {
  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const auto& s : series)
    for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
      if (!(s.x[i] > 0.0 && s.y[i] > 0.0)) continue;
      x0 = std::min(x0, std::log10(s.x[i]));
      x1 = std::max(x1, std::log10(s.x[i]));
      y0 = std::min(y0, std::log10(s.y[i]));
      y1 = std::max(y1, std::log10(s.y[i]));
    }
  if (!(x0 <= x1)) x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (x1 - x0 < 1e-12) x0 -= 0.5, x1 += 0.5;
  if (y1 - y0 < 1e-12) y0 -= 0.5, y1 += 0.5;
  const Frame f{x0, x1, y0, y1};

  std::ostringstream os;
  os << header() << axes(f, "log10 " + x_label, "log10 " + y_label);
  std::size_t k = 0;
  for (const auto& s : series) {
    const char* color = kPalette[k++ % std::size(kPalette)];
    os << "<polyline class=\"" << s.name << "\" fill=\"none\" stroke=\"" << color << "\" points=\"";
    for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i)
      if (s.x[i] > 0.0 && s.y[i] > 0.0)
        os << num(f.sx(std::log10(s.x[i]))) << ',' << num(f.sy(std::log10(s.y[i]))) << ' ';
    os << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace toric
