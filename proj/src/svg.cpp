#include "regionid/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace regionid {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b"};

}  // namespace

std::string svg_region_snapshots(const std::vector<ConvexPolygon>& polygons,
                                 const Vec2& goal, const Vec2& box_lo,
                                 const Vec2& box_hi, const std::string& title) {
  if (polygons.empty()) throw std::runtime_error("no data");

  const double W = 640.0, H = 640.0, pad = 40.0;
  const double sx = (W - 2 * pad) / std::max(box_hi.x() - box_lo.x(), 1e-9);
  const double sy = (H - 2 * pad) / std::max(box_hi.y() - box_lo.y(), 1e-9);
  const double s = std::min(sx, sy);
  auto X = [&](double x) { return pad + (x - box_lo.x()) * s; };
  auto Y = [&](double y) { return H - pad - (y - box_lo.y()) * s; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
      << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << " " << H
      << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << num(W / 2) << "\" y=\"24\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"16\">"
      << title << "</text>\n";
  // prior box
  out << "<rect x=\"" << num(X(box_lo.x())) << "\" y=\"" << num(Y(box_hi.y()))
      << "\" width=\"" << num((box_hi.x() - box_lo.x()) * s) << "\" height=\""
      << num((box_hi.y() - box_lo.y()) * s)
      << "\" fill=\"none\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n";

  // draw a subsample (at most 12) from oldest to newest
  const std::size_t n = polygons.size();
  const std::size_t shown = std::min<std::size_t>(n, 12);
  for (std::size_t k = 0; k < shown; ++k) {
    const std::size_t idx =
        (shown == 1) ? n - 1 : (k * (n - 1)) / (shown - 1);
    const auto& poly = polygons[idx];
    if (poly.vertices().empty()) continue;
    const double frac = (shown == 1) ? 1.0 : double(k) / double(shown - 1);
    std::ostringstream pts;
    for (const auto& v : poly.vertices())
      pts << num(X(v.x())) << "," << num(Y(v.y())) << " ";
    out << "<polygon points=\"" << pts.str() << "\" fill=\"#1f77b4\" "
        << "fill-opacity=\"" << num(0.06 + 0.10 * frac)
        << "\" stroke=\"#1f77b4\" stroke-opacity=\""
        << num(0.3 + 0.7 * frac) << "\"/>\n";
  }

  // goal cross
  const double gx = X(goal.x()), gy = Y(goal.y());
  out << "<line x1=\"" << num(gx - 6) << "\" y1=\"" << num(gy) << "\" x2=\""
      << num(gx + 6) << "\" y2=\"" << num(gy)
      << "\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";
  out << "<line x1=\"" << num(gx) << "\" y1=\"" << num(gy - 6) << "\" x2=\""
      << num(gx) << "\" y2=\"" << num(gy + 6)
      << "\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";
  out << "</svg>\n";
  return out.str();
}

std::string svg_curves(const std::vector<Curve>& curves,
                       const std::string& title) {
  bool any = false;
  for (const auto& c : curves) any = any || !c.points.empty();
  if (!any) throw std::runtime_error("no data");

  double t_lo = 1e300, t_hi = -1e300, v_lo = 0.0, v_hi = -1e300;
  for (const auto& c : curves)
    for (const auto& [t, v] : c.points) {
      t_lo = std::min(t_lo, t);
      t_hi = std::max(t_hi, t);
      v_lo = std::min(v_lo, v);
      v_hi = std::max(v_hi, v);
    }
  if (t_hi <= t_lo) t_hi = t_lo + 1.0;
  if (v_hi <= v_lo) v_hi = v_lo + 1.0;

  const double W = 720.0, H = 420.0, padl = 64.0, padr = 20.0, padt = 40.0,
               padb = 44.0;
  auto X = [&](double t) {
    return padl + (t - t_lo) / (t_hi - t_lo) * (W - padl - padr);
  };
  auto Y = [&](double v) {
    return H - padb - (v - v_lo) / (v_hi - v_lo) * (H - padt - padb);
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
      << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << " " << H
      << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << num(W / 2) << "\" y=\"22\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"15\">"
      << title << "</text>\n";

  // axes + ticks
  out << "<line x1=\"" << num(padl) << "\" y1=\"" << num(H - padb)
      << "\" x2=\"" << num(W - padr) << "\" y2=\"" << num(H - padb)
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << num(padl) << "\" y1=\"" << num(padt) << "\" x2=\""
      << num(padl) << "\" y2=\"" << num(H - padb)
      << "\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 5; ++k) {
    const double t = t_lo + (t_hi - t_lo) * k / 5.0;
    const double v = v_lo + (v_hi - v_lo) * k / 5.0;
    out << "<line x1=\"" << num(X(t)) << "\" y1=\"" << num(H - padb)
        << "\" x2=\"" << num(X(t)) << "\" y2=\"" << num(H - padb + 4)
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << num(X(t)) << "\" y=\"" << num(H - padb + 18)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"11\">"
        << tick_label(t) << "</text>\n";
    out << "<line x1=\"" << num(padl - 4) << "\" y1=\"" << num(Y(v))
        << "\" x2=\"" << num(padl) << "\" y2=\"" << num(Y(v))
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << num(padl - 8) << "\" y=\"" << num(Y(v) + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"11\">"
        << tick_label(v) << "</text>\n";
  }

  for (std::size_t i = 0; i < curves.size(); ++i) {
    const auto& c = curves[i];
    if (c.points.empty()) continue;
    const char* color = kPalette[i % 6];
    std::ostringstream pts;
    for (const auto& [t, v] : c.points)
      pts << num(X(t)) << "," << num(Y(v)) << " ";
    out << "<polyline points=\"" << pts.str()
        << "\" fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\"/>\n";
    out << "<text x=\"" << num(W - padr - 6) << "\" y=\""
        << num(padt + 16 + 16 * double(i))
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"12\" fill=\""
        << color << "\">" << c.label << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace regionid
