#include "luroth/figures.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "luroth/covers.hpp"

namespace luroth {

namespace {

constexpr double kCanvas = 1000.0;

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

void rect(std::ostringstream& os, double x, double y, double w, double h,
          const char* fill) {
  os << "<rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\"" << num(w)
     << "\" height=\"" << num(h) << "\" fill=\"" << fill << "\"/>\n";
}

void text(std::ostringstream& os, double x, double y, const std::string& s, int size = 11,
          const char* anchor = "middle") {
  os << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" font-size=\"" << size
     << "\" font-family=\"monospace\" text-anchor=\"" << anchor << "\">" << s << "</text>\n";
}

std::string header(double w, double h) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w) << "\" height=\""
     << num(h) << "\" viewBox=\"0 0 " << num(w) << " " << num(h) << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return os.str();
}

// Clips the unit square against c1 <= x + y <= c2; vertices in order.
std::vector<std::pair<double, double>> band_polygon(double c1, double c2) {
  std::vector<std::pair<double, double>> poly = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  auto clip = [&](double a, double b, double c) {  // keep a*x + b*y <= c
    std::vector<std::pair<double, double>> out;
    const size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
      auto [x1, y1] = poly[i];
      auto [x2, y2] = poly[(i + 1) % n];
      const double d1 = a * x1 + b * y1 - c;
      const double d2 = a * x2 + b * y2 - c;
      if (d1 <= 0) out.emplace_back(x1, y1);
      if ((d1 < 0 && d2 > 0) || (d1 > 0 && d2 < 0)) {
        const double t = d1 / (d1 - d2);
        out.emplace_back(x1 + t * (x2 - x1), y1 + t * (y2 - y1));
      }
    }
    poly = std::move(out);
    return !poly.empty();
  };
  if (!clip(1, 1, c2)) return {};
  if (!clip(-1, -1, -c1)) return {};
  return poly;
}

void cover_bar(std::ostringstream& os, const IntervalUnion& u, double x0, double scale, double y,
               double bar_h, bool annotate) {
  for (const auto& p : u.parts()) {
    const double x = x0 + p.lo.to_double() * scale;
    const double w = std::max(0.5, p.length().to_double() * scale);
    rect(os, x, y, w, bar_h, "#303030");
  }
  if (annotate && u.size() <= 8 && !u.empty()) {
    for (size_t i = 0; i + 1 < u.parts().size(); ++i) {
      const Rat glo = u.parts()[i].hi;
      const Rat ghi = u.parts()[i + 1].lo;
      const double mid = x0 + 0.5 * (glo.to_double() + ghi.to_double()) * scale;
      text(os, mid, y - 4, "(" + glo.str() + ", " + ghi.str() + ")", 10);
    }
    text(os, x0 + u.parts().front().lo.to_double() * scale, y + bar_h + 12,
         u.parts().front().lo.str(), 10, "start");
    text(os, x0 + u.parts().back().hi.to_double() * scale, y + bar_h + 12,
         u.parts().back().hi.str(), 10, "end");
  }
}

}  // namespace

std::string svg_scc(long N1, long N2, int depth) {
  const DigitSet band = DigitSet::band(N1, N2);
  const double row_h = 54.0, bar_h = 18.0, margin = 30.0, gutter = 40.0;
  const double height = margin + (depth + 1) * row_h + margin;
  std::ostringstream os;
  os << header(gutter + kCanvas + margin, height);
  text(os, gutter, 18, "stepwise construction of digits " + band.str(), 13, "start");
  for (int level = 0; level <= depth; ++level) {
    const IntervalUnion cover = level_cover(band, level);
    const double y = margin + level * row_h + 18.0;
    text(os, 6, y + bar_h / 2 + 4, "L" + std::to_string(level), 11, "start");
    // unit interval scaled by exactly 1000
    cover_bar(os, cover, gutter, kCanvas, y, bar_h, level <= 3);
  }
  os << "</svg>\n";
  return os.str();
}

std::string svg_product_square(long N1a, long N2a, int level_a, long N1b, long N2b, int level_b) {
  const auto cover_a = level_cover(DigitSet::band(N1a, N2a), level_a);
  const auto cover_b = level_cover(DigitSet::band(N1b, N2b), level_b);
  const auto cert = certify_gap(DigitSet::band(N1a, N2a), level_a, DigitSet::band(N1b, N2b),
                                level_b);
  const double margin = 40.0, side = kCanvas;
  std::ostringstream os;
  os << header(side + 2 * margin, side + 2 * margin);
  auto x_of = [&](double v) { return margin + v * side; };
  auto y_of = [&](double v) { return margin + (1.0 - v) * side; };

  // diagonal bands where the folded sum misses the circle
  for (const auto& gap : cert.gaps.gaps) {
    const double glo = gap.lo.to_double(), ghi = gap.hi.to_double();
    for (int m = 0; m <= 2; ++m) {
      const auto poly = band_polygon(glo + m, ghi + m);
      if (poly.empty()) continue;
      os << "<polygon points=\"";
      for (const auto& [px, py] : poly) os << num(x_of(px)) << "," << num(y_of(py)) << " ";
      os << "\" fill=\"#9db8e8\" fill-opacity=\"0.55\"/>\n";
    }
    text(os, x_of(0.5 * (glo + ghi)) + 60, y_of(0.5 * (glo + ghi)) - 60,
         "(" + gap.lo.str() + ", " + gap.hi.str() + ") + Z", 12);
  }
  // when the fold closes up, show the splits of the raw sum instead
  if (cert.gaps.empty() && cert.sum.size() > 1 && cert.sum.size() <= 9) {
    for (size_t i = 0; i + 1 < cert.sum.parts().size(); ++i) {
      const Rat glo = cert.sum.parts()[i].hi, ghi = cert.sum.parts()[i + 1].lo;
      const auto poly = band_polygon(glo.to_double(), ghi.to_double());
      if (poly.empty()) continue;
      os << "<polygon points=\"";
      for (const auto& [px, py] : poly) os << num(x_of(px)) << "," << num(y_of(py)) << " ";
      os << "\" fill=\"#c7a7e0\" fill-opacity=\"0.6\"/>\n";
      const double mid = 0.5 * (glo.to_double() + ghi.to_double()) / 2.0;
      text(os, x_of(mid) + 40, y_of(mid) - 40, "(" + glo.str() + ", " + ghi.str() + ")", 12);
    }
  }

  for (const auto& pa : cover_a.parts())
    for (const auto& pb : cover_b.parts()) {
      const double x = x_of(pa.lo.to_double());
      const double w = std::max(0.5, pa.length().to_double() * side);
      const double y = y_of(pb.hi.to_double());
      const double h = std::max(0.5, pb.length().to_double() * side);
      rect(os, x, y, w, h, "#101010");
    }

  os << "<rect x=\"" << num(margin) << "\" y=\"" << num(margin) << "\" width=\"" << num(side)
     << "\" height=\"" << num(side) << "\" fill=\"none\" stroke=\"black\"/>\n";
  text(os, margin + side / 2, margin + side + 26,
       "digits " + DigitSet::band(N1a, N2a).str() + " level " + std::to_string(level_a), 12);
  text(os, 16, margin + side / 2,
       "digits " + DigitSet::band(N1b, N2b).str() + " level " + std::to_string(level_b), 12,
       "start");
  os << "</svg>\n";
  return os.str();
}

std::string svg_sum_cover(long N1a, long N2a, int depth_a, long N1b, long N2b, int depth_b) {
  const auto cert =
      certify_gap(DigitSet::band(N1a, N2a), depth_a, DigitSet::band(N1b, N2b), depth_b);
  const double margin = 30.0, bar_h = 22.0;
  const double height = 190.0;
  std::ostringstream os;
  os << header(kCanvas + 2 * margin, height);
  text(os, margin, 18,
       "cover sum: digits " + DigitSet::band(N1a, N2a).str() + " depth " +
           std::to_string(depth_a) + "  +  digits " + DigitSet::band(N1b, N2b).str() + " depth " +
           std::to_string(depth_b),
       13, "start");

  const Interval hull = cert.sum.hull();
  const double span = (hull.hi - hull.lo).to_double();
  const double scale = kCanvas / span;
  text(os, margin, 48, "sum", 11, "start");
  for (const auto& p : cert.sum.parts()) {
    const double x = margin + (p.lo - hull.lo).to_double() * scale;
    const double w = std::max(0.5, p.length().to_double() * scale);
    rect(os, x, 56, w, bar_h, "#303030");
  }
  if (cert.sum.size() <= 8) {
    for (size_t i = 0; i + 1 < cert.sum.parts().size(); ++i) {
      const Rat glo = cert.sum.parts()[i].hi, ghi = cert.sum.parts()[i + 1].lo;
      const double mid = margin + ((glo + ghi) / Rat(2) - hull.lo).to_double() * scale;
      text(os, mid, 52, "(" + glo.str() + ", " + ghi.str() + ")", 10);
    }
  }

  text(os, margin, 118, "mod 1", 11, "start");
  cover_bar(os, cert.folded.parts, margin, kCanvas, 126, bar_h, true);
  os << "</svg>\n";
  return os.str();
}

}  // namespace luroth
