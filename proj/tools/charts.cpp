#include "charts.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "backbone/edge_list.hpp"

namespace bb::cli {
namespace {

constexpr double kWidth = 640, kHeight = 480, kMargin = 60;
constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2",
                                    "#7f7f7f", "#bcbd22", "#17becf"};

const char* colour(std::size_t i) { return kPalette[i % std::size(kPalette)]; }

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

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

class Svg {
 public:
  Svg() {
    s_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
       << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"11\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  }

  void line(double x1, double y1, double x2, double y2, const char* stroke = "#999") {
    s_ << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2) << "\" y2=\"" << num(y2)
       << "\" stroke=\"" << stroke << "\"/>\n";
  }

  void text(double x, double y, const std::string& t, const char* anchor = "middle", const char* fill = "#333") {
    s_ << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" text-anchor=\"" << anchor << "\" fill=\"" << fill
       << "\">" << escape(t) << "</text>\n";
  }

  void points(const char* tag, const std::vector<std::pair<double, double>>& pts, const char* stroke,
              const char* fill) {
    if (pts.empty()) return;
    s_ << '<' << tag << " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) s_ << (i ? " " : "") << num(pts[i].first) << ',' << num(pts[i].second);
    s_ << "\" stroke=\"" << stroke << "\" fill=\"" << fill << "\" stroke-width=\"1.5\"/>\n";
  }

  void dot(double x, double y, const char* fill) {
    s_ << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"2.5\" fill=\"" << fill << "\"/>\n";
  }

  void legend(const std::vector<std::string>& labels) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const double y = 20 + 14 * static_cast<double>(i);
      s_ << "<rect x=\"" << num(kWidth - 150) << "\" y=\"" << num(y - 9) << "\" width=\"10\" height=\"10\" fill=\""
         << colour(i) << "\"/>\n";
      text(kWidth - 135, y, labels[i], "start");
    }
  }

  std::string finish() {
    s_ << "</svg>\n";
    return s_.str();
  }

 private:
  std::ostringstream s_;
};

struct Axes {
  double x0, x1, y0, y1;

  double px(double x) const { return kMargin + (x - x0) / (x1 - x0) * (kWidth - 2 * kMargin - 100); }
  double py(double y) const { return kHeight - kMargin - (y - y0) / (y1 - y0) * (kHeight - 2 * kMargin); }

  void draw(Svg& svg, const std::string& x_label, const std::string& y_label) const {
    svg.line(px(x0), py(y0), px(x1), py(y0), "#333");
    svg.line(px(x0), py(y0), px(x0), py(y1), "#333");
    for (int i = 0; i <= 4; ++i) {
      const double fx = x0 + (x1 - x0) * i / 4.0, fy = y0 + (y1 - y0) * i / 4.0;
      svg.text(px(fx), py(y0) + 15, format_double(std::round(fx * 1000) / 1000));
      svg.text(px(x0) - 6, py(fy) + 4, format_double(std::round(fy * 1000) / 1000), "end");
    }
    svg.text((px(x0) + px(x1)) / 2, kHeight - 15, x_label);
    svg.text(15, kHeight / 2, y_label, "start");
  }
};

Axes fit(double x0, double x1, double y0, double y1) {
  if (!(x1 > x0)) x1 = x0 + 1;
  if (!(y1 > y0)) y1 = y0 + 1;
  return {x0, x1, y0, y1};
}

}  // namespace

std::string radar_svg(const ComparisonReport& report) {
  Svg svg;
  const std::size_t axes = report.measures.size();
  const double cx = (kWidth - 150) / 2, cy = kHeight / 2, radius = std::min(cx, cy) - 50;
  std::vector<double> scale(axes, 0.0);
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < axes; ++i) {
      if (std::isfinite(row.values[i])) scale[i] = std::max(scale[i], row.values[i]);
    }
  }
  auto angle = [&](std::size_t i) {
    return -std::numbers::pi / 2 + 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(axes);
  };
  for (std::size_t i = 0; i < axes; ++i) {
    const double a = angle(i);
    svg.line(cx, cy, cx + radius * std::cos(a), cy + radius * std::sin(a));
    svg.text(cx + (radius + 18) * std::cos(a), cy + (radius + 18) * std::sin(a) + 4, report.measures[i]);
  }
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < report.rows.size(); ++r) {
    const auto& row = report.rows[r];
    labels.push_back(row.label);
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < axes; ++i) {
      const double v = std::isfinite(row.values[i]) && scale[i] > 0 ? row.values[i] / scale[i] : 0.0;
      pts.emplace_back(cx + radius * v * std::cos(angle(i)), cy + radius * v * std::sin(angle(i)));
    }
    svg.points("polygon", pts, colour(r), "none");
  }
  svg.legend(labels);
  return svg.finish();
}

std::string progression_svg(const ProgressionSeries& series) {
  Svg svg;
  double lo = 0, hi = 0;
  for (const auto& s : series.series) {
    for (double v : s.values) {
      if (std::isfinite(v)) hi = std::max(hi, v), lo = std::min(lo, v);
    }
  }
  const Axes axes = fit(series.sweep.front(), series.sweep.back(), lo, hi);
  axes.draw(svg, std::string(to_string(series.filter)), series.measure);
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < series.series.size(); ++k) {
    const auto& s = series.series[k];
    labels.push_back(s.label);
    std::vector<std::pair<double, double>> run;
    auto flush = [&] {
      svg.points("polyline", run, colour(k), "none");
      run.clear();
    };
    for (std::size_t i = 0; i < s.values.size(); ++i) {
      if (!std::isfinite(s.values[i])) {
        flush();
        continue;
      }
      run.emplace_back(axes.px(series.sweep[i]), axes.py(s.values[i]));
      svg.dot(run.back().first, run.back().second, colour(k));
    }
    flush();
  }
  svg.legend(labels);
  return svg.finish();
}

std::string distribution_svg(const std::vector<Sample>& samples, const std::string& x_label) {
  Svg svg;
  double lo = 0, hi = 0;
  bool first = true;
  for (const auto& s : samples) {
    for (double v : s.values) {
      lo = first ? v : std::min(lo, v);
      hi = first ? v : std::max(hi, v);
      first = false;
    }
  }
  const Axes axes = fit(lo, hi, 0.0, 1.0);
  axes.draw(svg, x_label, "CDF");
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    labels.push_back(samples[k].label);
    std::vector<double> sorted = samples[k].values;
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (i + 1 < sorted.size() && sorted[i + 1] == sorted[i]) continue;
      svg.dot(axes.px(sorted[i]), axes.py(static_cast<double>(i + 1) / n), colour(k));
    }
  }
  svg.legend(labels);
  return svg.finish();
}

}  // namespace bb::cli
