#include "fortcalc/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "fortcalc/errors.hpp"

namespace fortcalc {
namespace {

void append_field(std::string& out, double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12e", value + 0.0);  // no "-0"
  out += buf;
}

std::string fixed(double value, int digits = 2) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

std::string tick_label(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", value);
  return buf;
}

std::string xml_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
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

struct Point {
  double x;
  double u_rwa;
  double u_nonrwa;
};

}  // namespace

std::string format_csv(const ScanCurve& curve) {
  std::string out = kCsvHeader;
  out += '\n';
  for (std::size_t i = 0; i < curve.radii.size(); ++i) {
    const auto& row = curve.rows[i];
    const double fields[] = {curve.radii[i],        row.potential.u_rwa,
                             row.potential.u_nonrwa, row.potential.term1,
                             row.potential.term2,    row.potential.term3,
                             row.force.f_rwa,        row.force.f_nonrwa};
    bool first = true;
    for (double v : fields) {
      if (!first) out += ',';
      append_field(out, v);
      first = false;
    }
    out += '\n';
  }
  return out;
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

void emit_csv(const ScanCurve& curve, const std::filesystem::path& path) {
  write_text_file(path, format_csv(curve));
}

Overlay parse_overlay(const std::string& name) {
  if (name == "rwa") return Overlay::kRwa;
  if (name == "nonrwa") return Overlay::kNonRwa;
  if (name == "both") return Overlay::kBoth;
  throw ValidationError("overlay must be one of rwa, nonrwa, both (got '" +
                        name + "')");
}

std::string render_svg(const ScanCurve& curve, Overlay overlay) {
  const bool show_rwa = overlay != Overlay::kNonRwa;
  const bool show_nonrwa = overlay != Overlay::kRwa;

  std::vector<Point> pts;
  for (std::size_t i = 0; i < curve.radii.size(); ++i) {
    const Point pt{curve.radii[i], curve.rows[i].potential.u_rwa,
                   curve.rows[i].potential.u_nonrwa};
    if (!std::isfinite(pt.x)) continue;
    if (show_rwa && !std::isfinite(pt.u_rwa)) continue;
    if (show_nonrwa && !std::isfinite(pt.u_nonrwa)) continue;
    pts.push_back(pt);
  }
  if (pts.size() < 2) {
    throw ValidationError("svg: fewer than two finite samples to plot");
  }

  double x_min = pts.front().x;
  double x_max = pts.back().x;
  double y_min = std::numeric_limits<double>::infinity();
  double y_max = -y_min;
  for (const auto& pt : pts) {
    if (show_rwa) {
      y_min = std::min(y_min, pt.u_rwa);
      y_max = std::max(y_max, pt.u_rwa);
    }
    if (show_nonrwa) {
      y_min = std::min(y_min, pt.u_nonrwa);
      y_max = std::max(y_max, pt.u_nonrwa);
    }
  }
  y_min = std::min(y_min, 0.0);
  y_max = std::max(y_max, 0.0);
  if (y_max == y_min) y_max = y_min + 1.0;
  if (x_max == x_min) x_max = x_min + 1.0;
  const double pad = 0.05 * (y_max - y_min);
  y_min -= pad;
  y_max += pad;

  constexpr double kWidth = 720, kHeight = 480;
  constexpr double kLeft = 90, kRight = 20, kTop = 40, kBottom = 60;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * plot_w; };
  auto sy = [&](double y) { return kTop + (y_max - y) / (y_max - y_min) * plot_h; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!curve.meta.label.empty()) {
    svg << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"14\">"
        << xml_escape(curve.meta.label) << "</text>\n";
  }

  // Frame, zero line and ticks.
  svg << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w
      << "\" height=\"" << plot_h
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg << "<line x1=\"" << kLeft << "\" y1=\"" << fixed(sy(0.0)) << "\" x2=\""
      << kLeft + plot_w << "\" y2=\"" << fixed(sy(0.0))
      << "\" stroke=\"#999999\" stroke-width=\"0.5\"/>\n";
  constexpr int kTicks = 5;
  for (int k = 0; k <= kTicks; ++k) {
    const double xv = x_min + (x_max - x_min) * k / kTicks;
    const double yv = y_min + (y_max - y_min) * k / kTicks;
    svg << "<text x=\"" << fixed(sx(xv)) << "\" y=\"" << kTop + plot_h + 18
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"11\">"
        << tick_label(xv) << "</text>\n";
    svg << "<text x=\"" << kLeft - 6 << "\" y=\"" << fixed(sy(yv) + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"11\">"
        << tick_label(yv) << "</text>\n";
  }
  svg << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 15
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\">r / w0</text>\n";
  svg << "<text x=\"20\" y=\"" << kTop + plot_h / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\" transform=\"rotate(-90 20 "
      << kTop + plot_h / 2 << ")\">U / ħΓ</text>\n";

  auto polyline = [&](bool rwa) {
    svg << "<polyline class=\"" << (rwa ? "rwa" : "nonrwa")
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"";
    if (rwa) svg << " stroke-dasharray=\"6,4\"";
    svg << " points=\"";
    bool first = true;
    for (const auto& pt : pts) {
      if (!first) svg << ' ';
      svg << fixed(sx(pt.x)) << ',' << fixed(sy(rwa ? pt.u_rwa : pt.u_nonrwa));
      first = false;
    }
    svg << "\"/>\n";
  };
  if (show_nonrwa) polyline(false);
  if (show_rwa) polyline(true);
  svg << "</svg>\n";
  return svg.str();
}

void emit_svg(const ScanCurve& curve, const std::filesystem::path& path,
              Overlay overlay) {
  write_text_file(path, render_svg(curve, overlay));
}

}  // namespace fortcalc
