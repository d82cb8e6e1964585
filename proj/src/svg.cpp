#include "linkq/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <ostream>

namespace linkq {

namespace {

constexpr double kWidth = 800;
constexpr double kHeight = 500;
constexpr double kLeft = 80;
constexpr double kRight = 180;
constexpr double kTop = 40;
constexpr double kBottom = 50;

constexpr std::array<const char*, 10> kPalette = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                                  "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string escape(const std::string& text) {
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

}  // namespace

void write_svg_chart(std::ostream& out, const std::vector<CurveSeries>& series, const std::string& title) {
  double max_q = 1;
  double max_y = 1;
  for (const auto& s : series) {
    for (const auto& [q, y] : s.points) {
      max_q = std::max(max_q, static_cast<double>(q));
      max_y = std::max(max_y, y);
    }
  }
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double q) { return kLeft + plot_w * q / max_q; };
  auto py = [&](double y) { return kTop + plot_h * (1.0 - y / max_y); };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << num(kLeft) << "\" y=\"24\" font-size=\"14\">" << escape(title) << "</text>\n";
  out << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop + plot_h) << "\" x2=\"" << num(kLeft + plot_w)
      << "\" y2=\"" << num(kTop + plot_h) << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop) << "\" x2=\"" << num(kLeft) << "\" y2=\""
      << num(kTop + plot_h) << "\" stroke=\"black\"/>\n";
  for (int tick = 0; tick <= 4; ++tick) {
    const double fq = max_q * tick / 4.0;
    const double fy = max_y * tick / 4.0;
    out << "<text x=\"" << num(px(fq)) << "\" y=\"" << num(kTop + plot_h + 18) << "\" text-anchor=\"middle\">"
        << static_cast<std::uint64_t>(fq) << "</text>\n";
    out << "<text x=\"" << num(kLeft - 6) << "\" y=\"" << num(py(fy) + 4) << "\" text-anchor=\"end\">"
        << static_cast<std::uint64_t>(fy) << "</text>\n";
  }
  out << "<text x=\"" << num(kLeft + plot_w / 2) << "\" y=\"" << num(kHeight - 10)
      << "\" text-anchor=\"middle\">link queries</text>\n";
  out << "<text x=\"16\" y=\"" << num(kTop + plot_h / 2) << "\" transform=\"rotate(-90 16 "
      << num(kTop + plot_h / 2) << ")\" text-anchor=\"middle\">links discovered</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kPalette[i % kPalette.size()];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    out << num(px(0)) << ',' << num(py(0));
    for (const auto& [q, y] : series[i].points) out << ' ' << num(px(static_cast<double>(q))) << ',' << num(py(y));
    out << "\"/>\n";
    const double ly = kTop + 10 + 18.0 * static_cast<double>(i);
    out << "<line x1=\"" << num(kLeft + plot_w + 15) << "\" y1=\"" << num(ly) << "\" x2=\""
        << num(kLeft + plot_w + 35) << "\" y2=\"" << num(ly) << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << num(kLeft + plot_w + 40) << "\" y=\"" << num(ly + 4) << "\">" << escape(series[i].name)
        << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace linkq
