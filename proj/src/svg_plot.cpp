// Copyright 2026 The holo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "holo/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace holo {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kMargin = 64.0;
constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_loglog_svg(const std::string& title, const std::string& x_label,
                              const std::string& y_label, const std::vector<PlotSeries>& series) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      if (x <= 0.0 || y <= 0.0) continue;
      xmin = std::min(xmin, std::log10(x));
      xmax = std::max(xmax, std::log10(x));
      ymin = std::min(ymin, std::log10(y));
      ymax = std::max(ymax, std::log10(y));
    }
  }
  if (!std::isfinite(xmin)) xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
  xmin = std::floor(xmin), xmax = std::max(std::ceil(xmax), xmin + 1.0);
  ymin = std::floor(ymin), ymax = std::max(std::ceil(ymax), ymin + 1.0);

  const auto px = [&](double lx) {
    return kMargin + (lx - xmin) / (xmax - xmin) * (kWidth - 2.0 * kMargin);
  };
  const auto py = [&](double ly) {
    return kHeight - kMargin - (ly - ymin) / (ymax - ymin) * (kHeight - 2.0 * kMargin);
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">"
      << escape(title) << "</text>\n";
  for (double d = xmin; d <= xmax + 1e-9; d += 1.0) {
    svg << "<line x1=\"" << fmt(px(d)) << "\" y1=\"" << fmt(py(ymin)) << "\" x2=\"" << fmt(px(d))
        << "\" y2=\"" << fmt(py(ymax)) << "\" stroke=\"#ddd\"/>\n";
    svg << "<text x=\"" << fmt(px(d)) << "\" y=\"" << fmt(py(ymin) + 16)
        << "\" text-anchor=\"middle\">1e" << static_cast<int>(d) << "</text>\n";
  }
  for (double d = ymin; d <= ymax + 1e-9; d += 1.0) {
    svg << "<line x1=\"" << fmt(px(xmin)) << "\" y1=\"" << fmt(py(d)) << "\" x2=\"" << fmt(px(xmax))
        << "\" y2=\"" << fmt(py(d)) << "\" stroke=\"#ddd\"/>\n";
    svg << "<text x=\"" << fmt(px(xmin) - 6) << "\" y=\"" << fmt(py(d) + 4)
        << "\" text-anchor=\"end\">1e" << static_cast<int>(d) << "</text>\n";
  }
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 16 << "\" text-anchor=\"middle\">"
      << escape(x_label) << "</text>\n";
  svg << "<text x=\"16\" y=\"" << kHeight / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << kHeight / 2 << ")\">" << escape(y_label) << "</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kColors[i % 4];
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (const auto& [x, y] : series[i].points) {
      if (x <= 0.0 || y <= 0.0) continue;
      svg << (first ? "" : " ") << fmt(px(std::log10(x))) << "," << fmt(py(std::log10(y)));
      first = false;
    }
    svg << "\"/>\n";
    for (const auto& [x, y] : series[i].points) {
      if (x <= 0.0 || y <= 0.0) continue;
      svg << "<circle cx=\"" << fmt(px(std::log10(x))) << "\" cy=\"" << fmt(py(std::log10(y)))
          << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
    }
    svg << "<text x=\"" << fmt(kWidth - kMargin - 4) << "\" y=\"" << fmt(kMargin + 16.0 * i)
        << "\" text-anchor=\"end\" fill=\"" << color << "\">" << escape(series[i].label)
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace holo
