// Copyright 2026 The leo-lab Authors
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

#include "leolab/plot.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace leolab {

namespace {

constexpr double kWidth = 800, kHeight = 500;
constexpr double kLeft = 70, kRight = 190, kTop = 40, kBottom = 60;

const char *colour(PulseVariant v) {
    switch (v) {
    case PulseVariant::leo:
        return "#1f4fd1";
    case PulseVariant::free:
        return "#d12a1f";
    case PulseVariant::leo_with_id:
        return "#2a9d3a";
    }
    return "#000000";
}

void marker(std::ostringstream &os, LeoKind kind, double x, double y,
            const char *fill) {
    switch (kind) {
    case LeoKind::z2:
        os << "<circle cx=\"" << x << "\" cy=\"" << y
           << "\" r=\"3.5\" fill=\"" << fill << "\"/>\n";
        break;
    case LeoKind::z3:
        os << "<rect x=\"" << x - 3.5 << "\" y=\"" << y - 3.5
           << "\" width=\"7\" height=\"7\" fill=\"" << fill << "\"/>\n";
        break;
    case LeoKind::cnot:
        os << "<polygon points=\"" << x << ',' << y - 4.5 << ' ' << x - 4
           << ',' << y + 3.5 << ' ' << x + 4 << ',' << y + 3.5
           << "\" fill=\"" << fill << "\"/>\n";
        break;
    }
}

} // namespace

std::string render_svg(std::span<const FidelitySeries> series,
                       const std::string &title) {
    std::size_t tau_max = 1;
    for (const auto &s : series)
        for (const auto &p : s.points)
            tau_max = std::max(tau_max, p.tau);
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto px = [&](double tau) {
        return kLeft + plot_w * tau / static_cast<double>(tau_max);
    };
    auto py = [&](double f) { return kTop + plot_h * (1.0 - f); };

    std::ostringstream os;
    os << std::fixed << std::setprecision(2);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 500\" "
          "width=\"800\" height=\"500\" font-family=\"sans-serif\" "
          "font-size=\"12\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"500\" fill=\"white\"/>\n";
    os << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"24\" "
       << "text-anchor=\"middle\" font-size=\"15\">" << title << "</text>\n";

    // axes and grid
    os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\""
       << plot_w << "\" height=\"" << plot_h
       << "\" fill=\"none\" stroke=\"#333\"/>\n";
    for (int k = 0; k <= 5; ++k) {
        const double f = k / 5.0;
        os << "<line x1=\"" << kLeft << "\" y1=\"" << py(f) << "\" x2=\""
           << kLeft + plot_w << "\" y2=\"" << py(f)
           << "\" stroke=\"#ddd\"/>\n";
        os << "<text x=\"" << kLeft - 8 << "\" y=\"" << py(f) + 4
           << "\" text-anchor=\"end\">" << std::setprecision(1) << f
           << std::setprecision(2) << "</text>\n";
    }
    for (int k = 0; k <= 6; ++k) {
        const double tau = static_cast<double>(tau_max) * k / 6.0;
        os << "<line x1=\"" << px(tau) << "\" y1=\"" << kTop + plot_h
           << "\" x2=\"" << px(tau) << "\" y2=\"" << kTop + plot_h + 5
           << "\" stroke=\"#333\"/>\n";
        os << "<text x=\"" << px(tau) << "\" y=\"" << kTop + plot_h + 20
           << "\" text-anchor=\"middle\">" << std::setprecision(0) << tau
           << std::setprecision(2) << "</text>\n";
    }
    os << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 15
       << "\" text-anchor=\"middle\">pulses (tau)</text>\n";
    os << "<text x=\"18\" y=\"" << kTop + plot_h / 2
       << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
       << kTop + plot_h / 2 << ")\">fidelity</text>\n";

    // series
    double legend_y = kTop + 10;
    for (const auto &s : series) {
        const char *fill = colour(s.variant);
        if (s.points.size() > 1) {
            os << "<polyline fill=\"none\" stroke=\"" << fill
               << "\" stroke-opacity=\"0.5\" points=\"";
            for (const auto &p : s.points)
                os << px(static_cast<double>(p.tau)) << ','
                   << py(p.fidelity) << ' ';
            os << "\"/>\n";
        }
        for (const auto &p : s.points)
            marker(os, s.which, px(static_cast<double>(p.tau)),
                   py(p.fidelity), fill);
        const double lx = kWidth - kRight + 20;
        marker(os, s.which, lx, legend_y, fill);
        os << "<text x=\"" << lx + 12 << "\" y=\"" << legend_y + 4 << "\">"
           << to_string(s.which) << ' ' << to_string(s.variant)
           << "</text>\n";
        legend_y += 20;
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace leolab
