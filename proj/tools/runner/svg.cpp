// Copyright 2026 The polcirc Authors
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

#include "svg.hpp"

#include <fmt/format.h>

#include <cmath>

namespace polcirc::runner {

namespace {

constexpr double kMargin = 48.0;

std::string escaped(const std::string& s) {
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

}  // namespace

SvgPlot::SvgPlot(double x0, double x1, double y0, double y1, int width, int height)
    : x0_(x0), x1_(x1), y0_(y0), y1_(y1), width_(width), height_(height) {}

double SvgPlot::sx(double x) const { return kMargin + (x - x0_) / (x1_ - x0_) * (width_ - 2 * kMargin); }
double SvgPlot::sy(double y) const { return height_ - kMargin - (y - y0_) / (y1_ - y0_) * (height_ - 2 * kMargin); }

void SvgPlot::title(const std::string& text) { title_ = text; }
void SvgPlot::description(const std::string& text) { desc_ = text; }

void SvgPlot::axes(const std::string& xlabel, const std::string& ylabel, int ticks) {
    body_.push_back(fmt::format(
        R"(<rect x="{:.2f}" y="{:.2f}" width="{:.2f}" height="{:.2f}" fill="none" stroke="#444" stroke-width="1"/>)",
        sx(x0_), sy(y1_), sx(x1_) - sx(x0_), sy(y0_) - sy(y1_)));
    for (int i = 0; i <= ticks; ++i) {
        const double fx = x0_ + (x1_ - x0_) * i / ticks;
        const double fy = y0_ + (y1_ - y0_) * i / ticks;
        body_.push_back(fmt::format(R"(<text x="{:.2f}" y="{:.2f}" font-size="10" text-anchor="middle">{:.3g}</text>)",
                                    sx(fx), sy(y0_) + 14, fx));
        body_.push_back(fmt::format(R"(<text x="{:.2f}" y="{:.2f}" font-size="10" text-anchor="end">{:.3g}</text>)",
                                    sx(x0_) - 4, sy(fy) + 3, fy));
    }
    body_.push_back(fmt::format(R"(<text x="{:.2f}" y="{:.2f}" font-size="12" text-anchor="middle">{}</text>)",
                                0.5 * (sx(x0_) + sx(x1_)), height_ - 8.0, escaped(xlabel)));
    body_.push_back(fmt::format(
        R"svg(<text x="12" y="{:.2f}" font-size="12" text-anchor="middle" transform="rotate(-90 12 {:.2f})">{}</text>)svg",
        0.5 * (sy(y0_) + sy(y1_)), 0.5 * (sy(y0_) + sy(y1_)), escaped(ylabel)));
}

void SvgPlot::polyline(const std::vector<Point2>& pts, const std::string& color, double width, bool dashed) {
    if (pts.size() < 2) return;
    std::string coords;
    for (const Point2& p : pts) coords += fmt::format("{:.2f},{:.2f} ", sx(p.x), sy(p.y));
    coords.pop_back();
    body_.push_back(fmt::format(R"(<polyline points="{}" fill="none" stroke="{}" stroke-width="{:.2f}"{}/>)", coords,
                                color, width, dashed ? R"( stroke-dasharray="4 3")" : ""));
}

void SvgPlot::marker(Point2 p, const std::string& color, double radius) {
    body_.push_back(fmt::format(R"(<circle cx="{:.2f}" cy="{:.2f}" r="{:.2f}" fill="{}"/>)", sx(p.x), sy(p.y), radius,
                                color));
}

void SvgPlot::label(Point2 p, const std::string& text, const std::string& color) {
    body_.push_back(fmt::format(R"(<text x="{:.2f}" y="{:.2f}" font-size="11" fill="{}">{}</text>)", sx(p.x) + 5,
                                sy(p.y) - 5, color, escaped(text)));
}

void SvgPlot::half_disk() {
    std::vector<Point2> arc;
    constexpr int kSegments = 180;
    for (int i = 0; i <= kSegments; ++i) {
        const double a = std::acos(-1.0) * i / kSegments;
        arc.push_back({std::cos(a), std::sin(a)});
    }
    polyline(arc, "#888", 1.0);
    polyline({{-1.0, 0.0}, {1.0, 0.0}}, "#888", 1.0);
}

std::string SvgPlot::str() const {
    std::string out = fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n", width_,
        height_, width_, height_);
    if (!desc_.empty()) out += fmt::format("<desc>{}</desc>\n", escaped(desc_));
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!title_.empty())
        out += fmt::format("<text x=\"{:.2f}\" y=\"20\" font-size=\"14\" text-anchor=\"middle\">{}</text>\n",
                           width_ / 2.0, escaped(title_));
    for (const auto& line : body_) out += line + "\n";
    out += "</svg>\n";
    return out;
}

}  // namespace polcirc::runner
