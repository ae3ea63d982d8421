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

#pragma once

// Minimal self-contained SVG plotting: a single axes box with data-space
// transforms, enough for disk trajectories and log-log scatter plots.

#include <string>
#include <utility>
#include <vector>

namespace polcirc::runner {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

class SvgPlot {
public:
    /// Data window [x0, x1] x [y0, y1] drawn into a width x height canvas.
    SvgPlot(double x0, double x1, double y0, double y1, int width = 640, int height = 400);

    void title(const std::string& text);
    void description(const std::string& text);
    void axes(const std::string& xlabel, const std::string& ylabel, int ticks = 5);
    void polyline(const std::vector<Point2>& pts, const std::string& color, double width = 1.5,
                  bool dashed = false);
    void marker(Point2 p, const std::string& color, double radius = 3.0);
    void label(Point2 p, const std::string& text, const std::string& color = "black");
    /// Upper unit half-circle and its diameter.
    void half_disk();

    std::string str() const;

private:
    double sx(double x) const;
    double sy(double y) const;

    double x0_, x1_, y0_, y1_;
    int width_, height_;
    std::string title_;
    std::string desc_;
    std::vector<std::string> body_;
};

}  // namespace polcirc::runner
