#pragma once

#include <cmath>

#include "krig/errors.hpp"

namespace krig {

/// Planar position.
struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

inline double distance(const Point& a, const Point& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

/// Axis-aligned rectangle, used for design generation.
struct Rect {
    double x_min = 0.0;
    double x_max = 1.0;
    double y_min = 0.0;
    double y_max = 1.0;

    double width() const { return x_max - x_min; }
    double height() const { return y_max - y_min; }

    bool contains(const Point& p) const {
        return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
    }

    void require_positive_area() const {
        if (!(width() > 0.0) || !(height() > 0.0))
            throw invalid_design_error("rectangle has no positive area");
    }

    static Rect square(double lo, double hi) { return Rect{lo, hi, lo, hi}; }
};

} // namespace krig
