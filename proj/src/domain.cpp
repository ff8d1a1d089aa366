#include "flexvar/domain.hpp"

#include <cmath>

namespace flexvar {

CurveFn segment_curve(double u0, double v0, double u1, double v1) {
    return [=](double s) -> CurvePoint { return {u0 + s * (u1 - u0), v0 + s * (v1 - v0), u1 - u0, v1 - v0}; };
}

CurveFn bezier2_curve(double u0, double v0, double cu, double cv, double u1, double v1) {
    return [=](double s) -> CurvePoint {
        const double w0 = (1 - s) * (1 - s), w1 = 2 * s * (1 - s), w2 = s * s;
        return {w0 * u0 + w1 * cu + w2 * u1, w0 * v0 + w1 * cv + w2 * v1,
                2 * ((1 - s) * (cu - u0) + s * (u1 - cu)), 2 * ((1 - s) * (cv - v0) + s * (v1 - cv))};
    };
}

Domain2 Domain2::rectangle(double u0, double u1, double v0, double v1) {
    if (!(u0 < u1) || !(v0 < v1)) throw ValidationError("rectangle domain requires u0 < u1 and v0 < v1");
    return Domain2(Shape::Rectangle, u0, u1, v0, v1);
}

Domain2 Domain2::disk(double cu, double cv, double radius) {
    if (!(radius > 0)) throw ValidationError("disk domain requires a positive radius");
    return Domain2(Shape::Disk, cu, cv, radius, 0.0);
}

double Domain2::area() const {
    if (shape_ == Shape::Rectangle) return (b_ - a_) * (d_ - c_);
    return M_PI * c_ * c_;
}

bool Domain2::contains(double u, double v) const {
    if (shape_ == Shape::Rectangle) return u >= a_ && u <= b_ && v >= c_ && v <= d_;
    const double du = u - a_, dv = v - b_;
    return du * du + dv * dv <= c_ * c_;
}

std::vector<CurveFn> Domain2::boundary_segments() const {
    std::vector<CurveFn> segs;
    if (shape_ == Shape::Rectangle) {
        segs.push_back(segment_curve(a_, c_, b_, c_));  // bottom, left to right
        segs.push_back(segment_curve(b_, c_, b_, d_));  // right, upward
        segs.push_back(segment_curve(b_, d_, a_, d_));  // top, right to left
        segs.push_back(segment_curve(a_, d_, a_, c_));  // left, downward
        return segs;
    }
    const double cu = a_, cv = b_, r = c_;
    for (int q = 0; q < 4; ++q) {
        const double t0 = 0.5 * M_PI * q;
        segs.push_back([=](double s) -> CurvePoint {
            const double t = t0 + 0.5 * M_PI * s;
            return {cu + r * std::cos(t), cv + r * std::sin(t),
                    -r * std::sin(t) * 0.5 * M_PI, r * std::cos(t) * 0.5 * M_PI};
        });
    }
    return segs;
}

std::vector<std::pair<double, double>> Domain2::sample_grid(int n) const {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(static_cast<std::size_t>(n) * n);
    if (shape_ == Shape::Rectangle) {
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                const double fu = (i + 0.5) / n, fv = (j + 0.5) / n;
                pts.emplace_back(a_ + fu * (b_ - a_), c_ + fv * (d_ - c_));
            }
        return pts;
    }
    // Polar lattice, radii strictly inside.
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            const double r = c_ * (i + 0.5) / n;
            const double t = 2.0 * M_PI * j / n;
            pts.emplace_back(a_ + r * std::cos(t), b_ + r * std::sin(t));
        }
    return pts;
}

}  // namespace flexvar
