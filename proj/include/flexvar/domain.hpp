#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "flexvar/errors.hpp"

namespace flexvar {

// A point of a parametrized curve in the (u,v) plane together with its
// parameter derivative d/ds.
struct CurvePoint {
    double u, v;
    double du, dv;
};

// A smooth curve segment parametrized over s in [0,1].
using CurveFn = std::function<CurvePoint(double)>;

CurveFn segment_curve(double u0, double v0, double u1, double v1);
CurveFn bezier2_curve(double u0, double v0, double cu, double cv, double u1, double v1);

// Planar integration domain: an axis-aligned rectangle or a disk. The
// boundary is traversed counterclockwise (region on the left), split into
// smooth segments.
class Domain2 {
public:
    enum class Shape { Rectangle, Disk };

    static Domain2 rectangle(double u0, double u1, double v0, double v1);
    static Domain2 disk(double cu, double cv, double radius);

    Shape shape() const { return shape_; }

    // Rectangle accessors (throw for disks, and vice versa).
    double u0() const { require(Shape::Rectangle); return a_; }
    double u1() const { require(Shape::Rectangle); return b_; }
    double v0() const { require(Shape::Rectangle); return c_; }
    double v1() const { require(Shape::Rectangle); return d_; }
    double center_u() const { require(Shape::Disk); return a_; }
    double center_v() const { require(Shape::Disk); return b_; }
    double radius() const { require(Shape::Disk); return c_; }

    double area() const;
    bool contains(double u, double v) const;

    // Counterclockwise boundary as smooth segments, each over s in [0,1].
    std::vector<CurveFn> boundary_segments() const;

    // Deterministic interior sample points (n per axis), used for
    // residual scans and preconditions. Points stay strictly inside.
    std::vector<std::pair<double, double>> sample_grid(int n) const;

private:
    Domain2(Shape s, double a, double b, double c, double d) : shape_(s), a_(a), b_(b), c_(c), d_(d) {}
    void require(Shape s) const {
        if (shape_ != s) throw ValidationError("domain accessor used on the wrong shape");
    }

    Shape shape_;
    double a_, b_, c_, d_;  // rectangle: u0,u1,v0,v1; disk: cu,cv,r,unused
};

}  // namespace flexvar
