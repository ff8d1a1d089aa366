#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "flexvar/domain.hpp"
#include "flexvar/field.hpp"

namespace flexvar {

struct GaussRule {
    std::vector<double> nodes;    // on [-1,1]
    std::vector<double> weights;
};

// Gauss-Legendre rule with n nodes, cached. Exact on polynomials of
// degree <= 2n-1.
const GaussRule& gauss_legendre(int n);

// Area rules: tensor-product Gauss on rectangles; radial Gauss times
// equispaced-panel Gauss in angle (with the r Jacobian) on disks.
struct QuadratureSpec {
    int nodes_per_axis = 32;
};

// Composite Gauss-Legendre panels along each smooth boundary segment,
// positively oriented. `nodes` is the per-segment node budget.
struct BoundaryQuadratureSpec {
    int nodes = 64;
};

// Weighted node sum with deterministic node ordering and compensated
// accumulation. Node evaluation failures propagate with their location.
double integrate_2d(const std::function<double(double, double)>& f, const Domain2& d, QuadratureSpec q);

// Line integral of a curve-point integrand over one segment, s in [0,1]:
// returns sum of w_k * g(c(s_k)). The integrand sees position and d/ds,
// so both arc-length and P du + Q dv style integrals build on it.
double integrate_curve(const std::function<double(const CurvePoint&)>& g, const CurveFn& curve, int nodes);

// ∮ P du + Q dv over the positively oriented domain boundary.
double integrate_boundary(const std::function<double(double, double)>& P,
                          const std::function<double(double, double)>& Q, const Domain2& d,
                          BoundaryQuadratureSpec q);

// Evaluates both sides of the planar Stokes identity
// ∮ P du + Q dv = ∬ (Q_u - P_v) du dv as a self-test of the quadrature
// stack; P and Q must carry derivatives.
std::pair<double, double> green_consistency(const Field& P, const Field& Q, const Domain2& d,
                                            QuadratureSpec q2, BoundaryQuadratureSpec qb);

// Second-order central difference of a scalar callable.
double central_difference(const std::function<double(double)>& f, double x, double h);

// One Richardson step on the central difference (h and h/2), error O(h^4).
double central_difference_richardson(const std::function<double(double)>& f, double x, double h);

}  // namespace flexvar
