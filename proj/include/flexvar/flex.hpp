#pragma once

#include <array>

#include "flexvar/surface.hpp"

namespace flexvar {

// Candidate infinitesimal flex v = (xi, eta, zeta), three scalar fields
// with second derivatives available on the patch domain.
struct FlexField {
    Field xi, eta, zeta;
};

FlexField operator+(const FlexField& a, const FlexField& b);
FlexField operator*(double c, const FlexField& a);

// Field of the rigid motion v(x) = a + b x x, bound to a patch so the
// third coordinate of x is f(u,v). Satisfies the flex equations exactly.
FlexField rigid_motion_flex(const Vec3& a, const Vec3& b, const MongePatch& p);

// Left-hand sides of the first-order isometry system for a general patch:
// (xu.vu, xu.vv + xv.vu, xv.vv). All three vanish iff v is an
// infinitesimal isometry of the patch to first order.
std::array<double, 3> flex_residuals_general(const ParamPatch& p, const FlexField& v, double u, double v_);

// Same system in Monge form:
// (xi_u + fu zeta_u, xi_v + eta_u + fv zeta_u + fu zeta_v, eta_v + fv zeta_v).
std::array<double, 3> flex_residuals_monge(const MongePatch& p, const FlexField& v, double u, double v_);

// The six second-derivative identities obtained by differentiating the
// Monge-form system, as residuals (left minus right):
//   xi_uu + fuu zeta_u + fu zeta_uu,   xi_uv + fuv zeta_u + fu zeta_uv,
//   xi_vv + fvv zeta_u + fu zeta_vv,   eta_uu + fuu zeta_v + fv zeta_uu,
//   eta_uv + fuv zeta_v + fv zeta_uv,  eta_vv + fvv zeta_v + fv zeta_vv.
std::array<double, 6> second_order_identities(const MongePatch& p, const FlexField& v, double u, double v_);

struct ResidualScan {
    double max_first_order = 0.0;
    double max_second_order = 0.0;
    double worst_u = 0.0, worst_v = 0.0;  // location of the worst first-order residual
};
ResidualScan scan_flex_residuals(const MongePatch& p, const FlexField& v, int samples_per_axis = 16);

// Throws ValidationError (with the worst residual and its location) unless
// the first-order residuals stay within tol on the sample grid.
void require_flex(const MongePatch& p, const FlexField& v, double tol = 1e-8);

// d/dt at t=0 of the length of the deformed curve under x -> x + t v(x):
// ∫ (x'(s).v'(s)) / |x'(s)| ds along the curve. Throws DomainError at a
// zero-speed point.
double first_variation_of_length(const ParamPatch& p, const CurveFn& curve, const FlexField& v,
                                 int nodes = 128);
double first_variation_of_length(const MongePatch& p, const CurveFn& curve, const FlexField& v,
                                 int nodes = 128);

}  // namespace flexvar
