#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flexvar/flex.hpp"

namespace flexvar {

// Deformed position map (u + t xi, v + t eta, f + t zeta) as a general
// patch for one fixed t. At t = 0 it coincides with the base patch.
ParamPatch deformed_patch(const MongePatch& p, const FlexField& v, double t);

// d/dt at t=0 of the deformed patch's unit normal, computed analytically:
// with N(t) = psi_u x psi_v, the derivative is (N' - (N'.n) n) / |N|.
Vec3 normal_velocity(const MongePatch& p, const FlexField& v, double u, double v_);

// The tangential field m = n'(.,0) x n(.,0) of a (patch, flex) pair.
// Construction verifies the flex residuals at sample points (tol 1e-8).
class MField {
public:
    MField(MongePatch p, FlexField v, double residual_tol = 1e-8);

    // m by its definition n' x n; the reference route.
    Vec3 operator()(double u, double v) const;

    // m by the expanded closed-form in f and the flex derivatives. Agrees
    // with the definition wherever the flex equations hold; kept as an
    // independent cross-check of the algebra.
    Vec3 closed_form(double u, double v) const;

    const MongePatch& patch() const { return patch_; }
    const FlexField& flex() const { return flex_; }

private:
    MongePatch patch_;
    FlexField flex_;
};

// Variation of total mean curvature as the area integral
//   1/2 ∬ [(1+fv^2) zeta_uu - 2 fu fv zeta_uv + (1+fu^2) zeta_vv] du dv.
// Requires the flex residuals to vanish (same check as MField).
double variation_surface_integral(const MongePatch& p, const FlexField& v, QuadratureSpec q);

// Variation as the boundary circulation 1/2 ∮ m . dx, with dx the space
// curve differential: dz = fu du + fv dv along the boundary.
double variation_line_integral(const MongePatch& p, const FlexField& v, BoundaryQuadratureSpec q);

// Same circulation but with an alternative published expansion of the
// integrand whose du-coefficient carries a suspect sign on its
// (1+fu^2) zeta_v term. Exposed for the --erratum-probe comparison; it is
// NOT used by any other route.
double variation_line_integral_alt(const MongePatch& p, const FlexField& v, BoundaryQuadratureSpec q);

// Finite-difference oracle: central difference of H(deformed patch at t)
// with optional single Richardson step (h and h/2).
double variation_finite_difference(const MongePatch& p, const FlexField& v, QuadratureSpec q, double h,
                                   bool richardson = true);

struct VariationSpec {
    QuadratureSpec quad{64};
    BoundaryQuadratureSpec boundary{64};
    double fd_step = 1e-3;
    bool richardson = true;
    double tol_analytic = 1e-8;
    double tol_fd_factor = 10.0;  // tol_fd = factor * h^2
    bool erratum_probe = false;
};

struct VariationReport {
    double h_surface = 0.0;
    double h_line = 0.0;
    double h_fd = 0.0;
    double disc_sl = 0.0, disc_sf = 0.0, disc_lf = 0.0;
    bool pass = false;
    double tol_analytic = 0.0, tol_fd = 0.0;
    std::optional<double> h_line_alt;  // present when the probe ran
};

VariationReport variation_report(const MongePatch& p, const FlexField& v, const VariationSpec& spec);

struct SweepRow {
    double t = 0.0;
    double total_mean_curvature = 0.0;
    double area = 0.0;
    double volume = 0.0;
    double total_gauss = 0.0;
    bool regular = true;
    std::string error;
};

// Reports H, area, algebraic volume and total Gauss curvature of the
// deformed patch for each requested t. A regularity failure marks the row
// and the sweep continues.
std::vector<SweepRow> invariant_sweep(const MongePatch& p, const FlexField& v,
                                      const std::vector<double>& t_values, QuadratureSpec q);

}  // namespace flexvar
