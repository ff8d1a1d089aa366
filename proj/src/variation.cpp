#include "flexvar/variation.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace flexvar {

ParamPatch deformed_patch(const MongePatch& p, const FlexField& v, double t) {
    const Field f = p.f;
    const FlexField flex = v;
    Field x = fn_field([flex, t](double u, double v_) { return Jet2::var_u(u) + t * flex.xi.jet(u, v_); });
    Field y = fn_field([flex, t](double u, double v_) { return Jet2::var_v(v_) + t * flex.eta.jet(u, v_); });
    Field z = fn_field([f, flex, t](double u, double v_) { return f.jet(u, v_) + t * flex.zeta.jet(u, v_); });
    return {x, y, z, p.domain};
}

Vec3 normal_velocity(const MongePatch& p, const FlexField& v, double u, double v_) {
    const Jet2 f = p.f.jet(u, v_);
    const Jet2 xi = v.xi.jet(u, v_), eta = v.eta.jet(u, v_), zeta = v.zeta.jet(u, v_);
    const Vec3 xu(1.0, 0.0, f.du), xv(0.0, 1.0, f.dv);
    const Vec3 vu(xi.du, eta.du, zeta.du), vv(xi.dv, eta.dv, zeta.dv);
    const Vec3 n0 = xu.cross(xv);             // (-fu, -fv, 1), length sqrt(W)
    const Vec3 nprime = vu.cross(xv) + xu.cross(vv);
    const double len = n0.norm();
    const Vec3 n = n0 / len;
    return (nprime - nprime.dot(n) * n) / len;
}

MField::MField(MongePatch p, FlexField v, double residual_tol)
    : patch_(std::move(p)), flex_(std::move(v)) {
    require_flex(patch_, flex_, residual_tol);
}

Vec3 MField::operator()(double u, double v) const {
    const Vec3 nprime = normal_velocity(patch_, flex_, u, v);
    return nprime.cross(unit_normal(patch_, u, v));
}

Vec3 MField::closed_form(double u, double v) const {
    const Jet2 f = patch_.f.jet(u, v);
    const Jet2 xi = flex_.xi.jet(u, v), eta = flex_.eta.jet(u, v), zeta = flex_.zeta.jet(u, v);
    const double w = 1.0 + f.du * f.du + f.dv * f.dv;
    return Vec3(f.du * xi.dv + f.dv * eta.dv - zeta.dv,
                -f.du * xi.du - f.dv * eta.du + zeta.du,
                -(f.du * f.du + f.dv * f.dv) * eta.du + f.dv * zeta.du - f.du * w * zeta.dv) /
           w;
}

double variation_surface_integral(const MongePatch& p, const FlexField& v, QuadratureSpec q) {
    require_flex(p, v);
    return 0.5 * integrate_2d(
                     [&](double u, double v_) {
                         const Jet2 f = p.f.jet(u, v_);
                         const Jet2 zeta = v.zeta.jet(u, v_);
                         return (1.0 + f.dv * f.dv) * zeta.duu - 2.0 * f.du * f.dv * zeta.duv +
                                (1.0 + f.du * f.du) * zeta.dvv;
                     },
                     p.domain, q);
}

namespace {

double half_boundary_circulation(const MongePatch& p, BoundaryQuadratureSpec q,
                                 const std::function<double(double, double)>& P,
                                 const std::function<double(double, double)>& Q) {
    return 0.5 * integrate_boundary(P, Q, p.domain, q);
}

}  // namespace

double variation_line_integral(const MongePatch& p, const FlexField& v, BoundaryQuadratureSpec q) {
    const MField m(p, v);
    // m . dx with dx = (du, dv, fu du + fv dv).
    auto P = [&](double u, double v_) {
        const Vec3 mv = m(u, v_);
        return mv.x() + p.f.jet(u, v_).du * mv.z();
    };
    auto Q = [&](double u, double v_) {
        const Vec3 mv = m(u, v_);
        return mv.y() + p.f.jet(u, v_).dv * mv.z();
    };
    return half_boundary_circulation(p, q, P, Q);
}

double variation_line_integral_alt(const MongePatch& p, const FlexField& v, BoundaryQuadratureSpec q) {
    require_flex(p, v);
    // Alternative expansion; its du-coefficient's (1+fu^2) zeta_v term has
    // the opposite sign from what m . dx yields, hence the probe.
    auto P = [&](double u, double v_) {
        const Jet2 f = p.f.jet(u, v_);
        const Jet2 eta = v.eta.jet(u, v_), zeta = v.zeta.jet(u, v_);
        return (1.0 + f.du * f.du) * zeta.dv - f.du * eta.du;
    };
    auto Q = [&](double u, double v_) {
        const Jet2 f = p.f.jet(u, v_);
        const Jet2 eta = v.eta.jet(u, v_), zeta = v.zeta.jet(u, v_);
        return zeta.du - f.dv * eta.du - f.du * f.dv * zeta.dv;
    };
    return half_boundary_circulation(p, q, P, Q);
}

double variation_finite_difference(const MongePatch& p, const FlexField& v, QuadratureSpec q, double h,
                                   bool richardson) {
    require_flex(p, v);
    if (!(h > 0)) throw ValidationError("finite-difference step must be positive");
    auto total_h = [&](double t) {
        try {
            return total_mean_curvature(deformed_patch(p, v, t), q);
        } catch (const DomainError& e) {
            std::ostringstream msg;
            msg << e.what() << " [deformation parameter t=" << t << "]";
            throw DomainError(msg.str());
        }
    };
    if (richardson) return central_difference_richardson(total_h, 0.0, h);
    return central_difference(total_h, 0.0, h);
}

VariationReport variation_report(const MongePatch& p, const FlexField& v, const VariationSpec& spec) {
    VariationReport r;
    r.h_surface = variation_surface_integral(p, v, spec.quad);
    r.h_line = variation_line_integral(p, v, spec.boundary);
    r.h_fd = variation_finite_difference(p, v, spec.quad, spec.fd_step, spec.richardson);
    r.disc_sl = std::abs(r.h_surface - r.h_line);
    r.disc_sf = std::abs(r.h_surface - r.h_fd);
    r.disc_lf = std::abs(r.h_line - r.h_fd);
    r.tol_analytic = spec.tol_analytic;
    r.tol_fd = spec.tol_fd_factor * spec.fd_step * spec.fd_step;
    r.pass = r.disc_sl <= r.tol_analytic && r.disc_sf <= r.tol_fd;
    if (spec.erratum_probe) r.h_line_alt = variation_line_integral_alt(p, v, spec.boundary);
    return r;
}

std::vector<SweepRow> invariant_sweep(const MongePatch& p, const FlexField& v,
                                      const std::vector<double>& t_values, QuadratureSpec q) {
    require_flex(p, v);
    if (t_values.empty()) throw ValidationError("sweep requires a non-empty t list");
    std::vector<SweepRow> rows;
    rows.reserve(t_values.size());
    for (double t : t_values) {
        SweepRow row;
        row.t = t;
        try {
            const ParamPatch deformed = deformed_patch(p, v, t);
            row.total_mean_curvature = total_mean_curvature(deformed, q);
            row.area = surface_area(deformed, q);
            row.volume = algebraic_volume(deformed, q);
            row.total_gauss = total_gauss_curvature(deformed, q);
        } catch (const DomainError& e) {
            row.regular = false;
            row.error = e.what();
            row.total_mean_curvature = row.area = row.volume = row.total_gauss =
                std::numeric_limits<double>::quiet_NaN();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace flexvar
