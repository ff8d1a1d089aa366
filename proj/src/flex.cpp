#include "flexvar/flex.hpp"

#include <cmath>
#include <sstream>

namespace flexvar {

FlexField operator+(const FlexField& a, const FlexField& b) {
    return {a.xi + b.xi, a.eta + b.eta, a.zeta + b.zeta};
}

FlexField operator*(double c, const FlexField& a) { return {c * a.xi, c * a.eta, c * a.zeta}; }

FlexField rigid_motion_flex(const Vec3& a, const Vec3& b, const MongePatch& p) {
    const Field f = p.f;
    // v(u,v) = a + b x (u, v, f(u,v)), componentwise as jet fields.
    Field xi = fn_field([a, b, f](double u, double v) {
        return Jet2::constant(a.x()) + b.y() * f.jet(u, v) - b.z() * Jet2::var_v(v);
    });
    Field eta = fn_field([a, b, f](double u, double v) {
        return Jet2::constant(a.y()) + b.z() * Jet2::var_u(u) - b.x() * f.jet(u, v);
    });
    Field zeta = fn_field([a, b](double u, double v) {
        return Jet2::constant(a.z()) + b.x() * Jet2::var_v(v) - b.y() * Jet2::var_u(u);
    });
    return {xi, eta, zeta};
}

std::array<double, 3> flex_residuals_general(const ParamPatch& p, const FlexField& v, double u, double v_) {
    const SurfaceJets s = surface_jets(p, u, v_);
    const Jet2 xi = v.xi.jet(u, v_), eta = v.eta.jet(u, v_), zeta = v.zeta.jet(u, v_);
    const Vec3 vu(xi.du, eta.du, zeta.du);
    const Vec3 vv(xi.dv, eta.dv, zeta.dv);
    return {s.xu.dot(vu), s.xu.dot(vv) + s.xv.dot(vu), s.xv.dot(vv)};
}

std::array<double, 3> flex_residuals_monge(const MongePatch& p, const FlexField& v, double u, double v_) {
    const Jet2 f = p.f.jet(u, v_);
    const Jet2 xi = v.xi.jet(u, v_), eta = v.eta.jet(u, v_), zeta = v.zeta.jet(u, v_);
    return {xi.du + f.du * zeta.du,
            xi.dv + eta.du + f.dv * zeta.du + f.du * zeta.dv,
            eta.dv + f.dv * zeta.dv};
}

std::array<double, 6> second_order_identities(const MongePatch& p, const FlexField& v, double u, double v_) {
    const Jet2 f = p.f.jet(u, v_);
    const Jet2 xi = v.xi.jet(u, v_), eta = v.eta.jet(u, v_), zeta = v.zeta.jet(u, v_);
    return {xi.duu + f.duu * zeta.du + f.du * zeta.duu,
            xi.duv + f.duv * zeta.du + f.du * zeta.duv,
            xi.dvv + f.dvv * zeta.du + f.du * zeta.dvv,
            eta.duu + f.duu * zeta.dv + f.dv * zeta.duu,
            eta.duv + f.duv * zeta.dv + f.dv * zeta.duv,
            eta.dvv + f.dvv * zeta.dv + f.dv * zeta.dvv};
}

ResidualScan scan_flex_residuals(const MongePatch& p, const FlexField& v, int samples_per_axis) {
    ResidualScan scan;
    for (const auto& [u, v_] : p.domain.sample_grid(samples_per_axis)) {
        const auto r1 = flex_residuals_monge(p, v, u, v_);
        for (double r : r1) {
            if (std::abs(r) > scan.max_first_order) {
                scan.max_first_order = std::abs(r);
                scan.worst_u = u;
                scan.worst_v = v_;
            }
        }
        const auto r2 = second_order_identities(p, v, u, v_);
        for (double r : r2) scan.max_second_order = std::max(scan.max_second_order, std::abs(r));
    }
    return scan;
}

void require_flex(const MongePatch& p, const FlexField& v, double tol) {
    const ResidualScan scan = scan_flex_residuals(p, v);
    if (scan.max_first_order > tol) {
        std::ostringstream msg;
        msg << "field is not an infinitesimal flex: worst residual " << scan.max_first_order << " at (u,v)=("
            << scan.worst_u << ", " << scan.worst_v << "), tolerance " << tol;
        throw ValidationError(msg.str());
    }
}

double first_variation_of_length(const ParamPatch& p, const CurveFn& curve, const FlexField& v,
                                 int nodes) {
    return integrate_curve(
        [&](const CurvePoint& c) {
            const SurfaceJets s = surface_jets(p, c.u, c.v);
            const Jet2 xi = v.xi.jet(c.u, c.v), eta = v.eta.jet(c.u, c.v), zeta = v.zeta.jet(c.u, c.v);
            const Vec3 xprime = s.xu * c.du + s.xv * c.dv;
            const Vec3 vprime(xi.du * c.du + xi.dv * c.dv, eta.du * c.du + eta.dv * c.dv,
                              zeta.du * c.du + zeta.dv * c.dv);
            const double speed = xprime.norm();
            if (speed < 1e-14) {
                std::ostringstream msg;
                msg << "zero-speed point on curve at (u,v)=(" << c.u << ", " << c.v << ")";
                throw DomainError(msg.str());
            }
            return xprime.dot(vprime) / speed;
        },
        curve, nodes);
}

double first_variation_of_length(const MongePatch& p, const CurveFn& curve, const FlexField& v,
                                 int nodes) {
    return first_variation_of_length(as_param(p), curve, v, nodes);
}

}  // namespace flexvar
