#include "flexvar/surface.hpp"

#include <cmath>
#include <sstream>

namespace flexvar {

namespace {

Field coordinate_u() {
    return fn_field([](double u, double) { return Jet2::var_u(u); });
}

Field coordinate_v() {
    return fn_field([](double, double v) { return Jet2::var_v(v); });
}

}  // namespace

ParamPatch as_param(const MongePatch& p) { return {coordinate_u(), coordinate_v(), p.f, p.domain}; }

SurfaceJets surface_jets(const ParamPatch& p, double u, double v) {
    const Jet2 x = p.x.jet(u, v), y = p.y.jet(u, v), z = p.z.jet(u, v);
    SurfaceJets s;
    s.pos = {x.v, y.v, z.v};
    s.xu = {x.du, y.du, z.du};
    s.xv = {x.dv, y.dv, z.dv};
    s.xuu = {x.duu, y.duu, z.duu};
    s.xuv = {x.duv, y.duv, z.duv};
    s.xvv = {x.dvv, y.dvv, z.dvv};
    return s;
}

FundamentalForms fundamental_forms(const ParamPatch& p, double u, double v) {
    const SurfaceJets s = surface_jets(p, u, v);
    FundamentalForms ff;
    ff.E = s.xu.dot(s.xu);
    ff.F = s.xu.dot(s.xv);
    ff.G = s.xv.dot(s.xv);
    const Vec3 n = s.xu.cross(s.xv);
    ff.area_element = n.norm();
    if (!(ff.area_element > 0.0)) {
        std::ostringstream msg;
        msg << "degenerate parametrization (|xu x xv| = 0) at (u,v)=(" << u << ", " << v << ")";
        throw DomainError(msg.str());
    }
    ff.normal = n / ff.area_element;
    ff.L = s.xuu.dot(ff.normal);
    ff.M = s.xuv.dot(ff.normal);
    ff.N = s.xvv.dot(ff.normal);
    return ff;
}

Vec3 unit_normal(const MongePatch& p, double u, double v) {
    const Jet2 f = p.f.jet(u, v);
    const double w = 1.0 + f.du * f.du + f.dv * f.dv;
    return Vec3(-f.du, -f.dv, 1.0) / std::sqrt(w);
}

double mean_curvature(const MongePatch& p, double u, double v) {
    const Jet2 f = p.f.jet(u, v);
    const double w = 1.0 + f.du * f.du + f.dv * f.dv;
    const double num =
        (1.0 + f.dv * f.dv) * f.duu - 2.0 * f.du * f.dv * f.duv + (1.0 + f.du * f.du) * f.dvv;
    return num / (2.0 * w * std::sqrt(w));
}

std::pair<double, double> principal_curvatures(const MongePatch& p, double u, double v) {
    const Jet2 f = p.f.jet(u, v);
    const double w = 1.0 + f.du * f.du + f.dv * f.dv;
    const double h = mean_curvature(p, u, v);
    const double k = (f.duu * f.dvv - f.duv * f.duv) / (w * w);  // Gauss curvature of a graph
    const double disc = std::sqrt(std::max(0.0, h * h - k));
    return {h + disc, h - disc};
}

double total_mean_curvature(const MongePatch& p, QuadratureSpec q) {
    return integrate_2d(
        [&](double u, double v) {
            const Jet2 f = p.f.jet(u, v);
            const double w = 1.0 + f.du * f.du + f.dv * f.dv;
            const double num =
                (1.0 + f.dv * f.dv) * f.duu - 2.0 * f.du * f.dv * f.duv + (1.0 + f.du * f.du) * f.dvv;
            return num / (2.0 * w);  // H * sqrt(W)
        },
        p.domain, q);
}

double total_mean_curvature(const ParamPatch& p, QuadratureSpec q) {
    return integrate_2d(
        [&](double u, double v) {
            const FundamentalForms ff = fundamental_forms(p, u, v);
            return ff.mean_curvature() * ff.area_element;
        },
        p.domain, q);
}

double surface_area(const ParamPatch& p, QuadratureSpec q) {
    return integrate_2d(
        [&](double u, double v) { return fundamental_forms(p, u, v).area_element; }, p.domain, q);
}

double total_gauss_curvature(const ParamPatch& p, QuadratureSpec q) {
    return integrate_2d(
        [&](double u, double v) {
            const FundamentalForms ff = fundamental_forms(p, u, v);
            return ff.gauss_curvature() * ff.area_element;
        },
        p.domain, q);
}

double algebraic_volume(const ParamPatch& p, QuadratureSpec q) {
    return integrate_2d(
        [&](double u, double v) {
            const SurfaceJets s = surface_jets(p, u, v);
            return s.pos.z() * (s.xu.x() * s.xv.y() - s.xu.y() * s.xv.x());
        },
        p.domain, q);
}

}  // namespace flexvar
