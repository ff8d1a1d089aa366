#pragma once

#include <Eigen/Dense>
#include <utility>

#include "flexvar/domain.hpp"
#include "flexvar/field.hpp"
#include "flexvar/quadrature.hpp"

namespace flexvar {

using Vec3 = Eigen::Vector3d;

// Oriented surface graph z = f(u,v) over a planar domain. Orientation is
// the fixed upward convention: n = (1+fu^2+fv^2)^(-1/2) (-fu, -fv, 1).
struct MongePatch {
    Field f;
    Domain2 domain;
};

// General parametrized patch x(u,v) with three coordinate fields.
struct ParamPatch {
    Field x, y, z;
    Domain2 domain;
};

ParamPatch as_param(const MongePatch& p);

// First/second derivative data of a ParamPatch at a point.
struct SurfaceJets {
    Vec3 pos, xu, xv, xuu, xuv, xvv;
};
SurfaceJets surface_jets(const ParamPatch& p, double u, double v);

// Fundamental forms and derived pointwise quantities of a ParamPatch.
// Throws DomainError when the parametrization degenerates (|xu x xv| = 0).
struct FundamentalForms {
    double E, F, G;        // first form
    double L, M, N;        // second form w.r.t. the unit normal below
    Vec3 normal;           // xu x xv normalized
    double area_element;   // |xu x xv|
    double mean_curvature() const { return (E * N - 2.0 * F * M + G * L) / (2.0 * (E * G - F * F)); }
    double gauss_curvature() const { return (L * N - M * M) / (E * G - F * F); }
};
FundamentalForms fundamental_forms(const ParamPatch& p, double u, double v);

Vec3 unit_normal(const MongePatch& p, double u, double v);
double mean_curvature(const MongePatch& p, double u, double v);

// Principal curvatures ordered k1 >= k2; their mean equals mean_curvature
// exactly by construction (H +- sqrt(H^2 - K)).
std::pair<double, double> principal_curvatures(const MongePatch& p, double u, double v);

// ∬ H dA. The Monge area element is sqrt(1+fu^2+fv^2) du dv.
double total_mean_curvature(const MongePatch& p, QuadratureSpec q);
double total_mean_curvature(const ParamPatch& p, QuadratureSpec q);

double surface_area(const ParamPatch& p, QuadratureSpec q);
double total_gauss_curvature(const ParamPatch& p, QuadratureSpec q);

// Signed volume between the patch and the (u,v) plane:
// ∬ z (xu x xv)·e3 du dv, which reduces to ∬ f du dv for Monge patches.
double algebraic_volume(const ParamPatch& p, QuadratureSpec q);

}  // namespace flexvar
