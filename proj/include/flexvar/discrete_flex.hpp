#pragma once

#include <Eigen/Dense>
#include <iosfwd>

#include "flexvar/flex.hpp"

namespace flexvar {

// Grid-sampled flex from the nullspace solver. Values are stored in blocks
// [xi | eta | zeta], node (i,j) at j*n_u + i, and are normalized to unit
// L2 grid norm. triviality_score is the relative norm of the projection
// onto the six-dimensional rigid-motion subspace.
struct DiscreteFlex {
    int n_u = 0, n_v = 0;
    double u0 = 0, u1 = 0, v0 = 0, v1 = 0;
    Eigen::VectorXd values;
    double residual_norm = 0.0;
    double triviality_score = 0.0;
    int kernel_dim = 0;
    bool numerically_rigid = false;

    int nodes() const { return n_u * n_v; }
    double u_at(int i) const { return u0 + (u1 - u0) * i / (n_u - 1); }
    double v_at(int j) const { return v0 + (v1 - v0) * j / (n_v - 1); }
    double xi(int i, int j) const { return values[j * n_u + i]; }
    double eta(int i, int j) const { return values[nodes() + j * n_u + i]; }
    double zeta(int i, int j) const { return values[2 * nodes() + j * n_u + i]; }
};

// Discretizes the Monge-form flex system on an n_u x n_v grid (centered
// second-order differences inside, one-sided second-order at the edges),
// takes the numerical nullspace of the assembled matrix by SVD with
// threshold sigma <= tol * sigma_max, removes the rigid-motion component,
// and returns a unit-norm least-residual survivor. Among survivors whose
// residuals tie at the threshold, the smoothest one (smallest discrete
// second-difference seminorm) is returned, which makes the selection
// deterministic and refinement-stable.
//
// If every nullspace vector lies in the rigid-motion subspace the result
// has numerically_rigid = true and carries the smallest achievable
// residual instead.
DiscreteFlex construct_flex_numeric(const MongePatch& p, int n_u, int n_v, double tol = 1e-10);

// Relative L2-grid-norm of the projection onto the span of the six
// rigid-motion fields sampled on the grid; in [0,1].
double triviality_score(const DiscreteFlex& d, const MongePatch& p);

// Piecewise-bicubic (4x4 local Lagrange) interpolation of the grid values,
// usable anywhere a FlexField is.
FlexField interpolate_bicubic(const DiscreteFlex& d);

void write_csv(const DiscreteFlex& d, std::ostream& out);

}  // namespace flexvar
