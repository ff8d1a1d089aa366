#include "flexvar/discrete_flex.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <vector>

namespace flexvar {

namespace {

struct StencilEntry {
    int index;
    double coeff;
};

// Second-order first-derivative stencil along one axis: centered inside,
// one-sided at the two edges.
std::array<StencilEntry, 3> d1_stencil(int i, int n, double h) {
    if (i == 0) return {{{0, -1.5 / h}, {1, 2.0 / h}, {2, -0.5 / h}}};
    if (i == n - 1) return {{{n - 1, 1.5 / h}, {n - 2, -2.0 / h}, {n - 3, 0.5 / h}}};
    return {{{i - 1, -0.5 / h}, {i + 1, 0.5 / h}, {i, 0.0}}};
}

// Rigid-motion generators sampled on the grid: three translations and
// three rotation fields b x (u, v, f), as columns.
Eigen::MatrixXd rigid_basis_on_grid(const MongePatch& p, const DiscreteFlex& d) {
    const int N = d.nodes();
    Eigen::MatrixXd basis(3 * N, 6);
    basis.setZero();
    for (int j = 0; j < d.n_v; ++j) {
        for (int i = 0; i < d.n_u; ++i) {
            const int k = j * d.n_u + i;
            const double u = d.u_at(i), v = d.v_at(j);
            const double f = p.f.value(u, v);
            // translations e1, e2, e3
            basis(k, 0) = 1.0;
            basis(N + k, 1) = 1.0;
            basis(2 * N + k, 2) = 1.0;
            // rotations about e1, e2, e3: b x (u, v, f)
            basis(N + k, 3) = -f;
            basis(2 * N + k, 3) = v;
            basis(k, 4) = f;
            basis(2 * N + k, 4) = -u;
            basis(k, 5) = -v;
            basis(N + k, 5) = u;
        }
    }
    // Modified Gram-Schmidt. Orthonormal in the Euclidean product spans the
    // same subspace as in the (1/N)-scaled grid product, and the projection
    // operator is identical.
    for (int c = 0; c < 6; ++c) {
        for (int prev = 0; prev < c; ++prev)
            basis.col(c) -= basis.col(prev).dot(basis.col(c)) * basis.col(prev);
        basis.col(c).normalize();
    }
    return basis;
}

// Sum over both axes and all three components of squared interior second
// differences; the seminorm used to pick a smooth kernel survivor.
Eigen::MatrixXd smoothness_gram(const Eigen::MatrixXd& Q, int n_u, int n_v, double hu, double hv) {
    const int N = n_u * n_v;
    const int k = static_cast<int>(Q.cols());
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(k, k);
    Eigen::RowVectorXd row(k);
    auto accumulate_row = [&](int c, int a, int b, int mid, double h2) {
        row = (Q.row(c * N + a) + Q.row(c * N + b) - 2.0 * Q.row(c * N + mid)) / h2;
        M.noalias() += row.transpose() * row;
    };
    for (int c = 0; c < 3; ++c) {
        for (int j = 0; j < n_v; ++j)
            for (int i = 1; i + 1 < n_u; ++i)
                accumulate_row(c, j * n_u + i - 1, j * n_u + i + 1, j * n_u + i, hu * hu);
        for (int j = 1; j + 1 < n_v; ++j)
            for (int i = 0; i < n_u; ++i)
                accumulate_row(c, (j - 1) * n_u + i, (j + 1) * n_u + i, j * n_u + i, hv * hv);
    }
    return M;
}

void fix_sign(Eigen::VectorXd& w) {
    int arg = 0;
    w.cwiseAbs().maxCoeff(&arg);
    if (w[arg] < 0) w = -w;
}

}  // namespace

DiscreteFlex construct_flex_numeric(const MongePatch& p, int n_u, int n_v, double tol) {
    if (n_u < 4 || n_v < 4) throw ValidationError("flex construction needs a grid of at least 4x4 nodes");
    if (p.domain.shape() != Domain2::Shape::Rectangle)
        throw ValidationError("flex construction requires a rectangle domain");

    DiscreteFlex d;
    d.n_u = n_u;
    d.n_v = n_v;
    d.u0 = p.domain.u0();
    d.u1 = p.domain.u1();
    d.v0 = p.domain.v0();
    d.v1 = p.domain.v1();

    const int N = n_u * n_v;
    const double hu = (d.u1 - d.u0) / (n_u - 1);
    const double hv = (d.v1 - d.v0) / (n_v - 1);

    // Three equations per node; unknown blocks [xi | eta | zeta].
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(3 * N, 3 * N);
    for (int j = 0; j < n_v; ++j) {
        for (int i = 0; i < n_u; ++i) {
            const int k = j * n_u + i;
            const Jet2 f = p.f.jet(d.u_at(i), d.v_at(j));
            const auto su = d1_stencil(i, n_u, hu);
            const auto sv = d1_stencil(j, n_v, hv);
            for (const auto& e : su) {
                const int col = j * n_u + e.index;
                A(3 * k + 0, col) += e.coeff;                       // xi_u
                A(3 * k + 0, 2 * N + col) += f.du * e.coeff;        // + fu zeta_u
                A(3 * k + 1, N + col) += e.coeff;                   // eta_u
                A(3 * k + 1, 2 * N + col) += f.dv * e.coeff;        // + fv zeta_u
            }
            for (const auto& e : sv) {
                const int col = e.index * n_u + i;
                A(3 * k + 1, col) += e.coeff;                       // xi_v
                A(3 * k + 1, 2 * N + col) += f.du * e.coeff;        // + fu zeta_v
                A(3 * k + 2, N + col) += e.coeff;                   // eta_v
                A(3 * k + 2, 2 * N + col) += f.dv * e.coeff;        // + fv zeta_v
            }
        }
    }

    Eigen::BDCSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeFullV);
    const Eigen::VectorXd& sigma = svd.singularValues();
    const double sigma_max = sigma(0);
    int kernel_dim = 0;
    for (int i = static_cast<int>(sigma.size()) - 1; i >= 0 && sigma(i) <= tol * sigma_max; --i)
        ++kernel_dim;
    d.kernel_dim = kernel_dim;

    const Eigen::MatrixXd rigid = rigid_basis_on_grid(p, d);
    auto deflate = [&](Eigen::MatrixXd m) {
        m -= rigid * (rigid.transpose() * m);
        return m;
    };

    if (kernel_dim == 0) {
        // No nullspace at all: report the best rigid-orthogonal direction.
        d.numerically_rigid = true;
        Eigen::VectorXd w = deflate(svd.matrixV().col(3 * N - 1));
        if (w.norm() < 1e-12) w = svd.matrixV().col(3 * N - 1);
        w.normalize();
        d.triviality_score = std::min(1.0, (rigid.transpose() * w).norm());
        w *= std::sqrt(static_cast<double>(N));
        fix_sign(w);
        d.values = w;
        d.residual_norm = (A * w).norm() / std::sqrt(3.0 * N);
        return d;
    }

    Eigen::MatrixXd kernel = svd.matrixV().rightCols(kernel_dim);
    Eigen::MatrixXd deflated = deflate(kernel);

    // Re-orthonormalize what survives deflation.
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(deflated);
    qr.setThreshold(1e-8);
    const int survivors = static_cast<int>(qr.rank());
    if (survivors == 0) {
        // Every nullspace vector is a rigid motion at this resolution.
        d.numerically_rigid = true;
        Eigen::VectorXd w = kernel.col(kernel_dim - 1);
        d.triviality_score = std::min(1.0, (rigid.transpose() * w).norm() / w.norm());
        w *= std::sqrt(static_cast<double>(N)) / w.norm();
        fix_sign(w);
        d.values = w;
        d.residual_norm = (A * w).norm() / std::sqrt(3.0 * N);
        return d;
    }
    Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(3 * N, survivors);

    // All survivors have residual at the SVD threshold; break the tie by
    // smoothness so refinement studies see a convergent field.
    const Eigen::MatrixXd M = smoothness_gram(Q, n_u, n_v, hu, hv);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(M);
    Eigen::VectorXd w = Q * eig.eigenvectors().col(0);

    w *= std::sqrt(static_cast<double>(N)) / w.norm();  // unit L2 grid norm
    fix_sign(w);
    d.values = w;
    d.residual_norm = (A * w).norm() / std::sqrt(3.0 * N);
    d.triviality_score = std::min(1.0, (rigid.transpose() * w).norm() / w.norm());
    return d;
}

double triviality_score(const DiscreteFlex& d, const MongePatch& p) {
    if (d.values.size() != 3 * d.nodes()) throw ValidationError("discrete flex grid does not match values");
    const Eigen::MatrixXd rigid = rigid_basis_on_grid(p, d);
    const double norm = d.values.norm();
    if (norm == 0.0) return 0.0;
    return std::min(1.0, (rigid.transpose() * d.values).norm() / norm);
}

namespace {

// Local 4x4 Lagrange interpolation of one grid component with derivatives.
class BicubicComponent final : public ScalarField2 {
public:
    BicubicComponent(Eigen::VectorXd grid, int n_u, int n_v, double u0, double u1, double v0, double v1)
        : g_(std::move(grid)), n_u_(n_u), n_v_(n_v), u0_(u0), v0_(v0),
          hu_((u1 - u0) / (n_u - 1)), hv_((v1 - v0) / (n_v - 1)) {}

    Jet2 jet(double u, double v) const override {
        double wu[4], dwu[4], ddwu[4], wv[4], dwv[4], ddwv[4];
        const int i0 = window((u - u0_) / hu_, n_u_, wu, dwu, ddwu, hu_);
        const int j0 = window((v - v0_) / hv_, n_v_, wv, dwv, ddwv, hv_);
        Jet2 r;
        for (int j = 0; j < 4; ++j) {
            for (int i = 0; i < 4; ++i) {
                const double g = g_[(j0 + j) * n_u_ + (i0 + i)];
                r.v += g * wu[i] * wv[j];
                r.du += g * dwu[i] * wv[j];
                r.dv += g * wu[i] * dwv[j];
                r.duu += g * ddwu[i] * wv[j];
                r.duv += g * dwu[i] * dwv[j];
                r.dvv += g * wu[i] * ddwv[j];
            }
        }
        return r;
    }

private:
    // Cubic Lagrange weights over nodes i0..i0+3 (index coordinates),
    // with derivative scaling back to the physical axis.
    static int window(double x, int n, double* w, double* dw, double* ddw, double h) {
        int i0 = static_cast<int>(std::floor(x)) - 1;
        if (i0 < 0) i0 = 0;
        if (i0 > n - 4) i0 = n - 4;
        for (int k = 0; k < 4; ++k) {
            double denom = 1.0, sum0 = 0.0;
            double others[3];
            int m = 0;
            for (int l = 0; l < 4; ++l) {
                if (l == k) continue;
                others[m++] = x - (i0 + l);
                denom *= static_cast<double>(k - l);
            }
            const double p01 = others[0] * others[1], p02 = others[0] * others[2],
                         p12 = others[1] * others[2];
            sum0 = others[0] + others[1] + others[2];
            w[k] = others[0] * p12 / denom;
            dw[k] = (p01 + p02 + p12) / denom / h;
            ddw[k] = 2.0 * sum0 / denom / (h * h);
        }
        return i0;
    }

    Eigen::VectorXd g_;
    int n_u_, n_v_;
    double u0_, v0_, hu_, hv_;
};

}  // namespace

FlexField interpolate_bicubic(const DiscreteFlex& d) {
    if (d.n_u < 4 || d.n_v < 4) throw ValidationError("bicubic interpolation needs at least 4x4 nodes");
    const int N = d.nodes();
    auto component = [&](int block) {
        return Field(std::make_shared<BicubicComponent>(d.values.segment(block * N, N), d.n_u, d.n_v,
                                                        d.u0, d.u1, d.v0, d.v1));
    };
    return {component(0), component(1), component(2)};
}

void write_csv(const DiscreteFlex& d, std::ostream& out) {
    out << "u,v,xi,eta,zeta\n";
    char buf[512];
    for (int j = 0; j < d.n_v; ++j)
        for (int i = 0; i < d.n_u; ++i) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", d.u_at(i), d.v_at(j),
                          d.xi(i, j), d.eta(i, j), d.zeta(i, j));
            out << buf;
        }
}

}  // namespace flexvar
