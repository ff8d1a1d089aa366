#include "flexvar/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace flexvar {

namespace {

// Kahan compensated accumulation; summation order stays fixed so results
// are bitwise reproducible.
class Accumulator {
public:
    void add(double x) {
        const double y = x - comp_;
        const double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double total() const { return sum_; }

private:
    double sum_ = 0.0, comp_ = 0.0;
};

GaussRule compute_gauss(int n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    // Newton iteration on P_n from the Chebyshev initial guess; symmetric
    // pairs filled from one half.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

std::map<int, GaussRule> g_rules;
std::mutex g_rules_mutex;

[[noreturn]] void node_failure(const char* where, double u, double v, const DomainError& e) {
    std::ostringstream msg;
    msg << e.what() << " [" << where << " node at (u,v)=(" << u << ", " << v << ")]";
    throw DomainError(msg.str());
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
    if (n < 1) throw ValidationError("Gauss rule needs at least one node");
    std::lock_guard<std::mutex> lock(g_rules_mutex);
    auto it = g_rules.find(n);
    if (it == g_rules.end()) it = g_rules.emplace(n, compute_gauss(n)).first;
    return it->second;
}

double integrate_2d(const std::function<double(double, double)>& f, const Domain2& d, QuadratureSpec q) {
    if (q.nodes_per_axis < 2) throw ValidationError("quadrature needs at least 2 nodes per axis");
    Accumulator acc;
    if (d.shape() == Domain2::Shape::Rectangle) {
        const GaussRule& g = gauss_legendre(q.nodes_per_axis);
        const double mu = 0.5 * (d.u0() + d.u1()), hu = 0.5 * (d.u1() - d.u0());
        const double mv = 0.5 * (d.v0() + d.v1()), hv = 0.5 * (d.v1() - d.v0());
        for (int j = 0; j < q.nodes_per_axis; ++j) {
            const double v = mv + hv * g.nodes[j];
            for (int i = 0; i < q.nodes_per_axis; ++i) {
                const double u = mu + hu * g.nodes[i];
                double val;
                try {
                    val = f(u, v);
                } catch (const DomainError& e) {
                    node_failure("area", u, v, e);
                }
                acc.add(g.weights[i] * g.weights[j] * hu * hv * val);
            }
        }
        return acc.total();
    }
    // Disk: polar map with the r Jacobian. Radial Gauss on [0,R]; angular
    // composite Gauss on equal panels, about twice the radial count.
    const int nr = q.nodes_per_axis;
    const GaussRule& gr = gauss_legendre(nr);
    const int panel_order = 8;
    const int panels = std::max(2, (2 * nr + panel_order - 1) / panel_order);
    const GaussRule& ga = gauss_legendre(panel_order);
    const double R = d.radius(), cu = d.center_u(), cv = d.center_v();
    for (int p = 0; p < panels; ++p) {
        const double t0 = 2.0 * M_PI * p / panels, t1 = 2.0 * M_PI * (p + 1) / panels;
        const double mt = 0.5 * (t0 + t1), ht = 0.5 * (t1 - t0);
        for (int a = 0; a < panel_order; ++a) {
            const double t = mt + ht * ga.nodes[a];
            const double ct = std::cos(t), st = std::sin(t);
            for (int i = 0; i < nr; ++i) {
                const double r = 0.5 * R * (1.0 + gr.nodes[i]);
                const double u = cu + r * ct, v = cv + r * st;
                double val;
                try {
                    val = f(u, v);
                } catch (const DomainError& e) {
                    node_failure("area", u, v, e);
                }
                acc.add(gr.weights[i] * 0.5 * R * ga.weights[a] * ht * r * val);
            }
        }
    }
    return acc.total();
}

double integrate_curve(const std::function<double(const CurvePoint&)>& g, const CurveFn& curve, int nodes) {
    if (nodes < 1) throw ValidationError("curve quadrature needs at least one node");
    // Composite panels of at most 16 Gauss points each.
    const int order = std::min(nodes, 16);
    const int panels = std::max(1, (nodes + order - 1) / order);
    const GaussRule& rule = gauss_legendre(order);
    Accumulator acc;
    for (int p = 0; p < panels; ++p) {
        const double s0 = static_cast<double>(p) / panels, s1 = static_cast<double>(p + 1) / panels;
        const double ms = 0.5 * (s0 + s1), hs = 0.5 * (s1 - s0);
        for (int k = 0; k < order; ++k) {
            const double s = ms + hs * rule.nodes[k];
            const CurvePoint pt = curve(s);
            double val;
            try {
                val = g(pt);
            } catch (const DomainError& e) {
                std::ostringstream msg;
                msg << e.what() << " [boundary node at arc parameter s=" << s << ", (u,v)=(" << pt.u
                    << ", " << pt.v << ")]";
                throw DomainError(msg.str());
            }
            acc.add(rule.weights[k] * hs * val);
        }
    }
    return acc.total();
}

double integrate_boundary(const std::function<double(double, double)>& P,
                          const std::function<double(double, double)>& Q, const Domain2& d,
                          BoundaryQuadratureSpec q) {
    Accumulator acc;
    for (const CurveFn& seg : d.boundary_segments()) {
        acc.add(integrate_curve(
            [&](const CurvePoint& pt) { return P(pt.u, pt.v) * pt.du + Q(pt.u, pt.v) * pt.dv; }, seg,
            q.nodes));
    }
    return acc.total();
}

std::pair<double, double> green_consistency(const Field& P, const Field& Q, const Domain2& d,
                                            QuadratureSpec q2, BoundaryQuadratureSpec qb) {
    const double boundary = integrate_boundary([&](double u, double v) { return P.value(u, v); },
                                               [&](double u, double v) { return Q.value(u, v); }, d, qb);
    const double area = integrate_2d(
        [&](double u, double v) { return Q.jet(u, v).du - P.jet(u, v).dv; }, d, q2);
    return {boundary, area};
}

double central_difference(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

double central_difference_richardson(const std::function<double(double)>& f, double x, double h) {
    const double d1 = central_difference(f, x, h);
    const double d2 = central_difference(f, x, 0.5 * h);
    return (4.0 * d2 - d1) / 3.0;
}

}  // namespace flexvar
