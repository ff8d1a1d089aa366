#pragma once

#include <cmath>
#include <cstdint>

#include "flexvar/errors.hpp"

namespace flexvar {

// Second-order jet of a scalar function of (u,v): value, gradient and the
// symmetric Hessian (single mixed entry). Arithmetic on jets is exact
// forward-mode differentiation; no finite differences anywhere.
struct Jet2 {
    double v = 0.0;
    double du = 0.0, dv = 0.0;
    double duu = 0.0, duv = 0.0, dvv = 0.0;

    static Jet2 constant(double c) { return {c, 0, 0, 0, 0, 0}; }
    static Jet2 var_u(double u) { return {u, 1, 0, 0, 0, 0}; }
    static Jet2 var_v(double v) { return {v, 0, 1, 0, 0, 0}; }
};

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
    return {a.v + b.v, a.du + b.du, a.dv + b.dv, a.duu + b.duu, a.duv + b.duv, a.dvv + b.dvv};
}

inline Jet2 operator-(const Jet2& a, const Jet2& b) {
    return {a.v - b.v, a.du - b.du, a.dv - b.dv, a.duu - b.duu, a.duv - b.duv, a.dvv - b.dvv};
}

inline Jet2 operator-(const Jet2& a) {
    return {-a.v, -a.du, -a.dv, -a.duu, -a.duv, -a.dvv};
}

inline Jet2 operator*(const Jet2& a, const Jet2& b) {
    Jet2 r;
    r.v = a.v * b.v;
    r.du = a.du * b.v + a.v * b.du;
    r.dv = a.dv * b.v + a.v * b.dv;
    r.duu = a.duu * b.v + 2.0 * a.du * b.du + a.v * b.duu;
    r.duv = a.duv * b.v + a.du * b.dv + a.dv * b.du + a.v * b.duv;
    r.dvv = a.dvv * b.v + 2.0 * a.dv * b.dv + a.v * b.dvv;
    return r;
}

inline Jet2 operator*(double c, const Jet2& a) {
    return {c * a.v, c * a.du, c * a.dv, c * a.duu, c * a.duv, c * a.dvv};
}

inline Jet2 operator*(const Jet2& a, double c) { return c * a; }
inline Jet2 operator+(const Jet2& a, double c) { Jet2 r = a; r.v += c; return r; }
inline Jet2 operator+(double c, const Jet2& a) { return a + c; }
inline Jet2 operator-(const Jet2& a, double c) { Jet2 r = a; r.v -= c; return r; }
inline Jet2 operator-(double c, const Jet2& a) { return -(a - c); }

// Composition with a scalar function g given g(x), g'(x), g''(x) at x = a.v.
inline Jet2 jet_chain(const Jet2& a, double g, double dg, double ddg) {
    Jet2 r;
    r.v = g;
    r.du = dg * a.du;
    r.dv = dg * a.dv;
    r.duu = ddg * a.du * a.du + dg * a.duu;
    r.duv = ddg * a.du * a.dv + dg * a.duv;
    r.dvv = ddg * a.dv * a.dv + dg * a.dvv;
    return r;
}

inline Jet2 jet_inv(const Jet2& a) {
    if (a.v == 0.0) throw DomainError("division by zero");
    const double i = 1.0 / a.v;
    return jet_chain(a, i, -i * i, 2.0 * i * i * i);
}

inline Jet2 operator/(const Jet2& a, const Jet2& b) { return a * jet_inv(b); }
inline Jet2 operator/(const Jet2& a, double c) { return a * (1.0 / c); }
inline Jet2 operator/(double c, const Jet2& a) { return c * jet_inv(a); }

inline Jet2 jet_sin(const Jet2& a) {
    const double s = std::sin(a.v), c = std::cos(a.v);
    return jet_chain(a, s, c, -s);
}

inline Jet2 jet_cos(const Jet2& a) {
    const double s = std::sin(a.v), c = std::cos(a.v);
    return jet_chain(a, c, -s, -c);
}

inline Jet2 jet_exp(const Jet2& a) {
    const double e = std::exp(a.v);
    return jet_chain(a, e, e, e);
}

inline Jet2 jet_log(const Jet2& a) {
    if (a.v <= 0.0) throw DomainError("log of non-positive value");
    const double i = 1.0 / a.v;
    return jet_chain(a, std::log(a.v), i, -i * i);
}

inline Jet2 jet_sqrt(const Jet2& a) {
    if (a.v < 0.0) throw DomainError("square root of negative value");
    if (a.v == 0.0) throw DomainError("square root derivative singular at zero");
    const double s = std::sqrt(a.v);
    return jet_chain(a, s, 0.5 / s, -0.25 / (s * a.v));
}

// Integer power by repeated squaring of jets. Valid for any base, including
// zero and negative values (n >= 0); n < 0 goes through jet_inv.
inline Jet2 jet_pow_int(const Jet2& a, std::int64_t n) {
    if (n < 0) return jet_inv(jet_pow_int(a, -n));
    Jet2 result = Jet2::constant(1.0);
    Jet2 base = a;
    while (n > 0) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

// General power. A constant integer exponent takes the repeated-multiplication
// path so that polynomials stay defined for non-positive bases; anything else
// requires a positive base.
inline Jet2 jet_pow(const Jet2& a, const Jet2& b) {
    const bool exponent_constant =
        b.du == 0.0 && b.dv == 0.0 && b.duu == 0.0 && b.duv == 0.0 && b.dvv == 0.0;
    if (exponent_constant) {
        if (b.v == std::floor(b.v) && std::abs(b.v) <= 1e15)
            return jet_pow_int(a, static_cast<std::int64_t>(b.v));
        if (a.v <= 0.0) throw DomainError("non-integer power of non-positive base");
        const double p = b.v;
        const double g = std::pow(a.v, p);
        return jet_chain(a, g, p * g / a.v, p * (p - 1.0) * g / (a.v * a.v));
    }
    if (a.v <= 0.0) throw DomainError("variable power of non-positive base");
    return jet_exp(b * jet_log(a));
}

}  // namespace flexvar
