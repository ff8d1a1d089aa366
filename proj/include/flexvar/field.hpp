#pragma once

#include <functional>
#include <memory>
#include <utility>

#include "flexvar/expr.hpp"
#include "flexvar/jet.hpp"

namespace flexvar {

// A twice-differentiable scalar function of (u,v): value, gradient and
// Hessian queryable at any point. Implementations are immutable after
// construction, so fields are safe to evaluate concurrently.
class ScalarField2 {
public:
    virtual ~ScalarField2() = default;
    virtual Jet2 jet(double u, double v) const = 0;
};

// Value-semantic handle to an immutable field. Default-constructed as the
// zero field.
class Field {
public:
    Field();
    explicit Field(std::shared_ptr<const ScalarField2> impl) : impl_(std::move(impl)) {}

    Jet2 jet(double u, double v) const { return impl_->jet(u, v); }
    double value(double u, double v) const { return impl_->jet(u, v).v; }

private:
    std::shared_ptr<const ScalarField2> impl_;
};

Field constant_field(double c);
Field expr_field(Expression e);
Field expr_field(std::string_view source);  // parse + wrap

// Wraps an arbitrary jet-valued callable. The callable must be pure.
Field fn_field(std::function<Jet2(double, double)> fn);

Field operator+(const Field& a, const Field& b);
Field operator*(double c, const Field& a);

}  // namespace flexvar
