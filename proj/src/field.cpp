#include "flexvar/field.hpp"

namespace flexvar {

namespace {

class ConstField final : public ScalarField2 {
public:
    explicit ConstField(double c) : c_(c) {}
    Jet2 jet(double, double) const override { return Jet2::constant(c_); }

private:
    double c_;
};

class ExprField final : public ScalarField2 {
public:
    explicit ExprField(Expression e) : e_(std::move(e)) {}
    Jet2 jet(double u, double v) const override { return e_.jet(u, v); }

private:
    Expression e_;
};

class FnField final : public ScalarField2 {
public:
    explicit FnField(std::function<Jet2(double, double)> fn) : fn_(std::move(fn)) {}
    Jet2 jet(double u, double v) const override { return fn_(u, v); }

private:
    std::function<Jet2(double, double)> fn_;
};

}  // namespace

Field::Field() : impl_(std::make_shared<ConstField>(0.0)) {}

Field constant_field(double c) { return Field(std::make_shared<ConstField>(c)); }

Field expr_field(Expression e) { return Field(std::make_shared<ExprField>(std::move(e))); }

Field expr_field(std::string_view source) { return expr_field(Expression::parse(source)); }

Field fn_field(std::function<Jet2(double, double)> fn) {
    return Field(std::make_shared<FnField>(std::move(fn)));
}

Field operator+(const Field& a, const Field& b) {
    return fn_field([a, b](double u, double v) { return a.jet(u, v) + b.jet(u, v); });
}

Field operator*(double c, const Field& a) {
    return fn_field([c, a](double u, double v) { return c * a.jet(u, v); });
}

}  // namespace flexvar
