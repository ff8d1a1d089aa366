#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "flexvar/jet.hpp"

namespace flexvar {

// Arithmetic expressions in the variables u and v.
//
// Grammar (precedence low to high): + - | * / | unary - | ^ | atoms.
// ^ is right-associative and its exponent may carry a sign, so "u^-2" parses.
// Functions: sin cos exp log sqrt. Constants: pi e (folded to literals).

enum class BinaryOp { Add, Sub, Mul, Div, Pow };
enum class UnaryFn { Neg, Sin, Cos, Exp, Log, Sqrt };

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum class Kind { Number, VarU, VarV, Unary, Binary };
    Kind kind;
    double number = 0.0;           // Kind::Number
    UnaryFn fn = UnaryFn::Neg;     // Kind::Unary
    BinaryOp op = BinaryOp::Add;   // Kind::Binary
    ExprPtr a, b;                  // Unary uses a; Binary uses both
};

class Expression {
public:
    Expression() = default;

    // Parses source text; throws ParseError (with byte offset and the
    // expected-token set) or ValidationError for unknown identifiers.
    static Expression parse(std::string_view source);

    // Value plus exact first and second derivatives at (u,v).
    // Throws DomainError naming the offending sub-expression and point.
    Jet2 jet(double u, double v) const;

    double value(double u, double v) const { return jet(u, v).v; }

    // Prints with the minimal parenthesization that reparses to a
    // structurally identical tree.
    std::string str() const;

    const ExprPtr& root() const { return root_; }
    bool empty() const { return root_ == nullptr; }

private:
    explicit Expression(ExprPtr root) : root_(std::move(root)) {}
    ExprPtr root_;
};

bool structurally_equal(const ExprPtr& a, const ExprPtr& b);
inline bool structurally_equal(const Expression& a, const Expression& b) {
    return structurally_equal(a.root(), b.root());
}

std::string to_string(const ExprPtr& node);

}  // namespace flexvar
