#include "flexvar/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace flexvar {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::size_t offset;
    double number = 0.0;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        const std::size_t start = pos_;
        if (pos_ >= src_.size()) return {Tok::End, start};
        const char c = src_[pos_];
        switch (c) {
            case '+': ++pos_; return {Tok::Plus, start};
            case '-': ++pos_; return {Tok::Minus, start};
            case '*': ++pos_; return {Tok::Star, start};
            case '/': ++pos_; return {Tok::Slash, start};
            case '^': ++pos_; return {Tok::Caret, start};
            case '(': ++pos_; return {Tok::LParen, start};
            case ')': ++pos_; return {Tok::RParen, start};
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const char* begin = src_.data() + pos_;
            char* end = nullptr;
            const double value = std::strtod(begin, &end);
            if (end == begin)
                throw ParseError("syntax error at offset " + std::to_string(start) + ": malformed number",
                                 start, "number");
            pos_ += static_cast<std::size_t>(end - begin);
            Token t{Tok::Number, start};
            t.number = value;
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t end = pos_;
            while (end < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_'))
                ++end;
            Token t{Tok::Ident, start};
            t.text = std::string(src_.substr(pos_, end - pos_));
            pos_ = end;
            return t;
        }
        throw ParseError("syntax error at offset " + std::to_string(start) + ": unexpected character '" +
                             std::string(1, c) + "'",
                         start, "expression");
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
};

ExprPtr make_number(double x) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::Number;
    n->number = x;
    return n;
}

ExprPtr make_var(bool is_u) {
    auto n = std::make_shared<ExprNode>();
    n->kind = is_u ? ExprNode::Kind::VarU : ExprNode::Kind::VarV;
    return n;
}

ExprPtr make_unary(UnaryFn fn, ExprPtr a) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::Unary;
    n->fn = fn;
    n->a = std::move(a);
    return n;
}

ExprPtr make_binary(BinaryOp op, ExprPtr a, ExprPtr b) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::Binary;
    n->op = op;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

class Parser {
public:
    explicit Parser(std::string_view src) : lexer_(src) { advance(); }

    ExprPtr parse_all() {
        ExprPtr e = parse_sum();
        if (cur_.kind != Tok::End) fail("operator or end of input");
        return e;
    }

private:
    void advance() { cur_ = lexer_.next(); }

    [[noreturn]] void fail(const std::string& expected) {
        throw ParseError("syntax error at offset " + std::to_string(cur_.offset) + ": expected " + expected,
                         cur_.offset, expected);
    }

    ExprPtr parse_sum() {
        ExprPtr e = parse_term();
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            const BinaryOp op = cur_.kind == Tok::Plus ? BinaryOp::Add : BinaryOp::Sub;
            advance();
            e = make_binary(op, e, parse_term());
        }
        return e;
    }

    ExprPtr parse_term() {
        ExprPtr e = parse_unary();
        while (cur_.kind == Tok::Star || cur_.kind == Tok::Slash) {
            const BinaryOp op = cur_.kind == Tok::Star ? BinaryOp::Mul : BinaryOp::Div;
            advance();
            e = make_binary(op, e, parse_unary());
        }
        return e;
    }

    ExprPtr parse_unary() {
        if (cur_.kind == Tok::Minus) {
            advance();
            return make_unary(UnaryFn::Neg, parse_unary());
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_atom();
        if (cur_.kind == Tok::Caret) {
            advance();
            return make_binary(BinaryOp::Pow, base, parse_unary());  // right-associative
        }
        return base;
    }

    ExprPtr parse_atom() {
        switch (cur_.kind) {
            case Tok::Number: {
                const double x = cur_.number;
                advance();
                return make_number(x);
            }
            case Tok::LParen: {
                advance();
                ExprPtr e = parse_sum();
                if (cur_.kind != Tok::RParen) fail("')'");
                advance();
                return e;
            }
            case Tok::Ident: {
                const std::string name = cur_.text;
                const std::size_t at = cur_.offset;
                advance();
                if (name == "u") return make_var(true);
                if (name == "v") return make_var(false);
                if (name == "pi") return make_number(M_PI);
                if (name == "e") return make_number(M_E);
                UnaryFn fn;
                if (name == "sin") fn = UnaryFn::Sin;
                else if (name == "cos") fn = UnaryFn::Cos;
                else if (name == "exp") fn = UnaryFn::Exp;
                else if (name == "log") fn = UnaryFn::Log;
                else if (name == "sqrt") fn = UnaryFn::Sqrt;
                else
                    throw ParseError("unknown identifier '" + name + "' at offset " + std::to_string(at),
                                     at, "u, v, pi, e, sin, cos, exp, log, sqrt");
                if (cur_.kind != Tok::LParen) fail("'(' after function name");
                advance();
                ExprPtr arg = parse_sum();
                if (cur_.kind != Tok::RParen) fail("')'");
                advance();
                return make_unary(fn, std::move(arg));
            }
            default:
                fail("expression");
        }
    }

    Lexer lexer_;
    Token cur_{Tok::End, 0};
};

// Precedence levels used by the printer; atoms are highest.
int level(const ExprNode& n) {
    switch (n.kind) {
        case ExprNode::Kind::Number:
        case ExprNode::Kind::VarU:
        case ExprNode::Kind::VarV:
            return 5;
        case ExprNode::Kind::Unary:
            return n.fn == UnaryFn::Neg ? 3 : 5;  // named functions print with parens anyway
        case ExprNode::Kind::Binary:
            switch (n.op) {
                case BinaryOp::Add:
                case BinaryOp::Sub: return 1;
                case BinaryOp::Mul:
                case BinaryOp::Div: return 2;
                case BinaryOp::Pow: return 4;
            }
    }
    return 5;
}

std::string format_number(double x) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

void print(const ExprNode& n, std::string& out) {
    auto child = [&out](const ExprPtr& c, bool parens) {
        if (parens) out += '(';
        print(*c, out);
        if (parens) out += ')';
    };
    switch (n.kind) {
        case ExprNode::Kind::Number: out += format_number(n.number); return;
        case ExprNode::Kind::VarU: out += 'u'; return;
        case ExprNode::Kind::VarV: out += 'v'; return;
        case ExprNode::Kind::Unary:
            switch (n.fn) {
                case UnaryFn::Neg:
                    out += '-';
                    child(n.a, level(*n.a) < 3);
                    return;
                case UnaryFn::Sin: out += "sin"; break;
                case UnaryFn::Cos: out += "cos"; break;
                case UnaryFn::Exp: out += "exp"; break;
                case UnaryFn::Log: out += "log"; break;
                case UnaryFn::Sqrt: out += "sqrt"; break;
            }
            child(n.a, true);
            return;
        case ExprNode::Kind::Binary: {
            const char* sym = "";
            int lp = 0, rp = 0;  // parenthesize child when its level is below these
            switch (n.op) {
                case BinaryOp::Add: sym = "+"; lp = 1; rp = 2; break;
                case BinaryOp::Sub: sym = "-"; lp = 1; rp = 2; break;
                case BinaryOp::Mul: sym = "*"; lp = 2; rp = 3; break;
                case BinaryOp::Div: sym = "/"; lp = 2; rp = 3; break;
                case BinaryOp::Pow: sym = "^"; lp = 5; rp = 3; break;  // base must be an atom
            }
            child(n.a, level(*n.a) < lp);
            out += sym;
            child(n.b, level(*n.b) < rp);
            return;
        }
    }
}

Jet2 eval(const ExprNode& n, double u, double v) {
    // Annotates a failing operation with its own sub-expression and the point,
    // then lets the exception propagate unchanged through the enclosing nodes.
    auto guard = [&](const ExprNode& at, auto&& op) -> Jet2 {
        try {
            return op();
        } catch (const DomainError& e) {
            const std::string what = e.what();
            if (what.find(" in '") != std::string::npos) throw;
            std::ostringstream msg;
            std::string text;
            print(at, text);
            msg << what << " in '" << text << "' at (u,v)=(" << u << ", " << v << ")";
            throw DomainError(msg.str());
        }
    };

    switch (n.kind) {
        case ExprNode::Kind::Number: return Jet2::constant(n.number);
        case ExprNode::Kind::VarU: return Jet2::var_u(u);
        case ExprNode::Kind::VarV: return Jet2::var_v(v);
        case ExprNode::Kind::Unary: {
            const Jet2 a = eval(*n.a, u, v);
            switch (n.fn) {
                case UnaryFn::Neg: return -a;
                case UnaryFn::Sin: return jet_sin(a);
                case UnaryFn::Cos: return jet_cos(a);
                case UnaryFn::Exp: return jet_exp(a);
                case UnaryFn::Log: return guard(n, [&] { return jet_log(a); });
                case UnaryFn::Sqrt: return guard(n, [&] { return jet_sqrt(a); });
            }
            break;
        }
        case ExprNode::Kind::Binary: {
            const Jet2 a = eval(*n.a, u, v);
            const Jet2 b = eval(*n.b, u, v);
            switch (n.op) {
                case BinaryOp::Add: return a + b;
                case BinaryOp::Sub: return a - b;
                case BinaryOp::Mul: return a * b;
                case BinaryOp::Div: return guard(n, [&] { return a / b; });
                case BinaryOp::Pow: return guard(n, [&] { return jet_pow(a, b); });
            }
            break;
        }
    }
    throw std::logic_error("corrupt expression node");
}

}  // namespace

Expression Expression::parse(std::string_view source) {
    Parser p(source);
    return Expression(p.parse_all());
}

Jet2 Expression::jet(double u, double v) const {
    if (!root_) throw ValidationError("empty expression");
    return eval(*root_, u, v);
}

std::string Expression::str() const { return to_string(root_); }

std::string to_string(const ExprPtr& node) {
    if (!node) return "";
    std::string out;
    print(*node, out);
    return out;
}

bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b) return a == b;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case ExprNode::Kind::Number: return a->number == b->number;
        case ExprNode::Kind::VarU:
        case ExprNode::Kind::VarV: return true;
        case ExprNode::Kind::Unary:
            return a->fn == b->fn && structurally_equal(a->a, b->a);
        case ExprNode::Kind::Binary:
            return a->op == b->op && structurally_equal(a->a, b->a) && structurally_equal(a->b, b->b);
    }
    return false;
}

}  // namespace flexvar
