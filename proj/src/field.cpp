#include "qpt/field.hpp"

#include <cmath>

namespace qpt {

namespace {
enum class Op { Const, Var, Add, Sub, Mul, Div, Neg, Pow, Sqrt, Exp, Log, Pospart, Step };
}

struct Field::Node {
    Op op;
    Rational value;     // Const
    std::size_t var{};  // Var
    int exponent{};     // Pow
    std::shared_ptr<const Node> a, b;
};

namespace {

using NodePtr = std::shared_ptr<const Field::Node>;

NodePtr make_const(Rational c) {
    auto n = std::make_shared<Field::Node>();
    n->op = Op::Const;
    n->value = std::move(c);
    return n;
}

NodePtr make_unary(Op op, NodePtr a) {
    auto n = std::make_shared<Field::Node>();
    n->op = op;
    n->a = std::move(a);
    return n;
}

NodePtr make_binary(Op op, NodePtr a, NodePtr b) {
    auto n = std::make_shared<Field::Node>();
    n->op = op;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

bool is_const(const NodePtr& n, const Rational* v = nullptr) {
    return n->op == Op::Const && (!v || n->value == *v);
}

const Rational kZero(0), kOne(1);

NodePtr make_add(NodePtr a, NodePtr b) {
    if (is_const(a, &kZero)) return b;
    if (is_const(b, &kZero)) return a;
    if (is_const(a) && is_const(b)) return make_const(a->value + b->value);
    return make_binary(Op::Add, std::move(a), std::move(b));
}

NodePtr make_neg(NodePtr a) {
    if (is_const(a)) return make_const(-a->value);
    if (a->op == Op::Neg) return a->a;
    return make_unary(Op::Neg, std::move(a));
}

NodePtr make_sub(NodePtr a, NodePtr b) {
    if (is_const(b, &kZero)) return a;
    if (is_const(a, &kZero)) return make_neg(std::move(b));
    if (is_const(a) && is_const(b)) return make_const(a->value - b->value);
    return make_binary(Op::Sub, std::move(a), std::move(b));
}

NodePtr make_mul(NodePtr a, NodePtr b) {
    if (is_const(a, &kZero) || is_const(b, &kZero)) return make_const(Rational(0));
    if (is_const(a, &kOne)) return b;
    if (is_const(b, &kOne)) return a;
    if (is_const(a) && is_const(b)) return make_const(a->value * b->value);
    return make_binary(Op::Mul, std::move(a), std::move(b));
}

NodePtr make_div(NodePtr a, NodePtr b) {
    if (is_const(b) && b->value != 0) {
        if (is_const(a)) return make_const(a->value / b->value);
        if (b->value == 1) return a;
    }
    if (is_const(a, &kZero) && !is_const(b, &kZero)) return a;
    return make_binary(Op::Div, std::move(a), std::move(b));
}

NodePtr make_pow(NodePtr a, int k) {
    if (k == 1) return a;
    if (k == 0) return make_const(Rational(1));
    if (is_const(a) && (a->value != 0 || k > 0)) {
        Rational r = 1;
        Rational base = k > 0 ? a->value : 1 / a->value;
        for (int i = 0; i < std::abs(k); ++i) r *= base;
        return make_const(r);
    }
    auto n = std::make_shared<Field::Node>();
    n->op = Op::Pow;
    n->a = std::move(a);
    n->exponent = k;
    return n;
}

NodePtr derivative_node(const NodePtr& n, std::size_t v);

NodePtr chain(Op op, const NodePtr& a, std::size_t v) {
    NodePtr da = derivative_node(a, v);
    switch (op) {
        case Op::Sqrt:
            return make_div(da, make_mul(make_const(Rational(2)), make_unary(Op::Sqrt, a)));
        case Op::Exp:
            return make_mul(da, make_unary(Op::Exp, a));
        case Op::Log:
            return make_div(da, a);
        case Op::Pospart:
            return make_mul(make_unary(Op::Step, a), da);
        default:
            return make_const(Rational(0));  // Step is flat off its jump
    }
}

NodePtr derivative_node(const NodePtr& n, std::size_t v) {
    switch (n->op) {
        case Op::Const:
            return make_const(Rational(0));
        case Op::Var:
            return make_const(Rational(n->var == v ? 1 : 0));
        case Op::Add:
            return make_add(derivative_node(n->a, v), derivative_node(n->b, v));
        case Op::Sub:
            return make_sub(derivative_node(n->a, v), derivative_node(n->b, v));
        case Op::Mul:
            return make_add(make_mul(derivative_node(n->a, v), n->b),
                            make_mul(n->a, derivative_node(n->b, v)));
        case Op::Div:
            return make_div(make_sub(make_mul(derivative_node(n->a, v), n->b),
                                     make_mul(n->a, derivative_node(n->b, v))),
                            make_pow(n->b, 2));
        case Op::Neg:
            return make_neg(derivative_node(n->a, v));
        case Op::Pow:
            return make_mul(make_mul(make_const(Rational(n->exponent)), make_pow(n->a, n->exponent - 1)),
                            derivative_node(n->a, v));
        default:
            return chain(n->op, n->a, v);
    }
}

double eval_node(const NodePtr& n, const std::vector<double>& x) {
    switch (n->op) {
        case Op::Const:
            return to_double(n->value);
        case Op::Var:
            if (n->var >= x.size()) throw EvalError("field refers to a missing coordinate");
            return x[n->var];
        case Op::Add:
            return eval_node(n->a, x) + eval_node(n->b, x);
        case Op::Sub:
            return eval_node(n->a, x) - eval_node(n->b, x);
        case Op::Mul:
            return eval_node(n->a, x) * eval_node(n->b, x);
        case Op::Div: {
            double d = eval_node(n->b, x);
            if (d == 0.0) throw EvalError("division by zero");
            return eval_node(n->a, x) / d;
        }
        case Op::Neg:
            return -eval_node(n->a, x);
        case Op::Pow: {
            double base = eval_node(n->a, x);
            if (base == 0.0 && n->exponent < 0) throw EvalError("zero raised to a negative power");
            return std::pow(base, n->exponent);
        }
        case Op::Sqrt: {
            double va = eval_node(n->a, x);
            if (va < 0.0) throw EvalError("sqrt of a negative value");
            return std::sqrt(va);
        }
        case Op::Exp:
            return std::exp(eval_node(n->a, x));
        case Op::Log: {
            double va = eval_node(n->a, x);
            if (va <= 0.0) throw EvalError("log of a non-positive value");
            return std::log(va);
        }
        case Op::Pospart:
            return std::max(eval_node(n->a, x), 0.0);
        case Op::Step:
            return eval_node(n->a, x) > 0.0 ? 1.0 : 0.0;
    }
    throw std::logic_error("unreachable");
}

std::optional<RPoly> rpoly_node(const NodePtr& n, std::size_t nvars) {
    switch (n->op) {
        case Op::Const:
            return RPoly(nvars, n->value);
        case Op::Var:
            if (n->var >= nvars) return std::nullopt;
            return RPoly::variable(nvars, n->var);
        case Op::Add: {
            auto a = rpoly_node(n->a, nvars), b = rpoly_node(n->b, nvars);
            if (!a || !b) return std::nullopt;
            return *a + *b;
        }
        case Op::Sub: {
            auto a = rpoly_node(n->a, nvars), b = rpoly_node(n->b, nvars);
            if (!a || !b) return std::nullopt;
            return *a - *b;
        }
        case Op::Mul: {
            auto a = rpoly_node(n->a, nvars), b = rpoly_node(n->b, nvars);
            if (!a || !b) return std::nullopt;
            return *a * *b;
        }
        case Op::Div: {
            auto a = rpoly_node(n->a, nvars), b = rpoly_node(n->b, nvars);
            if (!a || !b || !b->is_constant() || b->constant_term() == 0) return std::nullopt;
            return (Rational(1) / b->constant_term()) * *a;
        }
        case Op::Neg: {
            auto a = rpoly_node(n->a, nvars);
            if (!a) return std::nullopt;
            return -*a;
        }
        case Op::Pow: {
            auto a = rpoly_node(n->a, nvars);
            if (!a || n->exponent < 0) return std::nullopt;
            RPoly r(nvars, Rational(1));
            for (int i = 0; i < n->exponent; ++i) r = r * *a;
            return r;
        }
        default:
            return std::nullopt;
    }
}

std::size_t max_var_node(const NodePtr& n) {
    switch (n->op) {
        case Op::Const:
            return 0;
        case Op::Var:
            return n->var + 1;
        default: {
            std::size_t m = n->a ? max_var_node(n->a) : 0;
            if (n->b) m = std::max(m, max_var_node(n->b));
            return m;
        }
    }
}

bool equal_nodes(const NodePtr& a, const NodePtr& b) {
    if (a == b) return true;
    if (a->op != b->op) return false;
    switch (a->op) {
        case Op::Const:
            return a->value == b->value;
        case Op::Var:
            return a->var == b->var;
        case Op::Pow:
            return a->exponent == b->exponent && equal_nodes(a->a, b->a);
        default:
            if (static_cast<bool>(a->a) != static_cast<bool>(b->a)) return false;
            if (static_cast<bool>(a->b) != static_cast<bool>(b->b)) return false;
            if (a->a && !equal_nodes(a->a, b->a)) return false;
            if (a->b && !equal_nodes(a->b, b->b)) return false;
            return true;
    }
}

std::string var_name(std::size_t v) {
    static const char* comp[] = {"t", "x", "y", "z"};
    return comp[v % 4] + std::to_string(v / 4 + 1);
}

// precedence: 0 additive, 1 multiplicative, 2 unary, 3 atoms
std::string format_node(const NodePtr& n, int parent) {
    auto wrap = [&](const std::string& s, int prec) {
        return prec < parent ? "(" + s + ")" : s;
    };
    switch (n->op) {
        case Op::Const: {
            std::string s = format_rational(n->value);
            return s[0] == '-' ? wrap(s, 2) : s;
        }
        case Op::Var:
            return var_name(n->var);
        case Op::Add:
            return wrap(format_node(n->a, 0) + " + " + format_node(n->b, 0), 0);
        case Op::Sub:
            return wrap(format_node(n->a, 0) + " - " + format_node(n->b, 1), 0);
        case Op::Mul:
            return wrap(format_node(n->a, 1) + "*" + format_node(n->b, 2), 1);
        case Op::Div:
            return wrap(format_node(n->a, 1) + "/" + format_node(n->b, 3), 1);
        case Op::Neg:
            return wrap("-" + format_node(n->a, 2), 2);
        case Op::Pow:
            return wrap(format_node(n->a, 3) + "^" + std::to_string(n->exponent), 2);
        case Op::Sqrt:
            return "sqrt(" + format_node(n->a, 0) + ")";
        case Op::Exp:
            return "exp(" + format_node(n->a, 0) + ")";
        case Op::Log:
            return "log(" + format_node(n->a, 0) + ")";
        case Op::Pospart:
            return "pospart(" + format_node(n->a, 0) + ")";
        case Op::Step:
            return "step(" + format_node(n->a, 0) + ")";
    }
    throw std::logic_error("unreachable");
}

}  // namespace

Field Field::constant(Rational c) { return Field(make_const(std::move(c))); }

Field Field::variable(std::size_t v) {
    auto n = std::make_shared<Node>();
    n->op = Op::Var;
    n->var = v;
    return Field(std::move(n));
}

Field operator+(const Field& a, const Field& b) { return Field(make_add(a.root_, b.root_)); }
Field operator-(const Field& a, const Field& b) { return Field(make_sub(a.root_, b.root_)); }
Field operator*(const Field& a, const Field& b) { return Field(make_mul(a.root_, b.root_)); }
Field operator/(const Field& a, const Field& b) { return Field(make_div(a.root_, b.root_)); }
Field Field::operator-() const { return Field(make_neg(root_)); }

Field Field::pow(const Field& a, int k) { return Field(make_pow(a.root_, k)); }
Field Field::sqrt(const Field& a) { return Field(make_unary(Op::Sqrt, a.root_)); }
Field Field::exp(const Field& a) { return Field(make_unary(Op::Exp, a.root_)); }
Field Field::log(const Field& a) { return Field(make_unary(Op::Log, a.root_)); }
Field Field::pospart(const Field& a) {
    if (is_const(a.root_)) return constant(a.root_->value > 0 ? a.root_->value : Rational(0));
    return Field(make_unary(Op::Pospart, a.root_));
}
Field Field::step(const Field& a) {
    if (is_const(a.root_)) return constant(Rational(a.root_->value > 0 ? 1 : 0));
    return Field(make_unary(Op::Step, a.root_));
}

Field Field::derivative(std::size_t v) const { return Field(derivative_node(root_, v)); }

double Field::eval(const std::vector<double>& x) const { return eval_node(root_, x); }

std::optional<RPoly> Field::to_rpoly(std::size_t nvars) const { return rpoly_node(root_, nvars); }

std::size_t Field::max_variable() const { return max_var_node(root_); }

bool Field::operator==(const Field& o) const { return equal_nodes(root_, o.root_); }

std::string Field::format() const { return format_node(root_, 0); }

}  // namespace qpt
