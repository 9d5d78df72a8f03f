#pragma once

#include <memory>
#include <optional>

#include "qpt/poly.hpp"

namespace qpt {

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Scalar field on H^n built from an immutable expression tree over the real
// coordinates (variable v: quaternionic coordinate v/4, component v%4 in the
// order t, x, y, z). Construction folds constants and units so symbolic
// derivatives stay compact.
class Field {
  public:
    Field() : Field(constant(Rational(0))) {}

    static Field constant(Rational c);
    static Field variable(std::size_t v);

    friend Field operator+(const Field& a, const Field& b);
    friend Field operator-(const Field& a, const Field& b);
    friend Field operator*(const Field& a, const Field& b);
    friend Field operator/(const Field& a, const Field& b);
    Field operator-() const;

    static Field pow(const Field& a, int k);
    static Field sqrt(const Field& a);
    static Field exp(const Field& a);
    static Field log(const Field& a);
    static Field pospart(const Field& a);  // max(value, 0)
    static Field step(const Field& a);     // 1 for positive values, else 0

    Field derivative(std::size_t v) const;

    // throws EvalError on domain violations (division by zero, sqrt or log
    // outside their domains, missing coordinates)
    double eval(const std::vector<double>& x) const;

    // exact form when the expression is polynomial with constant divisors
    std::optional<RPoly> to_rpoly(std::size_t nvars) const;

    std::size_t max_variable() const;  // coordinates required: highest index + 1, 0 if none
    bool operator==(const Field& o) const;
    std::string format() const;

    struct Node;

  private:
    explicit Field(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
    std::shared_ptr<const Node> root_;
};

}  // namespace qpt
