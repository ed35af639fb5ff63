#pragma once

#include <Eigen/Core>
#include <string>

namespace bqctl {

/// Closed-form coefficient expression evaluable at any point of [0,l].
///
/// The physical coefficients are supplied as one of four named families
/// rather than as raw samples, so that derived quantities (edge midpoints,
/// Runge-Kutta half steps) can be evaluated exactly:
///
///   constant:c        ->  c
///   affine:a,b        ->  a + b*x
///   exp:a,b           ->  a * e^(b*x)
///   sinp:a,b,k        ->  a * (1 + b*sin(k*x))
///
/// A bare number parses as a constant.
class Expression {
public:
    enum class Kind { Constant, Affine, Exponential, SinePerturbed };

    static Expression constant(double c);
    static Expression affine(double a, double b);
    static Expression exponential(double a, double b);
    static Expression sine_perturbed(double a, double b, double k);

    /// Parses "name:p1,p2[,p3]" or a bare numeric literal.
    /// Throws Errc::ConfigParse on malformed input.
    static Expression parse(const std::string& text);

    double operator()(double x) const;
    Eigen::ArrayXd eval(const Eigen::ArrayXd& x) const;

    Kind kind() const { return kind_; }
    std::string str() const;

private:
    Expression(Kind kind, double p0, double p1, double p2)
        : kind_(kind), p_{p0, p1, p2} {}

    Kind kind_;
    double p_[3];
};

}  // namespace bqctl
