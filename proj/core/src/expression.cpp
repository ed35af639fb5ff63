#include "bqctl/expression.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <vector>

#include "bqctl/errors.hpp"

namespace bqctl {

Expression Expression::constant(double c) { return {Kind::Constant, c, 0.0, 0.0}; }
Expression Expression::affine(double a, double b) { return {Kind::Affine, a, b, 0.0}; }
Expression Expression::exponential(double a, double b) { return {Kind::Exponential, a, b, 0.0}; }
Expression Expression::sine_perturbed(double a, double b, double k) {
    return {Kind::SinePerturbed, a, b, k};
}

namespace {

std::vector<double> parse_params(const std::string& text, std::size_t expected) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        double v;
        try {
            v = std::stod(item, &pos);
        } catch (const std::exception&) {
            fail(Errc::ConfigParse, "bad numeric parameter '" + item + "'");
        }
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size())
            fail(Errc::ConfigParse, "trailing characters in parameter '" + item + "'");
        out.push_back(v);
    }
    if (out.size() != expected) {
        fail(Errc::ConfigParse, "expected " + std::to_string(expected) + " parameters, got " +
                                    std::to_string(out.size()) + " in '" + text + "'");
    }
    return out;
}

}  // namespace

Expression Expression::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) {
        // bare number -> constant
        auto p = parse_params(text, 1);
        return constant(p[0]);
    }
    std::string name = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);
    if (name == "constant") {
        auto p = parse_params(rest, 1);
        return constant(p[0]);
    }
    if (name == "affine") {
        auto p = parse_params(rest, 2);
        return affine(p[0], p[1]);
    }
    if (name == "exp") {
        auto p = parse_params(rest, 2);
        return exponential(p[0], p[1]);
    }
    if (name == "sinp") {
        auto p = parse_params(rest, 3);
        return sine_perturbed(p[0], p[1], p[2]);
    }
    fail(Errc::ConfigParse, "unknown expression family '" + name + "'");
}

double Expression::operator()(double x) const {
    switch (kind_) {
        case Kind::Constant: return p_[0];
        case Kind::Affine: return p_[0] + p_[1] * x;
        case Kind::Exponential: return p_[0] * std::exp(p_[1] * x);
        case Kind::SinePerturbed: return p_[0] * (1.0 + p_[1] * std::sin(p_[2] * x));
    }
    return 0.0;
}

Eigen::ArrayXd Expression::eval(const Eigen::ArrayXd& x) const {
    Eigen::ArrayXd out(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) out[i] = (*this)(x[i]);
    return out;
}

std::string Expression::str() const {
    std::ostringstream os;
    os.precision(17);
    switch (kind_) {
        case Kind::Constant: os << "constant:" << p_[0]; break;
        case Kind::Affine: os << "affine:" << p_[0] << "," << p_[1]; break;
        case Kind::Exponential: os << "exp:" << p_[0] << "," << p_[1]; break;
        case Kind::SinePerturbed:
            os << "sinp:" << p_[0] << "," << p_[1] << "," << p_[2];
            break;
    }
    return os.str();
}

}  // namespace bqctl
