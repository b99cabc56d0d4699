#include "minfill/hyperbolic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace minfill::hyp {

namespace {

void require_positive(double x, const char* name) {
    if (!(x > 0.0)) {
        throw std::domain_error(std::string(name) + " must be positive");
    }
}

} // namespace

double collar_width(double x) {
    require_positive(x, "collar_width argument");
    return std::asinh(1.0 / std::sinh(x));
}

double arccosh_from_log(double u) {
    if (!(u > 0.0)) {
        throw std::domain_error("arccosh_from_log requires ln(y) > 0");
    }
    // arccosh(y) = ln y + ln(1 + sqrt(1 - 1/y^2)); the sqrt argument is
    // -expm1(-2u), exact for both tiny and huge u.
    return u + std::log1p(std::sqrt(-std::expm1(-2.0 * u)));
}

double winding_length(int m, double x) {
    require_positive(x, "winding_length argument");
    if (m < 0) {
        throw std::domain_error("winding_length winding count must be >= 0");
    }
    const double t = x / 2.0;
    if (m == 0) {
        // coth(t) cosh(0) = coth(t) and arccosh(coth t) = r(t) exactly.
        return 2.0 * collar_width(t);
    }
    const double mt = m * t;
    if (mt < 300.0) {
        return 2.0 * std::acosh(1.0 / std::tanh(t) * std::cosh(mt));
    }
    // cosh(mt) would overflow: work with logarithms.
    // ln[coth(t) cosh(mt)] = ln coth(t) + mt + ln((1 + e^{-2mt})/2)
    const double u = std::log(1.0 / std::tanh(t)) + mt + std::log1p(std::exp(-2.0 * mt)) - std::log(2.0);
    return 2.0 * arccosh_from_log(u);
}

double winding_difference_bound(int s, double x_max) {
    require_positive(x_max, "winding_difference_bound x_max");
    if (s < 0) {
        throw std::domain_error("winding_difference_bound shift must be >= 0");
    }
    const double h = s * x_max / 2.0;
    return 2.0 * std::log(2.0) + 2.0 * std::log(std::cosh(h) + std::sinh(h));
}

CollarMin min_collar_plus_linear(double b) {
    require_positive(b, "min_collar_plus_linear slope");
    CollarMin out;
    out.x_star = 2.0 * std::asinh(1.0 / b);
    out.f_star = 2.0 * (std::asinh(b) + b * std::asinh(1.0 / b));
    return out;
}

CollarParams CollarParams::from_core_length(double core_length) {
    require_positive(core_length, "collar core length");
    return {core_length, collar_width(core_length / 2.0)};
}

} // namespace minfill::hyp
