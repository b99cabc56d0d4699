#pragma once

// Special functions of hyperbolic trigonometry: the standard collar width
// r(x) = arcsinh(1/sinh x), the collar winding length
// f_m(x) = 2 arccosh(coth(x/2) cosh(mx/2)), and the closed-form minimiser of
// 2 r(x/2) + b x.  Everything here is pure and stateless.

namespace minfill::hyp {

// Half-width of the standard embedded collar around a simple closed geodesic
// of length 2x.  Strictly decreasing involution: r(r(x)) = x.
double collar_width(double x);

// Length of a geodesic arc that crosses a collar of a closed geodesic of
// length x while winding m times around the core.
// f_0(x) = 2 * collar_width(x/2).
double winding_length(int m, double x);

// A constant C(s, x_max) with f_{m+s}(x) - f_m(x) <= C for all x <= x_max and
// all integers m >= 0.  C = 2 ln 2 + 2 ln[cosh(s x_max/2) + sinh(s x_max/2)].
double winding_difference_bound(int s, double x_max);

struct CollarMin {
    double x_star; // argmin of f(x) = 2 r(x/2) + b x
    double f_star; // minimum value
};

// Closed-form minimiser of f(x) = 2 r(x/2) + b x over x > 0:
// x* = 2 arcsinh(1/b), f* = 2 [arcsinh(b) + b arcsinh(1/b)].
CollarMin min_collar_plus_linear(double b);

// Core geodesic length and matching collar half-width.
// Invariant: cosh(width) = coth(core_length / 2).
struct CollarParams {
    double core_length;
    double width;

    static CollarParams from_core_length(double core_length);
};

// arccosh evaluated from u = ln(y): returns ln(y + sqrt(y^2 - 1)) without
// forming y.  Accurate for all u > 0; used for overflow-safe trace lengths.
double arccosh_from_log(double u);

} // namespace minfill::hyp
