#pragma once

#include <array>
#include <cmath>

#include "minfill/ddreal.hpp"

namespace minfill::hyp {

// Plain 2x2 real matrix over any arithmetic type; used for holonomy assembly
// (T = double) and for the extended-precision reference path (T = DD).
template <typename T>
struct Mat2T {
    T a{}, b{}, c{}, d{};

    static Mat2T identity() { return {T(1.0), T(0.0), T(0.0), T(1.0)}; }

    Mat2T operator*(const Mat2T& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }

    Mat2T inverse() const {
        // det == 1 assumed
        return {d, -b, -c, a};
    }

    T det() const { return a * d - b * c; }
    T trace() const { return a + d; }
};

using Mat2 = Mat2T<double>;
using Mat2DD = Mat2T<DD>;

inline Mat2DD to_dd(const Mat2& m) { return {DD(m.a), DD(m.b), DD(m.c), DD(m.d)}; }

// Unit-determinant 2x2 matrix with a separate natural-log scale factor, so
// products over words of thousands of letters never overflow: the true matrix
// is e^{log_scale} * entries.
struct ScaledIsometry {
    Mat2 entries = Mat2::identity();
    double log_scale = 0.0;

    static ScaledIsometry identity() { return {}; }
    static ScaledIsometry from_matrix(const Mat2& m);

    ScaledIsometry inverse() const;

    // |trace| of the normalized entries; combine with log_scale for the true value.
    double trace_abs() const { return std::abs(entries.trace()); }
};

ScaledIsometry compose(const ScaledIsometry& lhs, const ScaledIsometry& rhs);

// Translation length 2 arccosh(e^{log_scale} tr_abs / 2) of a hyperbolic
// isometry, evaluated in log form when the argument is large.
// Throws NotHyperbolicError when e^{log_scale} tr_abs <= 2.
double trace_to_length(double tr_abs, double log_scale);

inline double translation_length(const ScaledIsometry& g) {
    return trace_to_length(g.trace_abs(), g.log_scale);
}

} // namespace minfill::hyp
