#include "minfill/isometry.hpp"

#include <cmath>
#include <stdexcept>

#include "minfill/errors.hpp"
#include "minfill/hyperbolic.hpp"

namespace minfill::hyp {

namespace {

constexpr double kRescaleLimit = 1e100;
constexpr double kLargeTraceLog = 18.420680743952367; // ln(1e8)

bool finite(const Mat2& m) {
    return std::isfinite(m.a) && std::isfinite(m.b) && std::isfinite(m.c) && std::isfinite(m.d);
}

double max_abs_entry(const Mat2& m) {
    return std::max(std::max(std::abs(m.a), std::abs(m.b)),
                    std::max(std::abs(m.c), std::abs(m.d)));
}

// Rescale entries so det == 1 exactly (to rounding), folding the factor into
// log_scale.
void renormalize(ScaledIsometry& g) {
    double big = max_abs_entry(g.entries);
    if (big > kRescaleLimit) {
        const double inv = 1.0 / big;
        g.entries = {g.entries.a * inv, g.entries.b * inv, g.entries.c * inv, g.entries.d * inv};
        g.log_scale += std::log(big);
    }
    const double det = g.entries.det();
    if (!(det > 0.0) || !std::isfinite(det)) {
        throw std::runtime_error("ScaledIsometry: determinant not positive finite");
    }
    const double s = std::sqrt(det);
    if (s != 1.0) {
        const double inv = 1.0 / s;
        g.entries = {g.entries.a * inv, g.entries.b * inv, g.entries.c * inv, g.entries.d * inv};
        g.log_scale += std::log(s);
    }
}

} // namespace

ScaledIsometry ScaledIsometry::from_matrix(const Mat2& m) {
    if (!finite(m)) {
        throw std::runtime_error("ScaledIsometry: non-finite entries");
    }
    ScaledIsometry g{m, 0.0};
    renormalize(g);
    return g;
}

ScaledIsometry ScaledIsometry::inverse() const {
    return {entries.inverse(), -log_scale};
}

ScaledIsometry compose(const ScaledIsometry& lhs, const ScaledIsometry& rhs) {
    ScaledIsometry out;
    out.entries = lhs.entries * rhs.entries;
    out.log_scale = lhs.log_scale + rhs.log_scale;
    if (!finite(out.entries)) {
        throw std::runtime_error("ScaledIsometry: non-finite product");
    }
    renormalize(out);
    return out;
}

double trace_to_length(double tr_abs, double log_scale) {
    if (!(tr_abs >= 0.0) || !std::isfinite(tr_abs)) {
        throw std::runtime_error("trace_to_length: bad trace");
    }
    if (tr_abs == 0.0) {
        throw NotHyperbolicError("trace is zero (elliptic)");
    }
    // u = ln(e^{log_scale} tr_abs / 2)
    const double u = log_scale + std::log(tr_abs) - std::log(2.0);
    if (u <= 0.0) {
        throw NotHyperbolicError("|trace| <= 2: not a hyperbolic isometry");
    }
    if (u < kLargeTraceLog) {
        return 2.0 * std::acosh(std::exp(u));
    }
    return 2.0 * arccosh_from_log(u);
}

} // namespace minfill::hyp
