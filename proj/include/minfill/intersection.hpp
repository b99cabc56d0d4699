#pragma once

#include <optional>

#include "minfill/words.hpp"

namespace minfill::grp {

struct IntersectionReport {
    long long self_count = 0;
    std::optional<long long> formula_count; // filled for family words by the CLI
    bool filling = false;
    std::optional<bool> separating; // present only for simple curves
};

// Geometric self-intersection number of the free homotopy class of w.
// Exact combinatorial/geometric count: linked pairs of axis translates of the
// cyclic shifts under a frozen thick hyperbolic structure, with double-double
// escalation for marginal sign decisions.  Powers are reduced to the
// primitive root via i(v^p) = p^2 i(v) + p - 1.
long long self_intersection_oracle(const CurveWord& w);

// Geometric intersection number of a pair of classes.
long long pair_intersection_oracle(const CurveWord& w1, const CurveWord& w2);

bool is_simple(const CurveWord& w);

// True iff every complementary component of the minimal-position realization
// is a disc: the traced 4-valent diagram satisfies V - E + F = 2 - 2g.
bool is_filling(const CurveWord& w);

// Null-homology test; requires a simple input curve.
bool is_separating(const CurveWord& w);

IntersectionReport analyze_curve(const CurveWord& w);

} // namespace minfill::grp
