#pragma once

#include <string>
#include <vector>

#include "minfill/isometry.hpp"
#include "minfill/words.hpp"

namespace minfill::rep {

int fn_dimension(int genus); // 3g - 3

// A point of Teichmueller space: cuff lengths and twists over the fixed pants
// decomposition.  Cuff 0 is always the separating curve eta = [a1, b1].
// Cuffs 1..g are the handle core curves a_i, cuffs g+1..2g-1 the handle
// boundary curves [a_i, b_i] (i >= 2), and any remaining cuffs the chain
// curves of the connector sphere.
struct FNCoords {
    int genus = 2;
    std::vector<double> lengths;
    std::vector<double> twists;

    void validate() const; // positive lengths, cap at kMaxCuffLength, sizes
};

// Numeric-safety cap: beyond this double precision degrades in the holonomy
// products even with scaling.
inline constexpr double kMaxCuffLength = 50.0;

// All cuff lengths 2, twists 0.
FNCoords symmetric_thick_fn(int genus);

// Free-homotopy class of FN cuff `index` as a word in the standard generators.
grp::CurveWord cuff_word(int genus, int index);
std::string cuff_name(int genus, int index);

// Holonomy of the marked hyperbolic structure: generator images of
// a1, b1, ..., a_g, b_g in SL(2, R).
struct SurfaceRep {
    int genus = 2;
    FNCoords fn;
    std::vector<hyp::Mat2> gen; // 2g matrices, index = grp generator index

    hyp::ScaledIsometry letter(grp::Letter l) const;
    hyp::ScaledIsometry evaluate(const grp::CurveWord& w) const;
};

SurfaceRep build_representation(const FNCoords& fn);

// Length of the closed geodesic in the class of w.  Throws
// NotHyperbolicError when the holonomy trace is <= 2 in magnitude.
double geodesic_length(const SurfaceRep& rep, const grp::CurveWord& w);

inline double eta_length(const FNCoords& fn) {
    fn.validate();
    return fn.lengths[0];
}

} // namespace minfill::rep
