#pragma once

#include "minfill/representation.hpp"
#include "minfill/words.hpp"

namespace minfill::probe {

inline constexpr int kDefaultSystoleDepth = 12;

struct SystoleReport {
    double value = 0.0;        // shortest essential geodesic found
    grp::CurveWord witness;
    int search_depth = 0;
    bool certified = false;    // depth-based length bound exceeds `value`
};

// Shortest closed geodesic over all cyclically reduced words up to `depth`
// letters.  Enumeration prunes by accumulated orbit displacement and runs
// the subtrees in parallel; the serial variant is the reference
// implementation and returns bit-identical results.
SystoleReport systole(const rep::SurfaceRep& rep, int depth = kDefaultSystoleDepth);
SystoleReport systole_serial(const rep::SurfaceRep& rep, int depth = kDefaultSystoleDepth);

// Systole of the complementary side of eta (side 1: handle 1; side 2: the
// rest), excluding powers of the peripheral curve eta.
SystoleReport subsurface_systole(const rep::SurfaceRep& rep, int side,
                                 int depth = kDefaultSystoleDepth);
SystoleReport subsurface_systole_serial(const rep::SurfaceRep& rep, int side,
                                        int depth = kDefaultSystoleDepth);

// min(sys(X1), sys(X2)) >= epsilon and eta length <= 1
bool in_T_epsilon(const rep::SurfaceRep& rep, double epsilon,
                  int depth = kDefaultSystoleDepth);

// 2n [r(sys1/2) + r(sys2/2)] + (4n-2) r(l_eta/2) + f_{m-2}(l_eta),
// a lower bound for the length of the (m, n) family curve; requires m >= 2.
double family_length_lower_bound(double sys1, double sys2, double eta_len, int m, int n);
double family_length_lower_bound(const rep::SurfaceRep& rep, int m, int n,
                                 int depth = kDefaultSystoleDepth);

struct AffineGrowthFit {
    double slope = 0.0;         // fitted A: residual R(m,n) <= A n + B on the fit grid
    double intercept = 0.0;     // fitted B
    double max_violation = 0.0; // max of R - (A n + B) over the validation grid
    double max_m_slope = 0.0;   // max |R(m+1,n) - R(m,n)| over both grids
};

// Residuals R(m,n) = l_{gamma_{m,n}}(rep) - f_{m+1}(l_eta) fitted as an
// affine envelope in n on [1, fit_max]^2 and validated on
// (fit_max, validate_max]^2.  Requires rep in T_epsilon.
AffineGrowthFit affine_growth_residual(const rep::SurfaceRep& rep, double epsilon,
                                       int fit_max, int validate_max,
                                       int depth = kDefaultSystoleDepth);

} // namespace minfill::probe
