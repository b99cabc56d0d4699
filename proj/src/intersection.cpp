#include "minfill/intersection.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "minfill/ddreal.hpp"
#include "minfill/errors.hpp"
#include "minfill/isometry.hpp"
#include "minfill/representation.hpp"

namespace minfill::grp {

using minfill::DD;
using hyp::Mat2;
using hyp::Mat2DD;
using cplx = std::complex<double>;

namespace {

// Raised when the frozen structure happens to be non-generic for the input
// (coincident crossing times, near-vertical axes); the caller retries with a
// jittered structure.
struct DegenerateGeometry : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double frac(double x) { return x - std::floor(x); }

// Frozen thick asymmetric structure used as the oracle's internal geometry.
// `attempt` jitters it deterministically when a degeneracy is hit.
rep::FNCoords oracle_fn(int genus, int attempt) {
    rep::FNCoords fn;
    fn.genus = genus;
    const int n = rep::fn_dimension(genus);
    for (int i = 0; i < n; ++i) {
        double l = 1.55 + 0.40 * frac(0.6180339887498949 * (i + 1));
        double t = (0.1 + 0.8 * frac(0.7548776662466927 * (i + 1))) * 0.5 * l;
        l *= 1.0 + 0.0131 * attempt * (i + 1.0) / n;
        t += 0.0173 * attempt * (i + 1.0);
        fn.lengths.push_back(l);
        fn.twists.push_back(t);
    }
    return fn;
}

struct OracleContext {
    int genus = 2;
    std::vector<Mat2> letter;     // generator matrices, then their inverses
    std::vector<Mat2DD> letter_dd;

    const Mat2& mat(Letter l) const {
        const int gi = generator_index(l);
        return letter[l > 0 ? gi : gi + 2 * genus];
    }
    const Mat2DD& mat_dd(Letter l) const {
        const int gi = generator_index(l);
        return letter_dd[l > 0 ? gi : gi + 2 * genus];
    }
};

std::shared_ptr<const OracleContext> oracle_context(int genus, int attempt) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const OracleContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    const auto key = std::make_pair(genus, attempt);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const rep::SurfaceRep r = rep::build_representation(oracle_fn(genus, attempt));
    // conjugate by a fixed generic Moebius map so no tested axis passes
    // through infinity
    Mat2 q{1.0, 0.37, 0.21, 1.10};
    const double s = std::sqrt(q.det());
    q = {q.a / s, q.b / s, q.c / s, q.d / s};
    const Mat2 qi = q.inverse();

    auto ctx = std::make_shared<OracleContext>();
    ctx->genus = genus;
    ctx->letter.resize(4 * genus);
    ctx->letter_dd.resize(4 * genus);
    for (int gidx = 0; gidx < 2 * genus; ++gidx) {
        const Mat2 m = q * r.gen[gidx] * qi;
        ctx->letter[gidx] = m;
        ctx->letter[gidx + 2 * genus] = m.inverse();
        ctx->letter_dd[gidx] = hyp::to_dd(m);
        ctx->letter_dd[gidx + 2 * genus] = hyp::to_dd(m.inverse());
    }
    cache[key] = ctx;
    return ctx;
}

// --- projective boundary points ---------------------------------------------

template <typename T>
struct ProjPoint {
    T u, v; // boundary point u/v, as (u : v) on RP^1
};

template <typename T>
struct AxisEnds {
    ProjPoint<T> rep, att;
};

template <typename T>
double hi_of(const T& x) {
    if constexpr (std::is_same_v<T, double>) {
        return x;
    } else {
        return x.hi;
    }
}

template <typename T, typename SqrtFn>
AxisEnds<T> axis_endpoints(const hyp::Mat2T<T>& m, SqrtFn sqrt_fn) {
    const T t = m.a + m.d;
    const T delta = m.a * m.d - m.b * m.c;
    const T disc = sqrt_fn(t * t - T(4.0) * delta);
    const bool pos = hi_of(t) > 0.0;
    const T lam_att = pos ? (t + disc) * T(0.5) : (t - disc) * T(0.5);
    const T lam_rep = pos ? (t - disc) * T(0.5) : (t + disc) * T(0.5);
    auto pick = [&](const T& lam) -> ProjPoint<T> {
        const T c1u = m.b, c1v = lam - m.a;
        const T c2u = lam - m.d, c2v = m.c;
        const double w1 = std::abs(hi_of(c1u)) + std::abs(hi_of(c1v));
        const double w2 = std::abs(hi_of(c2u)) + std::abs(hi_of(c2v));
        return w1 >= w2 ? ProjPoint<T>{c1u, c1v} : ProjPoint<T>{c2u, c2v};
    };
    return {pick(lam_rep), pick(lam_att)};
}

struct SignResult {
    int sign = 0;
    bool reliable = false;
};

SignResult cross_sign(const ProjPoint<double>& p, const ProjPoint<double>& q) {
    const double x1 = p.u * q.v, x2 = p.v * q.u;
    const double c = x1 - x2;
    const double scale = std::abs(x1) + std::abs(x2);
    SignResult r;
    r.reliable = scale > 0.0 && std::abs(c) > 1e-9 * scale;
    r.sign = c > 0 ? 1 : (c < 0 ? -1 : 0);
    return r;
}

SignResult cross_sign(const ProjPoint<DD>& p, const ProjPoint<DD>& q) {
    const DD x1 = p.u * q.v, x2 = p.v * q.u;
    const DD c = x1 - x2;
    const double scale = std::abs(x1.hi) + std::abs(x2.hi);
    SignResult r;
    r.reliable = scale > 0.0 && std::abs(c.hi + c.lo) > 1e-28 * scale;
    r.sign = minfill::sign(c);
    return r;
}

template <typename T>
SignResult orient(const ProjPoint<T>& p, const ProjPoint<T>& q, const ProjPoint<T>& r) {
    const SignResult s1 = cross_sign(p, q);
    const SignResult s2 = cross_sign(q, r);
    const SignResult s3 = cross_sign(r, p);
    SignResult out;
    out.reliable = s1.reliable && s2.reliable && s3.reliable;
    out.sign = s1.sign * s2.sign * s3.sign;
    return out;
}

// Two hyperbolic axes cross transversally iff their endpoint pairs separate
// each other on the boundary circle.
template <typename T>
SignResult axes_linked(const AxisEnds<T>& a, const AxisEnds<T>& b) {
    const SignResult o1 = orient(a.rep, a.att, b.rep);
    const SignResult o2 = orient(a.rep, a.att, b.att);
    SignResult out;
    out.reliable = o1.reliable && o2.reliable;
    out.sign = (o1.sign * o2.sign < 0) ? 1 : -1; // 1 = linked
    return out;
}

// --- shift products ----------------------------------------------------------

// normalized holonomy of the cyclic shift starting at position s
Mat2 shift_matrix(const OracleContext& ctx, const std::vector<Letter>& v, std::size_t s) {
    hyp::ScaledIsometry acc = hyp::ScaledIsometry::identity();
    const std::size_t L = v.size();
    for (std::size_t k = 0; k < L; ++k) {
        acc = hyp::compose(acc, hyp::ScaledIsometry::from_matrix(ctx.mat(v[(s + k) % L])));
    }
    return acc.entries; // only projective data is needed
}

Mat2DD shift_matrix_dd(const OracleContext& ctx, const std::vector<Letter>& v, std::size_t s) {
    Mat2DD acc = Mat2DD::identity();
    const std::size_t L = v.size();
    for (std::size_t k = 0; k < L; ++k) {
        acc = acc * ctx.mat_dd(v[(s + k) % L]);
        const double big = std::max(std::max(std::abs(acc.a.hi), std::abs(acc.b.hi)),
                                    std::max(std::abs(acc.c.hi), std::abs(acc.d.hi)));
        if (big > 1e50) {
            const DD inv = DD(1.0) / DD(big);
            acc = {acc.a * inv, acc.b * inv, acc.c * inv, acc.d * inv};
        }
    }
    return acc;
}

struct ShiftAxes {
    const OracleContext* ctx = nullptr;
    const std::vector<Letter>* letters = nullptr;
    std::vector<AxisEnds<double>> fast;
    mutable std::vector<AxisEnds<DD>> slow;
    mutable std::vector<char> slow_done;

    const AxisEnds<DD>& dd(std::size_t i) const {
        if (!slow_done[i]) {
            const Mat2DD m = shift_matrix_dd(*ctx, *letters, i);
            slow[i] = axis_endpoints<DD>(m, [](DD x) { return minfill::sqrt(x); });
            slow_done[i] = 1;
        }
        return slow[i];
    }
};

ShiftAxes make_shift_axes(const OracleContext& ctx, const std::vector<Letter>& v) {
    ShiftAxes out;
    out.ctx = &ctx;
    out.letters = &v;
    out.fast.resize(v.size());
    out.slow.resize(v.size());
    out.slow_done.assign(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Mat2 m = shift_matrix(ctx, v, i);
        if (std::abs(m.trace()) <= 2.0) {
            throw PrecisionError("shift holonomy not hyperbolic");
        }
        out.fast[i] = axis_endpoints<double>(m, [](double x) { return std::sqrt(x); });
    }
    return out;
}

bool linked(const ShiftAxes& ax, std::size_t i, std::size_t j) {
    const SignResult fast = axes_linked(ax.fast[i], ax.fast[j]);
    if (fast.reliable) return fast.sign > 0;
    const SignResult slow = axes_linked(ax.dd(i), ax.dd(j));
    if (!slow.reliable) {
        throw PrecisionError("axis linking undecidable at double-double precision");
    }
    return slow.sign > 0;
}

bool linked_cross(const ShiftAxes& a, std::size_t i, const ShiftAxes& b, std::size_t j) {
    const SignResult fast = axes_linked(a.fast[i], b.fast[j]);
    if (fast.reliable) return fast.sign > 0;
    const SignResult slow = axes_linked(a.dd(i), b.dd(j));
    if (!slow.reliable) {
        throw PrecisionError("axis linking undecidable at double-double precision");
    }
    return slow.sign > 0;
}

// --- preparation --------------------------------------------------------------

constexpr std::size_t kOracleMaxLetters = 400;

CurveWord prepare(const CurveWord& w) {
    CurveWord out = dehn_shorten(w);
    if (out.is_identity()) {
        throw std::domain_error("intersection oracle: null-homotopic word");
    }
    if (out.size() > kOracleMaxLetters) {
        throw PrecisionError("word too long for the exact intersection oracle");
    }
    return out;
}

// --- crossings of the closed geodesic ------------------------------------------

struct Geodesic {
    double p, q; // repelling and attracting endpoints, finite reals
};

double proj_to_real(const ProjPoint<double>& pt) {
    if (std::abs(pt.v) < 1e-13 * std::abs(pt.u)) {
        throw DegenerateGeometry("axis endpoint at infinity");
    }
    return pt.u / pt.v;
}

cplx cross_point(const Geodesic& a, const Geodesic& b) {
    const double c1 = (a.p + a.q) / 2.0, r1 = std::abs(a.q - a.p) / 2.0;
    const double c2 = (b.p + b.q) / 2.0, r2 = std::abs(b.q - b.p) / 2.0;
    const double dc = c2 - c1;
    if (std::abs(dc) < 1e-13 * (r1 + r2)) throw DegenerateGeometry("concentric axes");
    const double x = (r1 * r1 - r2 * r2 - c1 * c1 + c2 * c2) / (2.0 * dc);
    const double y2 = r1 * r1 - (x - c1) * (x - c1);
    if (y2 <= 0.0) throw DegenerateGeometry("axes tangent at the boundary");
    return {x, std::sqrt(y2)};
}

// arclength coordinate along the geodesic, increasing toward q
double axis_param(const Geodesic& g, cplx z) {
    return std::log(std::abs(z - cplx(g.p, 0.0))) - std::log(std::abs(z - cplx(g.q, 0.0)));
}

// direction (up to positive scale) of the geodesic at z, toward q: rotate the
// radius vector by 90 degrees, clockwise when q is the right endpoint
cplx axis_tangent(const Geodesic& g, cplx z) {
    const double c = (g.p + g.q) / 2.0;
    const double s = g.p > g.q ? 1.0 : -1.0;
    return cplx(0.0, s) * (z - cplx(c, 0.0));
}

// ln of a double-double magnitude
double dd_log(DD x) {
    x = minfill::abs(x);
    if (x.hi <= 0.0) throw DegenerateGeometry("vanishing magnitude in time push");
    return std::log(x.hi) + std::log1p(x.lo / x.hi);
}

// arclength coordinate on the base axis of the pushed point m(z), evaluated
// in log form so deep pushes do not underflow:
// |m(z) - e| = |(a - e c) z + (b - e d)| / |c z + d|
double pushed_param(const Mat2DD& m, cplx z, const Geodesic& base) {
    auto log_abs = [&](double e) {
        const DD alpha = m.a - DD(e) * m.c;
        const DD beta = m.b - DD(e) * m.d;
        const DD re = alpha * DD(z.real()) + beta;
        const DD im = alpha * DD(z.imag());
        return 0.5 * dd_log(re * re + im * im);
    };
    return log_abs(base.p) - log_abs(base.q);
}

struct Crossing {
    double t_first, t_second; // visit times in [0, ell), t_first <= t_second
    int handedness;           // sign of cross(tangent at first visit, at second)
};

struct CrossingSet {
    double ell = 0.0;
    std::vector<Crossing> list; // deduplicated double points
};

struct ShiftFrame {
    ShiftAxes axes;
    std::vector<Geodesic> geo;
    std::vector<Mat2DD> prefix_dd; // rho(v[0..i)), entries kept bounded
    double ell = 0.0;
    double origin_param = 0.0; // base-axis coordinate of the marked origin
};

ShiftFrame make_shift_frame(const OracleContext& ctx, const CurveWord& v) {
    ShiftFrame f;
    f.axes = make_shift_axes(ctx, v.letters);
    const std::size_t L = v.letters.size();
    f.geo.resize(L);
    for (std::size_t i = 0; i < L; ++i) {
        f.geo[i] = {proj_to_real(f.axes.fast[i].rep), proj_to_real(f.axes.fast[i].att)};
    }
    f.prefix_dd.assign(L + 1, Mat2DD::identity());
    for (std::size_t i = 0; i < L; ++i) {
        Mat2DD next = f.prefix_dd[i] * ctx.mat_dd(v.letters[i]);
        const double big = std::max(std::max(std::abs(next.a.hi), std::abs(next.b.hi)),
                                    std::max(std::abs(next.c.hi), std::abs(next.d.hi)));
        if (big > 1e40) {
            const DD inv = DD(1.0) / DD(big);
            next = {next.a * inv, next.b * inv, next.c * inv, next.d * inv};
        }
        f.prefix_dd[i + 1] = next;
    }
    hyp::ScaledIsometry m0 = hyp::ScaledIsometry::identity();
    for (Letter l : v.letters) {
        m0 = hyp::compose(m0, hyp::ScaledIsometry::from_matrix(ctx.mat(l)));
    }
    f.ell = hyp::translation_length(m0);
    // marked origin: top of the base axis semicircle
    const cplx o0{(f.geo[0].p + f.geo[0].q) / 2.0, std::abs(f.geo[0].q - f.geo[0].p) / 2.0};
    f.origin_param = axis_param(f.geo[0], o0);
    return f;
}

// visit time along the closed geodesic of the crossing point z seen on branch i
double branch_time(const ShiftFrame& f, std::size_t i, cplx z) {
    const double raw = pushed_param(f.prefix_dd[i], z, f.geo[0]) - f.origin_param;
    double t = std::fmod(raw, f.ell);
    if (t < 0.0) t += f.ell;
    return t;
}

constexpr double kTimeMergeTol = 1e-6;
constexpr double kTimeDistinctTol = 1e-4;

// All double points of the closed geodesic of primitive v: linked shift pairs
// located on the curve and deduplicated by their pair of visit times.
CrossingSet compute_crossings(const OracleContext& ctx, const CurveWord& v) {
    const ShiftFrame f = make_shift_frame(ctx, v);
    const std::size_t L = v.letters.size();

    std::vector<Crossing> raw;
    for (std::size_t i = 0; i + 1 < L; ++i) {
        for (std::size_t j = i + 1; j < L; ++j) {
            if (!linked(f.axes, i, j)) continue;
            const cplx z = cross_point(f.geo[i], f.geo[j]);
            const cplx ti = axis_tangent(f.geo[i], z);
            const cplx tj = axis_tangent(f.geo[j], z);
            const double cr = ti.real() * tj.imag() - ti.imag() * tj.real();
            if (std::abs(cr) < 1e-10 * std::abs(ti) * std::abs(tj)) {
                throw DegenerateGeometry("tangential crossing");
            }
            Crossing c;
            c.t_first = branch_time(f, i, z);
            c.t_second = branch_time(f, j, z);
            c.handedness = cr > 0 ? 1 : -1;
            if (c.t_first > c.t_second) {
                std::swap(c.t_first, c.t_second);
                c.handedness = -c.handedness;
            }
            if (std::getenv("MINFILL_DEBUG_RAW")) {
                std::fprintf(stderr, "raw pair (%zu,%zu): t=(%.9f, %.9f) h=%+d ell=%.6f\n",
                             i, j, c.t_first, c.t_second, c.handedness, f.ell);
            }
            raw.push_back(c);
        }
    }

    std::sort(raw.begin(), raw.end(), [](const Crossing& a, const Crossing& b) {
        return a.t_first < b.t_first || (a.t_first == b.t_first && a.t_second < b.t_second);
    });

    // merge entries describing the same double point (the same geometric
    // crossing can be reached through several shift pairs)
    CrossingSet out;
    out.ell = f.ell;
    const double merge = kTimeMergeTol * std::max(1.0, f.ell);
    const double distinct = kTimeDistinctTol * std::max(1.0, f.ell);
    for (const Crossing& c : raw) {
        bool merged = false;
        for (auto it = out.list.rbegin(); it != out.list.rend(); ++it) {
            if (c.t_first - it->t_first > merge) break;
            if (std::abs(c.t_first - it->t_first) < merge &&
                std::abs(c.t_second - it->t_second) < merge) {
                if (it->handedness != c.handedness) {
                    throw DegenerateGeometry("inconsistent handedness at merged crossing");
                }
                merged = true;
                break;
            }
        }
        if (!merged) out.list.push_back(c);
    }
    // distinct double points must be clearly separated in time, otherwise the
    // structure is too symmetric for this input: retry jittered
    for (std::size_t a = 0; a < out.list.size(); ++a) {
        for (std::size_t b = a + 1; b < out.list.size(); ++b) {
            const double d1 = std::abs(out.list[a].t_first - out.list[b].t_first);
            const double d2 = std::abs(out.list[a].t_second - out.list[b].t_second);
            if (std::max(d1, d2) < distinct) {
                throw DegenerateGeometry("ambiguous crossing separation");
            }
        }
    }
    return out;
}

CrossingSet crossings_of_primitive(const CurveWord& v) {
    for (int attempt = 0; attempt < 5; ++attempt) {
        try {
            return compute_crossings(*oracle_context(v.genus, attempt), v);
        } catch (const DegenerateGeometry& e) {
            if (std::getenv("MINFILL_DEBUG")) {
                std::fprintf(stderr, "degenerate[%d]: %s\n", attempt, e.what());
            }
        } catch (const PrecisionError& e) {
            if (std::getenv("MINFILL_DEBUG")) {
                std::fprintf(stderr, "precision[%d]: %s\n", attempt, e.what());
            }
            if (attempt == 4) throw;
        }
    }
    throw PrecisionError("crossing computation failed on all jittered structures");
}

long long count_primitive(const CurveWord& v) {
    return static_cast<long long>(crossings_of_primitive(v).list.size());
}

// --- minimal-position diagram ---------------------------------------------------

struct Diagram {
    long long vertices = 0;
    long long faces = 0;
    int genus_filled = 0; // genus of the subsurface the curve fills
};

Diagram build_diagram(const CrossingSet& cs) {
    Diagram out;
    out.vertices = static_cast<long long>(cs.list.size());
    if (cs.list.empty()) return out;

    struct Visit {
        double time;
        std::size_t id;
        int branch; // 0 = first-time branch, 1 = second
    };
    std::vector<Visit> visits;
    for (std::size_t k = 0; k < cs.list.size(); ++k) {
        visits.push_back({cs.list[k].t_first, k, 0});
        visits.push_back({cs.list[k].t_second, k, 1});
    }
    std::sort(visits.begin(), visits.end(),
              [](const Visit& a, const Visit& b) { return a.time < b.time; });
    for (std::size_t k = 0; k + 1 < visits.size(); ++k) {
        if (visits[k + 1].time - visits[k].time < kTimeMergeTol * std::max(1.0, cs.ell)) {
            throw DegenerateGeometry("coincident visit times");
        }
    }

    // darts: 4 per vertex; CCW rotation around a crossing
    // h=+1: out0, out1, in0, in1 ; h=-1: out0, in1, in0, out1
    const std::size_t V = cs.list.size();
    auto slot = [](std::size_t vtx, int branch, bool outgoing) {
        return 4 * vtx + 2 * static_cast<std::size_t>(branch) + (outgoing ? 1 : 0);
    };
    std::vector<std::size_t> rot_next(4 * V);
    for (std::size_t vtx = 0; vtx < V; ++vtx) {
        std::array<std::size_t, 4> order;
        if (cs.list[vtx].handedness > 0) {
            order = {slot(vtx, 0, true), slot(vtx, 1, true), slot(vtx, 0, false),
                     slot(vtx, 1, false)};
        } else {
            order = {slot(vtx, 0, true), slot(vtx, 1, false), slot(vtx, 0, false),
                     slot(vtx, 1, true)};
        }
        for (int k = 0; k < 4; ++k) rot_next[order[k]] = order[(k + 1) % 4];
    }

    std::vector<std::size_t> alpha(4 * V);
    for (std::size_t k = 0; k < visits.size(); ++k) {
        const Visit& cur = visits[k];
        const Visit& nxt = visits[(k + 1) % visits.size()];
        alpha[slot(cur.id, cur.branch, true)] = slot(nxt.id, nxt.branch, false);
        alpha[slot(nxt.id, nxt.branch, false)] = slot(cur.id, cur.branch, true);
    }

    std::vector<char> seen(4 * V, 0);
    long long faces = 0;
    for (std::size_t d0 = 0; d0 < 4 * V; ++d0) {
        if (seen[d0]) continue;
        ++faces;
        std::size_t d = d0;
        std::size_t len = 0;
        do {
            seen[d] = 1;
            d = rot_next[alpha[d]];
            ++len;
            if (len > 8 * V) throw std::logic_error("face tracing did not close");
        } while (d != d0);
        if (len < 3 && V > 1) {
            // geodesics bound no monogons or bigons; a short face means the
            // crossing data is inconsistent
            throw DegenerateGeometry("degenerate face in traced diagram");
        }
    }
    out.faces = faces;
    const long long chi = -out.vertices + faces; // V - E + F with E = 2V
    if ((2 - chi) % 2 != 0) throw std::logic_error("odd Euler characteristic in diagram");
    out.genus_filled = static_cast<int>((2 - chi) / 2);
    return out;
}

Diagram diagram_of_primitive(const CurveWord& v) {
    for (int attempt = 0; attempt < 5; ++attempt) {
        try {
            const CrossingSet cs = compute_crossings(*oracle_context(v.genus, attempt), v);
            Diagram d = build_diagram(cs);
            if (d.genus_filled > v.genus) {
                throw std::logic_error("diagram genus exceeds ambient genus");
            }
            return d;
        } catch (const DegenerateGeometry&) {
        } catch (const PrecisionError&) {
            if (attempt == 4) throw;
        }
    }
    throw PrecisionError("diagram tracing failed on all jittered structures");
}

// crossings between two distinct closed geodesics, deduplicated by time pairs
long long count_pair(const OracleContext& ctx, const CurveWord& v1, const CurveWord& v2) {
    const ShiftFrame f1 = make_shift_frame(ctx, v1);
    const ShiftFrame f2 = make_shift_frame(ctx, v2);
    std::vector<std::pair<double, double>> raw;
    for (std::size_t i = 0; i < v1.letters.size(); ++i) {
        for (std::size_t j = 0; j < v2.letters.size(); ++j) {
            if (!linked_cross(f1.axes, i, f2.axes, j)) continue;
            const cplx z = cross_point(f1.geo[i], f2.geo[j]);
            raw.emplace_back(branch_time(f1, i, z), branch_time(f2, j, z));
        }
    }
    std::sort(raw.begin(), raw.end());
    const double merge1 = kTimeMergeTol * std::max(1.0, f1.ell);
    const double merge2 = kTimeMergeTol * std::max(1.0, f2.ell);
    std::vector<std::pair<double, double>> unique_pts;
    for (const auto& c : raw) {
        bool merged = false;
        for (auto it = unique_pts.rbegin(); it != unique_pts.rend(); ++it) {
            if (c.first - it->first > merge1) break;
            if (std::abs(c.first - it->first) < merge1 &&
                std::abs(c.second - it->second) < merge2) {
                merged = true;
                break;
            }
        }
        if (!merged) unique_pts.push_back(c);
    }
    for (std::size_t a = 0; a < unique_pts.size(); ++a) {
        for (std::size_t b = a + 1; b < unique_pts.size(); ++b) {
            const double d1 = std::abs(unique_pts[a].first - unique_pts[b].first);
            const double d2 = std::abs(unique_pts[a].second - unique_pts[b].second);
            if (std::max(d1 / merge1, d2 / merge2) < kTimeDistinctTol / kTimeMergeTol) {
                throw DegenerateGeometry("ambiguous pair crossing separation");
            }
        }
    }
    return static_cast<long long>(unique_pts.size());
}

} // namespace

long long self_intersection_oracle(const CurveWord& w) {
    const CurveWord v = prepare(w);
    int power = 1;
    const CurveWord root = primitive_root(v, power);
    const long long base = count_primitive(root);
    if (power == 1) return base;
    // parallel-strand realization of a power of a primitive class
    return static_cast<long long>(power) * power * base + (power - 1);
}

long long pair_intersection_oracle(const CurveWord& w1, const CurveWord& w2) {
    if (w1.genus != w2.genus) {
        throw std::domain_error("pair intersection: genus mismatch");
    }
    const CurveWord v1 = prepare(w1);
    const CurveWord v2 = prepare(w2);
    int p = 1, q = 1;
    const CurveWord r1 = primitive_root(v1, p);
    const CurveWord r2 = primitive_root(v2, q);

    if (cyclically_equal_unoriented(r1, r2)) {
        // transverse parallel copies of one geodesic meet twice per
        // self-crossing of the core
        return 2LL * p * q * count_primitive(r1);
    }

    for (int attempt = 0; attempt < 5; ++attempt) {
        try {
            const auto ctx = oracle_context(w1.genus, attempt);
            return static_cast<long long>(p) * q * count_pair(*ctx, r1, r2);
        } catch (const DegenerateGeometry&) {
        } catch (const PrecisionError&) {
            if (attempt == 4) throw;
        }
    }
    throw PrecisionError("pair intersection failed on all jittered structures");
}

bool is_simple(const CurveWord& w) { return self_intersection_oracle(w) == 0; }

bool is_filling(const CurveWord& w) {
    const CurveWord v = prepare(w);
    int power = 1;
    const CurveWord root = primitive_root(v, power);
    if (count_primitive(root) == 0) {
        return false; // simple curves never fill a genus >= 2 surface
    }
    const Diagram d = diagram_of_primitive(root);
    return d.genus_filled == root.genus;
}

bool is_separating(const CurveWord& w) {
    const CurveWord v = prepare(w); // throws on the identity class
    if (!is_simple(v)) {
        throw std::domain_error("is_separating requires a simple curve");
    }
    for (long long s : exponent_sums(v)) {
        if (s != 0) return false;
    }
    return true;
}

IntersectionReport analyze_curve(const CurveWord& w) {
    IntersectionReport out;
    out.self_count = self_intersection_oracle(w);
    out.filling = is_filling(w);
    if (out.self_count == 0) {
        out.separating = is_separating(w);
    }
    return out;
}

} // namespace minfill::grp
