#include "minfill/representation.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "minfill/errors.hpp"

namespace minfill::rep {

using hyp::Mat2;
using grp::CurveWord;
using cplx = std::complex<double>;

namespace {

// --- elementary isometries ------------------------------------------------

// translation by t along the imaginary axis, attracting endpoint at infinity
Mat2 J(double t) {
    const double e = std::exp(t / 2.0);
    return {e, 0.0, 0.0, 1.0 / e};
}

// translation by d along the unit semicircle (-1, 1), attracting endpoint +1
Mat2 Pperp(double d) {
    const double c = std::cosh(d / 2.0), s = std::sinh(d / 2.0);
    return {c, s, s, c};
}

// half-turn about i: z -> -1/z; maps the imaginary axis to itself reversing
// direction and swaps its two sides
const Mat2 kFlip{0.0, -1.0, 1.0, 0.0};

cplx apply(const Mat2& m, cplx z) {
    if (std::isinf(z.real())) {
        if (m.c == 0.0) return cplx(INFINITY, 0.0);
        return cplx(m.a / m.c, 0.0);
    }
    const cplx num = m.a * z + m.b;
    const cplx den = m.c * z + m.d;
    if (std::abs(den) == 0.0) return cplx(INFINITY, 0.0);
    return num / den;
}

double apply_boundary(const Mat2& m, double x) {
    if (std::isinf(x)) {
        return m.c == 0.0 ? INFINITY : m.a / m.c;
    }
    const double den = m.c * x + m.d;
    if (den == 0.0) return INFINITY;
    return (m.a * x + m.b) / den;
}

struct Axis {
    double rep; // repelling endpoint (may be +-inf)
    double att; // attracting endpoint
};

Axis fixed_points(const Mat2& m) {
    const double t = m.trace();
    if (!(std::abs(t) > 2.0)) {
        throw NotHyperbolicError("fixed_points: |trace| <= 2");
    }
    const double disc = std::sqrt(t * t - 4.0);
    const double lam_att = (t + (t > 0 ? disc : -disc)) / 2.0; // |lambda| > 1
    const double lam_rep = 1.0 / lam_att;                      // det == 1
    auto eigendir = [&](double lam) -> double {
        // (m - lam) v = 0; pick the better conditioned eigenvector
        const double n1 = std::abs(m.b) + std::abs(lam - m.a);
        const double n2 = std::abs(lam - m.d) + std::abs(m.c);
        double u, v;
        if (n1 >= n2) {
            u = m.b;
            v = lam - m.a;
        } else {
            u = lam - m.d;
            v = m.c;
        }
        if (v == 0.0) return u > 0 ? INFINITY : -INFINITY;
        return u / v;
    };
    return {eigendir(lam_rep), eigendir(lam_att)};
}

// Moebius sending (0, infinity, i) to (rep, att, origin); origin must lie on
// the geodesic from rep to att.
Mat2 frame_from_axis(const Axis& ax, cplx origin) {
    const double y = origin.imag();
    if (!(y > 0.0)) throw std::runtime_error("frame origin not in upper half plane");
    if (std::isinf(ax.att)) {
        // vertical axis upward at x = rep
        const double s = std::sqrt(y);
        return {s, ax.rep / s, 0.0, 1.0 / s};
    }
    if (std::isinf(ax.rep)) {
        // vertical axis downward: compose upward frame with the half turn
        const double s = std::sqrt(y);
        const Mat2 up{s, ax.att / s, 0.0, 1.0 / s};
        return up * kFlip;
    }
    const double p = ax.rep, q = ax.att;
    // F = [[q r, p], [r, 1]] with r = (z - p) / (i (q - z)), real for z on the axis
    const cplx rc = (origin - cplx(p, 0.0)) / (cplx(0.0, 1.0) * (cplx(q, 0.0) - origin));
    if (std::abs(rc.imag()) > 1e-7 * (1.0 + std::abs(rc.real()))) {
        throw std::runtime_error("frame origin is off the axis");
    }
    const double r = rc.real();
    Mat2 f{q * r, p, r, 1.0};
    const double det = f.det();
    if (!(det > 0.0)) throw std::runtime_error("frame not orientation preserving");
    const double inv = 1.0 / std::sqrt(det);
    return {f.a * inv, f.b * inv, f.c * inv, f.d * inv};
}

// Moebius with (rep, att) -> (0, infinity)
Mat2 axis_to_standard(const Axis& ax) {
    if (std::isinf(ax.att)) return {1.0, -ax.rep, 0.0, 1.0};
    if (std::isinf(ax.rep)) return {0.0, 1.0, 1.0, -ax.att};
    Mat2 n{1.0, -ax.rep, 1.0, -ax.att};
    const double det = n.det(); // att - rep
    const double s = det > 0 ? std::sqrt(det) : std::sqrt(-det);
    if (det > 0) return {n.a / s, n.b / s, n.c / s, n.d / s};
    return {-n.a / s, -n.b / s, n.c / s, n.d / s};
}

// Feet of the common perpendicular between two disjoint geodesics; returns
// the foot on `a`.
cplx perpendicular_foot(const Axis& a, const Axis& b) {
    const Mat2 n = axis_to_standard(a);
    const double pb = apply_boundary(n, b.rep);
    const double qb = apply_boundary(n, b.att);
    if (std::isinf(pb) || std::isinf(qb) || pb * qb <= 0.0) {
        throw std::runtime_error("axes are not disjoint; no common perpendicular");
    }
    const double root = std::sqrt(pb * qb);
    return apply(Mat2{n.d, -n.b, -n.c, n.a}, cplx(0.0, root)); // n^{-1}(i sqrt(pq))
}

// --- pants ------------------------------------------------------------------

struct Pants {
    std::array<Mat2, 3> cuff;  // C2*C1*C0 multiplies to the identity: C2 = (C1*C0)^{-1}
    std::array<Mat2, 3> frame; // F_k^{-1} C_k F_k = J(+l_k)
};

Pants make_pants(double l0, double l1, double l2) {
    const double u0 = l0 / 2.0, u1 = l1 / 2.0, u2 = l2 / 2.0;
    const double cd = (std::cosh(u2) + std::cosh(u0) * std::cosh(u1)) /
                      (std::sinh(u0) * std::sinh(u1));
    const double d01 = std::acosh(cd);

    Pants p;
    const Mat2 pp = Pperp(d01);
    p.cuff[0] = J(l0);
    p.cuff[1] = pp * J(-l1) * pp.inverse();
    p.cuff[2] = (p.cuff[1] * p.cuff[0]).inverse();

    const Axis ax0{0.0, INFINITY};
    const Axis ax1 = fixed_points(p.cuff[1]);
    const Axis ax2 = fixed_points(p.cuff[2]);

    p.frame[0] = frame_from_axis(ax0, perpendicular_foot(ax0, ax1));
    p.frame[1] = frame_from_axis(ax1, perpendicular_foot(ax1, ax2));
    p.frame[2] = frame_from_axis(ax2, perpendicular_foot(ax2, ax0));
    return p;
}

// glue slot (pa, ka) at global position La to slot (pb, kb); returns the
// global placement of pants b
Mat2 glue(const Mat2& La, const Pants& pa, int ka, const Pants& pb, int kb, double twist) {
    return La * pa.frame[ka] * kFlip * J(twist) * pb.frame[kb].inverse();
}

} // namespace

int fn_dimension(int genus) { return 3 * genus - 3; }

void FNCoords::validate() const {
    if (genus < 2) throw std::domain_error("FNCoords: genus must be >= 2");
    const std::size_t n = static_cast<std::size_t>(fn_dimension(genus));
    if (lengths.size() != n || twists.size() != n) {
        throw std::domain_error("FNCoords: expected " + std::to_string(n) + " length/twist pairs");
    }
    for (double l : lengths) {
        if (!(l > 0.0) || l > kMaxCuffLength || !std::isfinite(l)) {
            throw std::domain_error("FNCoords: cuff lengths must lie in (0, 50]");
        }
    }
    for (double t : twists) {
        if (!std::isfinite(t)) throw std::domain_error("FNCoords: twist not finite");
    }
}

FNCoords symmetric_thick_fn(int genus) {
    FNCoords fn;
    fn.genus = genus;
    fn.lengths.assign(fn_dimension(genus), 2.0);
    fn.twists.assign(fn_dimension(genus), 0.0);
    return fn;
}

grp::CurveWord cuff_word(int genus, int index) {
    if (index < 0 || index >= fn_dimension(genus)) {
        throw std::domain_error("cuff index out of range");
    }
    CurveWord w;
    w.genus = genus;
    auto commutator = [&](int handle) {
        const grp::Letter a = grp::make_letter(2 * handle, false);
        const grp::Letter b = grp::make_letter(2 * handle + 1, false);
        w.letters.push_back(a);
        w.letters.push_back(b);
        w.letters.push_back(-a);
        w.letters.push_back(-b);
    };
    if (index == 0) {
        commutator(0); // eta = [a1, b1]
    } else if (index <= genus) {
        w.letters.push_back(grp::make_letter(2 * (index - 1), false)); // a_i
    } else if (index <= 2 * genus - 1) {
        commutator(index - genus); // d_{j} = [a_j, b_j], j = index - g + 1 (0-based handle)
    } else {
        const int c = index - (2 * genus - 1); // chain curve e_c, c = 1..g-3
        for (int h = 0; h <= c; ++h) commutator(h);
    }
    return grp::normalize(w);
}

std::string cuff_name(int genus, int index) {
    if (index == 0) return "eta";
    if (index <= genus) return "alpha" + std::to_string(index);
    if (index <= 2 * genus - 1) return "d" + std::to_string(index - genus + 1);
    return "e" + std::to_string(index - (2 * genus - 1));
}

hyp::ScaledIsometry SurfaceRep::letter(grp::Letter l) const {
    const Mat2& m = gen[grp::generator_index(l)];
    return hyp::ScaledIsometry::from_matrix(l > 0 ? m : m.inverse());
}

hyp::ScaledIsometry SurfaceRep::evaluate(const CurveWord& w) const {
    hyp::ScaledIsometry acc = hyp::ScaledIsometry::identity();
    for (grp::Letter l : w.letters) {
        acc = hyp::compose(acc, letter(l));
    }
    return acc;
}

SurfaceRep build_representation(const FNCoords& fn) {
    fn.validate();
    const int g = fn.genus;

    const double l_eta = fn.lengths[0];
    auto alpha_len = [&](int i) { return fn.lengths[1 + i]; };         // handle i, 0-based
    auto alpha_tw = [&](int i) { return fn.twists[1 + i]; };
    // boundary curve of handle i (0-based): d_1 = eta; at genus 2 the two
    // handles share eta as their common boundary
    auto d_len = [&](int i) { return (i == 0 || g == 2) ? l_eta : fn.lengths[g + i]; };
    auto d_tw = [&](int i) { return (i == 0 || g == 2) ? fn.twists[0] : fn.twists[g + i]; };
    auto e_len = [&](int c) { return fn.lengths[2 * g + c]; }; // e_{c+1}, c 0-based
    auto e_tw = [&](int c) { return fn.twists[2 * g + c]; };

    // handle pants: slot 0 = boundary d_i, slots 1, 2 = the two copies of alpha_i
    std::vector<Pants> handle(g);
    for (int i = 0; i < g; ++i) {
        handle[i] = make_pants(d_len(i), alpha_len(i), alpha_len(i));
    }

    std::vector<Mat2> L(g, Mat2::identity()); // global placement of each handle pants

    if (g == 2) {
        // two handle pants glued directly along eta
        L[0] = Mat2::identity();
        L[1] = glue(L[0], handle[0], 0, handle[1], 0, d_tw(0));
    } else {
        // connector pants chain over the sphere with g holes
        const int nc = g - 2;
        std::vector<Pants> conn(nc);
        std::vector<Mat2> LK(nc, Mat2::identity());
        for (int c = 0; c < nc; ++c) {
            const double s0 = (c == 0) ? d_len(0) : e_len(c - 1);
            const double s1 = d_len(c + 1);
            const double s2 = (c == nc - 1) ? d_len(g - 1) : e_len(c);
            conn[c] = make_pants(s0, s1, s2);
        }
        LK[0] = Mat2::identity();
        for (int c = 1; c < nc; ++c) {
            LK[c] = glue(LK[c - 1], conn[c - 1], 2, conn[c], 0, e_tw(c - 1));
        }
        // handle i sits on connector slot: handle 0 -> (K0, slot0),
        // handle c+1 -> (Kc, slot1), handle g-1 -> (K_{nc-1}, slot2)
        L[0] = glue(LK[0], conn[0], 0, handle[0], 0, d_tw(0));
        for (int c = 0; c < nc; ++c) {
            L[c + 1] = glue(LK[c], conn[c], 1, handle[c + 1], 0, d_tw(c + 1));
        }
        L[g - 1] = glue(LK[nc - 1], conn[nc - 1], 2, handle[g - 1], 0, d_tw(g - 1));
    }

    SurfaceRep out;
    out.genus = g;
    out.fn = fn;
    out.gen.resize(2 * g);
    for (int i = 0; i < g; ++i) {
        const Pants& h = handle[i];
        const Mat2 a_local = h.cuff[1].inverse();
        const Mat2 b_local = (h.frame[1] * kFlip * J(alpha_tw(i)) * h.frame[2].inverse()).inverse();
        out.gen[2 * i] = L[i] * a_local * L[i].inverse();
        out.gen[2 * i + 1] = L[i] * b_local * L[i].inverse();
    }
    return out;
}

double geodesic_length(const SurfaceRep& rep, const CurveWord& w) {
    CurveWord n = grp::normalize(w);
    if (n.is_identity()) {
        throw std::domain_error("geodesic_length of the identity word");
    }
    return hyp::translation_length(rep.evaluate(n));
}

} // namespace minfill::rep
