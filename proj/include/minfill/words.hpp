#pragma once

#include <cstdlib>
#include <string>
#include <vector>

namespace minfill::grp {

// A letter is a nonzero int: +(k+1) is generator k, -(k+1) its inverse.
// Generators are ordered a1, b1, a2, b2, ..., a_g, b_g, so generator index
// 2i is a_{i+1} and 2i+1 is b_{i+1}.
using Letter = int;

inline Letter inverse_letter(Letter l) { return -l; }
inline int generator_index(Letter l) { return std::abs(l) - 1; }
inline Letter make_letter(int generator, bool inverted) {
    return inverted ? -(generator + 1) : generator + 1;
}

// Cyclic word in the genus-g surface group.  The empty word is the identity
// class.  Free-homotopy invariants treat `letters` as a cyclic sequence.
struct CurveWord {
    int genus = 2;
    std::vector<Letter> letters;

    bool is_identity() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }
};

// Text grammar: letters `a1 b1 ...`, inverses `A1 B1 ...`, whitespace
// separated.  Genus is inferred from the largest index (minimum 2) unless
// genus_override > 0.  Throws ParseError with the offending position.
CurveWord parse_word(const std::string& text, int genus_override = 0);
std::string word_to_string(const CurveWord& w);

// Free reduction plus cyclic reduction; the free-homotopy class is unchanged.
CurveWord normalize(CurveWord w);

// Shortest representative rel the surface-group relator: repeatedly replaces
// any cyclic subword that covers more than half of a cyclic rotation of
// [a1,b1]...[ag,bg]^{±1} by the shorter complementary piece, then re-reduces.
CurveWord dehn_shorten(CurveWord w);

CurveWord concat(const CurveWord& lhs, const CurveWord& rhs);
CurveWord concat_power(const CurveWord& base, int exponent);
CurveWord inverse(const CurveWord& w);

// Smallest rotational period of the cyclic letter sequence.
int cyclic_period(const CurveWord& w);
// w as root^power with root of minimal length (power = 1 for primitive w).
CurveWord primitive_root(const CurveWord& w, int& power_out);

bool cyclically_equal(const CurveWord& a, const CurveWord& b);
// Equal as unoriented free-homotopy classes at the word level (rotation or
// rotation of the inverse).
bool cyclically_equal_unoriented(const CurveWord& a, const CurveWord& b);

// Exponent sums over the 2g generators; all zero iff null-homologous.
std::vector<long long> exponent_sums(const CurveWord& w);

// i(gamma_{m,n}) = n^2 (2g-1) + 2mn - m for the standard two-parameter family.
long long self_intersection_formula(int g, long long m, long long n);

// Number of mapping-class-group orbits of unoriented separating simple closed
// curves on a genus-g surface with n punctures (requires 2 - 2g - n < 0).
long long separating_orbit_count(int g, int n);

// The relator [a1,b1]...[ag,bg] as a (non-cyclic) word.
std::vector<Letter> surface_relator(int genus);

// Dehn twist along one of the supported simple axes: a generator curve a_i /
// b_i, or the separating curve [a1,b1].  `along` must be simple; unsupported
// axes raise std::domain_error.
CurveWord apply_dehn_twist(const CurveWord& w, const CurveWord& along, int power);

} // namespace minfill::grp
