#include "minfill/words.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "minfill/errors.hpp"

namespace minfill::grp {

namespace {

void check_alphabet(const CurveWord& w) {
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        const Letter l = w.letters[i];
        if (l == 0 || generator_index(l) >= 2 * w.genus) {
            throw ParseError("letter outside the genus-" + std::to_string(w.genus) + " alphabet", i);
        }
    }
}

std::vector<Letter> free_reduce(const std::vector<Letter>& in) {
    std::vector<Letter> out;
    out.reserve(in.size());
    for (Letter l : in) {
        if (!out.empty() && out.back() == inverse_letter(l)) {
            out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return out;
}

void cyclic_reduce(std::vector<Letter>& w) {
    std::size_t lo = 0, hi = w.size();
    while (hi - lo >= 2 && w[lo] == inverse_letter(w[hi - 1])) {
        ++lo;
        --hi;
    }
    if (lo > 0 || hi < w.size()) {
        w = std::vector<Letter>(w.begin() + lo, w.begin() + hi);
    }
}

std::vector<Letter> invert_sequence(const std::vector<Letter>& in) {
    std::vector<Letter> out(in.rbegin(), in.rend());
    for (Letter& l : out) l = inverse_letter(l);
    return out;
}

std::vector<Letter> cyclic_slice(const std::vector<Letter>& w, std::size_t start, std::size_t len) {
    std::vector<Letter> out;
    out.reserve(len);
    for (std::size_t k = 0; k < len; ++k) {
        out.push_back(w[(start + k) % w.size()]);
    }
    return out;
}

} // namespace

CurveWord parse_word(const std::string& text, int genus_override) {
    CurveWord w;
    std::vector<std::pair<Letter, std::size_t>> letters; // letter + source position
    int max_index = 0;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        const std::size_t tok = i;
        const char c = text[i];
        int within = -1;
        bool inverted = false;
        if (c == 'a' || c == 'b') {
            within = (c == 'a') ? 0 : 1;
        } else if (c == 'A' || c == 'B') {
            within = (c == 'A') ? 0 : 1;
            inverted = true;
        } else {
            throw ParseError(std::string("unexpected character '") + c + "' in word", tok);
        }
        ++i;
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw ParseError("generator letter must be followed by a handle index", tok);
        }
        int index = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            index = index * 10 + (text[i] - '0');
            ++i;
        }
        if (index < 1) {
            throw ParseError("handle index must be >= 1", tok);
        }
        max_index = std::max(max_index, index);
        letters.emplace_back(make_letter(2 * (index - 1) + within, inverted), tok);
    }
    w.genus = genus_override > 0 ? genus_override : std::max(2, max_index);
    for (auto& [l, pos] : letters) {
        if (generator_index(l) >= 2 * w.genus) {
            throw ParseError("handle index exceeds the requested genus", pos);
        }
        w.letters.push_back(l);
    }
    return w;
}

std::string word_to_string(const CurveWord& w) {
    std::string out;
    for (Letter l : w.letters) {
        if (!out.empty()) out += ' ';
        const int gi = generator_index(l);
        const char base = (gi % 2 == 0) ? 'a' : 'b';
        out += (l < 0) ? static_cast<char>(std::toupper(base)) : base;
        out += std::to_string(gi / 2 + 1);
    }
    return out;
}

CurveWord normalize(CurveWord w) {
    check_alphabet(w);
    w.letters = free_reduce(w.letters);
    cyclic_reduce(w.letters);
    return w;
}

std::vector<Letter> surface_relator(int genus) {
    std::vector<Letter> r;
    r.reserve(4 * genus);
    for (int h = 0; h < genus; ++h) {
        const Letter a = make_letter(2 * h, false);
        const Letter b = make_letter(2 * h + 1, false);
        r.push_back(a);
        r.push_back(b);
        r.push_back(inverse_letter(a));
        r.push_back(inverse_letter(b));
    }
    return r;
}

namespace {

using PatternTable = std::map<std::vector<Letter>, std::vector<Letter>>;

// pattern (more than half of a relator rotation) -> shorter complement
const PatternTable& pattern_table(int g) {
    static std::mutex mu;
    static std::map<int, PatternTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(g);
    if (it != cache.end()) return it->second;
    PatternTable table;
    const std::size_t rl = 4 * static_cast<std::size_t>(g);
    const std::vector<Letter> rel = surface_relator(g);
    for (int sign = 0; sign < 2; ++sign) {
        const std::vector<Letter> base = sign == 0 ? rel : invert_sequence(rel);
        for (std::size_t rot = 0; rot < rl; ++rot) {
            const std::vector<Letter> R = cyclic_slice(base, rot, rl);
            for (std::size_t len = 2 * g + 1; len <= rl; ++len) {
                std::vector<Letter> pat(R.begin(), R.begin() + len);
                std::vector<Letter> rest(R.begin() + len, R.end());
                table[std::move(pat)] = invert_sequence(rest);
            }
        }
    }
    return cache.emplace(g, std::move(table)).first->second;
}

} // namespace

CurveWord dehn_shorten(CurveWord w) {
    w = normalize(std::move(w));
    const int g = w.genus;
    const std::size_t rl = 4 * static_cast<std::size_t>(g);
    const PatternTable& table = pattern_table(g);

    bool changed = true;
    while (changed) {
        changed = false;
        const std::size_t L = w.letters.size();
        if (L < 2 * static_cast<std::size_t>(g) + 1) break;
        for (std::size_t start = 0; start < L && !changed; ++start) {
            const std::size_t max_len = std::min(rl, L);
            for (std::size_t len = max_len; len >= 2 * g + 1 && !changed; --len) {
                auto it = table.find(cyclic_slice(w.letters, start, len));
                if (it == table.end()) continue;
                std::vector<Letter> next = it->second;
                for (std::size_t k = len; k < L; ++k) {
                    next.push_back(w.letters[(start + k) % L]);
                }
                w.letters = std::move(next);
                w = normalize(std::move(w));
                changed = true;
            }
        }
    }
    return w;
}

CurveWord concat(const CurveWord& lhs, const CurveWord& rhs) {
    if (lhs.genus != rhs.genus) {
        throw std::domain_error("cannot concatenate words of different genus");
    }
    CurveWord out;
    out.genus = lhs.genus;
    out.letters = lhs.letters;
    out.letters.insert(out.letters.end(), rhs.letters.begin(), rhs.letters.end());
    return normalize(std::move(out));
}

CurveWord concat_power(const CurveWord& base, int exponent) {
    if (exponent < 1) {
        throw std::domain_error("concat_power exponent must be >= 1");
    }
    if (base.is_identity()) {
        throw std::domain_error("concat_power of the identity word");
    }
    CurveWord out;
    out.genus = base.genus;
    out.letters.reserve(base.letters.size() * exponent);
    for (int k = 0; k < exponent; ++k) {
        out.letters.insert(out.letters.end(), base.letters.begin(), base.letters.end());
    }
    return normalize(std::move(out));
}

CurveWord inverse(const CurveWord& w) {
    CurveWord out;
    out.genus = w.genus;
    out.letters = invert_sequence(w.letters);
    return out;
}

int cyclic_period(const CurveWord& w) {
    const int L = static_cast<int>(w.letters.size());
    for (int d = 1; d <= L; ++d) {
        if (L % d != 0) continue;
        bool periodic = true;
        for (int k = 0; k < L && periodic; ++k) {
            periodic = w.letters[k] == w.letters[(k + d) % L];
        }
        if (periodic) return d;
    }
    return L;
}

CurveWord primitive_root(const CurveWord& w, int& power_out) {
    if (w.is_identity()) {
        throw std::domain_error("identity word has no primitive root");
    }
    const int d = cyclic_period(w);
    power_out = static_cast<int>(w.letters.size()) / d;
    CurveWord root;
    root.genus = w.genus;
    root.letters.assign(w.letters.begin(), w.letters.begin() + d);
    return root;
}

bool cyclically_equal(const CurveWord& a, const CurveWord& b) {
    if (a.genus != b.genus || a.letters.size() != b.letters.size()) return false;
    const std::size_t L = a.letters.size();
    if (L == 0) return true;
    for (std::size_t r = 0; r < L; ++r) {
        bool eq = true;
        for (std::size_t k = 0; k < L && eq; ++k) {
            eq = a.letters[k] == b.letters[(k + r) % L];
        }
        if (eq) return true;
    }
    return false;
}

bool cyclically_equal_unoriented(const CurveWord& a, const CurveWord& b) {
    return cyclically_equal(a, b) || cyclically_equal(a, inverse(b));
}

std::vector<long long> exponent_sums(const CurveWord& w) {
    std::vector<long long> sums(2 * w.genus, 0);
    for (Letter l : w.letters) {
        sums[generator_index(l)] += (l > 0) ? 1 : -1;
    }
    return sums;
}

long long self_intersection_formula(int g, long long m, long long n) {
    if (g < 2) throw std::domain_error("self_intersection_formula requires genus >= 2");
    if (m < 0 || n < 1) throw std::domain_error("self_intersection_formula requires m >= 0, n >= 1");
    return n * n * (2 * g - 1) + 2 * m * n - m;
}

long long separating_orbit_count(int g, int n) {
    if (g < 0 || n < 0 || 2 - 2 * g - n >= 0) {
        throw std::domain_error("separating_orbit_count requires 2 - 2g - n < 0");
    }
    if (g >= 2 && n == 0) return g / 2;
    if (g == 0) return n / 2 - 1;
    return (n - 1) + static_cast<long long>(g / 2) * (n + 1);
}

namespace {

void append_power(std::vector<Letter>& out, Letter l, int p) {
    const Letter use = p >= 0 ? l : inverse_letter(l);
    for (int k = 0; k < std::abs(p); ++k) out.push_back(use);
}

} // namespace

CurveWord apply_dehn_twist(const CurveWord& w, const CurveWord& along, int power) {
    CurveWord axis = normalize(along);
    if (axis.genus != w.genus) {
        throw std::domain_error("twist axis has the wrong genus");
    }
    if (power == 0) return normalize(w);

    CurveWord eta;
    eta.genus = w.genus;
    eta.letters = {1, 2, -1, -2}; // [a1, b1]

    CurveWord out;
    out.genus = w.genus;

    if (axis.size() == 1) {
        const int gi = generator_index(axis.letters[0]);
        const bool axis_is_a = (gi % 2 == 0);
        const Letter partner = make_letter(axis_is_a ? gi + 1 : gi - 1, false);
        const Letter axis_letter = make_letter(gi, false);
        // T_{a}: b -> b a^p ;  T_{b}: a -> a b^p ; everything else fixed.
        for (Letter l : w.letters) {
            if (l == partner) {
                out.letters.push_back(l);
                append_power(out.letters, axis_letter, power);
            } else if (l == inverse_letter(partner)) {
                append_power(out.letters, axis_letter, -power);
                out.letters.push_back(l);
            } else {
                out.letters.push_back(l);
            }
        }
        return normalize(std::move(out));
    }

    if (cyclically_equal_unoriented(axis, eta)) {
        // conjugate every letter of handles 2..g by eta^p
        for (Letter l : w.letters) {
            if (generator_index(l) >= 2) {
                for (int k = 0; k < std::abs(power); ++k) {
                    const auto& src = power > 0 ? eta.letters : inverse(eta).letters;
                    out.letters.insert(out.letters.end(), src.begin(), src.end());
                }
                out.letters.push_back(l);
                for (int k = 0; k < std::abs(power); ++k) {
                    const auto& src = power > 0 ? inverse(eta).letters : eta.letters;
                    out.letters.insert(out.letters.end(), src.begin(), src.end());
                }
            } else {
                out.letters.push_back(l);
            }
        }
        return normalize(std::move(out));
    }

    throw std::domain_error("twist axis must be a generator curve or the separating curve [a1,b1]");
}

} // namespace minfill::grp
