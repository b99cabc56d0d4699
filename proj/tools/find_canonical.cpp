// Search for the canonical curve pair of a genus-g surface: a minimal filling
// curve gamma0 (self-intersection 2g-1, complement a disc) and a based
// representative of the separating curve eta = [a1,b1] meeting it twice, such
// that the two-parameter family eta^m gamma0^n reproduces the intersection
// formula n^2(2g-1) + 2mn - m on a verification grid.
//
// The found words are printed as JSON; the repository freezes them in
// data/canonical_curves.json and the test suite re-verifies them.
#include <cstdio>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "minfill/intersection.hpp"
#include "minfill/words.hpp"

using namespace minfill;
using grp::CurveWord;
using grp::Letter;

namespace {

CurveWord eta_word(int genus) {
    CurveWord w;
    w.genus = genus;
    w.letters = {1, 2, -1, -2};
    return w;
}

bool is_canonical_form(const CurveWord& w) {
    // smallest among all rotations of w and its inverse
    const auto& v = w.letters;
    const std::size_t L = v.size();
    auto less_rot = [&](const std::vector<Letter>& seq, std::size_t r) {
        for (std::size_t k = 0; k < L; ++k) {
            const Letter x = seq[(r + k) % L];
            if (x < v[k]) return true;
            if (x > v[k]) return false;
        }
        return false;
    };
    for (std::size_t r = 0; r < L; ++r) {
        if (r > 0 && less_rot(v, r)) return false;
    }
    const auto inv = grp::inverse(w).letters;
    for (std::size_t r = 0; r < L; ++r) {
        if (less_rot(inv, r)) return false;
    }
    return true;
}

bool uses_all_handles(const CurveWord& w) {
    std::vector<char> seen(w.genus, 0);
    for (Letter l : w.letters) seen[grp::generator_index(l) / 2] = 1;
    for (char c : seen) {
        if (!c) return false;
    }
    return true;
}

// family word from explicit based representatives
CurveWord family_from(const CurveWord& eta_rep, const CurveWord& gamma0_rep, int m, int n) {
    CurveWord w;
    w.genus = eta_rep.genus;
    for (int k = 0; k < m; ++k) {
        w.letters.insert(w.letters.end(), eta_rep.letters.begin(), eta_rep.letters.end());
    }
    for (int k = 0; k < n; ++k) {
        w.letters.insert(w.letters.end(), gamma0_rep.letters.begin(), gamma0_rep.letters.end());
    }
    return grp::normalize(w);
}

bool family_grid_ok(const CurveWord& eta_rep, const CurveWord& gamma0_rep, int mmax, int nmax) {
    const int g = eta_rep.genus;
    for (int m = 0; m <= mmax; ++m) {
        for (int n = 1; n <= nmax; ++n) {
            const CurveWord w = family_from(eta_rep, gamma0_rep, m, n);
            long long want = grp::self_intersection_formula(g, m, n);
            long long got;
            try {
                got = grp::self_intersection_oracle(w);
            } catch (const std::exception&) {
                return false;
            }
            if (m == 0 && n > 1) {
                // power rows carry the extra n-1 closing crossings
                want = static_cast<long long>(n) * n * (2 * g - 1) + (n - 1);
            }
            if (got != want) return false;
        }
    }
    return true;
}

// all conjugates q w q^{-1} for |q| <= qlen, normalized, deduplicated
std::vector<CurveWord> short_conjugates(const CurveWord& w, int qlen) {
    std::vector<CurveWord> out;
    std::vector<std::vector<Letter>> qs = {{}};
    for (int len = 1; len <= qlen; ++len) {
        std::vector<std::vector<Letter>> next;
        for (const auto& q : qs) {
            if (static_cast<int>(q.size()) != len - 1) continue;
            for (int l = 1; l <= 2 * w.genus; ++l) {
                for (int s = 0; s < 2; ++s) {
                    const Letter letter = s == 0 ? l : -l;
                    if (!q.empty() && q.back() == -letter) continue;
                    auto nq = q;
                    nq.push_back(letter);
                    next.push_back(nq);
                }
            }
        }
        qs.insert(qs.end(), next.begin(), next.end());
    }
    for (const auto& q : qs) {
        CurveWord c;
        c.genus = w.genus;
        c.letters = q;
        for (Letter l : w.letters) c.letters.push_back(l);
        for (auto it = q.rbegin(); it != q.rend(); ++it) c.letters.push_back(-*it);
        // conjugates are compared as based words: reduce freely but not cyclically
        bool dup = false;
        for (const auto& prev : out) {
            if (prev.letters == c.letters) dup = true;
        }
        if (!dup) out.push_back(c);
    }
    return out;
}

struct Found {
    CurveWord gamma0;
    CurveWord eta_rep;
};

long long stage_i = 0, stage_fill = 0, stage_pair = 0;

bool try_candidate(const CurveWord& cand, int genus, Found& out) {
    const long long target = 2 * genus - 1;
    try {
        if (grp::self_intersection_oracle(cand) != target) return false;
        ++stage_i;
        if (!grp::is_filling(cand)) return false;
        ++stage_fill;
        if (grp::pair_intersection_oracle(cand, eta_word(genus)) != 2) return false;
        ++stage_pair;
    } catch (const std::exception&) {
        return false;
    }
    // search for based representatives making the family formula work
    std::vector<CurveWord> rotations;
    for (std::size_t r = 0; r < cand.letters.size(); ++r) {
        CurveWord rot;
        rot.genus = genus;
        for (std::size_t k = 0; k < cand.letters.size(); ++k) {
            rot.letters.push_back(cand.letters[(r + k) % cand.letters.size()]);
        }
        rotations.push_back(rot);
        rotations.push_back(grp::inverse(rot));
    }
    const std::vector<CurveWord> etas = short_conjugates(eta_word(genus), 2);
    const long long want11 = grp::self_intersection_formula(genus, 1, 1);
    for (const CurveWord& g0 : rotations) {
        for (const CurveWord& e : etas) {
            try {
                if (grp::self_intersection_oracle(family_from(e, g0, 1, 1)) != want11) continue;
            } catch (const std::exception&) {
                continue;
            }
            if (!family_grid_ok(e, g0, 2, 2)) continue;
            if (!family_grid_ok(e, g0, 3, 3)) continue;
            out.gamma0 = g0;
            out.eta_rep = e;
            return true;
        }
    }
    return false;
}

// gamma0 meets eta twice iff it has one arc per side of eta: enumerate
// two-block words u(a1,b1) v(a2,b2)
bool block_search(int max_len, Found& out) {
    const int genus = 2;
    auto reduced_words = [&](Letter base_a, Letter base_b, int len) {
        std::vector<std::vector<Letter>> all;
        std::vector<Letter> alphabet = {base_a, -base_a, base_b, -base_b};
        std::vector<Letter> cur;
        std::vector<int> idx(len, -1);
        int depth = 0;
        cur.resize(len);
        while (depth >= 0) {
            ++idx[depth];
            if (idx[depth] >= 4) {
                idx[depth] = -1;
                --depth;
                continue;
            }
            const Letter cand = alphabet[idx[depth]];
            if (depth > 0 && cur[depth - 1] == -cand) continue;
            cur[depth] = cand;
            if (depth + 1 < len) {
                ++depth;
                continue;
            }
            all.push_back(cur);
        }
        return all;
    };

    for (int len = 6; len <= max_len; ++len) {
        fprintf(stderr, "block search, total length %d...\n", len);
        long long tested = 0;
        for (int p = 2; p + 2 <= len; ++p) {
            const int q = len - p;
            const auto us = reduced_words(1, 2, p);
            const auto vs = reduced_words(3, 4, q);
            for (const auto& u : us) {
                for (const auto& v : vs) {
                    CurveWord w;
                    w.genus = genus;
                    w.letters = u;
                    w.letters.insert(w.letters.end(), v.begin(), v.end());
                    if (grp::cyclic_period(w) != len) continue;
                    if (grp::dehn_shorten(w).size() != static_cast<std::size_t>(len)) continue;
                    ++tested;
                    if (try_candidate(w, genus, out)) {
                        fprintf(stderr, "found at length %d after %lld candidates\n",
                                len, tested);
                        return true;
                    }
                }
            }
        }
        fprintf(stderr, "  length %d: %lld tested (i=%lld fill=%lld pair=%lld)\n",
                len, tested, stage_i, stage_fill, stage_pair);
    }
    return false;
}

bool exhaustive_search(int genus, int max_len, Found& out) {
    const int nletters = 4 * genus;
    for (int len = 4; len <= max_len; ++len) {
        fprintf(stderr, "genus %d: scanning length %d...\n", genus, len);
        std::vector<Letter> word(len);
        long long tested = 0;
        // DFS over cyclically reduced words
        std::vector<int> stack{0};
        std::vector<Letter> alphabet;
        for (int l = 1; l <= 2 * genus; ++l) {
            alphabet.push_back(l);
            alphabet.push_back(-l);
        }
        std::vector<int> idx(len, -1);
        int depth = 0;
        while (depth >= 0) {
            ++idx[depth];
            if (idx[depth] >= nletters) {
                idx[depth] = -1;
                --depth;
                continue;
            }
            const Letter cand = alphabet[idx[depth]];
            if (depth > 0 && word[depth - 1] == -cand) continue;
            word[depth] = cand;
            if (depth + 1 < len) {
                ++depth;
                continue;
            }
            if (word[len - 1] == -word[0]) continue;
            CurveWord w;
            w.genus = genus;
            w.letters = word;
            if (!is_canonical_form(w)) continue;
            if (!uses_all_handles(w)) continue;
            if (grp::cyclic_period(w) != len) continue;
            if (grp::dehn_shorten(w).size() != static_cast<std::size_t>(len)) continue;
            ++tested;
            if (try_candidate(w, genus, out)) {
                fprintf(stderr, "found at length %d after %lld candidates\n", len, tested);
                return true;
            }
        }
        fprintf(stderr, "  length %d: %lld candidates, no hit (i=%lld fill=%lld pair=%lld)\n",
                len, tested, stage_i, stage_fill, stage_pair);
    }
    return false;
}

// genus g >= 3: extend a known genus-(g-1) solution by inserting short
// handle-g subwords at every position
bool extension_search(int genus, const Found& base, Found& out) {
    const Letter ag = grp::make_letter(2 * (genus - 1), false);
    const Letter bg = grp::make_letter(2 * (genus - 1) + 1, false);
    std::vector<std::vector<Letter>> inserts;
    for (Letter x : {ag, -ag, bg, -bg}) {
        for (Letter y : {ag, -ag, bg, -bg}) {
            if (grp::generator_index(x) == grp::generator_index(y) && x == -y) continue;
            inserts.push_back({x, y});
            for (Letter z : {ag, -ag, bg, -bg}) {
                if (grp::generator_index(y) == grp::generator_index(z) && y == -z) continue;
                inserts.push_back({x, y, z});
                for (Letter u : {ag, -ag, bg, -bg}) {
                    if (grp::generator_index(z) == grp::generator_index(u) && z == -u) continue;
                    inserts.push_back({x, y, z, u});
                }
            }
        }
    }
    const std::vector<Letter>& g0 = base.gamma0.letters;
    for (std::size_t pos = 0; pos <= g0.size(); ++pos) {
        for (const auto& ins : inserts) {
            CurveWord cand;
            cand.genus = genus;
            cand.letters.assign(g0.begin(), g0.begin() + pos);
            cand.letters.insert(cand.letters.end(), ins.begin(), ins.end());
            cand.letters.insert(cand.letters.end(), g0.begin() + pos, g0.end());
            cand = grp::normalize(cand);
            if (cand.size() != g0.size() + ins.size()) continue;
            if (try_candidate(cand, genus, out)) return true;
        }
    }
    return false;
}

} // namespace

int main(int argc, char** argv) {
    int genus = argc > 1 ? std::atoi(argv[1]) : 2;
    int max_len = argc > 2 ? std::atoi(argv[2]) : 10;

    Found f2;
    if (!block_search(max_len, f2)) {
        fprintf(stderr, "no genus-2 canonical pair up to length %d\n", max_len);
        return 1;
    }
    printf("\"genus2\": {\"gamma0\": \"%s\", \"eta\": \"%s\"}\n",
           grp::word_to_string(f2.gamma0).c_str(), grp::word_to_string(f2.eta_rep).c_str());
    if (genus < 3) return 0;

    Found prev = f2;
    for (int g = 3; g <= genus; ++g) {
        Found fg;
        CurveWord lifted = prev.gamma0;
        lifted.genus = g; // same letters, bigger alphabet
        Found base{lifted, eta_word(g)};
        if (!extension_search(g, base, fg)) {
            fprintf(stderr, "no genus-%d extension found\n", g);
            return 1;
        }
        printf("\"genus%d\": {\"gamma0\": \"%s\", \"eta\": \"%s\"}\n", g,
               grp::word_to_string(fg.gamma0).c_str(), grp::word_to_string(fg.eta_rep).c_str());
        prev = fg;
    }
    return 0;
}
