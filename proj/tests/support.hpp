#pragma once

// Shared fixtures and independent brute-force oracles for the test suites.
// Everything here recomputes results from first principles (enumeration,
// repeated single derivatives, pairwise divisibility) so the library under
// test is never used to check itself.

#include <algorithm>
#include <vector>

#include "nagata/nagata.hpp"

namespace testsupport {

using namespace nagata;

inline UMonomial umono(std::vector<int> e) { return UMonomial{std::move(e)}; }

// ---- fixed instances --------------------------------------------------------

/// Eight square-free cubic facets on six vertices (the octahedron boundary).
inline NagataInput octahedron(int d1,
                              PairingAction action = PairingAction::Contraction) {
    NagataInput in;
    in.d1 = d1;
    in.m = 6;
    in.action = action;
    in.facets = {
        umono({1, 1, 1, 0, 0, 0}), umono({1, 1, 0, 1, 0, 0}),
        umono({1, 0, 0, 1, 1, 0}), umono({1, 0, 1, 0, 1, 0}),
        umono({0, 1, 1, 0, 0, 1}), umono({0, 1, 0, 1, 0, 1}),
        umono({0, 0, 0, 1, 1, 1}), umono({0, 0, 1, 0, 1, 1}),
    };
    return in;
}

/// x0^d*u1*u2 + x1^d*u1^2 + x2^d*u2*u3: the smallest non-square-free case.
inline NagataInput example_two(int d1,
                               PairingAction action = PairingAction::Contraction) {
    NagataInput in;
    in.d1 = d1;
    in.m = 3;
    in.action = action;
    in.facets = {umono({1, 1, 0}), umono({2, 0, 0}), umono({0, 1, 1})};
    return in;
}

/// x0*u1^3 + x1*u1^2*u2 + x2*u1*u2^2 + x3*u2^3: more summands than degree-d1
/// x-monomials, so the first Hessian degenerates.
inline NagataInput gr_no_slp(PairingAction action = PairingAction::Contraction) {
    NagataInput in;
    in.d1 = 1;
    in.m = 2;
    in.action = action;
    in.facets = {umono({3, 0}), umono({2, 1}), umono({1, 2}), umono({0, 3})};
    return in;
}

// ---- oracles -----------------------------------------------------------------

/// Degree-j divisors of g by filtering the full degree-j enumeration.
inline std::vector<UMonomial> brute_divisors(const UMonomial& g, int j) {
    std::vector<UMonomial> out;
    for (const auto& w : enumerate_monomials(g.vars(), j))
        if (divides(w, g)) out.push_back(w);
    return out;
}

/// Covering relations of the divisibility poset, counted pairwise.
inline long long brute_cover_edges(const FaceModel& model) {
    std::vector<UMonomial> nodes;
    for (const auto& level : model.divisor_sets)
        nodes.insert(nodes.end(), level.begin(), level.end());
    long long edges = 0;
    for (const auto& a : nodes)
        for (const auto& b : nodes)
            if (b.degree() == a.degree() + 1 && divides(a, b)) ++edges;
    return edges;
}

/// d^e/dt^e applied one derivative at a time; the resulting coefficient of
/// op on target, or 0 when the target is wiped out.
inline Int brute_diff_coeff(const UMonomial& op, const UMonomial& target) {
    Int coeff(1);
    std::vector<int> t = target.exps;
    for (int v = 0; v < op.vars(); ++v) {
        for (int step = 0; step < op.exps[v]; ++step) {
            if (t[v] == 0) return Int(0);
            coeff *= t[v];
            --t[v];
        }
    }
    return coeff;
}

/// Is w a non-face that is minimal (all maximal proper divisors are faces)?
/// Direct restatement of the definition, used against minimal_nonfaces.
inline bool brute_is_minimal_nonface(const FaceModel& model, const UMonomial& w) {
    if (w.degree() < 1 || w.degree() > model.d2()) return false;
    auto divides_some_facet = [&](const UMonomial& v) {
        for (const auto& g : model.input.facets)
            if (divides(v, g)) return true;
        return false;
    };
    if (divides_some_facet(w)) return false;
    for (int k = 0; k < w.vars(); ++k) {
        if (w.exps[k] == 0) continue;
        UMonomial v = w;
        --v.exps[k];
        if (!divides_some_facet(v)) return false;
    }
    return true;
}

// ---- randomized corpus --------------------------------------------------------

/// Distinct degree-d2 facets sampled by a seeded Fisher-Yates prefix.
inline NagataInput random_input(SplitMix64& rng, int m, int d2, int n_plus_1, int d1,
                                PairingAction action = PairingAction::Contraction) {
    auto all = enumerate_monomials(m, d2);
    for (size_t k = 0; k + 1 < all.size(); ++k) {
        size_t j = k + static_cast<size_t>(rng.bounded(0, static_cast<long long>(all.size() - k - 1)));
        std::swap(all[k], all[j]);
    }
    NagataInput in;
    in.d1 = d1;
    in.m = m;
    in.action = action;
    in.facets.assign(all.begin(), all.begin() + n_plus_1);
    std::sort(in.facets.begin(), in.facets.end());
    return in;
}

/// The corpus shared by the completeness/property suites: m <= 5,
/// d2 in {2,3,4}, n+1 <= 6, d1 <= 3.
inline std::vector<NagataInput> random_corpus(int count, uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<NagataInput> out;
    while (static_cast<int>(out.size()) < count) {
        const int m = static_cast<int>(rng.bounded(1, 5));
        const int d2 = static_cast<int>(rng.bounded(2, 4));
        const long long total = binomial(m + d2 - 1, d2).get_si();
        const int n1 = static_cast<int>(rng.bounded(1, std::min<long long>(6, total)));
        const int d1 = static_cast<int>(rng.bounded(1, 3));
        out.push_back(random_input(rng, m, d2, n1, d1));
    }
    return out;
}

/// Corpus for the weak-Lefschetz claim: d1 >= d2 and n+1 >= m >= 2.
inline std::vector<NagataInput> wlp_corpus(int count, uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<NagataInput> out;
    while (static_cast<int>(out.size()) < count) {
        const int m = static_cast<int>(rng.bounded(2, 4));
        const int d2 = static_cast<int>(rng.bounded(2, 3));
        const long long total = binomial(m + d2 - 1, d2).get_si();
        const int n1 =
            static_cast<int>(rng.bounded(m, std::min<long long>(6, total)));
        const int d1 = static_cast<int>(rng.bounded(d2, 4));
        out.push_back(random_input(rng, m, d2, n1, d1));
    }
    return out;
}

}  // namespace testsupport
