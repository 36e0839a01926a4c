#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nagata/annihilator.hpp"

namespace nagata {

/// Deterministic, platform-independent generator (splitmix64). Distribution
/// code is written out here so seeds reproduce bit-identically everywhere.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi], inclusive.
    long long bounded(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
};

/// a_0 X_0 + ... + a_n X_n + b_1 U_1 + ... + b_m U_m with exact coefficients,
/// x block first.
struct LinearForm {
    std::vector<Rat> coeffs;

    bool is_zero() const {
        for (const auto& c : coeffs)
            if (c != 0) return false;
        return true;
    }
};

inline LinearForm sum_of_x(int n_plus_1, int m) {
    LinearForm L;
    L.coeffs.assign(n_plus_1 + m, Rat(0));
    for (int i = 0; i < n_plus_1; ++i) L.coeffs[i] = 1;
    return L;
}

namespace detail {

/// L^k expanded over the support of L, with denominators cleared first
/// (a nonzero scalar on L does not move any rank).
inline std::vector<std::pair<Int, BiMonomial>> form_power(const LinearForm& L,
                                                          int n_plus_1, int m, int k) {
    if (static_cast<int>(L.coeffs.size()) != n_plus_1 + m)
        throw std::invalid_argument("linear form has wrong coefficient count");
    Int lcm(1);
    for (const auto& c : L.coeffs)
        if (c != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<int> supp;
    std::vector<Int> coeff;
    for (int v = 0; v < n_plus_1 + m; ++v) {
        if (L.coeffs[v] == 0) continue;
        supp.push_back(v);
        Rat scaled = L.coeffs[v] * Rat(lcm);
        coeff.push_back(scaled.get_num());
    }
    if (supp.empty()) throw std::invalid_argument("zero linear form");

    std::vector<std::pair<Int, BiMonomial>> out;
    for (const auto& e : enumerate_monomials(static_cast<int>(supp.size()), k)) {
        Int c = factorial(k);
        std::vector<int> x(n_plus_1, 0);
        std::vector<int> u(m, 0);
        for (size_t t = 0; t < supp.size(); ++t) {
            if (e.exps[t] == 0) continue;
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(),
                         factorial(e.exps[t]).get_mpz_t());
            Int p;
            mpz_pow_ui(p.get_mpz_t(), coeff[t].get_mpz_t(),
                       static_cast<unsigned long>(e.exps[t]));
            c *= p;
            if (supp[t] < n_plus_1)
                x[supp[t]] = e.exps[t];
            else
                u[supp[t] - n_plus_1] = e.exps[t];
        }
        out.emplace_back(std::move(c), BiMonomial{std::move(x), UMonomial{std::move(u)}});
    }
    return out;
}

inline Rat rat_pow(const Rat& base, int e) {
    Rat r(1);
    for (int t = 0; t < e; ++t) r *= base;
    return r;
}

inline Rat evaluate(const SPoly& p, const std::vector<Rat>& point, int n_plus_1) {
    Rat total(0);
    for (const auto& [mono, c] : p) {
        Rat term(c);
        for (int v = 0; v < n_plus_1; ++v)
            if (mono.xexps[v]) term *= rat_pow(point[v], mono.xexps[v]);
        for (int v = 0; v < mono.uexps.vars(); ++v)
            if (mono.uexps.exps[v]) term *= rat_pow(point[n_plus_1 + v], mono.uexps.exps[v]);
        total += term;
    }
    return total;
}

inline long long rational_rank(const std::vector<std::vector<Rat>>& a) {
    auto copy = a;
    return static_cast<long long>(rref(copy).size());
}

}  // namespace detail

struct RankCheck {
    int deg = 0;
    int k = 0;
    long long rank = 0;
    long long max_rank = 0;
    bool maximal() const { return rank == max_rank; }
};

struct HessianEvidence {
    int k = 0;
    long long size = 0;
    std::vector<long long> ranks;  // one per sampled point
    bool deficient_everywhere = false;
};

struct LefschetzReport {
    std::string property;  // "WLP" or "SLP"
    bool verdict = false;
    LinearForm form;  // the form checked, or the witness for SLP
    std::vector<RankCheck> checks;
    uint64_t seed = 0;
    int trials = 1;
    int witness_trial = -1;  // -1: no witness found
    std::vector<HessianEvidence> hessians;
    std::string note;
};

/// Exact rank of multiplication by L^k from A_deg to A_{deg+k}, with the
/// maximal possible value min(dim A_deg, dim A_{deg+k}). The map is realized
/// on the evaluation side: the row for an operator monomial b of total degree
/// deg is (L^k b)(f), and ranks are taken over those vectors.
inline std::pair<long long, long long> multiplication_rank(
    const NagataInput& in, const LinearForm& L, int k, int deg,
    const std::vector<long long>* hilb = nullptr) {
    const int d1 = in.d1, d2 = in.d2(), d = d1 + d2;
    if (k < 0 || deg < 0 || deg > d) throw std::out_of_range("degree out of range");
    if (deg + k > d) return {0, 0};  // target space is zero beyond the socle

    std::vector<long long> h_local;
    if (!hilb) {
        h_local = hilbert_vector(bigraded_table(build_face_model(in)));
        hilb = &h_local;
    }
    const long long max_rank = std::min((*hilb)[deg], (*hilb)[deg + k]);

    const auto lk = detail::form_power(L, in.n_plus_1(), in.m, k);
    std::vector<SPoly> rows;
    for (int i = std::max(0, deg - d2); i <= std::min(d1, deg); ++i) {
        for (const auto& beta : bimonomials(in.n_plus_1(), in.m, i, deg - i)) {
            std::vector<std::pair<Int, BiMonomial>> op;
            op.reserve(lk.size());
            for (const auto& [c, gamma] : lk) op.emplace_back(c, mul(gamma, beta));
            SPoly v = apply_to_f(in, op);
            if (!v.empty()) rows.push_back(std::move(v));
        }
    }
    std::map<BiMonomial, long long> col;
    for (const auto& r : rows)
        for (const auto& [mono, c] : r) col.emplace(mono, 0);
    long long idx = 0;
    for (auto& [mono, c] : col) c = idx++;

    ExactMatrix mat(static_cast<long long>(rows.size()), idx);
    for (long long r = 0; r < mat.rows; ++r)
        for (const auto& [mono, c] : rows[r]) mat.at(r, col.at(mono)) = c;
    return {rank(std::move(mat)), max_rank};
}

/// Multiplication by L must have maximal rank at every degree.
inline LefschetzReport check_wlp(const NagataInput& in, const LinearForm& L) {
    LefschetzReport rep;
    rep.property = "WLP";
    rep.form = L;
    const auto h = hilbert_vector(bigraded_table(build_face_model(in)));
    rep.verdict = true;
    for (int deg = 0; deg + 1 <= in.total_degree(); ++deg) {
        auto [r, mx] = multiplication_rank(in, L, 1, deg, &h);
        rep.checks.push_back({deg, 1, r, mx});
        if (r != mx) rep.verdict = false;
    }
    return rep;
}

/// Rank of the k-th Hessian of f at a point with n+m+1 rational coordinates
/// (x block first). The matrix is (alpha_p alpha_q)(f) over the monomial
/// basis of A_k, evaluated exactly. Full rank at any single point certifies
/// the Hessian determinant is not identically zero.
inline std::pair<long long, long long> hessian_rank(const NagataInput& in, int k,
                                                    const std::vector<Rat>& point) {
    const int d = in.total_degree();
    if (2 * k > d) throw std::out_of_range("Hessian order exceeds half the socle degree");
    if (static_cast<int>(point.size()) != in.n_plus_1() + in.m)
        throw std::invalid_argument("evaluation point has wrong coordinate count");

    const FaceModel model = build_face_model(in);
    std::vector<BasisElement> basis;
    for (int i = std::max(0, k - in.d2()); i <= std::min(in.d1, k); ++i) {
        auto part = basis_of(model, i, k - i);
        basis.insert(basis.end(), part.begin(), part.end());
    }
    const long long size = static_cast<long long>(basis.size());

    std::vector<std::vector<Rat>> hess(size, std::vector<Rat>(size, Rat(0)));
    for (long long p = 0; p < size; ++p) {
        for (long long q = p; q < size; ++q) {
            std::vector<std::pair<Int, BiMonomial>> prod;
            for (const auto& [cp, mp] : basis[p].terms)
                for (const auto& [cq, mq] : basis[q].terms)
                    prod.emplace_back(cp * cq, mul(mp, mq));
            const Rat v = detail::evaluate(apply_to_f(in, prod), point, in.n_plus_1());
            hess[p][q] = v;
            hess[q][p] = v;
        }
    }
    return {detail::rational_rank(hess), size};
}

namespace detail {
inline LinearForm random_form(SplitMix64& rng, int n_plus_1, int m) {
    LinearForm L;
    do {
        L.coeffs.clear();
        for (int v = 0; v < n_plus_1 + m; ++v)
            L.coeffs.emplace_back(static_cast<long>(rng.bounded(-9, 9)));
    } while (L.is_zero());
    return L;
}

inline std::vector<Rat> random_point(SplitMix64& rng, int n_plus_1, int m) {
    std::vector<Rat> p;
    for (int v = 0; v < n_plus_1 + m; ++v) {
        const long num = static_cast<long>(rng.bounded(1, 9)) *
                         (rng.bounded(0, 1) ? 1 : -1);
        const long den = static_cast<long>(rng.bounded(1, 9));
        Rat q(num, den);
        q.canonicalize();
        p.push_back(q);
    }
    return p;
}
}  // namespace detail

/// Samples seeded random forms and declares SLP as soon as one gives maximal
/// rank for every (degree, power) pair. When no witness is found, the rank of
/// each Hessian at seeded random points is reported as evidence; deficiency
/// at every sampled point is labeled as (probabilistic) evidence that the
/// Hessian determinant vanishes identically.
inline LefschetzReport check_slp(const NagataInput& in, int trials, uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be positive");
    LefschetzReport rep;
    rep.property = "SLP";
    rep.seed = seed;
    rep.trials = trials;
    const int d = in.total_degree();
    const auto h = hilbert_vector(bigraded_table(build_face_model(in)));

    SplitMix64 rng(seed);
    for (int trial = 0; trial < trials && !rep.verdict; ++trial) {
        LinearForm L = detail::random_form(rng, in.n_plus_1(), in.m);
        std::vector<RankCheck> checks;
        bool pass = true;
        for (int k = 1; k <= d && pass; ++k) {
            for (int deg = 0; deg + k <= d && pass; ++deg) {
                auto [r, mx] = multiplication_rank(in, L, k, deg, &h);
                checks.push_back({deg, k, r, mx});
                if (r != mx) pass = false;
            }
        }
        rep.form = L;
        rep.checks = std::move(checks);
        if (pass) {
            rep.verdict = true;
            rep.witness_trial = trial;
        }
    }
    if (!rep.verdict) {
        rep.note = "no witness found in " + std::to_string(trials) + " trials";
        SplitMix64 prng(seed ^ 0x5eed5eed5eed5eedULL);
        for (int k = 0; 2 * k <= d; ++k) {
            HessianEvidence ev;
            ev.k = k;
            bool all_deficient = true;
            for (int t = 0; t < trials; ++t) {
                auto point = detail::random_point(prng, in.n_plus_1(), in.m);
                auto [r, size] = hessian_rank(in, k, point);
                ev.size = size;
                ev.ranks.push_back(r);
                if (r == size) all_deficient = false;
            }
            ev.deficient_everywhere = all_deficient;
            rep.hessians.push_back(std::move(ev));
        }
    }
    return rep;
}

}  // namespace nagata
