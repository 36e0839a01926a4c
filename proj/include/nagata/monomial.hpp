#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "nagata/arith.hpp"

namespace nagata {

/// Monomial in the u-variables, stored as its exponent vector.
/// exps[k] is the exponent of u_{k+1}; the ambient variable count is
/// exps.size() and must agree between operands.
struct UMonomial {
    std::vector<int> exps;

    UMonomial() = default;
    explicit UMonomial(std::vector<int> e) : exps(std::move(e)) {}

    int vars() const { return static_cast<int>(exps.size()); }
    int degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }
    bool is_one() const { return degree() == 0; }

    friend bool operator==(const UMonomial&, const UMonomial&) = default;
};

/// Total order used for every enumeration and serialization in the library:
/// graded lexicographic with u1 > u2 > ... > um, listed from the top. Degree
/// first; within a degree u1^d comes before u1^{d-1}u2, and so on. Stable
/// across runs by construction.
inline std::strong_ordering mono_order(const UMonomial& a, const UMonomial& b) {
    if (int c = a.degree() - b.degree(); c != 0)
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.exps > b.exps) return std::strong_ordering::less;
    if (b.exps > a.exps) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

inline bool operator<(const UMonomial& a, const UMonomial& b) {
    return mono_order(a, b) == std::strong_ordering::less;
}

inline void check_same_ambient(const UMonomial& a, const UMonomial& b) {
    if (a.vars() != b.vars())
        throw std::invalid_argument("monomial ambient dimension mismatch: " +
                                    std::to_string(a.vars()) + " vs " +
                                    std::to_string(b.vars()));
}

/// a | b componentwise.
inline bool divides(const UMonomial& a, const UMonomial& b) {
    check_same_ambient(a, b);
    for (int k = 0; k < a.vars(); ++k)
        if (a.exps[k] > b.exps[k]) return false;
    return true;
}

inline UMonomial gcd(const UMonomial& a, const UMonomial& b) {
    check_same_ambient(a, b);
    UMonomial g;
    g.exps.resize(a.exps.size());
    for (int k = 0; k < a.vars(); ++k) g.exps[k] = std::min(a.exps[k], b.exps[k]);
    return g;
}

inline UMonomial mul(const UMonomial& a, const UMonomial& b) {
    check_same_ambient(a, b);
    UMonomial p = a;
    for (int k = 0; k < b.vars(); ++k) p.exps[k] += b.exps[k];
    return p;
}

/// b / a; requires divides(a, b).
inline UMonomial quotient(const UMonomial& b, const UMonomial& a) {
    check_same_ambient(a, b);
    UMonomial q = b;
    for (int k = 0; k < a.vars(); ++k) {
        q.exps[k] -= a.exps[k];
        if (q.exps[k] < 0) throw std::invalid_argument("quotient of non-divisor");
    }
    return q;
}

namespace detail {
inline void enumerate_rec(int m, int d, int pos, std::vector<int>& cur,
                          std::vector<UMonomial>& out) {
    if (pos == m - 1) {
        cur[pos] = d;
        out.emplace_back(cur);
        cur[pos] = 0;
        return;
    }
    for (int e = d; e >= 0; --e) {
        cur[pos] = e;
        enumerate_rec(m, d - e, pos + 1, cur, out);
    }
    cur[pos] = 0;
}
}  // namespace detail

/// All C(m+d-1, d) degree-d monomials in m variables, strictly increasing in
/// mono_order.
inline std::vector<UMonomial> enumerate_monomials(int m, int d) {
    if (m < 0 || d < 0) throw std::invalid_argument("negative enumeration bounds");
    if (m == 0) {
        if (d > 0)
            throw ValidationError("cannot enumerate positive-degree monomials in 0 variables");
        return {UMonomial{}};
    }
    std::vector<UMonomial> out;
    std::vector<int> cur(m, 0);
    detail::enumerate_rec(m, d, 0, cur, out);
    return out;
}

/// All degree-j divisors of g, in mono_order. Empty when j > deg g.
inline std::vector<UMonomial> divisors_of_degree(const UMonomial& g, int j) {
    if (j < 0) throw std::invalid_argument("negative degree");
    std::vector<UMonomial> out;
    if (j > g.degree()) return out;
    const int m = g.vars();
    std::vector<int> cur(m, 0);
    // depth-first over exponents bounded by g, same visit order as
    // enumerate_monomials so the output is already sorted
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (pos == m) return;
        int avail = 0;
        for (int k = pos; k < m; ++k) avail += g.exps[k];
        if (avail < remaining) return;
        for (int e = std::min(g.exps[pos], remaining); e >= 0; --e) {
            cur[pos] = e;
            self(self, pos + 1, remaining - e);
            cur[pos] = 0;
        }
    };
    rec(rec, 0, j);
    std::sort(out.begin(), out.end());
    return out;
}

/// Variable indices (0-based) with positive exponent.
inline std::vector<int> support(const UMonomial& g) {
    std::vector<int> s;
    for (int k = 0; k < g.vars(); ++k)
        if (g.exps[k] > 0) s.push_back(k);
    return s;
}

inline bool square_free(const UMonomial& g) {
    return std::all_of(g.exps.begin(), g.exps.end(), [](int e) { return e <= 1; });
}

/// Render with a variable prefix; base is the index of the first variable
/// (x-variables are 0-based, u-variables 1-based).
inline std::string mono_str(const UMonomial& g, const std::string& prefix, int base) {
    std::string s;
    for (int k = 0; k < g.vars(); ++k) {
        if (g.exps[k] == 0) continue;
        if (!s.empty()) s += "*";
        s += prefix + std::to_string(k + base);
        if (g.exps[k] > 1) s += "^" + std::to_string(g.exps[k]);
    }
    return s.empty() ? "1" : s;
}

/// Bihomogeneous monomial: x-part over x_0..x_n, u-part over u_1..u_m.
struct BiMonomial {
    std::vector<int> xexps;
    UMonomial uexps;

    BiMonomial() = default;
    BiMonomial(std::vector<int> x, UMonomial u)
        : xexps(std::move(x)), uexps(std::move(u)) {}

    int xdeg() const { return std::accumulate(xexps.begin(), xexps.end(), 0); }
    int udeg() const { return uexps.degree(); }
    int total_degree() const { return xdeg() + udeg(); }

    friend bool operator==(const BiMonomial&, const BiMonomial&) = default;
};

inline std::strong_ordering mono_order(const BiMonomial& a, const BiMonomial& b) {
    UMonomial ax{a.xexps}, bx{b.xexps};
    if (auto c = mono_order(ax, bx); c != std::strong_ordering::equal) return c;
    return mono_order(a.uexps, b.uexps);
}

inline bool operator<(const BiMonomial& a, const BiMonomial& b) {
    return mono_order(a, b) == std::strong_ordering::less;
}

inline BiMonomial mul(const BiMonomial& a, const BiMonomial& b) {
    if (a.xexps.size() != b.xexps.size())
        throw std::invalid_argument("x-ambient mismatch");
    BiMonomial p = a;
    for (size_t k = 0; k < b.xexps.size(); ++k) p.xexps[k] += b.xexps[k];
    p.uexps = mul(p.uexps, b.uexps);
    return p;
}

inline std::string mono_str(const BiMonomial& g, bool operator_ring) {
    UMonomial x{g.xexps};
    const std::string xp = operator_ring ? "X" : "x";
    const std::string up = operator_ring ? "U" : "u";
    if (x.is_one() && g.uexps.is_one()) return "1";
    if (x.is_one()) return mono_str(g.uexps, up, 1);
    if (g.uexps.is_one()) return mono_str(x, xp, 0);
    return mono_str(x, xp, 0) + "*" + mono_str(g.uexps, up, 1);
}

/// The two char-0 apolarity conventions. Contraction pairs monomials with
/// coefficient 1; differentiation picks up falling factorials.
enum class PairingAction { Contraction, Differentiation };

inline Int pairing_coeff(PairingAction action, const std::vector<int>& op,
                         const std::vector<int>& target) {
    Int c(1);
    for (size_t k = 0; k < op.size(); ++k) {
        if (op[k] > target[k]) return Int(0);
        if (action == PairingAction::Differentiation)
            c *= falling_factorial(target[k], op[k]);
    }
    return c;
}

inline Int apply(PairingAction action, const UMonomial& op, const UMonomial& target) {
    check_same_ambient(op, target);
    return pairing_coeff(action, op.exps, target.exps);
}

/// Coefficient c with op(target) = c * (target / op), or 0 when op does not
/// divide target.
inline Int apply(PairingAction action, const BiMonomial& op, const BiMonomial& target) {
    if (op.xexps.size() != target.xexps.size())
        throw std::invalid_argument("x-ambient mismatch");
    check_same_ambient(op.uexps, target.uexps);
    Int cx = pairing_coeff(action, op.xexps, target.xexps);
    if (cx == 0) return cx;
    Int cu = pairing_coeff(action, op.uexps.exps, target.uexps.exps);
    return cx * cu;
}

}  // namespace nagata
