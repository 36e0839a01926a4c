#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "nagata/hilbert.hpp"
#include "nagata/matrix.hpp"
#include "nagata/span.hpp"

namespace nagata {

/// Polynomial in the lowercase ring, sparse over BiMonomials in mono_order.
using SPoly = std::map<BiMonomial, Int>;

/// The monomials x_r^{d1} * g_r of f, in facet order.
inline std::vector<BiMonomial> f_terms(const NagataInput& in) {
    std::vector<BiMonomial> terms;
    for (int r = 0; r < in.n_plus_1(); ++r) {
        std::vector<int> x(in.n_plus_1(), 0);
        x[r] = in.d1;
        terms.emplace_back(std::move(x), in.facets[r]);
    }
    return terms;
}

inline BiMonomial sub(const BiMonomial& t, const BiMonomial& op) {
    BiMonomial d = t;
    for (size_t k = 0; k < op.xexps.size(); ++k) d.xexps[k] -= op.xexps[k];
    d.uexps = quotient(d.uexps, op.uexps);
    return d;
}

/// op(f) expanded exactly.
inline SPoly apply_to_f(const NagataInput& in, const BiMonomial& op) {
    SPoly out;
    for (const auto& t : f_terms(in)) {
        Int c = apply(in.action, op, t);
        if (c == 0) continue;
        out[sub(t, op)] += c;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

/// (sum_k c_k op_k)(f) for a small operator polynomial.
inline SPoly apply_to_f(const NagataInput& in,
                        const std::vector<std::pair<Int, BiMonomial>>& op_poly) {
    SPoly out;
    for (const auto& [c, op] : op_poly) {
        for (const auto& t : f_terms(in)) {
            Int coeff = apply(in.action, op, t);
            if (coeff == 0) continue;
            out[sub(t, op)] += c * coeff;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

/// All BiMonomials of bidegree (i, j) over n_plus_1 x-variables and m
/// u-variables, sorted in mono_order.
inline std::vector<BiMonomial> bimonomials(int n_plus_1, int m, int i, int j) {
    std::vector<BiMonomial> out;
    for (const auto& xm : enumerate_monomials(n_plus_1, i))
        for (const auto& um : enumerate_monomials(m, j))
            out.emplace_back(xm.exps, um);
    return out;
}

/// Matrix of the evaluation map at bidegree (i, j): rows are the operator
/// monomials of T_(i,j), columns the polynomial monomials of S_(d1-i, d2-j),
/// entry the exact coefficient of the column in row(f). Its rank is
/// dim A_(i,j); its left kernel is the annihilator slice I_(i,j).
inline ExactMatrix catalecticant(const NagataInput& in, int i, int j) {
    const int d1 = in.d1, d2 = in.d2();
    if (i < 0 || i > d1 || j < 0 || j > d2)
        throw std::out_of_range("bidegree out of range");
    auto rows = bimonomials(in.n_plus_1(), in.m, i, j);
    auto cols = bimonomials(in.n_plus_1(), in.m, d1 - i, d2 - j);
    std::map<BiMonomial, long long> col_index;
    for (long long c = 0; c < static_cast<long long>(cols.size()); ++c)
        col_index.emplace(cols[c], c);

    ExactMatrix m(static_cast<long long>(rows.size()),
                  static_cast<long long>(cols.size()));
    for (long long r = 0; r < m.rows; ++r) {
        for (const auto& [mono, coeff] : apply_to_f(in, rows[r]))
            m.at(r, col_index.at(mono)) = coeff;
    }
    m.row_labels = std::move(rows);
    m.col_labels = std::move(cols);
    return m;
}

/// Ground-truth table: a[i][j] = rank of the (i, j) catalecticant.
inline BigradedTable oracle_bigraded_table(const NagataInput& in) {
    BigradedTable t;
    t.d1 = in.d1;
    t.d2 = in.d2();
    t.a.assign(t.d1 + 1, std::vector<long long>(t.d2 + 1, 0));
    for (int i = 0; i <= t.d1; ++i)
        for (int j = 0; j <= t.d2; ++j) t.a[i][j] = rank(catalecticant(in, i, j));
    return t;
}

struct Generator;  // annihilator.hpp

/// Dimension at bidegree (i, j) of the span of all T-multiples of the given
/// 1- and 2-term generators. Exact; exploits that every row has at most two
/// nonzero entries.
template <class GeneratorRange>
long long multiples_span_dimension(const GeneratorRange& gens, const NagataInput& in,
                                   int i, int j) {
    SpanBasis sb;
    for (const auto& g : gens) {
        if (g.terms.empty()) continue;
        const int a = g.terms.front().second.xdeg();
        const int b = g.terms.front().second.udeg();
        if (a > i || b > j) continue;
        for (const auto& xm : enumerate_monomials(in.n_plus_1(), i - a)) {
            for (const auto& um : enumerate_monomials(in.m, j - b)) {
                BiMonomial mu{xm.exps, um};
                if (g.terms.size() == 1) {
                    sb.add_monomial(mul(mu, g.terms[0].second));
                } else {
                    sb.add_binomial(mul(mu, g.terms[0].second), g.terms[0].first,
                                    mul(mu, g.terms[1].second), g.terms[1].first);
                }
            }
        }
    }
    return sb.dimension();
}

struct OracleReport {
    BigradedTable dims;
    bool duality_ok = false;
    bool matches_closed_form = false;
    /// (i, j, closed-form, oracle) for every disagreeing cell.
    std::vector<std::tuple<int, int, long long, long long>> mismatches;
    /// kernels[i][j]: primitive integer combinations of the T_(i,j) monomial
    /// basis spanning the annihilator slice. Populated on request only.
    std::vector<std::vector<std::vector<std::vector<Int>>>> kernels;
};

inline OracleReport oracle_report(const NagataInput& in, const FaceModel& model,
                                  bool with_kernels = false) {
    OracleReport rep;
    rep.dims.d1 = in.d1;
    rep.dims.d2 = in.d2();
    rep.dims.a.assign(in.d1 + 1, std::vector<long long>(in.d2() + 1, 0));
    if (with_kernels)
        rep.kernels.assign(in.d1 + 1, std::vector<std::vector<std::vector<Int>>>(in.d2() + 1));
    for (int i = 0; i <= in.d1; ++i) {
        for (int j = 0; j <= in.d2(); ++j) {
            auto mat = catalecticant(in, i, j);
            if (with_kernels) {
                auto rk = rank_and_kernel(mat);
                rep.dims.a[i][j] = rk.rank;
                rep.kernels[i][j] = std::move(rk.kernel);
            } else {
                rep.dims.a[i][j] = rank(std::move(mat));
            }
        }
    }
    rep.duality_ok = rep.dims.duality_holds();
    const BigradedTable closed = bigraded_table(model);
    rep.matches_closed_form = true;
    for (int i = 0; i <= rep.dims.d1; ++i)
        for (int j = 0; j <= rep.dims.d2; ++j)
            if (closed.a[i][j] != rep.dims.a[i][j]) {
                rep.matches_closed_form = false;
                rep.mismatches.emplace_back(i, j, closed.a[i][j], rep.dims.a[i][j]);
            }
    return rep;
}

}  // namespace nagata
