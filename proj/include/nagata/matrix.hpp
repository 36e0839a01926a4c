#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "nagata/monomial.hpp"

namespace nagata {

/// Dense matrix with exact integer entries and monomial row/column labels.
struct ExactMatrix {
    long long rows = 0;
    long long cols = 0;
    std::vector<Int> data;
    std::vector<BiMonomial> row_labels;
    std::vector<BiMonomial> col_labels;

    ExactMatrix() = default;
    ExactMatrix(long long r, long long c) : rows(r), cols(c), data(r * c) {}

    Int& at(long long r, long long c) { return data[r * cols + c]; }
    const Int& at(long long r, long long c) const { return data[r * cols + c]; }
};

/// Rank over Q by fraction-free (Bareiss) elimination. Pivot rule: columns
/// left to right, first row with a nonzero entry. All divisions are exact.
inline long long rank(ExactMatrix m) {
    long long r = 0;
    Int prev(1);
    for (long long c = 0; c < m.cols && r < m.rows; ++c) {
        long long piv = -1;
        for (long long i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (long long k = 0; k < m.cols; ++k)
                std::swap(m.at(piv, k), m.at(r, k));
        const Int& p = m.at(r, c);
        for (long long i = r + 1; i < m.rows; ++i) {
            if (m.at(i, c) == 0) continue;
            const Int mult = m.at(i, c);
            for (long long k = c + 1; k < m.cols; ++k) {
                Int v = p * m.at(i, k) - mult * m.at(r, k);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m.at(i, k) = std::move(v);
            }
            m.at(i, c) = 0;
        }
        prev = p;
        ++r;
    }
    return r;
}

namespace detail {

/// Reduced row echelon form over Q, in place. Returns pivot column indices.
inline std::vector<long long> rref(std::vector<std::vector<Rat>>& a) {
    const long long rows = static_cast<long long>(a.size());
    const long long cols = rows ? static_cast<long long>(a[0].size()) : 0;
    std::vector<long long> pivots;
    long long r = 0;
    for (long long c = 0; c < cols && r < rows; ++c) {
        long long piv = -1;
        for (long long i = r; i < rows; ++i)
            if (a[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[r]);
        const Rat inv = 1 / a[r][c];
        for (long long k = c; k < cols; ++k) a[r][k] *= inv;
        for (long long i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rat f = a[i][c];
            for (long long k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Scale a rational vector to a primitive integer vector with positive
/// leading entry.
inline std::vector<Int> primitive(const std::vector<Rat>& v) {
    Int lcm(1);
    for (const auto& q : v)
        if (q != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Int> w(v.size());
    Int content(0);
    for (size_t k = 0; k < v.size(); ++k) {
        Rat s = v[k] * Rat(lcm);
        w[k] = s.get_num();  // integral after scaling
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), w[k].get_mpz_t());
    }
    if (content > 1)
        for (auto& x : w) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
    for (const auto& x : w) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : w) y = -y;
        break;
    }
    return w;
}

}  // namespace detail

struct RankKernel {
    long long rank = 0;
    /// Basis of { v : v^T M = 0 }, one primitive integer vector per free row.
    std::vector<std::vector<Int>> kernel;
};

/// Rank plus a deterministic basis of the left kernel (the combinations of
/// rows summing to zero). Vectors are primitive with positive leading entry,
/// ordered by their free index.
inline RankKernel rank_and_kernel(const ExactMatrix& m) {
    // echelonize the transpose; its column space questions become row ones
    std::vector<std::vector<Rat>> t(m.cols, std::vector<Rat>(m.rows));
    for (long long r = 0; r < m.rows; ++r)
        for (long long c = 0; c < m.cols; ++c) t[c][r] = Rat(m.at(r, c));
    const auto pivots = detail::rref(t);

    RankKernel out;
    out.rank = static_cast<long long>(pivots.size());
    std::vector<bool> is_pivot(m.rows, false);
    for (long long p : pivots) is_pivot[p] = true;
    for (long long free = 0; free < m.rows; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(m.rows, Rat(0));
        v[free] = 1;
        for (size_t pr = 0; pr < pivots.size(); ++pr) v[pivots[pr]] = -t[pr][free];
        out.kernel.push_back(detail::primitive(v));
    }
    return out;
}

}  // namespace nagata
