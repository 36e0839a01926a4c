#pragma once

#include <stdexcept>
#include <vector>

#include "nagata/face_model.hpp"

namespace nagata {

/// a[i][j] = dim A_{(i,j)} for 0 <= i <= d1, 0 <= j <= d2.
struct BigradedTable {
    int d1 = 0;
    int d2 = 0;
    std::vector<std::vector<long long>> a;

    long long at(int i, int j) const { return a.at(i).at(j); }

    bool duality_holds() const {
        for (int i = 0; i <= d1; ++i)
            for (int j = 0; j <= d2; ++j)
                if (a[i][j] != a[d1 - i][d2 - j]) return false;
        return true;
    }

    friend bool operator==(const BigradedTable&, const BigradedTable&) = default;
};

/// Closed-form table from the skeleton counts:
///   a[0][j]  = f_j
///   a[i][j]  = sum_r f_{j,r}   for 0 < i < d1
///   a[d1][j] = f_{d2-j}
/// For d1 = 1 there are no interior rows and i = 1 takes the top-row branch;
/// evaluating the interior formula there instead would over-count whenever a
/// divisor is shared between facets.
inline BigradedTable bigraded_table(const FaceModel& model) {
    BigradedTable t;
    t.d1 = model.d1();
    t.d2 = model.d2();
    t.a.assign(t.d1 + 1, std::vector<long long>(t.d2 + 1, 0));
    for (int j = 0; j <= t.d2; ++j) {
        t.a[0][j] = model.f_vector[j];
        long long interior = 0;
        for (int r = 0; r < model.n_plus_1(); ++r)
            interior += model.per_facet_counts[j][r];
        for (int i = 1; i < t.d1; ++i) t.a[i][j] = interior;
        t.a[t.d1][j] = model.f_vector[t.d2 - j];
    }
    return t;
}

/// Totalization h_k = sum_{i+j=k} a[i][j]; length d1+d2+1.
inline std::vector<long long> hilbert_vector(const BigradedTable& t) {
    std::vector<long long> h(t.d1 + t.d2 + 1, 0);
    for (int i = 0; i <= t.d1; ++i)
        for (int j = 0; j <= t.d2; ++j) h[i + j] += t.a[i][j];
    return h;
}

/// One basis element of A_{(i,j)}. Single-term except where a representative
/// is assembled from several monomials (not needed for the bases below, but
/// kept general for reports).
struct BasisElement {
    int i = 0;
    int j = 0;
    std::vector<std::pair<Int, BiMonomial>> terms;
};

namespace detail {
inline BiMonomial xpow_umono(int n_plus_1, int r, int p, const UMonomial& w) {
    std::vector<int> x(n_plus_1, 0);
    if (p > 0) x[r] = p;
    return BiMonomial{std::move(x), w};
}
}  // namespace detail

/// Monomial basis of A_{(i,j)}:
///   i = 0: one class per member of D_j.
///   0 < i < d1: X_s^i * U^w for each facet s and degree-j divisor w of g_s.
///   i = d1: for each w in D_{d2-j} the class X_r^{d1} * U^{g_r/w} with r the
///   first facet divisible by w; these evaluate to distinct monomial multiples
///   of the D_{d2-j} members, hence are independent.
inline std::vector<BasisElement> basis_of(const FaceModel& model, int i, int j) {
    const int d1 = model.d1(), d2 = model.d2();
    if (i < 0 || i > d1 || j < 0 || j > d2)
        throw std::out_of_range("bidegree out of range");
    std::vector<BasisElement> out;
    const int n1 = model.n_plus_1();
    if (i == 0) {
        for (const auto& w : model.divisor_sets[j])
            out.push_back({i, j, {{Int(1), detail::xpow_umono(n1, 0, 0, w)}}});
        return out;
    }
    if (i < d1) {
        for (int s = 0; s < n1; ++s)
            for (const auto& w : divisors_of_degree(model.input.facets[s], j))
                out.push_back({i, j, {{Int(1), detail::xpow_umono(n1, s, i, w)}}});
        return out;
    }
    // i == d1: dual representatives of the (0, d2-j) basis
    for (const auto& w : model.divisor_sets[d2 - j]) {
        for (int r = 0; r < n1; ++r) {
            if (!divides(w, model.input.facets[r])) continue;
            UMonomial cof = quotient(model.input.facets[r], w);
            out.push_back({i, j, {{Int(1), detail::xpow_umono(n1, r, d1, cof)}}});
            break;
        }
    }
    return out;
}

}  // namespace nagata
