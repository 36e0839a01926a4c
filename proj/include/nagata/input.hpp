#pragma once

#include <set>
#include <string>
#include <vector>

#include "nagata/monomial.hpp"

namespace nagata {

/// The polynomial f = sum_r x_r^{d1} g_r, given by d1 and the facet monomials
/// g_0..g_n (distinct, all of degree d2 >= 2, in m u-variables).
struct NagataInput {
    int d1 = 0;
    int m = 0;
    std::vector<UMonomial> facets;
    PairingAction action = PairingAction::Contraction;

    int n_plus_1() const { return static_cast<int>(facets.size()); }
    int d2() const { return facets.empty() ? 0 : facets.front().degree(); }
    int total_degree() const { return d1 + d2(); }

    bool is_square_free() const {
        for (const auto& g : facets)
            if (!square_free(g)) return false;
        return true;
    }

    void validate() const {
        if (m < 1) throw ValidationError("variable count m must be at least 1");
        if (d1 < 1) throw ValidationError("x-degree d1 must be at least 1");
        if (facets.empty()) throw ValidationError("at least one facet monomial is required");
        for (const auto& g : facets) {
            if (g.vars() != m)
                throw ValidationError("facet exponent vector length differs from m");
            for (int e : g.exps)
                if (e < 0) throw ValidationError("facet exponents must be non-negative");
        }
        const int d = facets.front().degree();
        if (d < 2) throw ValidationError("facet degree d2 must be at least 2");
        for (const auto& g : facets)
            if (g.degree() != d)
                throw ValidationError("facets must share a common degree d2");
        std::set<std::vector<int>> seen;
        for (const auto& g : facets)
            if (!seen.insert(g.exps).second)
                throw ValidationError("duplicate facet monomial " + mono_str(g, "u", 1));
        // Distinctness already forces this; kept as an explicit diagnostic.
        if (Int(n_plus_1()) > binomial(m + d - 1, d))
            throw ValidationError("facet count exceeds the number of degree-d2 monomials");
    }
};

}  // namespace nagata
