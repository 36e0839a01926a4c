#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "nagata/input.hpp"

namespace nagata {

/// The divisor-closed monomial family generated by the facets, together with
/// the counts the dimension formula consumes. Skeleton membership is exactly
/// monomial divisibility, so nothing topological is stored.
///
/// Immutable after build_face_model; all queries are read-only.
struct FaceModel {
    NagataInput input;
    /// divisor_sets[j] = D_j, the degree-j monomials dividing some facet,
    /// sorted in mono_order. D_0 = {1}, D_{d2} = the facets.
    std::vector<std::vector<UMonomial>> divisor_sets;
    /// f_vector[j] = |D_j|.
    std::vector<long long> f_vector;
    /// per_facet_counts[j][r] = number of degree-j divisors of g_r.
    std::vector<std::vector<long long>> per_facet_counts;
    /// support_sets[r] = 0-based u-variable indices dividing g_r.
    std::vector<std::vector<int>> support_sets;

    int d1() const { return input.d1; }
    int d2() const { return input.d2(); }
    int m() const { return input.m; }
    int n_plus_1() const { return input.n_plus_1(); }

    bool contains(const UMonomial& w) const {
        const int j = w.degree();
        if (j < 0 || j >= static_cast<int>(divisor_sets.size())) return false;
        const auto& dj = divisor_sets[j];
        return std::binary_search(dj.begin(), dj.end(), w);
    }
};

inline FaceModel build_face_model(const NagataInput& input) {
    input.validate();
    FaceModel model;
    model.input = input;
    const int d2 = input.d2();

    model.divisor_sets.resize(d2 + 1);
    model.per_facet_counts.assign(d2 + 1,
                                  std::vector<long long>(input.n_plus_1(), 0));
    for (int j = 0; j <= d2; ++j) {
        std::vector<UMonomial> all;
        for (int r = 0; r < input.n_plus_1(); ++r) {
            auto divs = divisors_of_degree(input.facets[r], j);
            model.per_facet_counts[j][r] = static_cast<long long>(divs.size());
            all.insert(all.end(), divs.begin(), divs.end());
        }
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        model.divisor_sets[j] = std::move(all);
    }

    model.f_vector.resize(d2 + 1);
    for (int j = 0; j <= d2; ++j)
        model.f_vector[j] = static_cast<long long>(model.divisor_sets[j].size());

    for (const auto& g : input.facets) model.support_sets.push_back(support(g));
    return model;
}

/// Monomials w with 1 <= deg w <= d2 outside the family whose proper maximal
/// divisors all lie inside it, sorted by (degree, mono_order). Degree-(d2+1)
/// minimal generators are covered wholesale by the u-power block of the
/// annihilator and are not repeated here.
inline std::vector<UMonomial> minimal_nonfaces(const FaceModel& model) {
    std::vector<UMonomial> out;
    for (int j = 1; j <= model.d2(); ++j) {
        for (const auto& w : enumerate_monomials(model.m(), j)) {
            if (model.contains(w)) continue;
            bool minimal = true;
            for (int k = 0; k < model.m() && minimal; ++k) {
                if (w.exps[k] == 0) continue;
                UMonomial v = w;
                --v.exps[k];
                if (!model.contains(v)) minimal = false;
            }
            if (minimal) out.push_back(w);
        }
    }
    return out;  // enumeration order is already (degree, mono_order)
}

/// Monomials w with 1 <= deg w <= d2 not dividing g_r, minimal under
/// divisibility among those. The degree-1 entries are exactly the variables
/// outside support(g_r).
inline std::vector<UMonomial> minimal_nondivisors_per_facet(const FaceModel& model,
                                                            int r) {
    if (r < 0 || r >= model.n_plus_1())
        throw std::out_of_range("facet index out of range");
    const UMonomial& g = model.input.facets[r];
    std::vector<UMonomial> out;
    for (int j = 1; j <= model.d2(); ++j) {
        for (const auto& w : enumerate_monomials(model.m(), j)) {
            if (divides(w, g)) continue;
            bool minimal = true;
            for (int k = 0; k < model.m() && minimal; ++k) {
                if (w.exps[k] == 0) continue;
                UMonomial v = w;
                --v.exps[k];
                if (!divides(v, g)) minimal = false;
            }
            if (minimal) out.push_back(w);
        }
    }
    return out;
}

struct PairCofactors {
    UMonomial gcd_part;  // GCD(g_r, g_s)
    UMonomial rho;       // g_r = rho * gcd_part
    UMonomial sigma;     // g_s = sigma * gcd_part
};

inline PairCofactors pair_cofactors(const FaceModel& model, int r, int s) {
    if (r < 0 || r >= model.n_plus_1() || s < 0 || s >= model.n_plus_1())
        throw std::out_of_range("facet index out of range");
    if (r == s) throw std::invalid_argument("pair_cofactors needs two distinct facets");
    const UMonomial& gr = model.input.facets[r];
    const UMonomial& gs = model.input.facets[s];
    PairCofactors pc;
    pc.gcd_part = gcd(gr, gs);
    pc.rho = quotient(gr, pc.gcd_part);
    pc.sigma = quotient(gs, pc.gcd_part);
    return pc;
}

/// Hasse diagram of the divisibility poset as a Graphviz digraph. Nodes are
/// the family members, edges the covering relations (degree difference 1).
/// Output is deterministic: nodes and edges follow mono_order.
inline std::string export_hasse_dot(const FaceModel& model) {
    std::string dot = "digraph hasse {\n  rankdir=BT;\n";
    std::map<UMonomial, int> id;
    int next = 0;
    for (const auto& level : model.divisor_sets)
        for (const auto& w : level) id[w] = next++;
    for (const auto& level : model.divisor_sets)
        for (const auto& w : level)
            dot += "  n" + std::to_string(id[w]) + " [label=\"" +
                   mono_str(w, "u", 1) + "\"];\n";
    for (int j = 0; j + 1 <= model.d2(); ++j) {
        for (const auto& w : model.divisor_sets[j]) {
            for (const auto& v : model.divisor_sets[j + 1]) {
                if (divides(w, v))
                    dot += "  n" + std::to_string(id.at(w)) + " -> n" +
                           std::to_string(id.at(v)) + ";\n";
            }
        }
    }
    dot += "}\n";
    return dot;
}

/// Number of covering relations in the Hasse diagram (for reporting).
inline long long hasse_edge_count(const FaceModel& model) {
    long long edges = 0;
    for (int j = 0; j + 1 <= model.d2(); ++j)
        for (const auto& w : model.divisor_sets[j])
            for (const auto& v : model.divisor_sets[j + 1])
                if (divides(w, v)) ++edges;
    return edges;
}

}  // namespace nagata
