#pragma once

#include <map>
#include <utility>
#include <vector>

#include "nagata/monomial.hpp"

namespace nagata {

/// Incremental span of polynomials with at most two monomial terms, tracked
/// inside one bihomogeneous component. The quotient by the span assigns every
/// touched monomial a class: either zero ("absorbed") or a rational multiple
/// of its component representative. This gives exact span dimensions and
/// membership tests without materializing a dense matrix.
///
/// Rows with one term kill a monomial class outright; rows with two terms
/// either tie two classes together, or (when the tie contradicts an earlier
/// one) collapse the whole component to zero.
class SpanBasis {
public:
    void add_monomial(const BiMonomial& t) { absorb(find(id(t)).first); }

    void add_binomial(const BiMonomial& t1, const Int& c1, const BiMonomial& t2,
                      const Int& c2) {
        auto [r1, q1] = find(id(t1));
        auto [r2, q2] = find(id(t2));
        if (r1 == r2) {
            if (Rat(c1) * q1 + Rat(c2) * q2 != 0) absorb(r1);
            return;
        }
        if (nodes_[r1].absorbed && nodes_[r2].absorbed) return;
        if (nodes_[r1].absorbed) {
            absorb(r2);
            return;
        }
        if (nodes_[r2].absorbed) {
            absorb(r1);
            return;
        }
        // c1*q1*root1 + c2*q2*root2 = 0  =>  root1 = -(c2*q2)/(c1*q1) * root2
        Rat ratio = -(Rat(c2) * q2) / (Rat(c1) * q1);
        if (nodes_[r1].size > nodes_[r2].size) {
            std::swap(r1, r2);
            ratio = 1 / ratio;
        }
        nodes_[r1].parent = r2;
        nodes_[r1].to_parent = ratio;
        nodes_[r2].size += nodes_[r1].size;
    }

    bool contains_monomial(const BiMonomial& t) {
        return nodes_[find(id(t)).first].absorbed;
    }

    bool contains_binomial(const BiMonomial& t1, const Int& c1, const BiMonomial& t2,
                           const Int& c2) {
        auto [r1, q1] = find(id(t1));
        auto [r2, q2] = find(id(t2));
        if (r1 == r2)
            return nodes_[r1].absorbed || Rat(c1) * q1 + Rat(c2) * q2 == 0;
        return nodes_[r1].absorbed && nodes_[r2].absorbed;
    }

    /// Membership for a 1- or 2-term element.
    bool contains(const std::vector<std::pair<Int, BiMonomial>>& terms) {
        if (terms.empty()) return true;
        if (terms.size() == 1) return contains_monomial(terms[0].second);
        if (terms.size() == 2)
            return contains_binomial(terms[0].second, terms[0].first,
                                     terms[1].second, terms[1].first);
        throw std::invalid_argument("span membership supports at most two terms");
    }

    /// Dimension of the span: absorbed components contribute their size, live
    /// components one less (their relations, not their representative).
    long long dimension() {
        long long dim = 0;
        std::map<int, std::pair<long long, bool>> comp;
        for (int v = 0; v < static_cast<int>(nodes_.size()); ++v) {
            int root = find(v).first;
            auto& c = comp[root];
            c.first += 1;
            c.second = nodes_[root].absorbed;
        }
        for (const auto& [root, c] : comp) dim += c.second ? c.first : c.first - 1;
        return dim;
    }

private:
    struct Node {
        int parent;
        Rat to_parent;  // this = to_parent * parent, modulo the span
        bool absorbed = false;
        long long size = 1;
    };

    int id(const BiMonomial& t) {
        auto it = ids_.find(t);
        if (it != ids_.end()) return it->second;
        const int v = static_cast<int>(nodes_.size());
        ids_.emplace(t, v);
        nodes_.push_back(Node{v, Rat(1), false, 1});
        return v;
    }

    std::pair<int, Rat> find(int v) {
        if (nodes_[v].parent == v) return {v, nodes_[v].to_parent};
        auto [root, q] = find(nodes_[v].parent);
        nodes_[v].parent = root;
        nodes_[v].to_parent *= q;
        return {root, nodes_[v].to_parent};
    }

    void absorb(int root) { nodes_[root].absorbed = true; }

    std::map<BiMonomial, int> ids_;
    std::vector<Node> nodes_;
};

}  // namespace nagata
