#pragma once

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "nagata/input.hpp"

namespace nagata {

struct ParseError : ValidationError {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : ValidationError(msg + " (at offset " + std::to_string(pos) + ")"),
          position(pos) {}
};

namespace detail {

/// Grammar:  f := term ('+' term)* ; term := factor ('*' factor)* ;
/// factor := ('x'|'u') digits ('^' digits)?
/// x-variables are 0-based, u-variables 1-based; exponent 1 may be omitted.
struct ExprParser {
    const std::string& src;
    size_t pos = 0;

    explicit ExprParser(const std::string& s) : src(s) {}

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= src.size();
    }

    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    long parse_number() {
        skip_ws();
        if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
            fail("expected a number");
        long v = 0;
        size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
            v = v * 10 + (src[pos] - '0');
            if (pos - start > 8) fail("number too large");
            ++pos;
        }
        return v;
    }

    struct Factor {
        char kind;  // 'x' or 'u'
        long index;
        long exponent;
    };

    Factor parse_factor() {
        skip_ws();
        if (pos >= src.size()) fail("expected a variable");
        char c = src[pos];
        if (c != 'x' && c != 'u')
            fail(std::string("expected 'x<i>' or 'u<j>', found '") + c + "'");
        ++pos;
        if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
            fail("variable needs an index");
        long index = parse_number();
        long exponent = 1;
        if (peek() == '^') {
            ++pos;
            exponent = parse_number();
            if (exponent < 1) fail("exponent must be positive");
        }
        return {c, index, exponent};
    }

    struct Term {
        size_t start;
        std::map<long, long> x;  // index -> exponent
        std::map<long, long> u;
    };

    Term parse_term() {
        Term t;
        skip_ws();
        t.start = pos;
        while (true) {
            Factor f = parse_factor();
            auto& slot = (f.kind == 'x') ? t.x : t.u;
            slot[f.index] += f.exponent;
            if (peek() != '*') break;
            ++pos;
        }
        return t;
    }

    std::vector<Term> parse_sum() {
        std::vector<Term> terms;
        terms.push_back(parse_term());
        while (peek() == '+') {
            ++pos;
            terms.push_back(parse_term());
        }
        if (!at_end()) fail("unexpected trailing input");
        return terms;
    }
};

}  // namespace detail

/// Parse `x0^2*u1*u2 + x1^2*u1^2 + ...` into a validated input. The ambient
/// u-variable count is the largest u-index mentioned.
inline NagataInput parse_expression(const std::string& text,
                                    PairingAction action = PairingAction::Contraction) {
    detail::ExprParser p(text);
    auto terms = p.parse_sum();

    long m = 0;
    for (const auto& t : terms)
        for (const auto& [idx, e] : t.u) {
            if (idx < 1) throw ParseError("u-variables are numbered from 1", t.start);
            m = std::max(m, idx);
        }
    if (m == 0) throw ParseError("no u-variables found", 0);

    long d1 = -1;
    std::map<long, UMonomial> facets_by_index;
    for (const auto& t : terms) {
        if (t.x.size() != 1)
            throw ParseError("each term needs exactly one x-power x<i>^d1", t.start);
        const auto [xi, xe] = *t.x.begin();
        if (xi < 0) throw ParseError("x-variables are numbered from 0", t.start);
        if (d1 < 0) d1 = xe;
        if (xe != d1)
            throw ParseError("terms disagree on the x-exponent d1 (" +
                                 std::to_string(xe) + " vs " + std::to_string(d1) + ")",
                             t.start);
        if (facets_by_index.count(xi))
            throw ParseError("x" + std::to_string(xi) + " appears in two terms", t.start);
        UMonomial g;
        g.exps.assign(m, 0);
        for (const auto& [idx, e] : t.u) g.exps[idx - 1] = static_cast<int>(e);
        facets_by_index[xi] = std::move(g);
    }

    NagataInput in;
    in.d1 = static_cast<int>(d1);
    in.m = static_cast<int>(m);
    in.action = action;
    long expect = 0;
    for (const auto& [xi, g] : facets_by_index) {
        if (xi != expect)
            throw ValidationError("x-indices must be exactly 0..n with no gaps (missing x" +
                                  std::to_string(expect) + ")");
        ++expect;
        in.facets.push_back(g);
    }
    in.validate();
    return in;
}

/// Canonical expression text; parse_expression round-trips it.
inline std::string print_expression(const NagataInput& in) {
    std::string s;
    for (int r = 0; r < in.n_plus_1(); ++r) {
        if (r) s += " + ";
        s += "x" + std::to_string(r);
        if (in.d1 > 1) s += "^" + std::to_string(in.d1);
        s += "*" + mono_str(in.facets[r], "u", 1);
    }
    return s;
}

}  // namespace nagata
