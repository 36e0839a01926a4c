#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace nagata;
using testsupport::umono;

TEST_CASE("multiplication rank basics") {
    auto in = testsupport::example_two(2);
    auto h = hilbert_vector(bigraded_table(build_face_model(in)));
    auto L = sum_of_x(in.n_plus_1(), in.m);

    // k = 0 is the identity on A_deg
    for (int deg = 0; deg <= in.total_degree(); ++deg) {
        auto [r, mx] = multiplication_rank(in, L, 0, deg);
        CHECK(r == h[deg]);
        CHECK(mx == h[deg]);
    }
    // beyond the socle the target is zero
    auto [rtop, mtop] = multiplication_rank(in, L, 1, in.total_degree());
    CHECK(rtop == 0);
    CHECK(mtop == 0);
    CHECK_THROWS_AS(multiplication_rank(in, L, 1, in.total_degree() + 1),
                    std::out_of_range);
    CHECK_THROWS_AS(multiplication_rank(in, LinearForm{{}}, 1, 0),
                    std::invalid_argument);
}

TEST_CASE("rank composition monotonicity") {
    auto in = testsupport::example_two(2);
    auto L = sum_of_x(in.n_plus_1(), in.m);
    const int d = in.total_degree();
    for (int deg = 0; deg <= d; ++deg) {
        for (int a = 1; deg + a <= d; ++a) {
            for (int b = 1; deg + a + b <= d; ++b) {
                auto [rab, mab] = multiplication_rank(in, L, a + b, deg);
                auto [ra, ma] = multiplication_rank(in, L, a, deg);
                auto [rb, mb] = multiplication_rank(in, L, b, deg + a);
                CHECK(rab <= std::min(ra, rb));
            }
        }
    }
}

TEST_CASE("sum of x-variables is a weak Lefschetz element when d1 >= d2") {
    auto in = testsupport::example_two(3);  // d1 = 3 >= d2 = 2
    auto rep = check_wlp(in, sum_of_x(in.n_plus_1(), in.m));
    CHECK(rep.verdict);
    for (const auto& c : rep.checks) CHECK(c.maximal());
}

TEST_CASE("a single X is not a weak Lefschetz element here") {
    auto in = testsupport::example_two(2);
    LinearForm L;
    L.coeffs.assign(in.n_plus_1() + in.m, Rat(0));
    L.coeffs[0] = 1;  // X0 alone
    auto rep = check_wlp(in, L);
    CHECK_FALSE(rep.verdict);
    // X0 annihilates every term but the first: at degree 1 the image is
    // spanned by X0^2, X0*U1, X0*U2 only
    REQUIRE(rep.checks.size() >= 2);
    CHECK(rep.checks[1].deg == 1);
    CHECK(rep.checks[1].rank == 3);
    CHECK(rep.checks[1].max_rank == 6);
}

TEST_CASE("hessian ranks") {
    auto in = testsupport::example_two(2);
    std::vector<Rat> point;
    for (int v = 0; v < in.n_plus_1() + in.m; ++v)
        point.emplace_back(static_cast<long>(v + 1));

    auto [r0, s0] = hessian_rank(in, 0, point);
    CHECK(s0 == 1);
    CHECK(r0 == 1);  // f does not vanish at a positive point

    auto [r1, s1] = hessian_rank(in, 1, point);
    CHECK(s1 == 6);
    CHECK(r1 <= 6);

    // at order 0 the rank detects exactly whether f vanishes at the point
    std::vector<Rat> zero_u(point);
    zero_u[3] = 0;  // u1 = 0
    zero_u[4] = 0;  // u2 = 0
    auto [rv, sv] = hessian_rank(in, 0, zero_u);
    CHECK(sv == 1);
    CHECK(rv == 0);

    CHECK_THROWS_AS(hessian_rank(in, 3, point), std::out_of_range);
    CHECK_THROWS_AS(hessian_rank(in, 1, std::vector<Rat>{Rat(1)}),
                    std::invalid_argument);
}

TEST_CASE("the overloaded-summand family degenerates at the first Hessian") {
    auto in = testsupport::gr_no_slp();
    SplitMix64 rng(2024);
    for (int t = 0; t < 10; ++t) {
        std::vector<Rat> point;
        for (int v = 0; v < in.n_plus_1() + in.m; ++v) {
            Rat q(static_cast<long>(rng.bounded(1, 9)) * (rng.bounded(0, 1) ? 1 : -1),
                  static_cast<long>(rng.bounded(1, 9)));
            q.canonicalize();
            point.push_back(q);
        }
        auto [r, s] = hessian_rank(in, 1, point);
        CHECK(s == 6);
        CHECK(r < s);
        CHECK(r <= 4);  // the X-X block is identically zero and m = 2
    }

    auto rep = check_slp(in, 4, 0);
    CHECK_FALSE(rep.verdict);
    CHECK(rep.witness_trial == -1);
    REQUIRE(rep.hessians.size() == 3);  // k = 0, 1, 2
    CHECK(rep.hessians[1].deficient_everywhere);
    CHECK_FALSE(rep.hessians[0].deficient_everywhere);
    CHECK(rep.note == "no witness found in 4 trials");
}

TEST_CASE("single-summand inputs have the strong property") {
    NagataInput in;
    in.d1 = 2;
    in.m = 2;
    in.facets = {umono({1, 1})};
    auto rep = check_slp(in, 5, 7);
    CHECK(rep.verdict);
    CHECK(rep.witness_trial >= 0);
    for (const auto& c : rep.checks) CHECK(c.maximal());
}

TEST_CASE("seeded reports are reproducible") {
    auto in = testsupport::example_two(2);
    auto a = check_slp(in, 2, 42);
    auto b = check_slp(in, 2, 42);
    CHECK(a.verdict == b.verdict);
    CHECK(a.witness_trial == b.witness_trial);
    REQUIRE(a.form.coeffs.size() == b.form.coeffs.size());
    for (size_t k = 0; k < a.form.coeffs.size(); ++k)
        CHECK(a.form.coeffs[k] == b.form.coeffs[k]);
    REQUIRE(a.checks.size() == b.checks.size());
    for (size_t k = 0; k < a.checks.size(); ++k) {
        CHECK(a.checks[k].rank == b.checks[k].rank);
        CHECK(a.checks[k].max_rank == b.checks[k].max_rank);
    }
}

TEST_CASE("weak Lefschetz on a small d1 >= d2 corpus") {
    for (const auto& in : testsupport::wlp_corpus(5, 616)) {
        auto rep = check_wlp(in, sum_of_x(in.n_plus_1(), in.m));
        CHECK(rep.verdict);
    }
}
