#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace nagata;
using testsupport::umono;

namespace {
std::vector<long long> hvec(const NagataInput& in) {
    return hilbert_vector(bigraded_table(build_face_model(in)));
}
}  // namespace

TEST_CASE("octahedron tables") {
    auto model = build_face_model(testsupport::octahedron(2));
    auto t = bigraded_table(model);
    CHECK(t.a[1][1] == 24);
    CHECK(t.a[0][2] == 12);
    CHECK(t.a[2][0] == 8);
    CHECK(t.a[0][0] == 1);
    CHECK(t.a[2][3] == 1);
    CHECK(t.duality_holds());

    CHECK(hvec(testsupport::octahedron(2)) ==
          std::vector<long long>{1, 14, 44, 44, 14, 1});
    CHECK(hvec(testsupport::octahedron(3)) ==
          std::vector<long long>{1, 14, 44, 64, 44, 14, 1});
    CHECK(hvec(testsupport::octahedron(4)) ==
          std::vector<long long>{1, 14, 44, 64, 64, 44, 14, 1});
    CHECK(hvec(testsupport::octahedron(5)) ==
          std::vector<long long>{1, 14, 44, 64, 64, 64, 44, 14, 1});
}

TEST_CASE("octahedron at d1 = 1 follows duality, not the interior row") {
    auto t = bigraded_table(build_face_model(testsupport::octahedron(1)));
    CHECK(t.a[1][1] == 12);  // not 8*3
    CHECK(t.a[0][2] == 12);
    CHECK(hvec(testsupport::octahedron(1)) == std::vector<long long>{1, 14, 24, 14, 1});
    CHECK(t.duality_holds());
}

TEST_CASE("example-two vectors across d1") {
    CHECK(hvec(testsupport::example_two(1)) == std::vector<long long>{1, 6, 6, 1});
    CHECK(hvec(testsupport::example_two(2)) == std::vector<long long>{1, 6, 11, 6, 1});
    CHECK(hvec(testsupport::example_two(3)) ==
          std::vector<long long>{1, 6, 11, 11, 6, 1});
    CHECK(hvec(testsupport::example_two(4)) ==
          std::vector<long long>{1, 6, 11, 11, 11, 6, 1});

    auto t = bigraded_table(build_face_model(testsupport::example_two(2)));
    CHECK(t.a[1][1] == 5);  // 2 + 1 + 2
    CHECK(t.a[1][0] == 3);
}

TEST_CASE("table invariants on random inputs") {
    for (const auto& in : testsupport::random_corpus(30, 424242)) {
        auto model = build_face_model(in);
        auto t = bigraded_table(model);
        CHECK(t.a[0][0] == 1);
        CHECK(t.a[t.d1][t.d2] == 1);
        CHECK(t.duality_holds());
        for (int i = 1; i < t.d1; ++i) CHECK(t.a[i][0] == in.n_plus_1());
        // interior rows are all identical
        for (int i = 2; i < t.d1; ++i) CHECK(t.a[i] == t.a[1]);
        // boundary rows mirror each other
        for (int j = 0; j <= t.d2; ++j) CHECK(t.a[0][j] == t.a[t.d1][t.d2 - j]);

        auto h = hilbert_vector(t);
        CHECK(h.front() == 1);
        CHECK(h.back() == 1);
        for (size_t k = 0; k < h.size(); ++k) CHECK(h[k] == h[h.size() - 1 - k]);
    }
}

TEST_CASE("bases have the advertised sizes and shapes") {
    auto model = build_face_model(testsupport::example_two(2));
    auto t = bigraded_table(model);

    auto b01 = basis_of(model, 0, 1);
    REQUIRE(b01.size() == 3);
    CHECK(mono_str(b01[0].terms[0].second, true) == "U1");
    CHECK(mono_str(b01[1].terms[0].second, true) == "U2");
    CHECK(mono_str(b01[2].terms[0].second, true) == "U3");

    auto b11 = basis_of(model, 1, 1);
    REQUIRE(b11.size() == 5);
    CHECK(mono_str(b11[0].terms[0].second, true) == "X0*U1");
    CHECK(mono_str(b11[1].terms[0].second, true) == "X0*U2");
    CHECK(mono_str(b11[2].terms[0].second, true) == "X1*U1");
    CHECK(mono_str(b11[3].terms[0].second, true) == "X2*U2");
    CHECK(mono_str(b11[4].terms[0].second, true) == "X2*U3");

    auto socle = basis_of(model, 2, 2);
    REQUIRE(socle.size() == 1);
    CHECK(socle[0].terms.size() == 1);

    for (int i = 0; i <= t.d1; ++i)
        for (int j = 0; j <= t.d2; ++j)
            CHECK(static_cast<long long>(basis_of(model, i, j).size()) == t.a[i][j]);
    CHECK_THROWS_AS(basis_of(model, 3, 0), std::out_of_range);
}

TEST_CASE("basis classes are independent in the quotient") {
    // evaluate every basis element on f; the images must have full rank
    for (const auto& in : testsupport::random_corpus(10, 5150)) {
        auto model = build_face_model(in);
        auto t = bigraded_table(model);
        for (int i = 0; i <= t.d1; ++i) {
            for (int j = 0; j <= t.d2; ++j) {
                auto basis = basis_of(model, i, j);
                std::vector<SPoly> images;
                for (const auto& el : basis) images.push_back(apply_to_f(in, el.terms));
                std::map<BiMonomial, long long> col;
                for (const auto& v : images)
                    for (const auto& [mono, c] : v) col.emplace(mono, 0);
                long long idx = 0;
                for (auto& [mono, c] : col) c = idx++;
                ExactMatrix mat(static_cast<long long>(images.size()), idx);
                for (long long r = 0; r < mat.rows; ++r)
                    for (const auto& [mono, c] : images[r]) mat.at(r, col.at(mono)) = c;
                CHECK(rank(mat) == static_cast<long long>(basis.size()));
            }
        }
    }
}

TEST_CASE("single-term input has constant rows") {
    NagataInput in;
    in.d1 = 3;
    in.m = 2;
    in.facets = {umono({2, 1})};
    auto t = bigraded_table(build_face_model(in));
    for (int i = 0; i <= 3; ++i) {
        CHECK(t.a[i][0] == 1);
        CHECK(t.a[i][1] == 2);
        CHECK(t.a[i][2] == 2);
        CHECK(t.a[i][3] == 1);
    }
}
