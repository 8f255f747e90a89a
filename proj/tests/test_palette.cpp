#include <doctest.h>

#include <cmath>

#include <nlohmann/json.hpp>

#include "turan/combinatorics.hpp"
#include "turan/palette.hpp"
#include "turan/vanishing.hpp"

using namespace turan;

TEST_CASE("palette bounds") {
    CHECK(lower_bound(vanishing_palette(3)) == Rational(1, 27));
    CHECK(lower_bound(vanishing_palette(4)) == Rational(1, 256));
    CHECK(lower_bound(vanishing_palette(5)) == Rational(1, 3125));
    CHECK(lower_bound(conj_palette(3, 1, 2)) == Rational(3, 64));
    CHECK(lower_bound(Palette::create(3, 2, {})) == Rational(0));
    for (int k = 3; k <= 5; ++k)
        for (int i = 1; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j)
                CHECK(lower_bound(conj_palette(k, i, j)) ==
                      Rational(3) * pow_rational(Rational(1, k + 1), k));
}

TEST_CASE("palette construction and validation") {
    auto P = vanishing_palette(3);
    CHECK(P.r == 3);
    CHECK(P.tuples == std::vector<std::vector<int>>{{1, 2, 3}});

    auto C = conj_palette(3, 1, 2);
    CHECK(C.r == 4);
    CHECK(C.tuples == std::vector<std::vector<int>>{{1, 2, 3}, {1, 4, 3}, {4, 2, 3}});

    auto C424 = conj_palette(4, 2, 4);
    CHECK(C424.r == 5);
    CHECK(C424.tuples ==
          std::vector<std::vector<int>>{{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 5, 3, 4}});

    CHECK_THROWS_AS(Palette::create(3, 2, {{1, 2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Palette::create(3, 3, {{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(conj_palette(3, 2, 2), std::invalid_argument);
}

TEST_CASE("coloring sampling") {
    auto psi1 = sample_psi(2, 1, 3, 123);
    CHECK(psi1.color({0, 1}) == 1);

    auto a = sample_psi(5, 3, 3, 0);
    auto b = sample_psi(5, 3, 3, 0);
    CHECK(a.table == b.table);
    CHECK(a.table.size() == 10);
    for (const auto& [s, c] : a.table) {
        CHECK(c >= 1);
        CHECK(c <= 3);
    }
    auto c = sample_psi(5, 3, 3, 1);
    CHECK(a.table != c.table);  // overwhelmingly likely; fixed seeds make it stable

    CHECK_THROWS_AS(sample_psi(1, 3, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(a.color({0, 1, 2}), std::invalid_argument);
}

TEST_CASE("color frequencies look uniform") {
    // chi-square over C(40,2) = 780 colors in 3 classes, 2 dof: 3-sigma-ish
    // cutoff ~ 16 comfortably covers it for a fixed healthy seed
    auto psi = sample_psi(40, 3, 3, 7);
    std::vector<int> freq(4, 0);
    for (const auto& [s, c] : psi.table) ++freq[c];
    double expected = 780.0 / 3.0;
    double chi2 = 0;
    for (int c = 1; c <= 3; ++c) chi2 += (freq[c] - expected) * (freq[c] - expected) / expected;
    CHECK(chi2 < 16.0);
}

TEST_CASE("graph construction from signatures") {
    // constant coloring: only the all-ones signature appears
    ColoringFunction psi;
    psi.n = 3;
    psi.k = 3;
    psi.r = 3;
    for_each_subset(3, 2, [&](const VertexSet& s) { psi.table[s] = 1; });
    CHECK(build_H(3, psi, Palette::create(3, 3, {{1, 1, 1}})).edges.size() == 1);
    CHECK(build_H(3, psi, Palette::create(3, 3, {{1, 2, 3}})).edges.empty());

    CHECK_THROWS_AS(build_H(3, psi, vanishing_palette(4)), std::invalid_argument);
    auto wrong_r = Palette::create(3, 4, {{1, 2, 3}});
    CHECK_THROWS_AS(build_H(3, psi, wrong_r), std::invalid_argument);
}

TEST_CASE("build_H agrees with direct signature evaluation") {
    auto P = vanishing_palette(3);
    auto psi = sample_psi(6, 3, 3, 42);
    auto H = build_H(6, psi, P);
    // independent oracle: brute-force every triple from the raw table
    long long count = 0;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            for (int c = b + 1; c < 6; ++c) {
                int s1 = psi.table.at({b, c});
                int s2 = psi.table.at({a, c});
                int s3 = psi.table.at({a, b});
                bool in = (s1 == 1 && s2 == 2 && s3 == 3);
                CHECK(H.has_edge({a, b, c}) == in);
                if (in) ++count;
            }
    CHECK(static_cast<long long>(H.edges.size()) == count);
}

TEST_CASE("vanishing palette output is vanishing under the identity") {
    for (std::uint64_t seed : {0ULL, 1ULL, 2ULL}) {
        auto psi = sample_psi(15, 3, 3, seed);
        auto H = build_H(15, psi, vanishing_palette(3));
        CHECK(is_vanishing(H, Ordering::identity(15)));
        // subgraph closure: induced restriction keeps the property
        std::vector<VertexSet> sub;
        for (const auto& e : H.edges)
            if (e.back() < 10) sub.push_back(e);
        CHECK(is_vanishing(Hypergraph::create(3, 10, sub), Ordering::identity(10)));
    }
}

TEST_CASE("freeness verification reports failures with witnesses") {
    auto P = vanishing_palette(3);
    auto single = Hypergraph::create(3, 3, {{0, 1, 2}});
    auto rep = verify_palette_avoids(P, single, 20, 10, 3);
    CHECK(!rep.all_f_free);  // single edges embed whenever H is non-empty
    REQUIRE(rep.counterexample.has_value());
    const auto& cx = *rep.counterexample;
    auto H = build_H(20, cx.psi, P);
    CHECK(verify_embedding(single, H, cx.embedding));

    auto good = verify_palette_avoids(P, family_F(3, 1), 15, 5, 0);
    CHECK(good.all_f_free);
    CHECK(good.trials.size() == 5);
}

TEST_CASE("palette JSON round trip") {
    auto P = conj_palette(4, 1, 3);
    nlohmann::json j = P;
    auto back = j.get<Palette>();
    CHECK(back.k == P.k);
    CHECK(back.r == P.r);
    CHECK(back.tuples == P.tuples);
}
