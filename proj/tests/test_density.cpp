#include <doctest.h>

#include <cmath>
#include <set>

#include <nlohmann/json.hpp>

#include "turan/combinatorics.hpp"
#include "turan/density.hpp"

using namespace turan;

namespace {

Hypergraph complete_graph(int k, int n) {
    std::vector<VertexSet> edges;
    for_each_subset(n, k, [&](const VertexSet& e) { edges.push_back(e); });
    return Hypergraph::create(k, n, std::move(edges));
}

// Independent margin evaluation, written as plainly as possible.
double naive_margin(const Hypergraph& H, const WitnessGraph& G, const DensitySpec& spec) {
    std::set<VertexSet> ges(G.edges.begin(), G.edges.end());
    long long cliques = 0, inside = 0;
    for_each_subset(H.n, H.k, [&](const VertexSet& s) {
        bool clique = true;
        for_each_subset(H.k, G.j, [&](const std::vector<int>& idx) {
            VertexSet sub;
            for (int i : idx) sub.push_back(s[i]);
            if (!ges.count(sub)) clique = false;
        });
        if (clique) {
            ++cliques;
            if (H.has_edge(s)) ++inside;
        }
    });
    double nk = 1;
    for (int i = 0; i < H.k; ++i) nk *= H.n;
    return inside - (spec.d * cliques - spec.mu * nk);
}

}  // namespace

TEST_CASE("clique counting") {
    // full 1-graph: C(n,3) cliques
    std::vector<VertexSet> marks;
    for (int v = 0; v < 6; ++v) marks.push_back({v});
    CHECK(count_cliques(WitnessGraph::create(1, 6, marks), 3) == 20);
    // 4 marked vertices
    CHECK(count_cliques(WitnessGraph::create(1, 6, {{0}, {2}, {3}, {5}}), 3) == 4);
    // 5-cycle has no triangle
    CHECK(count_cliques(
              WitnessGraph::create(2, 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}), 3) == 0);
    // 0-graphs: full vs empty
    CHECK(count_cliques(WitnessGraph::create(0, 5, {{}}), 3) == 10);
    CHECK(count_cliques(WitnessGraph::create(0, 5, {}), 3) == 0);
    CHECK_THROWS_AS(count_cliques(WitnessGraph::create(2, 5, {}), 2), std::invalid_argument);
}

TEST_CASE("clique counting agrees with subset enumeration") {
    Rng rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        int j = 1 + static_cast<int>(rng.below(2));
        std::vector<VertexSet> edges;
        for_each_subset(8, j, [&](const VertexSet& s) {
            if (rng.coin()) edges.push_back(s);
        });
        auto G = WitnessGraph::create(j, 8, edges);
        std::set<VertexSet> es(G.edges.begin(), G.edges.end());
        long long oracle = 0;
        for_each_subset(8, 3, [&](const VertexSet& s) {
            bool all = true;
            for_each_subset(3, j, [&](const std::vector<int>& idx) {
                VertexSet sub;
                for (int i : idx) sub.push_back(s[i]);
                if (!es.count(sub)) all = false;
            });
            if (all) ++oracle;
        });
        CHECK(count_cliques(G, 3) == oracle);
    }
}

TEST_CASE("exact denseness checks") {
    auto K = complete_graph(3, 6);
    auto res = check_j_dense(K, {1.0, 0.01, 1}, DenseMode::exact, 10, 0);
    CHECK(res.verdict == DenseVerdict::holds);
    CHECK(res.witnesses_tried == 64);

    auto empty = Hypergraph::create(3, 6, {});
    CHECK(check_j_dense(empty, {0.0, 0.5, 1}, DenseMode::exact, 10, 0).verdict ==
          DenseVerdict::holds);

    // dense threshold on an empty graph must be violated, and the witness
    // must check out under an independent evaluation
    auto bad = check_j_dense(empty, {0.9, 0.001, 1}, DenseMode::exact, 10, 0);
    REQUIRE(bad.verdict == DenseVerdict::violated);
    REQUIRE(bad.witness.has_value());
    CHECK(naive_margin(empty, *bad.witness, {0.9, 0.001, 1}) < 0);
    CHECK(bad.margin == doctest::Approx(naive_margin(empty, *bad.witness, {0.9, 0.001, 1})));

    // over-budget enumeration stays honest
    CHECK(check_j_dense(K, {1.0, 0.01, 1}, DenseMode::exact, 3, 0).verdict ==
          DenseVerdict::unknown);
}

TEST_CASE("sampled mode never claims holds") {
    auto K = complete_graph(3, 6);
    auto res = check_j_dense(K, {1.0, 0.01, 1}, DenseMode::sampled, 5, 0);
    CHECK(res.verdict == DenseVerdict::unknown);

    auto empty = Hypergraph::create(3, 6, {});
    auto bad = check_j_dense(empty, {0.9, 0.001, 1}, DenseMode::sampled, 5, 0);
    REQUIRE(bad.verdict == DenseVerdict::violated);
    CHECK(naive_margin(empty, *bad.witness, {0.9, 0.001, 1}) < 0);
}

TEST_CASE("denseness is inherited by derived higher-uniformity witnesses") {
    // if no 1-graph violates, the 2-graphs arising as clique-expansions of
    // 1-graphs cannot violate either (they induce the same clique sets)
    Rng rng(37);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<VertexSet> edges;
        for_each_subset(6, 3, [&](const VertexSet& e) {
            if (rng.coin()) edges.push_back(e);
        });
        auto H = Hypergraph::create(3, 6, edges);
        DensitySpec spec1{0.2, 0.05, 1};
        if (check_j_dense(H, spec1, DenseMode::exact, 10, 0).verdict != DenseVerdict::holds)
            continue;
        for_each_subset(6, 4, [&](const VertexSet& verts) {
            std::vector<VertexSet> marks, pairs;
            for (int v : verts) marks.push_back({v});
            for_each_subset(6, 2, [&](const VertexSet& p) {
                if (std::binary_search(verts.begin(), verts.end(), p[0]) &&
                    std::binary_search(verts.begin(), verts.end(), p[1]))
                    pairs.push_back(p);
            });
            auto G2 = WitnessGraph::create(2, 6, pairs);
            CHECK(naive_margin(H, G2, {0.2, 0.05, 2}) >= 0);
        });
    }
}

TEST_CASE("edge density") {
    CHECK(edge_density(complete_graph(3, 6)) == Rational(1));
    CHECK(edge_density(Hypergraph::create(3, 6, {})) == Rational(0));
    CHECK(edge_density(tight_cycle(3, 5)) == Rational(1, 2));
    CHECK_THROWS_AS(edge_density(Hypergraph::create(4, 3, {})), std::invalid_argument);
}

TEST_CASE("directed-family checks") {
    auto K = complete_graph(3, 5);
    // mu n^k = 125 >= |K(G)| for any family, so no family can violate; note
    // the tuple counts range over all of V^k including repeated vertices
    auto res = check_kj_dense(K, {0.5, 1.0, 1}, 10, 0);
    CHECK(res.verdict == DenseVerdict::unknown);
    CHECK(res.samples_tried == 10);

    auto empty = Hypergraph::create(3, 5, {});
    auto bad = check_kj_dense(empty, {0.9, 0.0001, 2}, 10, 0);
    CHECK(bad.verdict == DenseVerdict::violated);
    CHECK(bad.margin < 0);
    CHECK_THROWS_AS(check_kj_dense(K, {0.5, 0.01, 0}, 1, 0), std::invalid_argument);
}

TEST_CASE("concentration experiment") {
    auto P = vanishing_palette(3);
    auto rep = concentration_experiment(3, 12, P, 5, 10, 0.02, 0);
    CHECK(rep.checks == 50);
    CHECK(rep.violations == 0);
    CHECK(rep.worst_margin >= 0);
    CHECK(rep.azuma_bound > 0);
    CHECK(rep.azuma_bound < 1);

    // huge slack makes the constraint vacuous
    auto lax = concentration_experiment(3, 10, P, 2, 5, 100.0, 0);
    CHECK(lax.violations == 0);
}

TEST_CASE("density JSON round trips") {
    auto G = WitnessGraph::create(1, 5, {{0}, {3}});
    nlohmann::json j = G;
    auto back = j.get<WitnessGraph>();
    CHECK(back.j == G.j);
    CHECK(back.n == G.n);
    CHECK(back.edges == G.edges);
}
