// End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <vector>

#include "turan/combinatorics.hpp"
#include "turan/conditions.hpp"
#include "turan/density.hpp"
#include "turan/hypergraph.hpp"
#include "turan/palette.hpp"
#include "turan/reduced.hpp"
#include "turan/vanishing.hpp"

using namespace turan;

namespace {

bool all_pass = true;

void report(int idx, bool ok, const char* what, double seconds) {
    std::printf("criterion %d: %s - %s (%.1f s)\n", idx, ok ? "PASS" : "FAIL", what,
                seconds);
    std::fflush(stdout);
    if (!ok) all_pass = false;
}

template <typename Fn>
void run(int idx, const char* what, Fn fn) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = fn();
    } catch (const std::exception& e) {
        std::printf("criterion %d: exception: %s\n", idx, e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(idx, ok, what, secs);
}

Hypergraph induced(const Hypergraph& H, const VertexSet& verts) {
    std::vector<int> pos(H.n, -1);
    for (size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i);
    std::vector<VertexSet> edges;
    for (const auto& e : H.edges) {
        VertexSet img;
        for (int v : e) {
            if (pos[v] < 0) break;
            img.push_back(pos[v]);
        }
        if (img.size() == e.size()) edges.push_back(img);
    }
    return Hypergraph::create(H.k, static_cast<int>(verts.size()), std::move(edges));
}

double mean_density(const std::vector<PaletteTrial>& trials) {
    double s = 0;
    for (const auto& t : trials) s += to_double(t.density);
    return s / static_cast<double>(trials.size());
}

// 3 standard errors of the trial mean around the target.
bool mean_close(const std::vector<PaletteTrial>& trials, double target) {
    double m = mean_density(trials);
    double var = 0;
    for (const auto& t : trials) {
        double d = to_double(t.density) - m;
        var += d * d;
    }
    var /= static_cast<double>(trials.size() - 1);
    double se = std::sqrt(var / static_cast<double>(trials.size()));
    return std::fabs(m - target) <= 3 * se;
}

// Exhaustive reduced-map existence oracle (same spirit as the unit tests,
// kept independent of the library search).
bool map_exists_brute_force(const Hypergraph& F, const ReducedGraph& A) {
    std::vector<int> active;
    auto deg = F.degrees();
    for (int v = 0; v < F.n; ++v)
        if (deg[v] > 0) active.push_back(v);
    auto shadow_sets = shadow(F);

    std::vector<int> phi(F.n, 0);
    std::function<bool(size_t)> try_phi = [&](size_t vi) -> bool {
        if (vi == active.size()) {
            std::function<bool(size_t, ReducedMap&)> try_psi = [&](size_t si,
                                                                   ReducedMap& rm) -> bool {
                if (si == shadow_sets.size()) return verify_reduced_map(F, A, rm);
                IndexSet X;
                for (int v : shadow_sets[si]) X.push_back(phi[v]);
                std::sort(X.begin(), X.end());
                if (std::adjacent_find(X.begin(), X.end()) != X.end()) return false;
                for (int cand : A.class_of(X)) {
                    rm.psi[shadow_sets[si]] = cand;
                    if (try_psi(si + 1, rm)) return true;
                }
                rm.psi.erase(shadow_sets[si]);
                return false;
            };
            ReducedMap rm;
            rm.phi = phi;
            return try_psi(0, rm);
        }
        for (int idx = 0; idx < A.m; ++idx) {
            phi[active[vi]] = idx;
            if (try_phi(vi + 1)) return true;
        }
        phi[active[vi]] = 0;
        return false;
    };
    return try_phi(0);
}

ReducedGraph random_reduced(int k, int m, int class_size, Rng& rng) {
    std::map<IndexSet, std::vector<int>> classes;
    int next = 0;
    for_each_subset(m, k - 1, [&](const IndexSet& X) {
        std::vector<int>& cls = classes[X];
        int sz = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(class_size)));
        for (int i = 0; i < sz; ++i) cls.push_back(next++);
    });
    std::map<IndexSet, std::vector<VertexSet>> constituents;
    for_each_subset(m, k, [&](const IndexSet& Y) {
        std::vector<const std::vector<int>*> parts;
        for (int ell = 0; ell < k; ++ell) {
            IndexSet X;
            for (int p = 0; p < k; ++p)
                if (p != ell) X.push_back(Y[p]);
            parts.push_back(&classes.at(X));
        }
        std::vector<VertexSet>& es = constituents[Y];
        std::vector<size_t> pick(static_cast<size_t>(k), 0);
        while (true) {
            VertexSet e;
            for (int ell = 0; ell < k; ++ell) e.push_back((*parts[ell])[pick[ell]]);
            std::sort(e.begin(), e.end());
            if (rng.real() < 0.5) es.push_back(e);
            int pos = k - 1;
            while (pos >= 0 && pick[pos] + 1 == parts[pos]->size()) pick[pos--] = 0;
            if (pos < 0) break;
            ++pick[pos];
        }
    });
    return ReducedGraph::create(k, m, std::move(classes), std::move(constituents));
}

}  // namespace

int main() {
    auto F31 = family_F(3, 1);

    run(1, "k=3 family admits no vanishing ordering (search and brute force)", [&] {
        if (check_club(F31) != Tri::yes) return false;
        return !brute_force_vanishing_ordering(F31).has_value();
    });

    run(2, "k=3 family: split certificates for all 3 pairs (search and explicit)", [&] {
        auto res = check_spade(F31, false);
        if (!res.complete || res.certs.size() != 3) return false;
        for (const auto& [p, c] : res.certs) {
            if (!c.has_value()) return false;
            if (!verify_split(F31, *c, false)) return false;
        }
        for (int i = 1; i <= 3; ++i)
            for (int j = i + 1; j <= 3; ++j)
                if (!verify_split(F31, explicit_split_certificate(3, 1, i, j), false))
                    return false;
        return true;
    });

    auto F42 = family_F(4, 2);
    Verdict v42;
    run(3, "verdicts: claimed densities exactly 1/27 (k=3) and 1/256 (k=4)", [&] {
        auto v31 = compute_verdict(F31);
        if (!v31.claimed_density || *v31.claimed_density != Rational(1, 27)) return false;
        v42 = compute_verdict(F42, 1000000000LL);
        return v42.claimed_density.has_value() && *v42.claimed_density == Rational(1, 256);
    });

    run(4, "k=4 family: explicit certificates for all 6 pairs, no vanishing ordering", [&] {
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j)
                if (!verify_split(F42, explicit_split_certificate(4, 2, i, j), false))
                    return false;
        return v42.club == Tri::yes;  // budgeted at 1e9 nodes inside criterion 3
    });

    run(5, "search matches the 120-ordering oracle on all 1024 3-graphs on 5 vertices", [&] {
        auto all_edges = subsets(5, 3);
        for (unsigned mask = 0; mask < 1024; ++mask) {
            std::vector<VertexSet> edges;
            for (int b = 0; b < 10; ++b)
                if (mask & (1u << b)) edges.push_back(all_edges[b]);
            auto F = Hypergraph::create(3, 5, std::move(edges));
            bool fast = find_vanishing_ordering(F).status == SearchStatus::found;
            bool brute = brute_force_vanishing_ordering(F).has_value();
            if (fast != brute) return false;
        }
        return true;
    });

    run(6, "digraph certificates round-trip on 200 random vanishing 3-graphs", [&] {
        Rng rng(1006);
        int done = 0;
        for (int attempt = 0; attempt < 5000 && done < 200; ++attempt) {
            int n = 4 + static_cast<int>(rng.below(3));
            std::vector<VertexSet> edges;
            for_each_subset(n, 3, [&](const VertexSet& e) {
                if (rng.real() < 0.3) edges.push_back(e);
            });
            auto F = Hypergraph::create(3, n, std::move(edges));
            if (F.edges.empty()) continue;
            auto res = find_vanishing_ordering(F);
            if (res.status != SearchStatus::found) continue;
            ++done;
            auto D = build_type_digraph(F, *res.ordering);
            if (!acyclic_ordering(transitive_digraph(D, 0)).has_value()) return false;
            auto back = digraph_to_ordering(F, D, 0);
            if (!back.has_value() || !is_vanishing(F, *back)) return false;
        }
        return done == 200;
    });

    run(7, "palette graphs: vanishing, F-free, densities near 1/27 and 3/64", [&] {
        auto P = vanishing_palette(3);
        auto rep = verify_palette_avoids(P, F31, 40, 20, 2024);
        if (!rep.all_f_free || rep.trials.size() != 20) return false;
        for (const auto& t : rep.trials) {
            auto H = build_H(40, sample_psi(40, P.r, 3, t.seed), P);
            if (!is_vanishing(H, Ordering::identity(40))) return false;
        }
        if (!mean_close(rep.trials, 1.0 / 27.0)) return false;

        auto C = conj_palette(3, 1, 2);
        std::vector<PaletteTrial> ctrials;
        Rng pick(1007);
        int sub_checked = 0;
        for (int t = 0; t < 20; ++t) {
            auto seed = derive_seed(2025, static_cast<std::uint64_t>(t));
            auto H = build_H(40, sample_psi(40, C.r, 3, seed), C);
            PaletteTrial tr;
            tr.seed = seed;
            tr.density = edge_density(H);
            ctrials.push_back(tr);
            // induced subhypergraphs must admit star certificates at (1,2)
            while (sub_checked < 50 && sub_checked < 3 * (t + 1)) {
                VertexSet verts;
                std::set<int> seen;
                while (seen.size() < 8) seen.insert(static_cast<int>(pick.below(40)));
                verts.assign(seen.begin(), seen.end());
                auto sub = induced(H, verts);
                auto res = check_spade(sub, true, -1, std::make_pair(1, 2));
                auto it = res.certs.find({1, 2});
                if (it == res.certs.end() || !it->second.has_value()) return false;
                if (!verify_split(sub, *it->second, true)) return false;
                ++sub_checked;
            }
        }
        return sub_checked == 50 && mean_close(ctrials, 3.0 / 64.0);
    });

    run(8, "no denseness violations across 100 trials x 50 witnesses at n=30", [&] {
        auto rep = concentration_experiment(3, 30, vanishing_palette(3), 100, 50, 0.02, 2026);
        return rep.checks == 5000 && rep.violations == 0 && rep.worst_margin >= 0;
    });

    run(9, "reduced maps: oracle agreement, anchor construction, extension counts", [&] {
        // search vs. brute force on 200 random small instances
        Rng rng(1009);
        for (int trial = 0; trial < 200; ++trial) {
            int m = 3 + static_cast<int>(rng.below(2));
            auto A = random_reduced(3, m, 2, rng);
            std::vector<VertexSet> edges;
            for_each_subset(4, 3, [&](const VertexSet& e) {
                if (rng.real() < 0.45) edges.push_back(e);
            });
            auto F = Hypergraph::create(3, 4, std::move(edges));
            auto res = find_reduced_map(F, A);
            if ((res.status == SearchStatus::found) != map_exists_brute_force(F, A))
                return false;
            if (res.map && !verify_reduced_map(F, A, *res.map)) return false;
        }

        // anchor-driven construction on an instance holding only anchor edges
        for (auto [ip, jp] : {std::pair{1, 2}, {1, 3}, {2, 3}}) {
            std::map<IndexSet, std::vector<int>> classes;
            AnchorFamily an;
            an.i = ip;
            an.j = jp;
            int next = 0;
            for_each_subset(8, 2, [&](const IndexSet& X) {
                std::vector<int>& cls = classes[X];
                for (int q = 0; q < 5; ++q) cls.push_back(next++);
                an.alpha[X] = {cls[0], cls[1], cls[2]};
                an.beta[X] = {cls[3], cls[4]};
            });
            std::map<IndexSet, std::vector<VertexSet>> constituents;
            for_each_subset(8, 3, [&](const IndexSet& Y) {
                VertexSet a1, a2;
                for (int ell = 1; ell <= 3; ++ell) {
                    IndexSet X;
                    for (int p = 0; p < 3; ++p)
                        if (p != ell - 1) X.push_back(Y[p]);
                    a1.push_back(an.alpha.at(X)[ell - 1]);
                    if (ell < jp)
                        a2.push_back(an.beta.at(X)[ell - 1]);
                    else if (ell == jp)
                        a2.push_back(an.alpha.at(X)[ip - 1]);
                    else
                        a2.push_back(an.beta.at(X)[ell - 2]);
                }
                std::sort(a1.begin(), a1.end());
                std::sort(a2.begin(), a2.end());
                constituents[Y] = {a1, a2};
            });
            auto A = ReducedGraph::create(3, 8, std::move(classes), std::move(constituents));
            if (!verify_anchors(A, an)) return false;
            auto rm = build_reduced_map_from_anchors(F31, A, an,
                                                     explicit_split_certificate(3, 1, ip, jp));
            if (!verify_reduced_map(F31, A, rm)) return false;
        }

        // extension-counting property on 1000 precondition-satisfying instances
        Rng prng(1013);
        int done = 0;
        for (int attempt = 0; attempt < 20000 && done < 1000; ++attempt) {
            int k = 3 + static_cast<int>(prng.below(2));
            std::vector<int> sizes;
            for (int p = 0; p < k; ++p) sizes.push_back(2 + static_cast<int>(prng.below(5)));
            std::vector<std::vector<int>> edges;
            std::vector<int> e(static_cast<size_t>(k), 0);
            while (true) {
                if (prng.real() < 0.35) edges.push_back(e);
                int pos = k - 1;
                while (pos >= 0 && e[pos] == sizes[pos] - 1) e[pos--] = 0;
                if (pos < 0) break;
                ++e[pos];
            }
            if (edges.empty()) continue;
            auto H = KPartiteGraph::create(k, sizes, edges);
            int t = 1 + static_cast<int>(prng.below(static_cast<std::uint64_t>(k - 1)));
            std::vector<int> T;
            for (int p = 0; p < t; ++p) T.push_back(static_cast<int>(prng.below(sizes[p])));
            long long ext = 0, prod = 1;
            for (const auto& ed : H.edges) {
                bool match = true;
                for (int p = 0; p < t; ++p)
                    if (ed[p] != T[p]) match = false;
                if (match) ++ext;
            }
            for (int p = t; p < k; ++p) prod *= sizes[p];
            if (ext == 0) continue;
            if (lemma5_bound_check(H, T, Rational(ext, prod)) != Lemma5Status::holds)
                return false;
            ++done;
        }
        return done == 1000;
    });

    return all_pass ? 0 : 1;
}
