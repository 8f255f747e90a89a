#include "turan/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "turan/combinatorics.hpp"

namespace turan {

WitnessGraph WitnessGraph::create(int j, int n, std::vector<VertexSet> edges) {
    if (j < 0) throw std::invalid_argument("witness uniformity must be >= 0");
    if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
    for (auto& e : edges) {
        std::sort(e.begin(), e.end());
        if (static_cast<int>(e.size()) != j)
            throw std::invalid_argument("witness edge size differs from uniformity");
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw std::invalid_argument("witness edge has repeated vertices");
        if (j > 0 && (e.front() < 0 || e.back() >= n))
            throw std::invalid_argument("witness edge vertex out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    WitnessGraph G;
    G.j = j;
    G.n = n;
    G.edges = std::move(edges);
    return G;
}

long long count_cliques(const WitnessGraph& G, int k) {
    if (G.j >= k) throw std::invalid_argument("count_cliques needs j < k");
    if (G.j == 0) return G.edges.empty() ? 0 : binomial(G.n, k);
    if (G.j == 1) return binomial(static_cast<int>(G.edges.size()), k);
    std::set<VertexSet> es(G.edges.begin(), G.edges.end());
    long long count = 0;
    for_each_subset(G.n, k, [&](const VertexSet& s) {
        VertexSet sub;
        bool all = true;
        for_each_subset(k, G.j, [&](const std::vector<int>& idx) {
            if (!all) return;
            sub.clear();
            for (int i : idx) sub.push_back(s[i]);
            if (!es.count(sub)) all = false;
        });
        if (all) ++count;
    });
    return count;
}

namespace {

double pow_ll(double base, int exp) {
    double r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// lhs - rhs of the denseness inequality for a concrete witness.
double dense_margin(const Hypergraph& H, const WitnessGraph& G, const DensitySpec& spec) {
    long long cliques = count_cliques(G, H.k);
    long long inside = 0;
    if (G.j == 1) {
        std::vector<bool> in(H.n, false);
        for (const auto& e : G.edges) in[e[0]] = true;
        for (const auto& e : H.edges) {
            bool all = true;
            for (int v : e)
                if (!in[v]) { all = false; break; }
            if (all) ++inside;
        }
    } else if (G.j == 0) {
        inside = G.edges.empty() ? 0 : static_cast<long long>(H.edges.size());
    } else {
        std::set<VertexSet> es(G.edges.begin(), G.edges.end());
        VertexSet sub;
        for (const auto& e : H.edges) {
            bool all = true;
            for_each_subset(H.k, G.j, [&](const std::vector<int>& idx) {
                if (!all) return;
                sub.clear();
                for (int i : idx) sub.push_back(e[i]);
                if (!es.count(sub)) all = false;
            });
            if (all) ++inside;
        }
    }
    return static_cast<double>(inside) -
           (spec.d * static_cast<double>(cliques) - spec.mu * pow_ll(H.n, H.k));
}

WitnessGraph graph_from_mask(int j, int n, const std::vector<VertexSet>& universe,
                             const std::vector<bool>& in) {
    std::vector<VertexSet> edges;
    for (size_t i = 0; i < universe.size(); ++i)
        if (in[i]) edges.push_back(universe[i]);
    return WitnessGraph::create(j, n, std::move(edges));
}

}  // namespace

DensityCheckResult check_j_dense(const Hypergraph& H, const DensitySpec& spec,
                                 DenseMode mode, long long budget, std::uint64_t seed) {
    if (spec.j < 0 || spec.j >= H.k)
        throw std::invalid_argument("denseness needs 0 <= j <= k-1");
    DensityCheckResult out;
    auto universe = subsets(H.n, spec.j);
    const size_t U = universe.size();

    if (mode == DenseMode::exact) {
        if (static_cast<long long>(U) > budget || U >= 63) {
            out.verdict = DenseVerdict::unknown;  // enumeration out of budget
            return out;
        }
        std::vector<bool> in(U, false);
        for (unsigned long long mask = 0; mask < (1ULL << U); ++mask) {
            for (size_t i = 0; i < U; ++i) in[i] = (mask >> i) & 1;
            WitnessGraph G = graph_from_mask(spec.j, H.n, universe, in);
            double m = dense_margin(H, G, spec);
            ++out.witnesses_tried;
            if (m < 0) {
                out.verdict = DenseVerdict::violated;
                out.witness = std::move(G);
                out.margin = m;
                return out;
            }
        }
        out.verdict = DenseVerdict::holds;
        return out;
    }

    // sampled: random start, greedy margin descent, 3 restarts per sample
    for (long long s = 0; s < budget; ++s) {
        for (int restart = 0; restart < 3; ++restart) {
            Rng rng(derive_seed(seed, static_cast<std::uint64_t>(s * 3 + restart)));
            std::vector<bool> in(U);
            for (size_t i = 0; i < U; ++i) in[i] = rng.coin();
            WitnessGraph G = graph_from_mask(spec.j, H.n, universe, in);
            double cur = dense_margin(H, G, spec);
            ++out.witnesses_tried;
            for (size_t step = 0; step <= 2 * U; ++step) {
                if (cur < 0) {
                    out.verdict = DenseVerdict::violated;
                    out.witness = graph_from_mask(spec.j, H.n, universe, in);
                    out.margin = cur;
                    return out;
                }
                double best = cur;
                size_t best_flip = U;
                for (size_t i = 0; i < U; ++i) {
                    in[i] = !in[i];
                    double m = dense_margin(H, graph_from_mask(spec.j, H.n, universe, in), spec);
                    in[i] = !in[i];
                    if (m < best) {
                        best = m;
                        best_flip = i;
                    }
                }
                if (best_flip == U) break;  // local minimum
                in[best_flip] = !in[best_flip];
                cur = best;
            }
        }
    }
    out.verdict = DenseVerdict::unknown;
    return out;
}

namespace {

// Membership of an ordered j-tuple in the sampled G_J: one keyed hash bit.
bool in_family(std::uint64_t sample_seed, const std::vector<int>& J,
               const std::vector<int>& tuple) {
    std::uint64_t h = splitmix64(sample_seed ^ 0x2e1b56c9d8a47f03ULL);
    for (int i : J) h = splitmix64(h ^ static_cast<std::uint64_t>(i + 1));
    h = splitmix64(h ^ 0xa5a5a5a5a5a5a5a5ULL);
    for (int v : tuple) h = splitmix64(h ^ static_cast<std::uint64_t>(v + 1));
    return h & 1;
}

}  // namespace

KjCheckResult check_kj_dense(const Hypergraph& H, const DensitySpec& spec,
                             int samples, std::uint64_t seed) {
    if (spec.j < 1 || spec.j > H.k - 1)
        throw std::invalid_argument("directed denseness needs 1 <= j <= k-1");
    const int k = H.k, n = H.n;
    KjCheckResult out;
    auto Js = subsets(k, spec.j);  // index subsets of [k], 0-based positions

    for (int s = 0; s < samples; ++s) {
        std::uint64_t sample_seed = derive_seed(seed, static_cast<std::uint64_t>(s));
        long long tuples_ok = 0, edges_ok = 0;
        std::vector<int> tup(k, 0);
        std::vector<int> proj(spec.j);
        // walk all ordered k-tuples in V^k
        while (true) {
            bool all = true;
            for (const auto& J : Js) {
                for (int i = 0; i < spec.j; ++i) proj[i] = tup[J[i]];
                if (!in_family(sample_seed, J, proj)) { all = false; break; }
            }
            if (all) {
                ++tuples_ok;
                VertexSet e(tup.begin(), tup.end());
                std::sort(e.begin(), e.end());
                if (std::adjacent_find(e.begin(), e.end()) == e.end() && H.has_edge(e))
                    ++edges_ok;
            }
            int pos = k - 1;
            while (pos >= 0 && tup[pos] == n - 1) tup[pos--] = 0;
            if (pos < 0) break;
            ++tup[pos];
        }
        double margin = static_cast<double>(edges_ok) -
                        (spec.d * static_cast<double>(tuples_ok) - spec.mu * pow_ll(n, k));
        ++out.samples_tried;
        if (margin < 0) {
            out.verdict = DenseVerdict::violated;
            out.sample_index = s;
            out.sample_seed = sample_seed;
            out.margin = margin;
            return out;
        }
    }
    out.verdict = DenseVerdict::unknown;
    return out;
}

Rational edge_density(const Hypergraph& H) {
    if (H.n < H.k) throw std::invalid_argument("edge_density needs n >= k");
    return Rational(static_cast<long long>(H.edges.size()), binomial(H.n, H.k));
}

ConcentrationReport concentration_experiment(int k, int n, const Palette& P,
                                             int trials, int witnesses_per_trial,
                                             double mu, std::uint64_t seed) {
    if (P.k != k) throw std::invalid_argument("palette uniformity differs from k");
    ConcentrationReport rep;
    rep.worst_margin = std::numeric_limits<double>::infinity();
    DensitySpec spec{to_double(lower_bound(P)), mu, k - 2};
    auto universe = subsets(n, k - 2);
    for (int t = 0; t < trials; ++t) {
        std::uint64_t trial_seed = derive_seed(seed, static_cast<std::uint64_t>(t));
        ColoringFunction psi = sample_psi(n, P.r, P.k, trial_seed);
        Hypergraph H = build_H(n, psi, P);
        for (int w = 0; w < witnesses_per_trial; ++w) {
            Rng rng(derive_seed(trial_seed, static_cast<std::uint64_t>(w) + 0x100000ULL));
            std::vector<bool> in(universe.size());
            for (size_t i = 0; i < in.size(); ++i) in[i] = rng.coin();
            std::vector<VertexSet> edges;
            for (size_t i = 0; i < in.size(); ++i)
                if (in[i]) edges.push_back(universe[i]);
            WitnessGraph G = WitnessGraph::create(k - 2, n, std::move(edges));
            double m = dense_margin(H, G, spec);
            ++rep.checks;
            if (m < 0) ++rep.violations;
            rep.worst_margin = std::min(rep.worst_margin, m);
        }
    }
    rep.violation_rate =
        rep.checks ? static_cast<double>(rep.violations) / static_cast<double>(rep.checks) : 0.0;
    rep.azuma_bound = std::exp(-(mu * mu * pow_ll(n, 2 * k)) /
                               (2.0 * static_cast<double>(binomial(n, k - 1)) * n * n));
    return rep;
}

void to_json(nlohmann::json& j, const WitnessGraph& g) {
    j = nlohmann::json{{"j", g.j}, {"n", g.n}, {"edges", g.edges}};
}

void from_json(const nlohmann::json& j, WitnessGraph& g) {
    g = WitnessGraph::create(j.at("j").get<int>(), j.at("n").get<int>(),
                             j.at("edges").get<std::vector<VertexSet>>());
}

namespace {

const char* verdict_name(DenseVerdict v) {
    switch (v) {
        case DenseVerdict::holds: return "holds";
        case DenseVerdict::violated: return "violated";
        default: return "unknown";
    }
}

}  // namespace

void to_json(nlohmann::json& j, const DensityCheckResult& r) {
    j = nlohmann::json{{"verdict", verdict_name(r.verdict)},
                       {"margin", r.margin},
                       {"witnesses_tried", r.witnesses_tried}};
    if (r.witness)
        j["witness"] = *r.witness;
    else
        j["witness"] = nullptr;
}

void to_json(nlohmann::json& j, const KjCheckResult& r) {
    j = nlohmann::json{{"verdict", verdict_name(r.verdict)},
                       {"sample_index", r.sample_index},
                       {"sample_seed", r.sample_seed},
                       {"margin", r.margin},
                       {"samples_tried", r.samples_tried}};
}

void to_json(nlohmann::json& j, const ConcentrationReport& r) {
    j = nlohmann::json{{"checks", r.checks},
                       {"violations", r.violations},
                       {"violation_rate", r.violation_rate},
                       {"worst_margin", r.worst_margin},
                       {"azuma_bound", r.azuma_bound}};
}

}  // namespace turan
