#ifndef TURAN_DENSITY_HPP
#define TURAN_DENSITY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "turan/hypergraph.hpp"
#include "turan/palette.hpp"
#include "turan/rational.hpp"

namespace turan {

// Parameters of the denseness inequality |K_k(G) cap E| >= d|K_k(G)| - mu n^k.
struct DensitySpec {
    double d = 0.0;
    double mu = 0.0;
    int j = 1;
};

// A j-uniform witness graph on [0,n). j=1 edges are singletons (a marked
// vertex subset); j=0 has at most the empty edge, so the two 0-graphs are
// edges = {} and edges = {{}}.
struct WitnessGraph {
    int j = 0;
    int n = 0;
    std::vector<VertexSet> edges;

    static WitnessGraph create(int j, int n, std::vector<VertexSet> edges);
};

// Number of k-subsets of [0,n) all of whose j-subsets are edges of G.
long long count_cliques(const WitnessGraph& G, int k);

enum class DenseVerdict { holds, violated, unknown };

struct DensityCheckResult {
    DenseVerdict verdict = DenseVerdict::unknown;
    std::optional<WitnessGraph> witness;  // violating G, when found
    double margin = 0.0;                  // lhs - rhs for the witness
    long long witnesses_tried = 0;
};

enum class DenseMode { exact, sampled };

// Exact mode enumerates every j-graph when C(n,j) <= budget bits; it alone
// may answer `holds`. Sampled mode draws `budget` random witnesses, each
// sharpened by greedy flips (3 restarts), and answers `violated` or
// `unknown` -- never `holds`, since absence of a found witness proves nothing.
DensityCheckResult check_j_dense(const Hypergraph& H, const DensitySpec& spec,
                                 DenseMode mode, long long budget, std::uint64_t seed);

struct KjCheckResult {
    DenseVerdict verdict = DenseVerdict::unknown;
    int sample_index = -1;       // violating sample, when found
    std::uint64_t sample_seed = 0;
    double margin = 0.0;
    long long samples_tried = 0;
};

// Directed-family variant: for each j-subset J of [k] an independent random
// set G_J of ordered j-tuples (membership decided by a keyed hash, so a
// sample is reproducible from its seed alone). Counts run over ordered
// k-tuples. Sampling only; `holds` is never claimed.
KjCheckResult check_kj_dense(const Hypergraph& H, const DensitySpec& spec,
                             int samples, std::uint64_t seed);

Rational edge_density(const Hypergraph& H);

struct ConcentrationReport {
    long long checks = 0;
    long long violations = 0;
    double violation_rate = 0.0;
    double worst_margin = 0.0;  // minimum of lhs - rhs over all checks
    double azuma_bound = 0.0;   // exp(-mu^2 n^{2k} / (2 C(n,k-1) n^2))
};

// Builds a fresh palette graph per trial and tests the denseness inequality
// at d = lower_bound(P) against random (k-2)-uniform witnesses, reporting
// the empirical violation rate next to the martingale tail bound.
ConcentrationReport concentration_experiment(int k, int n, const Palette& P,
                                             int trials, int witnesses_per_trial,
                                             double mu, std::uint64_t seed);

void to_json(nlohmann::json& j, const WitnessGraph& g);
void from_json(const nlohmann::json& j, WitnessGraph& g);
void to_json(nlohmann::json& j, const DensityCheckResult& r);
void to_json(nlohmann::json& j, const KjCheckResult& r);
void to_json(nlohmann::json& j, const ConcentrationReport& r);

}  // namespace turan

#endif
