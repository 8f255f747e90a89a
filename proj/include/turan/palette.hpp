#ifndef TURAN_PALETTE_HPP
#define TURAN_PALETTE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "turan/hypergraph.hpp"
#include "turan/rational.hpp"

namespace turan {

// A set of color signatures in [1,r]^k. Together with a coloring of the
// (k-1)-subsets it defines a k-graph: a k-set is an edge iff its signature
// (color of the set minus its ell-th smallest vertex, ell = 1..k) is listed.
struct Palette {
    int k = 0;
    int r = 0;
    std::vector<std::vector<int>> tuples;  // sorted, deduplicated

    static Palette create(int k, int r, std::vector<std::vector<int>> tuples);
    bool contains(const std::vector<int>& signature) const;
};

// |tuples| / r^k, exact.
Rational lower_bound(const Palette& P);

// Coloring of all (k-1)-subsets of [0,n) with colors in [1,r]. Materialized
// as a table while C(n,k-1) stays small; past the cutoff colors come from a
// keyed hash of the sorted subset. Either way fully determined by the seed.
struct ColoringFunction {
    int n = 0;
    int k = 0;
    int r = 0;
    std::uint64_t seed = 0;
    bool materialized = true;
    std::map<VertexSet, int> table;

    int color(const VertexSet& s) const;
};

ColoringFunction sample_psi(int n, int r, int k, std::uint64_t seed);

Hypergraph build_H(int n, const ColoringFunction& psi, const Palette& P);

// r = k, single tuple (1,...,k): the random-partition construction.
Palette vanishing_palette(int k);

// r = k+1, three tuples: (1..k) and (1..k) with position i (resp. j)
// replaced by k+1.
Palette conj_palette(int k, int i, int j);

struct PaletteTrial {
    std::uint64_t seed = 0;
    Rational density;  // edge density of the generated H
    bool f_free = false;
};

struct PaletteCounterexample {
    int trial = -1;
    ColoringFunction psi;
    Embedding embedding;  // copy of F found inside H
};

struct PaletteAvoidReport {
    bool all_f_free = true;
    std::vector<PaletteTrial> trials;
    std::optional<PaletteCounterexample> counterexample;  // first failure
};

// Runs `trials` independent colorings (seed derived per trial index), builds
// H each time and tests F-freeness. A failure is the interesting outcome:
// the coloring and the embedding of F are kept for serialization.
PaletteAvoidReport verify_palette_avoids(const Palette& P, const Hypergraph& F,
                                         int n, int trials, std::uint64_t seed);

void to_json(nlohmann::json& j, const Palette& p);
void from_json(const nlohmann::json& j, Palette& p);
void to_json(nlohmann::json& j, const ColoringFunction& psi);
void to_json(nlohmann::json& j, const PaletteAvoidReport& rep);

}  // namespace turan

#endif
