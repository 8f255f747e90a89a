#include "turan/palette.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "turan/combinatorics.hpp"

namespace turan {

namespace {

// Table cutoff: beyond this many (k-1)-subsets, colors come from the keyed
// hash instead of a materialized table.
constexpr long long kMaterializeLimit = 10'000'000;

int hashed_color(const VertexSet& s, std::uint64_t seed, int r) {
    std::uint64_t h = splitmix64(seed ^ 0x7c0de5a6f3b21e45ULL);
    for (int v : s) h = splitmix64(h ^ static_cast<std::uint64_t>(v + 1));
    // rejection over a per-set counter stream to stay exactly uniform
    Rng rng(h);
    return static_cast<int>(rng.below(static_cast<std::uint64_t>(r))) + 1;
}

}  // namespace

Palette Palette::create(int k, int r, std::vector<std::vector<int>> tuples) {
    if (k < 2) throw std::invalid_argument("palette uniformity k must be >= 2");
    if (r < 1) throw std::invalid_argument("palette needs r >= 1 colors");
    for (const auto& t : tuples) {
        if (static_cast<int>(t.size()) != k)
            throw std::invalid_argument("palette tuple length differs from k");
        for (int c : t)
            if (c < 1 || c > r) throw std::invalid_argument("palette color out of [1,r]");
    }
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
    Palette P;
    P.k = k;
    P.r = r;
    P.tuples = std::move(tuples);
    return P;
}

bool Palette::contains(const std::vector<int>& signature) const {
    return std::binary_search(tuples.begin(), tuples.end(), signature);
}

Rational lower_bound(const Palette& P) {
    return Rational(static_cast<long long>(P.tuples.size())) /
           pow_rational(Rational(P.r), P.k);
}

int ColoringFunction::color(const VertexSet& s) const {
    if (static_cast<int>(s.size()) != k - 1)
        throw std::invalid_argument("coloring queried on a set of the wrong size");
    if (materialized) {
        auto it = table.find(s);
        if (it == table.end())
            throw std::invalid_argument("coloring queried outside its domain");
        return it->second;
    }
    return hashed_color(s, seed, r);
}

ColoringFunction sample_psi(int n, int r, int k, std::uint64_t seed) {
    if (n < k - 1) throw std::invalid_argument("sample_psi needs n >= k-1");
    if (r < 1) throw std::invalid_argument("sample_psi needs r >= 1");
    ColoringFunction psi;
    psi.n = n;
    psi.k = k;
    psi.r = r;
    psi.seed = seed;
    psi.materialized = binomial(n, k - 1) <= kMaterializeLimit;
    if (psi.materialized) {
        Rng rng(seed);
        for_each_subset(n, k - 1, [&](const VertexSet& s) {
            psi.table[s] = static_cast<int>(rng.below(static_cast<std::uint64_t>(r))) + 1;
        });
    }
    return psi;
}

Hypergraph build_H(int n, const ColoringFunction& psi, const Palette& P) {
    if (psi.r != P.r) throw std::invalid_argument("coloring and palette disagree on r");
    if (psi.k != P.k) throw std::invalid_argument("coloring and palette disagree on k");
    if (psi.n < n) throw std::invalid_argument("coloring domain smaller than n");
    const int k = P.k;
    std::vector<VertexSet> edges;
    std::vector<int> sig(k);
    for_each_subset(n, k, [&](const VertexSet& e) {
        VertexSet sub(k - 1);
        for (int omit = 0; omit < k; ++omit) {
            int w = 0;
            for (int idx = 0; idx < k; ++idx)
                if (idx != omit) sub[w++] = e[idx];
            sig[omit] = psi.color(sub);
        }
        if (P.contains(sig)) edges.push_back(e);
    });
    return Hypergraph::create(k, n, std::move(edges));
}

Palette vanishing_palette(int k) {
    if (k < 3) throw std::invalid_argument("vanishing_palette needs k >= 3");
    std::vector<int> t(k);
    for (int i = 0; i < k; ++i) t[i] = i + 1;
    return Palette::create(k, k, {t});
}

Palette conj_palette(int k, int i, int j) {
    if (k < 3) throw std::invalid_argument("conj_palette needs k >= 3");
    if (i < 1 || j > k || i >= j) throw std::invalid_argument("conj_palette needs 1 <= i < j <= k");
    std::vector<int> base(k);
    for (int p = 0; p < k; ++p) base[p] = p + 1;
    auto swapped = [&](int pos) {
        auto t = base;
        t[pos - 1] = k + 1;
        return t;
    };
    return Palette::create(k, k + 1, {base, swapped(i), swapped(j)});
}

PaletteAvoidReport verify_palette_avoids(const Palette& P, const Hypergraph& F,
                                         int n, int trials, std::uint64_t seed) {
    if (F.k != P.k) throw std::invalid_argument("F and palette disagree on k");
    PaletteAvoidReport rep;
    for (int t = 0; t < trials; ++t) {
        std::uint64_t trial_seed = derive_seed(seed, static_cast<std::uint64_t>(t));
        ColoringFunction psi = sample_psi(n, P.r, P.k, trial_seed);
        Hypergraph H = build_H(n, psi, P);
        PaletteTrial trial;
        trial.seed = trial_seed;
        trial.density = Rational(static_cast<long long>(H.edges.size()), binomial(n, P.k));
        auto emb = find_embedding(F, H);
        trial.f_free = !emb.has_value();
        if (emb && rep.all_f_free) {
            rep.all_f_free = false;
            rep.counterexample = PaletteCounterexample{t, psi, *emb};
        }
        rep.trials.push_back(std::move(trial));
    }
    return rep;
}

void to_json(nlohmann::json& j, const Palette& p) {
    j = nlohmann::json{{"k", p.k}, {"r", p.r}, {"tuples", p.tuples}};
}

void from_json(const nlohmann::json& j, Palette& p) {
    p = Palette::create(j.at("k").get<int>(), j.at("r").get<int>(),
                        j.at("tuples").get<std::vector<std::vector<int>>>());
}

void to_json(nlohmann::json& j, const ColoringFunction& psi) {
    j = nlohmann::json{{"n", psi.n},
                       {"k", psi.k},
                       {"r", psi.r},
                       {"seed", psi.seed},
                       {"materialized", psi.materialized}};
    if (psi.materialized) {
        nlohmann::json table = nlohmann::json::array();
        for (const auto& [s, c] : psi.table)
            table.push_back(nlohmann::json{{"set", s}, {"color", c}});
        j["table"] = std::move(table);
    }
}

void to_json(nlohmann::json& j, const PaletteAvoidReport& rep) {
    nlohmann::json trials = nlohmann::json::array();
    for (const auto& t : rep.trials) {
        trials.push_back(nlohmann::json{{"seed", t.seed},
                                        {"density", to_string(t.density)},
                                        {"density_value", to_double(t.density)},
                                        {"f_free", t.f_free}});
    }
    j = nlohmann::json{{"all_f_free", rep.all_f_free}, {"trials", std::move(trials)}};
    if (rep.counterexample) {
        j["counterexample"] = nlohmann::json{{"trial", rep.counterexample->trial},
                                             {"psi", rep.counterexample->psi},
                                             {"embedding", rep.counterexample->embedding}};
    } else {
        j["counterexample"] = nullptr;
    }
}

}  // namespace turan
