#include "turan/vanishing.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace turan {

Ordering Ordering::identity(int n) {
    Ordering o;
    o.perm.resize(n);
    std::iota(o.perm.begin(), o.perm.end(), 0);
    return o;
}

std::vector<int> Ordering::positions() const {
    std::vector<int> pos(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) pos[perm[i]] = static_cast<int>(i);
    return pos;
}

bool operator==(const Ordering& a, const Ordering& b) { return a.perm == b.perm; }

namespace {

void check_permutes(const Hypergraph& F, const Ordering& tau) {
    if (static_cast<int>(tau.perm.size()) != F.n)
        throw std::invalid_argument("ordering size differs from vertex count");
    std::vector<bool> seen(F.n, false);
    for (int v : tau.perm) {
        if (v < 0 || v >= F.n || seen[v])
            throw std::invalid_argument("ordering is not a permutation");
        seen[v] = true;
    }
}

// Vertices of e sorted by position under tau (pos = vertex -> position).
std::vector<int> edge_in_order(const VertexSet& e, const std::vector<int>& pos) {
    std::vector<int> v(e);
    std::sort(v.begin(), v.end(), [&](int a, int b) { return pos[a] < pos[b]; });
    return v;
}

}  // namespace

TypeAssignment type_assignment(const Hypergraph& F, const Ordering& tau) {
    check_permutes(F, tau);
    auto pos = tau.positions();
    TypeAssignment out;
    for (const auto& e : F.edges) {
        auto ordered = edge_in_order(e, pos);
        for (int ell = 1; ell <= F.k; ++ell) {
            VertexSet window;
            window.reserve(F.k - 1);
            for (int i = 0; i < F.k; ++i)
                if (i != ell - 1) window.push_back(ordered[i]);
            std::sort(window.begin(), window.end());
            out[window].insert(ell);
        }
    }
    return out;
}

bool is_vanishing(const Hypergraph& F, const Ordering& tau) {
    auto ta = type_assignment(F, tau);
    for (const auto& [set, types] : ta)
        if (types.size() != 1) return false;
    return true;
}

namespace {

// Incremental vanishing-ordering search. Conflict detection fires as soon as
// the last vertex of an edge is placed: the edge's window types are then
// fixed and merged into a refcounted shadow-set -> type table.
struct VanishSearch {
    const Hypergraph& F;
    int n, k;
    std::vector<std::vector<int>> incident;  // vertex -> edge indices
    std::vector<std::vector<int>> sub_id;    // edge -> (omitted index -> shadow id)
    int num_sids = 0;

    std::vector<int> pos;        // vertex -> position or -1
    std::vector<int> perm;       // position -> vertex
    std::vector<int> remaining;  // unplaced vertices per edge
    std::vector<int> type_val;   // shadow id -> assigned type or 0
    std::vector<int> type_cnt;   // refcount of the assignment
    long long nodes = 0;
    long long budget = -1;
    bool budget_hit = false;

    explicit VanishSearch(const Hypergraph& f) : F(f), n(f.n), k(f.k) {
        incident.resize(n);
        std::map<VertexSet, int> sid;
        sub_id.resize(F.edges.size());
        for (size_t ei = 0; ei < F.edges.size(); ++ei) {
            const auto& e = F.edges[ei];
            for (int v : e) incident[v].push_back(static_cast<int>(ei));
            sub_id[ei].resize(k);
            for (int omit = 0; omit < k; ++omit) {
                VertexSet s;
                for (int i = 0; i < k; ++i)
                    if (i != omit) s.push_back(e[i]);
                auto it = sid.find(s);
                if (it == sid.end()) it = sid.emplace(std::move(s), num_sids++).first;
                sub_id[ei][omit] = it->second;
            }
        }
        pos.assign(n, -1);
        perm.assign(n, -1);
        remaining.resize(F.edges.size());
        for (size_t ei = 0; ei < F.edges.size(); ++ei) remaining[ei] = k;
        type_val.assign(num_sids, 0);
        type_cnt.assign(num_sids, 0);
    }

    // Assigns window types of a completed edge; fills undo with the shadow
    // ids it claimed. Returns false on a type conflict.
    bool close_edge(int ei, std::vector<int>& undo) {
        const auto& e = F.edges[ei];
        // rank vertices of e by position
        std::array<std::pair<int, int>, 16> byp;  // (position, index in e)
        for (int i = 0; i < k; ++i) byp[i] = {pos[e[i]], i};
        std::sort(byp.begin(), byp.begin() + k);
        for (int ell = 1; ell <= k; ++ell) {
            int omit_idx = byp[ell - 1].second;
            int s = sub_id[ei][omit_idx];
            if (type_cnt[s] == 0) {
                type_val[s] = ell;
                type_cnt[s] = 1;
                undo.push_back(s);
            } else if (type_val[s] == ell) {
                ++type_cnt[s];
                undo.push_back(s);
            } else {
                return false;
            }
        }
        return true;
    }

    void unwind(const std::vector<int>& undo) {
        for (int s : undo)
            if (--type_cnt[s] == 0) type_val[s] = 0;
    }

    bool dfs(int depth) {
        if (depth == n) return true;
        for (int v = 0; v < n; ++v) {
            if (pos[v] != -1) continue;
            if (budget >= 0 && nodes >= budget) {
                budget_hit = true;
                return false;
            }
            ++nodes;
            pos[v] = depth;
            perm[depth] = v;
            std::vector<int> undo;
            bool ok = true;
            for (int ei : incident[v]) {
                if (--remaining[ei] == 0 && ok) ok = close_edge(ei, undo);
            }
            if (ok && dfs(depth + 1)) return true;
            unwind(undo);
            for (int ei : incident[v]) ++remaining[ei];
            pos[v] = -1;
            perm[depth] = -1;
            if (budget_hit) return false;
        }
        return false;
    }

    long long count_all(int depth) {
        if (depth == n) return 1;
        long long total = 0;
        for (int v = 0; v < n; ++v) {
            if (pos[v] != -1) continue;
            pos[v] = depth;
            std::vector<int> undo;
            bool ok = true;
            for (int ei : incident[v]) {
                if (--remaining[ei] == 0 && ok) ok = close_edge(ei, undo);
            }
            if (ok) total += count_all(depth + 1);
            unwind(undo);
            for (int ei : incident[v]) ++remaining[ei];
            pos[v] = -1;
        }
        return total;
    }
};

}  // namespace

VanishingSearchResult find_vanishing_ordering(const Hypergraph& F, long long node_budget) {
    VanishSearch s(F);
    s.budget = node_budget;
    VanishingSearchResult res;
    bool found = s.dfs(0);
    res.nodes = s.nodes;
    if (found) {
        res.status = SearchStatus::found;
        Ordering o;
        o.perm = s.perm;
        res.ordering = std::move(o);
    } else if (s.budget_hit) {
        res.status = SearchStatus::budget_exceeded;
    } else {
        res.status = SearchStatus::exhausted;
    }
    return res;
}

std::optional<Ordering> brute_force_vanishing_ordering(const Hypergraph& F) {
    Ordering o = Ordering::identity(F.n);
    do {
        if (is_vanishing(F, o)) return o;
    } while (std::next_permutation(o.perm.begin(), o.perm.end()));
    return std::nullopt;
}

long long count_vanishing_orderings(const Hypergraph& F) {
    VanishSearch s(F);
    return s.count_all(0);
}

ColoredDigraph build_type_digraph(const Hypergraph& F, const Ordering& tau) {
    if (!is_vanishing(F, tau))
        throw std::invalid_argument("build_type_digraph requires a vanishing ordering");
    auto pos = tau.positions();
    ColoredDigraph D;
    D.k = F.k;
    D.n = F.n;
    for (const auto& e : F.edges) {
        auto ordered = edge_in_order(e, pos);
        for (int j = 1; j <= F.k; ++j) {
            std::vector<int> tuple(F.k - 1);
            for (int i = 0; i < F.k - 1; ++i) tuple[i] = ordered[(j - 1 + i) % F.k];
            int color = j - 1;
            auto it = D.arcs.find(tuple);
            if (it != D.arcs.end() && it->second != color)
                throw std::logic_error("type digraph not simple for vanishing ordering");
            D.arcs.emplace(std::move(tuple), color);
        }
    }
    return D;
}

Digraph transitive_digraph(const ColoredDigraph& D, int beta, bool cyclic) {
    if (beta < 0 || beta > D.k - 1) throw std::invalid_argument("color out of range");
    int next = cyclic ? (beta + 1) % D.k : beta + 1;
    Digraph G;
    G.n = D.n;
    for (const auto& [tuple, color] : D.arcs) {
        if (color != beta && color != next) continue;
        for (size_t i = 0; i < tuple.size(); ++i)
            for (size_t j = i + 1; j < tuple.size(); ++j)
                G.arcs.emplace(tuple[i], tuple[j]);
    }
    return G;
}

std::optional<Ordering> acyclic_ordering(const Digraph& G) {
    std::vector<int> indeg(G.n, 0);
    std::vector<std::vector<int>> out(G.n);
    for (const auto& [a, b] : G.arcs) {
        ++indeg[b];
        out[a].push_back(b);
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int v = 0; v < G.n; ++v)
        if (indeg[v] == 0) ready.push(v);
    Ordering o;
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        o.perm.push_back(v);
        for (int w : out[v])
            if (--indeg[w] == 0) ready.push(w);
    }
    if (static_cast<int>(o.perm.size()) != G.n) return std::nullopt;
    return o;
}

std::optional<Ordering> digraph_to_ordering(const Hypergraph& F, const ColoredDigraph& D,
                                            int beta, bool cyclic) {
    if (D.k != F.k || D.n != F.n)
        throw std::invalid_argument("digraph certificate does not match hypergraph");
    // Every edge must carry a directed tight (k-1)-cycle colored 0..k-1: find
    // its color-0 arc and check the remaining rotations.
    for (const auto& e : F.edges) {
        bool valid = false;
        for (const auto& [tuple, color] : D.arcs) {
            if (color != 0) continue;
            std::vector<int> sorted_tuple(tuple);
            std::sort(sorted_tuple.begin(), sorted_tuple.end());
            if (!std::includes(e.begin(), e.end(), sorted_tuple.begin(), sorted_tuple.end()))
                continue;
            std::vector<int> cycle(tuple);
            for (int v : e)
                if (std::find(tuple.begin(), tuple.end(), v) == tuple.end())
                    cycle.push_back(v);
            if (static_cast<int>(cycle.size()) != F.k) continue;
            bool all = true;
            for (int j = 2; j <= F.k; ++j) {
                std::vector<int> arc(F.k - 1);
                for (int i = 0; i < F.k - 1; ++i) arc[i] = cycle[(j - 1 + i) % F.k];
                auto it = D.arcs.find(arc);
                if (it == D.arcs.end() || it->second != j - 1) {
                    all = false;
                    break;
                }
            }
            if (all) {
                valid = true;
                break;
            }
        }
        if (!valid)
            throw std::invalid_argument("invalid certificate: an edge lacks its colored cycle");
    }
    auto T = transitive_digraph(D, beta, cyclic);
    return acyclic_ordering(T);
}

void to_json(nlohmann::json& j, const Ordering& o) {
    j = nlohmann::json{{"ordering", o.perm}};
}

void from_json(const nlohmann::json& j, Ordering& o) {
    o.perm = j.at("ordering").get<std::vector<int>>();
}

void to_json(nlohmann::json& j, const ColoredDigraph& d) {
    nlohmann::json arcs = nlohmann::json::array();
    for (const auto& [tuple, color] : d.arcs)
        arcs.push_back({{"tuple", tuple}, {"color", color}});
    j = nlohmann::json{{"k", d.k}, {"n", d.n}, {"arcs", arcs}};
}

void from_json(const nlohmann::json& j, ColoredDigraph& d) {
    d.k = j.at("k").get<int>();
    d.n = j.at("n").get<int>();
    d.arcs.clear();
    for (const auto& a : j.at("arcs"))
        d.arcs[a.at("tuple").get<std::vector<int>>()] = a.at("color").get<int>();
}

}  // namespace turan
