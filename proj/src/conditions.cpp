#include "turan/conditions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace turan {

namespace {

std::vector<VertexSet> canonical_edges(std::vector<VertexSet> edges) {
    for (auto& e : edges) std::sort(e.begin(), e.end());
    std::sort(edges.begin(), edges.end());
    return edges;
}

// Type of S within edge e (S = e minus one vertex): position of the omitted
// vertex in e under tau, 1-based.
int window_type(const VertexSet& e, const VertexSet& S, const std::vector<int>& pos) {
    int omitted = -1;
    for (int v : e)
        if (!std::binary_search(S.begin(), S.end(), v)) omitted = v;
    int rank = 1;
    for (int v : e)
        if (v != omitted && pos[v] < pos[omitted]) ++rank;
    return rank;
}

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

bool verify_split(const Hypergraph& F, const SplitCertificate& cert, bool star) {
    if (cert.i < 1 || cert.j > F.k || cert.i >= cert.j)
        throw std::invalid_argument("certificate pair out of range");
    auto p1 = canonical_edges(cert.part1);
    auto p2 = canonical_edges(cert.part2);
    std::vector<VertexSet> merged;
    merged.reserve(p1.size() + p2.size());
    std::merge(p1.begin(), p1.end(), p2.begin(), p2.end(), std::back_inserter(merged));
    if (merged != F.edges || p1.size() + p2.size() != F.edges.size())
        throw std::invalid_argument("certificate parts do not partition E(F)");

    Hypergraph F1 = Hypergraph::create(F.k, F.n, p1);
    Hypergraph F2 = Hypergraph::create(F.k, F.n, p2);
    if (!is_vanishing(F1, cert.ordering) || !is_vanishing(F2, cert.ordering)) return false;

    auto pos = cert.ordering.positions();
    for (const auto& e1 : F1.edges) {
        for (const auto& e2 : F2.edges) {
            auto S = intersect(e1, e2);
            if (static_cast<int>(S.size()) != F.k - 1) continue;
            int t1 = window_type(e1, S, pos);
            int t2 = window_type(e2, S, pos);
            bool ok = (t1 == cert.i && t2 == cert.j) || (star && t1 == t2);
            if (!ok) return false;
        }
    }
    return true;
}

Tri check_club(const Hypergraph& F, long long node_budget) {
    auto res = find_vanishing_ordering(F, node_budget);
    switch (res.status) {
        case SearchStatus::found: return Tri::no;
        case SearchStatus::exhausted: return Tri::yes;
        default: return Tri::unknown;
    }
}

namespace {

// Per-pair ordering search. Outer loop walks permutations lexicographically
// with incremental pruning: once two edges sharing a (k-1)-set are both
// fully placed, their window types must admit at least one part assignment
// (equal types, or the cross pair (i,j)). At a full ordering the remaining
// feasibility question is a 2-coloring of the edges, solved by backtracking
// over edges with pairwise constraint checks.
struct SpadeSearch {
    const Hypergraph& F;
    int n, k, pi, pj;
    bool star;
    long long budget;
    long long nodes = 0;
    bool budget_hit = false;

    struct SharedPair {
        int other_edge;
        int my_omit;     // index (within my sorted edge) of my omitted vertex
        int other_omit;  // same for the other edge
    };
    std::vector<std::vector<SharedPair>> neighbors;  // per edge
    std::vector<std::vector<int>> incident;          // vertex -> edges

    std::vector<int> pos, perm;
    std::vector<int> remaining;
    std::vector<std::array<int, 16>> wtype;  // edge -> omit index -> type (when complete)
    std::vector<bool> complete;
    std::optional<SplitCertificate> found;

    SpadeSearch(const Hypergraph& f, int i, int j, bool star_, long long budget_)
        : F(f), n(f.n), k(f.k), pi(i), pj(j), star(star_), budget(budget_) {
        size_t E = F.edges.size();
        neighbors.resize(E);
        incident.resize(n);
        for (size_t a = 0; a < E; ++a)
            for (int v : F.edges[a]) incident[v].push_back(static_cast<int>(a));
        for (size_t a = 0; a < E; ++a) {
            for (size_t b = a + 1; b < E; ++b) {
                auto S = intersect(F.edges[a], F.edges[b]);
                if (static_cast<int>(S.size()) != k - 1) continue;
                auto omit_of = [&](size_t ei) {
                    const auto& e = F.edges[ei];
                    for (int idx = 0; idx < k; ++idx)
                        if (!std::binary_search(S.begin(), S.end(), e[idx])) return idx;
                    return -1;
                };
                int oa = omit_of(a), ob = omit_of(b);
                neighbors[a].push_back({static_cast<int>(b), oa, ob});
                neighbors[b].push_back({static_cast<int>(a), ob, oa});
            }
        }
        pos.assign(n, -1);
        perm.assign(n, -1);
        remaining.assign(E, k);
        wtype.resize(E);
        complete.assign(E, false);
    }

    bool types_compatible(int t1, int t2) const {
        if (t1 == t2) return true;
        return (t1 == pi && t2 == pj) || (t2 == pi && t1 == pj);
    }

    void close_edge(int ei) {
        const auto& e = F.edges[ei];
        std::array<std::pair<int, int>, 16> byp;
        for (int idx = 0; idx < k; ++idx) byp[idx] = {pos[e[idx]], idx};
        std::sort(byp.begin(), byp.begin() + k);
        for (int ell = 1; ell <= k; ++ell) wtype[ei][byp[ell - 1].second] = ell;
        complete[ei] = true;
    }

    bool pairwise_ok(int ei) const {
        for (const auto& nb : neighbors[ei]) {
            if (!complete[nb.other_edge]) continue;
            if (!types_compatible(wtype[ei][nb.my_omit], wtype[nb.other_edge][nb.other_omit]))
                return false;
        }
        return true;
    }

    // 2-coloring of edges for the current (full) ordering.
    bool color_dfs(std::vector<int>& color, size_t ei) {
        if (ei == F.edges.size()) return true;
        for (int c = 1; c <= 2; ++c) {
            bool ok = true;
            for (const auto& nb : neighbors[ei]) {
                if (static_cast<size_t>(nb.other_edge) > ei) continue;
                int oc = color[nb.other_edge];
                int t1 = wtype[ei][nb.my_omit];
                int t2 = wtype[nb.other_edge][nb.other_omit];
                bool allowed;
                if (c == oc) {
                    allowed = (t1 == t2);
                } else {
                    int tp1 = (c == 1) ? t1 : t2;  // type on the part1 side
                    int tp2 = (c == 1) ? t2 : t1;
                    allowed = (tp1 == pi && tp2 == pj) || (star && t1 == t2);
                }
                if (!allowed) { ok = false; break; }
            }
            if (ok) {
                color[ei] = c;
                if (color_dfs(color, ei + 1)) return true;
                color[ei] = 0;
            }
        }
        return false;
    }

    bool try_full_ordering() {
        std::vector<int> color(F.edges.size(), 0);
        if (!color_dfs(color, 0)) return false;
        SplitCertificate cert;
        cert.i = pi;
        cert.j = pj;
        cert.ordering.perm = perm;
        for (size_t ei = 0; ei < F.edges.size(); ++ei)
            (color[ei] == 1 ? cert.part1 : cert.part2).push_back(F.edges[ei]);
        found = cert;
        return true;
    }

    bool dfs(int depth) {
        if (depth == n) return try_full_ordering();
        for (int v = 0; v < n; ++v) {
            if (pos[v] != -1) continue;
            if (budget >= 0 && nodes >= budget) {
                budget_hit = true;
                return false;
            }
            ++nodes;
            pos[v] = depth;
            perm[depth] = v;
            std::vector<int> closed;
            bool ok = true;
            for (int ei : incident[v]) {
                if (--remaining[ei] == 0) {
                    close_edge(ei);
                    closed.push_back(ei);
                    if (ok) ok = pairwise_ok(ei);
                }
            }
            if (ok && dfs(depth + 1)) return true;
            for (int ei : closed) complete[ei] = false;
            for (int ei : incident[v]) ++remaining[ei];
            pos[v] = -1;
            perm[depth] = -1;
            if (budget_hit) return false;
        }
        return false;
    }
};

}  // namespace

SpadeResult check_spade(const Hypergraph& F, bool star, long long ordering_budget,
                        std::optional<std::pair<int, int>> only_pair) {
    SpadeResult out;
    for (int i = 1; i <= F.k; ++i) {
        for (int j = i + 1; j <= F.k; ++j) {
            if (only_pair && *only_pair != std::make_pair(i, j)) continue;
            SpadeSearch s(F, i, j, star, ordering_budget);
            bool found = s.dfs(0);
            if (found) {
                if (!verify_split(F, *s.found, star))
                    throw std::logic_error("check_spade produced an unverifiable certificate");
                out.certs[{i, j}] = s.found;
            } else {
                out.certs[{i, j}] = std::nullopt;
                if (s.budget_hit) out.complete = false;
            }
        }
    }
    return out;
}

SplitCertificate explicit_split_certificate(int k, int t, int i, int j) {
    if (k < 3 || t < k - 2) throw std::invalid_argument("invalid (k,t)");
    if (i < 1 || j > k || i >= j) throw std::invalid_argument("invalid pair (i,j)");
    Hypergraph F = family_F(k, t);
    auto b = [&](int r) { return k - 1 + r; };
    auto c = [&](int r) { return k + t + r; };
    auto d = [&](int r) { return k + 2 * t + 1 + r; };
    (void)c;

    // Residue classes X_ell = {x_r : r == t+ell (mod k)}, Y_ell drops
    // b_{t-k+ell} and d_{t-k+ell}.
    auto mod = [&](int r) { return ((r % k) + k) % k; };
    std::vector<std::vector<int>> X(k + 1);
    for (int ell = 1; ell <= k; ++ell) {
        int res = mod(t + ell);
        for (int r = 1; r <= k - 1; ++r)
            if (mod(r) == res) X[ell].push_back(r - 1);  // a_r
        for (int r = 0; r <= t; ++r) {
            if (mod(r) != res) continue;
            X[ell].push_back(b(r));
            X[ell].push_back(c(r));
            X[ell].push_back(d(r));
        }
        std::sort(X[ell].begin(), X[ell].end());
    }
    auto Y = [&](int ell) {
        std::vector<int> y;
        int idx = t - k + ell;
        for (int v : X[ell])
            if (!(idx >= 0 && (v == b(idx) || v == d(idx)))) y.push_back(v);
        return y;
    };

    std::vector<int> perm;
    auto append = [&](const std::vector<int>& vs) {
        perm.insert(perm.end(), vs.begin(), vs.end());
    };
    for (int ell = 2; ell <= i; ++ell) append(X[ell]);
    for (int ell = i + 1; ell <= j - 1; ++ell) perm.push_back(b(t - k + ell));
    perm.push_back(b(t));
    for (int ell = i + 1; ell <= j - 1; ++ell) perm.push_back(d(t - k + ell));
    for (int ell = i + 1; ell <= j - 1; ++ell) append(Y(ell));
    append(Y(k));
    perm.push_back(d(t));
    append(X[1]);
    for (int ell = j; ell <= k - 1; ++ell) append(X[ell]);
    if (static_cast<int>(perm.size()) != F.n)
        throw std::logic_error("explicit ordering is not a permutation");

    VertexSet e1;
    for (int r = t - k + 2; r <= t; ++r) e1.push_back(d(r));
    e1.push_back(b(t));
    std::sort(e1.begin(), e1.end());

    SplitCertificate cert;
    cert.i = i;
    cert.j = j;
    cert.part1.push_back(e1);
    for (const auto& e : F.edges)
        if (e != e1) cert.part2.push_back(e);
    cert.ordering.perm = std::move(perm);
    if (!verify_split(F, cert, false))
        throw std::logic_error("explicit split certificate failed verification");
    return cert;
}

Verdict compute_verdict(const Hypergraph& F, long long node_budget) {
    Verdict v;
    v.club = check_club(F, node_budget);
    auto spade = check_spade(F, false, node_budget);
    auto spade_star = check_spade(F, true, node_budget);
    v.spade = spade.certs;
    v.spade_star = spade_star.certs;
    v.spade_complete = spade.complete;
    v.spade_star_complete = spade_star.complete;

    bool all_spade = true;
    for (const auto& [p, c] : v.spade)
        if (!c) all_spade = false;
    if (v.club == Tri::yes && all_spade) {
        v.claimed_density = pow_rational(Rational(1, F.k), F.k);
        v.note = "club and spade verified: uniform Turan density claimed exactly k^-k";
    }
    bool some_star_refuted = false;
    if (spade_star.complete) {
        for (const auto& [p, c] : v.spade_star)
            if (!c) some_star_refuted = true;
    }
    if (some_star_refuted) {
        v.lower_bound_density = Rational(3) * pow_rational(Rational(1, F.k + 1), F.k);
        if (!v.note.empty()) v.note += "; ";
        v.note += "some pair admits no star certificate: lower bound 3(k+1)^-k applies";
    }
    if (v.note.empty()) v.note = "no density conclusion from the verified conditions";
    return v;
}

void to_json(nlohmann::json& j, const SplitCertificate& c) {
    j = nlohmann::json{{"i", c.i},
                       {"j", c.j},
                       {"part1", c.part1},
                       {"part2", c.part2},
                       {"ordering", c.ordering.perm}};
}

void from_json(const nlohmann::json& j, SplitCertificate& c) {
    c.i = j.at("i").get<int>();
    c.j = j.at("j").get<int>();
    c.part1 = j.at("part1").get<std::vector<VertexSet>>();
    c.part2 = j.at("part2").get<std::vector<VertexSet>>();
    c.ordering.perm = j.at("ordering").get<std::vector<int>>();
}

namespace {

const char* tri_name(Tri t) {
    switch (t) {
        case Tri::yes: return "yes";
        case Tri::no: return "no";
        default: return "unknown";
    }
}

nlohmann::json pair_map_json(
    const std::map<std::pair<int, int>, std::optional<SplitCertificate>>& m) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [p, c] : m) {
        nlohmann::json entry{{"i", p.first}, {"j", p.second}};
        if (c)
            entry["certificate"] = *c;
        else
            entry["certificate"] = nullptr;
        out.push_back(entry);
    }
    return out;
}

}  // namespace

void to_json(nlohmann::json& j, const Verdict& v) {
    j = nlohmann::json{{"club", tri_name(v.club)},
                       {"spade", pair_map_json(v.spade)},
                       {"spade_star", pair_map_json(v.spade_star)},
                       {"spade_complete", v.spade_complete},
                       {"spade_star_complete", v.spade_star_complete},
                       {"note", v.note}};
    if (v.claimed_density)
        j["claimed_density"] = to_string(*v.claimed_density);
    else
        j["claimed_density"] = nullptr;
    if (v.lower_bound_density)
        j["lower_bound_density"] = to_string(*v.lower_bound_density);
    else
        j["lower_bound_density"] = nullptr;
}

}  // namespace turan
