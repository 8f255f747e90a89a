#include "turan/reduced.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "turan/combinatorics.hpp"

namespace turan {

ReducedGraph ReducedGraph::create(int k, int m,
                                  std::map<IndexSet, std::vector<int>> classes,
                                  std::map<IndexSet, std::vector<VertexSet>> constituents) {
    if (k < 2) throw std::invalid_argument("reduced graph needs k >= 2");
    if (m < k) throw std::invalid_argument("reduced graph needs m >= k indices");
    ReducedGraph A;
    A.k = k;
    A.m = m;

    for (auto& [X, vs] : classes) {
        if (static_cast<int>(X.size()) != k - 1 || !std::is_sorted(X.begin(), X.end()) ||
            X.front() < 0 || X.back() >= m)
            throw std::invalid_argument("class key is not a sorted (k-1)-subset of the index set");
        if (vs.empty()) throw std::invalid_argument("empty vertex class");
        std::sort(vs.begin(), vs.end());
        if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
            throw std::invalid_argument("repeated vertex inside a class");
        for (int v : vs) {
            if (!A.owner_.emplace(v, X).second)
                throw std::invalid_argument("classes are not pairwise disjoint");
        }
    }
    if (static_cast<long long>(classes.size()) != binomial(m, k - 1))
        throw std::invalid_argument("classes must cover every (k-1)-subset of the index set");
    A.classes = std::move(classes);

    for (auto& [Y, es] : constituents) {
        if (static_cast<int>(Y.size()) != k || !std::is_sorted(Y.begin(), Y.end()) ||
            Y.front() < 0 || Y.back() >= m)
            throw std::invalid_argument("constituent key is not a sorted k-subset of the index set");
        for (auto& e : es) {
            if (static_cast<int>(e.size()) != k)
                throw std::invalid_argument("constituent edge has the wrong size");
            std::sort(e.begin(), e.end());
            // exactly one vertex from each of Y's k parts
            std::set<IndexSet> parts_hit;
            for (int v : e) {
                auto it = A.owner_.find(v);
                if (it == A.owner_.end())
                    throw std::invalid_argument("constituent edge uses an unknown vertex");
                IndexSet diff;
                std::set_difference(Y.begin(), Y.end(), it->second.begin(), it->second.end(),
                                    std::back_inserter(diff));
                if (diff.size() != 1)
                    throw std::invalid_argument("constituent edge vertex is not in a part of Y");
                parts_hit.insert(it->second);
            }
            if (static_cast<int>(parts_hit.size()) != k)
                throw std::invalid_argument("constituent edge misses a part");
        }
        std::sort(es.begin(), es.end());
        es.erase(std::unique(es.begin(), es.end()), es.end());
    }
    if (static_cast<long long>(constituents.size()) != binomial(m, k))
        throw std::invalid_argument("constituents must cover every k-subset of the index set");
    A.constituents = std::move(constituents);
    return A;
}

const std::vector<int>& ReducedGraph::class_of(const IndexSet& X) const {
    auto it = classes.find(X);
    if (it == classes.end()) throw std::invalid_argument("no class for that index set");
    return it->second;
}

const std::vector<VertexSet>& ReducedGraph::constituent_of(const IndexSet& Y) const {
    auto it = constituents.find(Y);
    if (it == constituents.end()) throw std::invalid_argument("no constituent for that index set");
    return it->second;
}

const IndexSet& ReducedGraph::owner(int vertex) const {
    auto it = owner_.find(vertex);
    if (it == owner_.end()) throw std::invalid_argument("unknown class vertex");
    return it->second;
}

bool is_d_dense(const ReducedGraph& A, const Rational& d) {
    for (const auto& [Y, es] : A.constituents) {
        long long prod = 1;
        for (int ell = 0; ell < A.k; ++ell) {
            IndexSet X;
            for (int p = 0; p < A.k; ++p)
                if (p != ell) X.push_back(Y[p]);
            prod *= static_cast<long long>(A.class_of(X).size());
        }
        if (Rational(static_cast<long long>(es.size())) < d * Rational(prod)) return false;
    }
    return true;
}

namespace {

IndexSet image_of(const std::vector<int>& phi, const VertexSet& S) {
    IndexSet X;
    X.reserve(S.size());
    for (int v : S) X.push_back(phi[v]);
    std::sort(X.begin(), X.end());
    return X;
}

}  // namespace

bool verify_reduced_map(const Hypergraph& F, const ReducedGraph& A, const ReducedMap& rm) {
    if (F.k != A.k) throw std::invalid_argument("uniformity mismatch");
    if (static_cast<int>(rm.phi.size()) != F.n)
        throw std::invalid_argument("phi is not total on V(F)");
    for (int x : rm.phi)
        if (x < 0 || x >= A.m) throw std::invalid_argument("phi value outside the index set");

    for (const auto& e : F.edges) {
        auto Y = image_of(rm.phi, e);
        if (std::adjacent_find(Y.begin(), Y.end()) != Y.end()) return false;  // not injective
    }
    for (const auto& S : shadow(F)) {
        auto it = rm.psi.find(S);
        if (it == rm.psi.end()) throw std::invalid_argument("psi misses a shadow set");
        auto X = image_of(rm.phi, S);
        const auto& cls = A.class_of(X);
        if (!std::binary_search(cls.begin(), cls.end(), it->second)) return false;
    }
    for (const auto& e : F.edges) {
        auto Y = image_of(rm.phi, e);
        VertexSet img;
        for (int omit = 0; omit < F.k; ++omit) {
            VertexSet S;
            for (int idx = 0; idx < F.k; ++idx)
                if (idx != omit) S.push_back(e[idx]);
            img.push_back(rm.psi.at(S));
        }
        std::sort(img.begin(), img.end());
        const auto& es = A.constituent_of(Y);
        if (!std::binary_search(es.begin(), es.end(), img)) return false;
    }
    return true;
}

namespace {

struct MapSearch {
    const Hypergraph& F;
    const ReducedGraph& A;
    long long budget;
    long long nodes = 0;
    bool budget_hit = false;

    std::vector<int> active;  // non-isolated F-vertices in assignment order
    std::vector<int> phi;
    std::vector<VertexSet> shadow_sets;
    std::map<VertexSet, int> shadow_id;
    std::vector<int> psi;  // by shadow id, -1 unset
    // edges -> shadow ids, and per shadow set the edges it belongs to
    std::vector<std::vector<int>> edge_shadows;

    std::optional<ReducedMap> result;

    MapSearch(const Hypergraph& f, const ReducedGraph& a, long long b)
        : F(f), A(a), budget(b) {
        auto deg = F.degrees();
        for (int v = 0; v < F.n; ++v)
            if (deg[v] > 0) active.push_back(v);
        phi.assign(F.n, -1);
        shadow_sets = shadow(F);
        for (size_t i = 0; i < shadow_sets.size(); ++i)
            shadow_id[shadow_sets[i]] = static_cast<int>(i);
        psi.assign(shadow_sets.size(), -1);
        edge_shadows.resize(F.edges.size());
        for (size_t ei = 0; ei < F.edges.size(); ++ei) {
            const auto& e = F.edges[ei];
            for (int omit = 0; omit < F.k; ++omit) {
                VertexSet S;
                for (int idx = 0; idx < F.k; ++idx)
                    if (idx != omit) S.push_back(e[idx]);
                edge_shadows[ei].push_back(shadow_id.at(S));
            }
        }
    }

    bool spend() {
        if (budget >= 0 && nodes >= budget) {
            budget_hit = true;
            return false;
        }
        ++nodes;
        return true;
    }

    bool phi_ok(int v) const {
        for (const auto& e : F.edges) {
            if (std::find(e.begin(), e.end(), v) == e.end()) continue;
            for (int u : e)
                if (u != v && phi[u] == phi[v]) return false;
        }
        return true;
    }

    bool psi_dfs(size_t si) {
        if (si == shadow_sets.size()) return true;
        auto X = image_of(phi, shadow_sets[si]);
        for (int cand : A.class_of(X)) {
            if (!spend()) return false;
            psi[si] = cand;
            bool ok = true;
            for (size_t ei = 0; ei < F.edges.size() && ok; ++ei) {
                const auto& sids = edge_shadows[ei];
                bool complete = true;
                bool involves = false;
                for (int sid : sids) {
                    if (psi[sid] == -1) complete = false;
                    if (sid == static_cast<int>(si)) involves = true;
                }
                if (!complete || !involves) continue;
                VertexSet img;
                for (int sid : sids) img.push_back(psi[sid]);
                std::sort(img.begin(), img.end());
                auto Y = image_of(phi, F.edges[ei]);
                const auto& es = A.constituent_of(Y);
                if (!std::binary_search(es.begin(), es.end(), img)) ok = false;
            }
            if (ok && psi_dfs(si + 1)) return true;
            psi[si] = -1;
            if (budget_hit) return false;
        }
        return false;
    }

    bool phi_dfs(size_t depth) {
        if (depth == active.size()) {
            std::fill(psi.begin(), psi.end(), -1);
            if (!psi_dfs(0)) return false;
            ReducedMap rm;
            rm.phi = phi;
            // isolated vertices may map anywhere; index 0 keeps things lex-least
            for (int& x : rm.phi)
                if (x == -1) x = 0;
            for (size_t i = 0; i < shadow_sets.size(); ++i) rm.psi[shadow_sets[i]] = psi[i];
            result = std::move(rm);
            return true;
        }
        int v = active[depth];
        for (int idx = 0; idx < A.m; ++idx) {
            if (!spend()) return false;
            phi[v] = idx;
            if (phi_ok(v) && phi_dfs(depth + 1)) return true;
            phi[v] = -1;
            if (budget_hit) return false;
        }
        return false;
    }
};

}  // namespace

FindMapResult find_reduced_map(const Hypergraph& F, const ReducedGraph& A,
                               long long node_budget) {
    if (F.k != A.k) throw std::invalid_argument("uniformity mismatch");
    FindMapResult out;
    MapSearch s(F, A, node_budget);
    if (s.phi_dfs(0)) {
        if (!verify_reduced_map(F, A, *s.result))
            throw std::logic_error("find_reduced_map produced an invalid map");
        out.status = SearchStatus::found;
        out.map = std::move(s.result);
    } else {
        out.status = s.budget_hit ? SearchStatus::budget_exceeded : SearchStatus::exhausted;
    }
    out.nodes = s.nodes;
    return out;
}

Rational normalized_degree(const ReducedGraph& A, const IndexSet& Y, int ell, int v) {
    if (static_cast<int>(Y.size()) != A.k || ell < 1 || ell > A.k)
        throw std::invalid_argument("normalized_degree needs a k-index-set and 1 <= ell <= k");
    IndexSet X;
    for (int p = 0; p < A.k; ++p)
        if (p != ell - 1) X.push_back(Y[p]);
    const auto& cls = A.class_of(X);
    if (!std::binary_search(cls.begin(), cls.end(), v))
        throw std::invalid_argument("vertex is not in the stated class");
    long long count = 0;
    for (const auto& e : A.constituent_of(Y))
        if (std::binary_search(e.begin(), e.end(), v)) ++count;
    long long denom = 1;
    for (int p = 0; p < A.k; ++p) {
        if (p == ell - 1) continue;
        IndexSet Xp;
        for (int q = 0; q < A.k; ++q)
            if (q != p) Xp.push_back(Y[q]);
        denom *= static_cast<long long>(A.class_of(Xp).size());
    }
    return Rational(count, denom);
}

std::vector<int> s_rho(const ReducedGraph& A, const IndexSet& Y, int ell,
                       const Rational& rho) {
    IndexSet X;
    for (int p = 0; p < A.k; ++p)
        if (p != ell - 1) X.push_back(Y[p]);
    std::vector<int> out;
    for (int v : A.class_of(X))
        if (normalized_degree(A, Y, ell, v) >= rho) out.push_back(v);
    return out;
}

std::optional<std::pair<int, int>> algorithm1_color(const ReducedGraph& A,
                                                    const IndexSet& Q,
                                                    const Rational& rho) {
    const int k = A.k;
    if (static_cast<int>(Q.size()) != 2 * k - 1 || !std::is_sorted(Q.begin(), Q.end()) ||
        std::adjacent_find(Q.begin(), Q.end()) != Q.end())
        throw std::invalid_argument("Q must be a sorted (2k-1)-subset of the index set");
    // interleaving: y_1, x_1, y_2, x_2, ..., x_{k-1}, y_k
    std::vector<int> y(k), x(k - 1);
    for (int i = 0; i < k; ++i) y[i] = Q[2 * i];
    for (int i = 0; i < k - 1; ++i) x[i] = Q[2 * i + 1];
    IndexSet X(x.begin(), x.end());
    const auto& PX = A.class_of(X);

    auto high_set = [&](int yi) {
        IndexSet Y = X;
        Y.push_back(yi);
        std::sort(Y.begin(), Y.end());
        int ell = static_cast<int>(std::find(Y.begin(), Y.end(), yi) - Y.begin()) + 1;
        return s_rho(A, Y, ell, rho);
    };
    std::vector<std::vector<int>> S(k);
    for (int i = 0; i < k; ++i) S[i] = high_set(y[i]);

    for (int i = 1; i <= k; ++i) {
        for (int j = i + 1; j <= k; ++j) {
            std::vector<int> inter;
            std::set_intersection(S[i - 1].begin(), S[i - 1].end(), S[j - 1].begin(),
                                  S[j - 1].end(), std::back_inserter(inter));
            if (Rational(static_cast<long long>(inter.size())) >=
                rho * Rational(static_cast<long long>(PX.size())))
                return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

namespace {

void check_anchor_shape(const ReducedGraph& A, const AnchorFamily& an) {
    if (an.i < 1 || an.j > A.k || an.i >= an.j)
        throw std::invalid_argument("anchor pair out of range");
    for (const auto& [X, cls] : A.classes) {
        auto ia = an.alpha.find(X);
        auto ib = an.beta.find(X);
        if (ia == an.alpha.end() || static_cast<int>(ia->second.size()) != A.k)
            throw std::invalid_argument("anchors need k alpha vertices per class");
        if (ib == an.beta.end() || static_cast<int>(ib->second.size()) != A.k - 1)
            throw std::invalid_argument("anchors need k-1 beta vertices per class");
        for (int v : ia->second)
            if (!std::binary_search(cls.begin(), cls.end(), v))
                throw std::invalid_argument("alpha vertex outside its class");
        for (int v : ib->second)
            if (!std::binary_search(cls.begin(), cls.end(), v))
                throw std::invalid_argument("beta vertex outside its class");
    }
}

}  // namespace

bool verify_anchors(const ReducedGraph& A, const AnchorFamily& anchors) {
    check_anchor_shape(A, anchors);
    const int k = A.k, jp = anchors.j, ip = anchors.i;
    for (const auto& [Y, es] : A.constituents) {
        VertexSet a1, a2;
        for (int ell = 1; ell <= k; ++ell) {
            IndexSet X;
            for (int p = 0; p < k; ++p)
                if (p != ell - 1) X.push_back(Y[p]);
            a1.push_back(anchors.alpha.at(X)[ell - 1]);
            if (ell < jp)
                a2.push_back(anchors.beta.at(X)[ell - 1]);
            else if (ell == jp)
                a2.push_back(anchors.alpha.at(X)[ip - 1]);
            else
                a2.push_back(anchors.beta.at(X)[ell - 2]);
        }
        std::sort(a1.begin(), a1.end());
        std::sort(a2.begin(), a2.end());
        if (!std::binary_search(es.begin(), es.end(), a1)) return false;
        if (!std::binary_search(es.begin(), es.end(), a2)) return false;
    }
    return true;
}

ReducedMap build_reduced_map_from_anchors(const Hypergraph& F, const ReducedGraph& A,
                                          const AnchorFamily& anchors,
                                          const SplitCertificate& cert) {
    if (F.k != A.k) throw std::invalid_argument("uniformity mismatch");
    if (anchors.i != cert.i || anchors.j != cert.j)
        throw std::invalid_argument("certificate pair differs from the anchor pair");
    if (A.m < F.n) throw std::invalid_argument("index set smaller than V(F)");
    if (!verify_anchors(A, anchors)) throw std::invalid_argument("anchors fail verification");
    if (!verify_split(F, cert, false))
        throw std::invalid_argument("split certificate fails verification");
    const int ip = cert.i, jp = cert.j;

    ReducedMap rm;
    rm.phi = cert.ordering.positions();

    Hypergraph F1 = Hypergraph::create(F.k, F.n, cert.part1);
    Hypergraph F2 = Hypergraph::create(F.k, F.n, cert.part2);
    TypeAssignment t1 = type_assignment(F1, cert.ordering);
    TypeAssignment t2 = type_assignment(F2, cert.ordering);

    for (const auto& S : shadow(F)) {
        auto it1 = t1.find(S);
        auto it2 = t2.find(S);
        // candidate slot: pair (use_alpha, rank)
        std::optional<std::pair<bool, int>> slot1, slot2;
        if (it1 != t1.end()) {
            int r = *it1->second.begin();
            slot1 = {true, r};  // i'-type already names alpha^{i'}
        }
        if (it2 != t2.end()) {
            int t = *it2->second.begin();
            if (t == jp)
                slot2 = {true, ip};
            else if (t < jp)
                slot2 = {false, t};
            else
                slot2 = {false, t - 1};
        }
        if (slot1 && slot2 && *slot1 != *slot2)
            throw std::logic_error("shadow set receives conflicting anchor slots");
        auto slot = slot1 ? *slot1 : *slot2;
        auto X = image_of(rm.phi, S);
        rm.psi[S] = slot.first ? anchors.alpha.at(X)[slot.second - 1]
                               : anchors.beta.at(X)[slot.second - 1];
    }
    if (!verify_reduced_map(F, A, rm))
        throw std::logic_error("anchor-built map failed re-verification");
    return rm;
}

KPartiteGraph KPartiteGraph::create(int k, std::vector<int> part_sizes,
                                    std::vector<std::vector<int>> edges) {
    if (k < 2) throw std::invalid_argument("k-partite graph needs k >= 2");
    if (static_cast<int>(part_sizes.size()) != k)
        throw std::invalid_argument("need one size per part");
    for (int s : part_sizes)
        if (s < 1) throw std::invalid_argument("parts must be non-empty");
    for (const auto& e : edges) {
        if (static_cast<int>(e.size()) != k)
            throw std::invalid_argument("edge must pick one vertex per part");
        for (int p = 0; p < k; ++p)
            if (e[p] < 0 || e[p] >= part_sizes[p])
                throw std::invalid_argument("edge vertex outside its part");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    KPartiteGraph G;
    G.k = k;
    G.part_sizes = std::move(part_sizes);
    G.edges = std::move(edges);
    return G;
}

Lemma5Status lemma5_bound_check(const KPartiteGraph& H, const std::vector<int>& T,
                                const Rational& rho) {
    const int k = H.k;
    const int t = static_cast<int>(T.size());
    if (t < 0 || t >= k) throw std::invalid_argument("tuple must leave at least one part free");
    for (int p = 0; p < t; ++p)
        if (T[p] < 0 || T[p] >= H.part_sizes[p])
            throw std::invalid_argument("tuple vertex outside its part");

    auto prod_after = [&](int from) {
        long long prod = 1;
        for (int p = from; p < k; ++p) prod *= H.part_sizes[p];
        return prod;
    };
    auto extends = [&](const std::vector<int>& prefix) {
        long long count = 0;
        for (const auto& e : H.edges) {
            bool match = true;
            for (size_t p = 0; p < prefix.size(); ++p)
                if (e[p] != prefix[p]) { match = false; break; }
            if (match) ++count;
        }
        return count;
    };

    if (Rational(extends(T)) < rho * Rational(prod_after(t)))
        return Lemma5Status::precondition_not_met;

    Rational half = rho / 2;
    long long good = 0;
    std::vector<int> prefix = T;
    prefix.push_back(0);
    for (int u = 0; u < H.part_sizes[t]; ++u) {
        prefix.back() = u;
        if (Rational(extends(prefix)) >= half * Rational(prod_after(t + 1))) ++good;
    }
    return Rational(good) >= half * Rational(static_cast<long long>(H.part_sizes[t]))
               ? Lemma5Status::holds
               : Lemma5Status::fails;
}

// --- serialization ---

namespace {

template <typename V>
nlohmann::json keyed_array(const std::map<IndexSet, V>& m, const char* value_key) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [X, v] : m) out.push_back(nlohmann::json{{"index_set", X}, {value_key, v}});
    return out;
}

template <typename V>
std::map<IndexSet, V> keyed_map(const nlohmann::json& arr, const char* value_key) {
    std::map<IndexSet, V> out;
    for (const auto& entry : arr)
        out[entry.at("index_set").get<IndexSet>()] = entry.at(value_key).get<V>();
    return out;
}

}  // namespace

void to_json(nlohmann::json& j, const ReducedGraph& a) {
    j = nlohmann::json{{"k", a.k},
                       {"m", a.m},
                       {"classes", keyed_array(a.classes, "vertices")},
                       {"constituents", keyed_array(a.constituents, "edges")}};
}

void from_json(const nlohmann::json& j, ReducedGraph& a) {
    a = ReducedGraph::create(
        j.at("k").get<int>(), j.at("m").get<int>(),
        keyed_map<std::vector<int>>(j.at("classes"), "vertices"),
        keyed_map<std::vector<VertexSet>>(j.at("constituents"), "edges"));
}

void to_json(nlohmann::json& j, const ReducedMap& rm) {
    nlohmann::json psi = nlohmann::json::array();
    for (const auto& [S, v] : rm.psi) psi.push_back(nlohmann::json{{"set", S}, {"vertex", v}});
    j = nlohmann::json{{"phi", rm.phi}, {"psi", std::move(psi)}};
}

void from_json(const nlohmann::json& j, ReducedMap& rm) {
    rm.phi = j.at("phi").get<std::vector<int>>();
    rm.psi.clear();
    for (const auto& entry : j.at("psi"))
        rm.psi[entry.at("set").get<VertexSet>()] = entry.at("vertex").get<int>();
}

void to_json(nlohmann::json& j, const AnchorFamily& an) {
    j = nlohmann::json{{"i", an.i},
                       {"j", an.j},
                       {"alpha", keyed_array(an.alpha, "vertices")},
                       {"beta", keyed_array(an.beta, "vertices")}};
}

void from_json(const nlohmann::json& j, AnchorFamily& an) {
    an.i = j.at("i").get<int>();
    an.j = j.at("j").get<int>();
    an.alpha = keyed_map<std::vector<int>>(j.at("alpha"), "vertices");
    an.beta = keyed_map<std::vector<int>>(j.at("beta"), "vertices");
}

void to_json(nlohmann::json& j, const KPartiteGraph& g) {
    j = nlohmann::json{{"k", g.k}, {"part_sizes", g.part_sizes}, {"edges", g.edges}};
}

void from_json(const nlohmann::json& j, KPartiteGraph& g) {
    g = KPartiteGraph::create(j.at("k").get<int>(),
                              j.at("part_sizes").get<std::vector<int>>(),
                              j.at("edges").get<std::vector<std::vector<int>>>());
}

}  // namespace turan
