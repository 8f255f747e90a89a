#include "turan/hypergraph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "turan/combinatorics.hpp"

namespace turan {

Hypergraph Hypergraph::create(int k, int n, std::vector<VertexSet> edges) {
    if (k < 2) throw std::invalid_argument("uniformity k must be >= 2");
    if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
    for (auto& e : edges) {
        std::sort(e.begin(), e.end());
        if (static_cast<int>(e.size()) != k)
            throw std::invalid_argument("edge size differs from uniformity");
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw std::invalid_argument("edge has repeated vertices");
        if (e.front() < 0 || e.back() >= n)
            throw std::invalid_argument("edge vertex out of range");
    }
    if (!edges.empty() && k > n)
        throw std::invalid_argument("k > n with non-empty edge set");
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    Hypergraph H;
    H.k = k;
    H.n = n;
    H.edges = std::move(edges);
    return H;
}

bool Hypergraph::has_edge(const VertexSet& e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

std::vector<int> Hypergraph::degrees() const {
    std::vector<int> deg(n, 0);
    for (const auto& e : edges)
        for (int v : e) ++deg[v];
    return deg;
}

bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.k == b.k && a.n == b.n && a.edges == b.edges;
}

std::vector<VertexSet> shadow(const Hypergraph& F) {
    std::set<VertexSet> out;
    for (const auto& e : F.edges) {
        for (int omit = 0; omit < F.k; ++omit) {
            VertexSet s;
            s.reserve(F.k - 1);
            for (int i = 0; i < F.k; ++i)
                if (i != omit) s.push_back(e[i]);
            out.insert(std::move(s));
        }
    }
    return {out.begin(), out.end()};
}

Hypergraph tight_path(int k, int length) {
    if (length < k) throw std::invalid_argument("tight path needs length >= k");
    std::vector<VertexSet> edges;
    for (int i = 0; i + k <= length; ++i) {
        VertexSet e(k);
        std::iota(e.begin(), e.end(), i);
        edges.push_back(std::move(e));
    }
    return Hypergraph::create(k, length, std::move(edges));
}

Hypergraph tight_cycle(int k, int length) {
    if (length <= k) throw std::invalid_argument("tight cycle needs length > k");
    std::vector<VertexSet> edges;
    for (int i = 0; i < length; ++i) {
        VertexSet e(k);
        for (int j = 0; j < k; ++j) e[j] = (i + j) % length;
        edges.push_back(std::move(e));
    }
    return Hypergraph::create(k, length, std::move(edges));
}

Hypergraph family_F(int k, int t) {
    if (k < 3) throw std::invalid_argument("family_F needs k >= 3");
    if (t < k - 2) throw std::invalid_argument("family_F needs t >= k-2");
    const int n = 3 * t + k + 2;
    // a_1..a_{k-1} = 0..k-2; b_r = k-1+r; c_r = k+t+r; d_r = k+2t+1+r.
    auto b = [&](int r) { return k - 1 + r; };
    auto c = [&](int r) { return k + t + r; };
    auto d = [&](int r) { return k + 2 * t + 1 + r; };
    std::vector<VertexSet> edges;
    auto add_path = [&](auto x, int wrap) {
        // sequence a_1..a_{k-1}, x_0..x_t, wrap; every k-window is an edge
        std::vector<int> seq;
        for (int i = 0; i < k - 1; ++i) seq.push_back(i);
        for (int r = 0; r <= t; ++r) seq.push_back(x(r));
        seq.push_back(wrap);
        for (int i = 0; i + k <= static_cast<int>(seq.size()); ++i)
            edges.emplace_back(seq.begin() + i, seq.begin() + i + k);
    };
    add_path(b, c(t));
    add_path(c, d(t));
    add_path(d, b(t));
    return Hypergraph::create(k, n, std::move(edges));
}

namespace {

struct EmbedSearch {
    const Hypergraph& F;
    const Hypergraph& H;
    std::vector<int> order;      // F-vertices in assignment order (non-isolated)
    std::vector<int> assign;     // F-vertex -> H-vertex or -1
    std::vector<bool> used;      // H-vertex taken
    // edges_closed[i]: edges of F whose vertices are all within order[0..i]
    std::vector<std::vector<int>> edges_closed;

    EmbedSearch(const Hypergraph& f, const Hypergraph& h) : F(f), H(h) {
        auto deg = F.degrees();
        for (int v = 0; v < F.n; ++v)
            if (deg[v] > 0) order.push_back(v);
        // Greedy order: seed with the highest-degree vertex, then always take
        // the vertex completing the most edges against the placed prefix
        // (degree-descending, lexicographic tie-break). Edges close early,
        // which is what drives the pruning.
        std::vector<int> chosen;
        std::vector<bool> in(F.n, false);
        while (chosen.size() < order.size()) {
            int best = -1, best_closed = -1, best_deg = -1;
            for (int v : order) {
                if (in[v]) continue;
                int closed = 0;
                for (const auto& e : F.edges) {
                    bool all = true;
                    for (int u : e)
                        if (u != v && !in[u]) { all = false; break; }
                    if (all && std::find(e.begin(), e.end(), v) != e.end()) ++closed;
                }
                if (closed > best_closed ||
                    (closed == best_closed && (deg[v] > best_deg ||
                                               (deg[v] == best_deg && v < best)))) {
                    best = v;
                    best_closed = closed;
                    best_deg = deg[v];
                }
            }
            chosen.push_back(best);
            in[best] = true;
        }
        order = chosen;
        edges_closed.resize(order.size());
        std::vector<bool> placed(F.n, false);
        for (size_t i = 0; i < order.size(); ++i) {
            placed[order[i]] = true;
            for (size_t ei = 0; ei < F.edges.size(); ++ei) {
                const auto& e = F.edges[ei];
                bool all = true, has = false;
                for (int u : e) {
                    if (!placed[u]) all = false;
                    if (u == order[i]) has = true;
                }
                if (all && has) edges_closed[i].push_back(static_cast<int>(ei));
            }
        }
        assign.assign(F.n, -1);
        used.assign(H.n, false);
    }

    bool dfs(size_t depth) {
        if (depth == order.size()) return true;
        int v = order[depth];
        for (int img = 0; img < H.n; ++img) {
            if (used[img]) continue;
            assign[v] = img;
            used[img] = true;
            bool ok = true;
            for (int ei : edges_closed[depth]) {
                VertexSet image;
                image.reserve(F.k);
                for (int u : F.edges[ei]) image.push_back(assign[u]);
                std::sort(image.begin(), image.end());
                if (!H.has_edge(image)) { ok = false; break; }
            }
            if (ok && dfs(depth + 1)) return true;
            assign[v] = -1;
            used[img] = false;
        }
        return false;
    }
};

}  // namespace

std::optional<Embedding> find_embedding(const Hypergraph& F, const Hypergraph& H) {
    if (F.k != H.k) throw std::invalid_argument("uniformity mismatch");
    if (F.edges.empty()) {
        Embedding emb;
        emb.map.assign(F.n, -1);
        int next = 0;
        for (int v = 0; v < F.n && next < H.n; ++v) emb.map[v] = next++;
        return emb;
    }
    EmbedSearch s(F, H);
    if (!s.dfs(0)) return std::nullopt;
    Embedding emb;
    emb.map = s.assign;
    // extend over isolated vertices where capacity allows
    int next = 0;
    for (int v = 0; v < F.n; ++v) {
        if (emb.map[v] != -1) continue;
        while (next < H.n && s.used[next]) ++next;
        if (next >= H.n) break;
        emb.map[v] = next;
        s.used[next] = true;
    }
    return emb;
}

bool is_f_free(const Hypergraph& H, const Hypergraph& F) {
    return !find_embedding(F, H).has_value();
}

bool verify_embedding(const Hypergraph& F, const Hypergraph& H, const Embedding& emb) {
    if (static_cast<int>(emb.map.size()) != F.n) return false;
    std::vector<bool> used(H.n, false);
    for (int v = 0; v < F.n; ++v) {
        int img = emb.map[v];
        if (img == -1) continue;
        if (img < 0 || img >= H.n || used[img]) return false;
        used[img] = true;
    }
    for (const auto& e : F.edges) {
        VertexSet image;
        for (int u : e) {
            if (emb.map[u] == -1) return false;
            image.push_back(emb.map[u]);
        }
        std::sort(image.begin(), image.end());
        if (!H.has_edge(image)) return false;
    }
    return true;
}

std::string to_text(const Hypergraph& H) {
    std::ostringstream os;
    os << H.k << ' ' << H.n << '\n';
    for (const auto& e : H.edges) {
        for (size_t i = 0; i < e.size(); ++i) os << (i ? " " : "") << e[i];
        os << '\n';
    }
    return os.str();
}

Hypergraph hypergraph_from_text(std::istream& in) {
    int k, n;
    if (!(in >> k >> n)) throw std::invalid_argument("text format: missing 'k n' header");
    std::vector<VertexSet> edges;
    std::string line;
    std::getline(in, line);  // rest of header line
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        VertexSet e;
        int v;
        while (ls >> v) e.push_back(v);
        if (e.empty()) continue;
        if (static_cast<int>(e.size()) != k)
            throw std::invalid_argument("text format: line " + std::to_string(lineno) +
                                        " has " + std::to_string(e.size()) +
                                        " vertices, expected " + std::to_string(k));
        edges.push_back(std::move(e));
    }
    return Hypergraph::create(k, n, std::move(edges));
}

Hypergraph hypergraph_from_text(const std::string& text) {
    std::istringstream in(text);
    return hypergraph_from_text(in);
}

void to_json(nlohmann::json& j, const Hypergraph& H) {
    j = nlohmann::json{{"k", H.k}, {"n", H.n}, {"edges", H.edges}};
}

void from_json(const nlohmann::json& j, Hypergraph& H) {
    H = Hypergraph::create(j.at("k").get<int>(), j.at("n").get<int>(),
                           j.at("edges").get<std::vector<VertexSet>>());
}

void to_json(nlohmann::json& j, const Embedding& e) {
    j = nlohmann::json{{"map", e.map}};
}

void from_json(const nlohmann::json& j, Embedding& e) {
    e.map = j.at("map").get<std::vector<int>>();
}

}  // namespace turan
