#ifndef TURAN_HYPERGRAPH_HPP
#define TURAN_HYPERGRAPH_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace turan {

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // strictly sorted

// k-uniform hypergraph on vertices 0..n-1. Edges are sorted k-sets kept
// deduplicated in lexicographic order. Immutable after construction.
struct Hypergraph {
    int k = 0;
    int n = 0;
    std::vector<VertexSet> edges;

    // Canonicalizes (sorts vertices inside edges, sorts and dedups the edge
    // list) and validates. Throws std::invalid_argument on bad input.
    static Hypergraph create(int k, int n, std::vector<VertexSet> edges);

    bool has_edge(const VertexSet& e) const;
    std::vector<int> degrees() const;  // number of edges incident to each vertex
};

bool operator==(const Hypergraph& a, const Hypergraph& b);

// All (k-1)-sets contained in some edge, sorted lexicographically.
std::vector<VertexSet> shadow(const Hypergraph& F);

// Tight path on vertices 0..length-1: edges {i,...,i+k-1}.
Hypergraph tight_path(int k, int length);

// Tight cycle of given length > k, windows taken cyclically.
Hypergraph tight_cycle(int k, int length);

// The k-graph F_t^(k): three tight paths of length t+k+1 sharing the prefix
// a_1..a_{k-1} and wrapping into each other's last path vertex. Vertex
// labels: a_1..a_{k-1} = 0..k-2, then b_0..b_t, c_0..c_t, d_0..d_t.
Hypergraph family_F(int k, int t);

// Injective map from V(F) to V(H) sending edges to edges. map[v] is the image
// of v; isolated vertices of F are extended over unused images when room
// permits, otherwise left at -1 (they carry no constraints).
struct Embedding {
    std::vector<int> map;
};

// First copy of F in H found by a deterministic backtracking search
// (degree-descending variable order, lexicographic tie-break, candidate
// images tried in ascending order). Non-induced containment.
std::optional<Embedding> find_embedding(const Hypergraph& F, const Hypergraph& H);

bool is_f_free(const Hypergraph& H, const Hypergraph& F);

bool verify_embedding(const Hypergraph& F, const Hypergraph& H, const Embedding& emb);

// Text format: header "k n", then one edge per line (space-separated).
std::string to_text(const Hypergraph& H);
Hypergraph hypergraph_from_text(std::istream& in);
Hypergraph hypergraph_from_text(const std::string& text);

void to_json(nlohmann::json& j, const Hypergraph& H);
void from_json(const nlohmann::json& j, Hypergraph& H);
void to_json(nlohmann::json& j, const Embedding& e);
void from_json(const nlohmann::json& j, Embedding& e);

}  // namespace turan

#endif
