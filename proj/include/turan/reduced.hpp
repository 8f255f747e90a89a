#ifndef TURAN_REDUCED_HPP
#define TURAN_REDUCED_HPP

#include <map>
#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "turan/conditions.hpp"
#include "turan/hypergraph.hpp"
#include "turan/rational.hpp"
#include "turan/vanishing.hpp"

namespace turan {

using IndexSet = std::vector<int>;  // sorted subset of the index set 0..m-1

// Multipartite bookkeeping structure: one disjoint vertex class per
// (k-1)-subset X of the index set, and for each k-subset Y a k-partite
// k-graph (constituent) on the classes of Y's (k-1)-subsets. Constituent
// edges are stored as sorted k-sets of global class-vertex ids, one vertex
// per part.
struct ReducedGraph {
    int k = 0;
    int m = 0;
    std::map<IndexSet, std::vector<int>> classes;
    std::map<IndexSet, std::vector<VertexSet>> constituents;

    static ReducedGraph create(int k, int m,
                               std::map<IndexSet, std::vector<int>> classes,
                               std::map<IndexSet, std::vector<VertexSet>> constituents);

    const std::vector<int>& class_of(const IndexSet& X) const;
    const std::vector<VertexSet>& constituent_of(const IndexSet& Y) const;
    // which class a global vertex id belongs to
    const IndexSet& owner(int vertex) const;

  private:
    std::map<int, IndexSet> owner_;
};

// phi: V(F) -> index set; psi: shadow(F) -> class vertices.
struct ReducedMap {
    std::vector<int> phi;            // F-vertex -> index
    std::map<VertexSet, int> psi;    // shadow set -> class-vertex id
};

// True iff every constituent has at least a d-fraction of its possible
// crossing edges.
bool is_d_dense(const ReducedGraph& A, const Rational& d);

// Literal check of the three reduced-map clauses: phi injective on every
// edge, psi lands in the class of the phi-image, and every edge's k shadow
// images form a constituent edge.
bool verify_reduced_map(const Hypergraph& F, const ReducedGraph& A, const ReducedMap& rm);

struct FindMapResult {
    SearchStatus status = SearchStatus::exhausted;
    std::optional<ReducedMap> map;
    long long nodes = 0;
};

// Backtracking over phi then psi with constituent-membership propagation.
FindMapResult find_reduced_map(const Hypergraph& F, const ReducedGraph& A,
                               long long node_budget = -1);

// deg_{Y -> y_ell}(v): edges of the constituent at Y containing v, divided
// by the product of the other k-1 class sizes. ell is 1-based into sorted Y;
// v must lie in the class of Y minus its ell-th index.
Rational normalized_degree(const ReducedGraph& A, const IndexSet& Y, int ell, int v);

// Vertices of the class Y minus y_ell whose normalized degree is >= rho.
std::vector<int> s_rho(const ReducedGraph& A, const IndexSet& Y, int ell,
                       const Rational& rho);

// Scan over a (2k-1)-index-set Q = (y_1, x_1, y_2, x_2, ..., x_{k-1}, y_k)
// read off in sorted order; X = {x_1,...,x_{k-1}}. Returns the first pair
// (i, j), i ascending outer and j ascending inner, whose high-degree sets
// toward y_i and y_j overlap in at least rho|P_X| vertices.
std::optional<std::pair<int, int>> algorithm1_color(const ReducedGraph& A,
                                                    const IndexSet& Q,
                                                    const Rational& rho);

// Per class X: k alpha vertices and k-1 beta vertices (coincidences allowed),
// plus the distinguished pair (i', j').
struct AnchorFamily {
    int i = 0;
    int j = 0;
    std::map<IndexSet, std::vector<int>> alpha;  // size k per class
    std::map<IndexSet, std::vector<int>> beta;   // size k-1 per class
};

// For every k-subset Y with parts X_ell = Y minus its ell-th index, checks
// the two anchor edges: (alpha^1_{X_1},...,alpha^k_{X_k}) and the beta edge
// with slot j' replaced by alpha^{i'}_{X_{j'}}.
bool verify_anchors(const ReducedGraph& A, const AnchorFamily& anchors);

// The type-to-anchor assignment: phi places F's vertices by their position
// under cert.ordering; psi sends a shadow set typed r by part1 to alpha^r
// (with the i'/j' types merged onto alpha^{i'}) and a set typed t by part2
// to the beta of rank t, skipping rank j'. The result is re-verified and a
// failure throws rather than returning a bad map.
ReducedMap build_reduced_map_from_anchors(const Hypergraph& F, const ReducedGraph& A,
                                          const AnchorFamily& anchors,
                                          const SplitCertificate& cert);

// k-partite k-graph with local per-part vertex ids; edge[i] lies in part i.
struct KPartiteGraph {
    int k = 0;
    std::vector<int> part_sizes;
    std::vector<std::vector<int>> edges;

    static KPartiteGraph create(int k, std::vector<int> part_sizes,
                                std::vector<std::vector<int>> edges);
};

enum class Lemma5Status { holds, fails, precondition_not_met };

// Given a tuple T = (v_1,...,v_t) lying in at least rho * prod_{j>t} |V_j|
// edges, confirms that at least (rho/2)|V_{t+1}| vertices u of part t+1
// extend T into at least (rho/2) * prod_{j>t+1} |V_j| edges.
Lemma5Status lemma5_bound_check(const KPartiteGraph& H, const std::vector<int>& T,
                                const Rational& rho);

void to_json(nlohmann::json& j, const ReducedGraph& a);
void from_json(const nlohmann::json& j, ReducedGraph& a);
void to_json(nlohmann::json& j, const ReducedMap& rm);
void from_json(const nlohmann::json& j, ReducedMap& rm);
void to_json(nlohmann::json& j, const AnchorFamily& an);
void from_json(const nlohmann::json& j, AnchorFamily& an);
void to_json(nlohmann::json& j, const KPartiteGraph& g);
void from_json(const nlohmann::json& j, KPartiteGraph& g);

}  // namespace turan

#endif
