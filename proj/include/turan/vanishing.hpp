#ifndef TURAN_VANISHING_HPP
#define TURAN_VANISHING_HPP

#include <map>
#include <optional>
#include <set>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "turan/hypergraph.hpp"

namespace turan {

// Vertex ordering: perm[i] is the vertex in position i (positions 0-based
// internally; type labels are 1-based, matching the 1..k convention).
struct Ordering {
    std::vector<int> perm;

    static Ordering identity(int n);
    std::vector<int> positions() const;  // inverse: vertex -> position
};

bool operator==(const Ordering& a, const Ordering& b);

// shadow set -> set of type labels in {1,...,k} it receives under an ordering
using TypeAssignment = std::map<VertexSet, std::set<int>>;

TypeAssignment type_assignment(const Hypergraph& F, const Ordering& tau);

// True iff every shadow set receives exactly one type: the k type classes
// then partition the shadow.
bool is_vanishing(const Hypergraph& F, const Ordering& tau);

enum class SearchStatus { found, exhausted, budget_exceeded };

struct VanishingSearchResult {
    SearchStatus status = SearchStatus::exhausted;
    std::optional<Ordering> ordering;  // lexicographically least, when found
    long long nodes = 0;               // vertex placements explored
};

// Backtracking over prefix placements; an edge's window types are checked as
// soon as its last vertex is placed. node_budget < 0 means unbounded.
VanishingSearchResult find_vanishing_ordering(const Hypergraph& F,
                                              long long node_budget = -1);

// Test-only style oracle: tries all n! permutations.
std::optional<Ordering> brute_force_vanishing_ordering(const Hypergraph& F);

// Opt-in count of all vanishing orderings (intended for n <= 8).
long long count_vanishing_orderings(const Hypergraph& F);

// Colored (k-1)-uniform digraph: arcs are (k-1)-tuples of distinct vertices
// with a color in 0..k-1. Simple: each underlying (k-1)-set appears with at
// most one orientation (and here, one color).
struct ColoredDigraph {
    int k = 0;
    int n = 0;
    std::map<std::vector<int>, int> arcs;  // tuple -> color
};

// Digraph on 0..n-1 without self-loops.
struct Digraph {
    int n = 0;
    std::set<std::pair<int, int>> arcs;
};

// Each edge, read in tau order as (v_1,...,v_k), contributes the directed
// tight (k-1)-cycle (v_j,...,v_{j+k-2}) colored j-1 for j in 1..k (cyclic).
// Rejects non-vanishing tau (the result need not be simple otherwise).
ColoredDigraph build_type_digraph(const Hypergraph& F, const Ordering& tau);

// Keeps arcs colored beta or beta+1 and expands each tuple into all forward
// pairs. Color pairs are cyclic in Z_k by default ({k-1,0} counts); the
// strictly weaker non-cyclic reading is available via cyclic=false.
Digraph transitive_digraph(const ColoredDigraph& D, int beta, bool cyclic = true);

// Topological order (smallest available source first), or nullopt on a cycle.
std::optional<Ordering> acyclic_ordering(const Digraph& G);

// Validates D as a certificate for F (every edge must carry its colored tight
// cycle; throws otherwise), then turns an acyclic T(D_{beta,beta+1}) into a
// vanishing ordering. Returns nullopt when that transitive digraph is cyclic.
std::optional<Ordering> digraph_to_ordering(const Hypergraph& F,
                                            const ColoredDigraph& D, int beta,
                                            bool cyclic = true);

void to_json(nlohmann::json& j, const Ordering& o);
void from_json(const nlohmann::json& j, Ordering& o);
void to_json(nlohmann::json& j, const ColoredDigraph& d);
void from_json(const nlohmann::json& j, ColoredDigraph& d);

}  // namespace turan

#endif
