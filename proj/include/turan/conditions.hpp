#ifndef TURAN_CONDITIONS_HPP
#define TURAN_CONDITIONS_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "turan/hypergraph.hpp"
#include "turan/rational.hpp"
#include "turan/vanishing.hpp"

namespace turan {

enum class Tri { yes, no, unknown };

// Witness for the split conditions: an edge bipartition (part1, part2) of
// E(F) into two spanning subhypergraphs and an ordering vanishing for both,
// with the cross-intersection type constraint attached to the pair (i, j).
// Parts may be empty; spanning constrains vertex sets, not edge counts.
struct SplitCertificate {
    int i = 0;
    int j = 0;
    std::vector<VertexSet> part1;
    std::vector<VertexSet> part2;
    Ordering ordering;
};

// Checks a certificate literally: partition of E(F), both parts vanishing
// under the ordering, and for every e1 in part1, e2 in part2 sharing a
// (k-1)-set S: S is i-type w.r.t. part1 and j-type w.r.t. part2. In star
// mode S may instead have the same type w.r.t. both parts.
bool verify_split(const Hypergraph& F, const SplitCertificate& cert, bool star);

// Condition (club): no vanishing ordering exists.
Tri check_club(const Hypergraph& F, long long node_budget = -1);

struct SpadeResult {
    // pair (i,j) -> certificate if one was found
    std::map<std::pair<int, int>, std::optional<SplitCertificate>> certs;
    bool complete = true;  // false when the ordering budget was exhausted
};

// For each pair i<j (or just only_pair), searches orderings lexicographically;
// per candidate ordering the edge bipartition collapses to a two-coloring
// feasibility problem solved by propagation. Every returned certificate is
// re-checked by verify_split before being reported.
SpadeResult check_spade(const Hypergraph& F, bool star, long long ordering_budget = -1,
                        std::optional<std::pair<int, int>> only_pair = std::nullopt);

// The explicit certificate for F_t^(k) from the residue-class orderings
// tau_{i,j}: part1 is the single wrap edge {d_{t-k+2},...,d_t,b_t}.
SplitCertificate explicit_split_certificate(int k, int t, int i, int j);

struct Verdict {
    Tri club = Tri::unknown;
    std::map<std::pair<int, int>, std::optional<SplitCertificate>> spade;
    std::map<std::pair<int, int>, std::optional<SplitCertificate>> spade_star;
    bool spade_complete = true;
    bool spade_star_complete = true;
    std::optional<Rational> claimed_density;      // k^-k when club and full spade hold
    std::optional<Rational> lower_bound_density;  // 3(k+1)^-k when some pair has no star cert
    std::string note;
};

Verdict compute_verdict(const Hypergraph& F, long long node_budget = -1);

void to_json(nlohmann::json& j, const SplitCertificate& c);
void from_json(const nlohmann::json& j, SplitCertificate& c);
void to_json(nlohmann::json& j, const Verdict& v);

}  // namespace turan

#endif
