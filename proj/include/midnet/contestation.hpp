#ifndef MIDNET_CONTESTATION_HPP
#define MIDNET_CONTESTATION_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "midnet/graph.hpp"

namespace midnet {

struct CoverageSet {
    NodeId owner;
    std::vector<Arc> pairs;  // sorted ordered (h,j) pairs
};

/// Γ_i(D) = {(h,j) ∈ P_i × S_i : h ≠ j}. Throws NotIntermediary.
CoverageSet coverage(const DirectedNetwork& net, NodeId i);

/// Γ̄_i(D) = P̄_i × S̄_i, diagonal included; defined for every node.
CoverageSet extended_coverage(const DirectedNetwork& net, NodeId i);

/// Γ_i(D) ⊆ ∪_{j∈C} Γ̄_j(D−i), extended coverages evaluated on D−i.
/// Throws TargetInSet and NotIntermediary.
bool is_contested_by(const DirectedNetwork& net, NodeId i, std::span<const NodeId> contestors);

/// P_i(D) ⊆ P_j(D−i) ∪ {j} and S_i(D) ⊆ S_j(D−i) ∪ {j}. Defined for every
/// node i (a node with empty coverage may still satisfy the inclusion);
/// agrees with is_contested_by(net, i, {j}) whenever i is an intermediary.
bool is_directly_contested(const DirectedNetwork& net, NodeId i, NodeId j);

enum class ContestStatus { Uncontested, Contested };

struct ContestationResult {
    NodeId target;
    ContestStatus status;
    std::optional<std::vector<NodeId>> minimal_set;  // present iff Contested
    std::vector<NodeId> direct_contestors;
};

/// Exact minimum-cardinality contesting set, or the uncontested certificate
/// when the target is a middleman. Deterministic lexicographic tie-break.
ContestationResult minimal_contesting_set(const DirectedNetwork& net, NodeId i);

struct GreedyCover {
    std::vector<NodeId> set;  // empty when no cover exists (target uncontested)
    int lower_bound;          // any contesting set has at least this many nodes
};

/// Greedy set-cover heuristic for large inputs; lower_bound reports the gap.
GreedyCover greedy_contesting_set(const DirectedNetwork& net, NodeId i);

/// Middleman/contestation duality: every intermediary is a middleman iff no
/// contesting set exists (by monotonicity, iff N∖{i} fails to contest it).
bool verify_duality(const DirectedNetwork& net);

}  // namespace midnet

#endif
