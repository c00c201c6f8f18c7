#ifndef MIDNET_ROBUSTNESS_HPP
#define MIDNET_ROBUSTNESS_HPP

#include <vector>

#include "midnet/graph.hpp"

namespace midnet {

struct SearchOptions {
    long long budget = 5'000'000;  // candidate evaluations before SearchBudgetExceeded
};

struct ArcWitness {
    int value = 0;
    std::vector<Arc> arcs;
};

struct NodeWitness {
    int value = 0;
    std::vector<NodeId> nodes;
};

/// ρ_i: minimum number of arcs added to D (no self-loops or duplicates) so
/// that i is no longer a middleman. Arcs incident to i are never part of a
/// minimal witness and are excluded from the search space. Iterative
/// deepening up to min{b_i, d⁺+d⁻−1}. Throws NotMiddleman,
/// SearchBudgetExceeded.
ArcWitness arc_robustness(const DirectedNetwork& net, NodeId i, const SearchOptions& = {});

/// ρ*_i: minimum number of arcs removed from D so that i is no longer a
/// middleman; candidates include arcs incident to i. The full middleman
/// predicate is re-verified per candidate set (deletion can create new
/// brokered pairs). Witness is the lexicographically smallest minimum set.
ArcWitness dual_arc_robustness(const DirectedNetwork& net, NodeId i, const SearchOptions& = {});

/// ψ_i: minimum node set C ⊆ N∖{i} with i ∉ M(D−C); bounded above by ρ*_i.
NodeWitness node_robustness(const DirectedNetwork& net, NodeId i, const SearchOptions& = {});

struct RobustnessReport {
    NodeId target;
    ArcWitness rho;
    ArcWitness rho_dual;
    NodeWitness psi;
};

/// All three measures for every middleman of the network.
std::vector<RobustnessReport> robustness_report(const DirectedNetwork& net,
                                                const SearchOptions& = {});

}  // namespace midnet

#endif
