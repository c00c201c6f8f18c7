// Shared fixtures and independent brute-force oracles for the test suites.
// The oracles deliberately avoid the library's reachability machinery: they
// enumerate simple paths and subsets directly so that agreement is meaningful.
#ifndef MIDNET_TEST_HELPERS_HPP
#define MIDNET_TEST_HELPERS_HPP

#include <algorithm>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "midnet/graph.hpp"

namespace testnet {

using midnet::Arc;
using midnet::DirectedNetwork;
using midnet::NodeId;

// --- fixture networks -------------------------------------------------------

inline DirectedNetwork fig1() {
    return DirectedNetwork::from_arcs(
        7, {{1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 5}, {4, 6}, {5, 6}, {6, 7}});
}

inline DirectedNetwork fig2() {
    return DirectedNetwork::from_arcs(
        6, {{1, 3}, {1, 4}, {2, 4}, {2, 5}, {2, 6}, {3, 5}, {3, 6}, {4, 5}, {4, 6}});
}

inline DirectedNetwork fig3() {
    return DirectedNetwork::from_arcs(10, {{1, 4},
                                           {2, 5},
                                           {3, 6},
                                           {4, 7},
                                           {4, 8},
                                           {5, 7},
                                           {5, 8},
                                           {6, 7},
                                           {6, 8},
                                           {7, 9},
                                           {7, 10},
                                           {8, 9},
                                           {8, 10}});
}

/// Five-pointed star with hub C: arcs 1→C, 2→C, C→3, C→4, C→5.
inline DirectedNetwork star5() {
    return DirectedNetwork::build({"1", "2", "C", "3", "4", "5"},
                                  {{"1", "C"}, {"2", "C"}, {"C", "3"}, {"C", "4"}, {"C", "5"}});
}

/// Reciprocated three-node line 1 — 2 — 3.
inline DirectedNetwork line3() {
    return DirectedNetwork::from_arcs(3, {{1, 2}, {2, 1}, {2, 3}, {3, 2}});
}

inline DirectedNetwork cycle(int n) {
    std::vector<Arc> arcs;
    for (int i = 1; i <= n; ++i) arcs.emplace_back(i, i % n + 1);
    return DirectedNetwork::from_arcs(n, arcs);
}

/// Undirected star: node 1 is the hub, reciprocated spokes to 2..n.
inline DirectedNetwork star_undirected(int n) {
    std::vector<Arc> arcs;
    for (int i = 2; i <= n; ++i) {
        arcs.emplace_back(1, i);
        arcs.emplace_back(i, 1);
    }
    return DirectedNetwork::from_arcs(n, arcs);
}

inline DirectedNetwork random_network(std::mt19937& rng, int n, double density) {
    std::bernoulli_distribution arc(density);
    std::vector<Arc> arcs;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j && arc(rng)) arcs.emplace_back(i, j);
    return DirectedNetwork::from_arcs(n, arcs);
}

// --- oracles ----------------------------------------------------------------

/// Path existence by exhaustive simple-path search (no bitsets, no BFS reuse).
inline bool oracle_path_exists(const DirectedNetwork& net, NodeId from, NodeId to,
                               std::vector<char>& visited) {
    if (from == to) return true;
    visited[from] = 1;
    for (NodeId next : net.successors(from))
        if (!visited[next] && oracle_path_exists(net, next, to, visited)) {
            visited[from] = 0;
            return true;
        }
    visited[from] = 0;
    return false;
}

inline bool oracle_connected(const DirectedNetwork& net, NodeId i, NodeId j) {
    if (i == j) return false;  // connection means a path of length >= 1
    std::vector<char> visited(net.node_count(), 0);
    for (NodeId next : net.successors(i))
        if (!visited[next] && oracle_path_exists(net, next, j, visited)) return true;
    return false;
}

/// Successor set via the oracle, as a sorted vector.
inline std::vector<NodeId> oracle_successors(const DirectedNetwork& net, NodeId i) {
    std::vector<NodeId> out;
    for (NodeId j = 0; j < net.node_count(); ++j)
        if (j != i && oracle_connected(net, i, j)) out.push_back(j);
    return out;
}

/// h is an ij-middleman iff an ij-path exists in D but not in D−h.
inline bool oracle_is_middleman(const DirectedNetwork& net, NodeId h) {
    const DirectedNetwork reduced = net.remove_node(h);
    for (NodeId i = 0; i < net.node_count(); ++i)
        for (NodeId j = 0; j < net.node_count(); ++j) {
            if (i == j || i == h || j == h) continue;
            if (oracle_connected(net, i, j) && !oracle_connected(reduced, i, j)) return true;
        }
    return false;
}

/// Third-party pair disconnection count.
inline long long oracle_brokerage(const DirectedNetwork& net, NodeId i) {
    const DirectedNetwork reduced = net.remove_node(i);
    long long count = 0;
    for (NodeId h = 0; h < net.node_count(); ++h)
        for (NodeId j = 0; j < net.node_count(); ++j) {
            if (h == j || h == i || j == i) continue;
            if (oracle_connected(net, h, j) && !oracle_connected(reduced, h, j)) ++count;
        }
    return count;
}

/// Does node set C contest intermediary i? Literal evaluation of the
/// group-contestation inclusion with oracle reachability.
inline bool oracle_contests(const DirectedNetwork& net, NodeId i,
                            const std::vector<NodeId>& contestors) {
    const DirectedNetwork reduced = net.remove_node(i);
    for (NodeId h = 0; h < net.node_count(); ++h) {
        if (h == i || !oracle_connected(net, h, i)) continue;
        for (NodeId j = 0; j < net.node_count(); ++j) {
            if (j == i || j == h || !oracle_connected(net, i, j)) continue;
            bool covered = false;
            for (NodeId c : contestors) {
                const bool h_side = h == c || oracle_connected(reduced, h, c);
                const bool j_side = j == c || oracle_connected(reduced, c, j);
                if (h_side && j_side) {
                    covered = true;
                    break;
                }
            }
            if (!covered) return false;
        }
    }
    return true;
}

/// Smallest contesting-set size over all subsets of N∖{i}; -1 when none.
inline int oracle_min_contest_size(const DirectedNetwork& net, NodeId i) {
    const int n = net.node_count();
    std::vector<NodeId> others;
    for (NodeId j = 0; j < n; ++j)
        if (j != i) others.push_back(j);
    int best = -1;
    for (unsigned mask = 0; mask < (1u << others.size()); ++mask) {
        std::vector<NodeId> subset;
        for (size_t b = 0; b < others.size(); ++b)
            if (mask & (1u << b)) subset.push_back(others[b]);
        if (best >= 0 && static_cast<int>(subset.size()) >= best) continue;
        if (oracle_contests(net, i, subset)) best = static_cast<int>(subset.size());
    }
    return best;
}

/// Unpruned minimum arcs-to-add search: every absent arc (including arcs
/// incident to i) is a candidate and every leaf re-checks the middleman
/// predicate from scratch.
inline int oracle_arc_robustness(const DirectedNetwork& net, NodeId i, int upper) {
    std::vector<Arc> absent;
    for (NodeId x = 0; x < net.node_count(); ++x)
        for (NodeId y = 0; y < net.node_count(); ++y)
            if (x != y && !net.has_arc(x, y)) absent.emplace_back(x, y);

    std::vector<Arc> chosen;
    auto search = [&](auto&& self, size_t first, int remaining) -> bool {
        if (remaining == 0) {
            std::vector<Arc> copy(chosen);
            return !oracle_is_middleman(net.with_arcs_added(copy), i);
        }
        for (size_t c = first; c + remaining <= absent.size(); ++c) {
            chosen.push_back(absent[c]);
            if (self(self, c + 1, remaining - 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    for (int k = 1; k <= upper; ++k) {
        chosen.clear();
        if (search(search, 0, k)) return k;
    }
    return upper;
}

}  // namespace testnet

#endif
