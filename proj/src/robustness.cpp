#include "midnet/robustness.hpp"

#include <algorithm>
#include <unordered_map>

#include "midnet/middleman.hpp"
#include "midnet/reachability.hpp"

namespace midnet {

namespace {

void require_middleman(const DirectedNetwork& net, NodeId i) {
    net.check_node(i);
    if (!is_middleman(net, i)) throw NotMiddleman(net.label(i));
}

/// Mutable adjacency copy so the searches can push/pop trial arcs without
/// rebuilding a DirectedNetwork per node of the search tree.
struct AdjacencyScratch {
    int n;
    std::vector<std::vector<NodeId>> out;

    explicit AdjacencyScratch(const DirectedNetwork& net) : n(net.node_count()), out(n) {
        for (NodeId u = 0; u < n; ++u) out[u] = net.successors(u);
    }

    void push(const Arc& a) { out[a.first].push_back(a.second); }
    void pop(const Arc& a) { out[a.first].pop_back(); }

    NodeSet reach_from(NodeId s) const {  // includes s itself
        NodeSet seen(n);
        seen.set(s);
        std::vector<NodeId> stack{s};
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            for (NodeId v : out[u])
                if (!seen.test(v)) {
                    seen.set(v);
                    stack.push_back(v);
                }
        }
        return seen;
    }
};

// --- arc addition ----------------------------------------------------------
//
// With witness arcs restricted away from i (an arc incident to i only adds
// connections that vanish in D−i, so dropping it from any witness keeps the
// witness valid), i stops being a middleman in D+A exactly when every pair
// (u,v) ∈ p_i × s_i, u ≠ v, becomes connected in (D−i)+A: a surviving
// brokered pair (h,j) would route h → u → i → v → j along a simple path, and
// covering (u,v) splices h and j back together without i.

struct Demand {
    NodeId source;
    NodeSet targets;  // direct successors of i this source must reach
};

struct AddSearch {
    AdjacencyScratch scratch;
    std::vector<Demand> demands;
    std::vector<Arc> candidates;
    std::vector<Arc> chosen;
    long long budget;
    int depth_limit = 0;
    int upper = 0;
    std::string who;

    explicit AddSearch(const DirectedNetwork& base) : scratch(base) {}

    void spend() {
        if (--budget < 0)
            throw SearchBudgetExceeded("arc addition search for " + who +
                                           " exceeded its evaluation budget",
                                       depth_limit, upper);
    }

    bool covered() const {
        for (const Demand& d : demands)
            if (!d.targets.is_subset_of(scratch.reach_from(d.source))) return false;
        return true;
    }

    bool feasible_with_suffix(size_t first) {
        for (size_t c = first; c < candidates.size(); ++c) scratch.push(candidates[c]);
        bool ok = covered();
        for (size_t c = first; c < candidates.size(); ++c) scratch.pop(candidates[c]);
        return ok;
    }

    bool close_with_one(size_t first) {
        // Collect demands still open under the current graph together with
        // the reach set of each open source.
        std::vector<std::pair<Arc, const NodeSet*>> open;  // (u,v) plus reach(u)
        std::vector<std::pair<NodeId, NodeSet>> reach_of_source;
        for (const Demand& d : demands) {
            NodeSet reach = scratch.reach_from(d.source);
            if (d.targets.is_subset_of(reach)) continue;
            reach_of_source.emplace_back(d.source, std::move(reach));
        }
        for (auto& [u, reach] : reach_of_source) {
            const Demand& d = *std::find_if(demands.begin(), demands.end(),
                                            [&, u = u](const Demand& x) { return x.source == u; });
            NodeSet missing = d.targets - reach;
            for (auto v = missing.find_first(); v != NodeSet::npos; v = missing.find_next(v))
                open.emplace_back(Arc(u, static_cast<NodeId>(v)), &reach);
        }
        std::unordered_map<NodeId, NodeSet> tail_reach;
        for (size_t c = first; c < candidates.size(); ++c) {
            const auto& [x, y] = candidates[c];
            auto it = tail_reach.find(y);
            if (it == tail_reach.end()) it = tail_reach.emplace(y, scratch.reach_from(y)).first;
            bool all = true;
            for (const auto& [pair, reach] : open)
                if (!reach->test(x) || !it->second.test(pair.second)) {
                    all = false;
                    break;
                }
            if (all) {
                chosen.push_back(candidates[c]);
                return true;
            }
        }
        return false;
    }

    bool dfs(size_t first, int remaining) {
        spend();
        if (!feasible_with_suffix(first)) return false;
        if (remaining == 1) return close_with_one(first);
        for (size_t c = first; c + remaining <= candidates.size(); ++c) {
            chosen.push_back(candidates[c]);
            scratch.push(candidates[c]);
            if (dfs(c + 1, remaining - 1)) return true;
            scratch.pop(candidates[c]);
            chosen.pop_back();
        }
        return false;
    }
};

}  // namespace

ArcWitness arc_robustness(const DirectedNetwork& net, NodeId i, const SearchOptions& options) {
    require_middleman(net, i);

    const DirectedNetwork base = net.remove_node(i);
    ReachabilityTable table(base);

    AddSearch search(base);
    search.who = net.label(i);
    search.budget = options.budget;

    std::vector<Arc> direct;  // one arc per uncovered (u,v) pair: always a witness
    for (NodeId u : net.predecessors(i)) {
        Demand d{u, NodeSet(net.node_count())};
        for (NodeId v : net.successors(i))
            if (v != u && !table.connected(u, v)) {
                d.targets.set(v);
                direct.emplace_back(u, v);
            }
        if (d.targets.any()) search.demands.push_back(std::move(d));
    }

    // Hub witness: route every predecessor through the smallest direct
    // successor, then fan out; at most d⁺ + d⁻ − 1 arcs.
    std::vector<Arc> hub_arcs;
    const NodeId hub = net.successors(i).front();
    for (NodeId u : net.predecessors(i))
        if (u != hub && !net.has_arc(u, hub)) hub_arcs.emplace_back(u, hub);
    for (NodeId v : net.successors(i))
        if (v != hub && !net.has_arc(hub, v)) hub_arcs.emplace_back(hub, v);

    std::vector<Arc> ub_witness = direct.size() <= hub_arcs.size() ? direct : hub_arcs;
    search.upper = static_cast<int>(ub_witness.size());

    // Candidate arcs: absent, no self-loops, not incident to i. An arc is
    // dropped when an existing arc or another candidate can always replace
    // it: its head is reached from no fewer nodes and its tail reaches no
    // fewer nodes (origin/reach containment in D−i), splitting exact ties
    // lexicographically.
    const int n = net.node_count();
    std::vector<NodeSet> origin(n), reach(n);
    for (NodeId v = 0; v < n; ++v) {
        origin[v] = table.origin(v);
        reach[v] = table.reach(v);
    }
    std::vector<Arc> raw;
    for (NodeId x = 0; x < n; ++x) {
        if (x == i) continue;
        for (NodeId y = 0; y < n; ++y) {
            if (y == i || y == x || net.has_arc(x, y)) continue;
            raw.emplace_back(x, y);
        }
    }
    const std::vector<Arc> existing = base.arcs();
    for (const Arc& cand : raw) {
        bool dominated = false;
        for (const Arc& arc : existing)
            if (origin[cand.first].is_subset_of(origin[arc.first]) &&
                reach[cand.second].is_subset_of(reach[arc.second])) {
                dominated = true;
                break;
            }
        for (const Arc& other : raw) {
            if (dominated) break;
            if (other == cand) continue;
            if (!origin[cand.first].is_subset_of(origin[other.first]) ||
                !reach[cand.second].is_subset_of(reach[other.second]))
                continue;
            const bool tie = origin[cand.first] == origin[other.first] &&
                             reach[cand.second] == reach[other.second];
            if (!tie || other < cand) dominated = true;
        }
        if (!dominated) search.candidates.push_back(cand);
    }

    for (int k = 1; k <= search.upper; ++k) {
        search.depth_limit = k;
        search.chosen.clear();
        if (search.dfs(0, k)) return {k, search.chosen};
    }
    return {search.upper, ub_witness};  // unreachable: the hub witness bounds the search
}

// --- arc deletion and node deletion ----------------------------------------
//
// Deleting arcs or nodes can create brokered pairs elsewhere, so no pair-
// cover reduction applies; each leaf re-verifies the middleman predicate on
// the reduced network. Lexicographic enumeration yields the smallest witness
// of minimum size.

namespace {

template <typename Item, typename Leaf>
bool deepen(const std::vector<Item>& candidates, int k, std::vector<Item>& chosen,
            size_t first, long long& budget, const Leaf& leaf, const char* what,
            const std::string& who, int upper) {
    if (static_cast<int>(chosen.size()) == k) {
        if (--budget < 0)
            throw SearchBudgetExceeded(std::string(what) + " search for " + who +
                                           " exceeded its evaluation budget",
                                       k, upper);
        return leaf(chosen);
    }
    const size_t need = k - chosen.size();
    for (size_t c = first; c + need <= candidates.size(); ++c) {
        chosen.push_back(candidates[c]);
        if (deepen(candidates, k, chosen, c + 1, budget, leaf, what, who, upper)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

ArcWitness dual_arc_robustness(const DirectedNetwork& net, NodeId i,
                               const SearchOptions& options) {
    require_middleman(net, i);

    std::vector<Arc> in_arcs, out_arcs;
    for (NodeId u : net.predecessors(i)) in_arcs.emplace_back(u, i);
    for (NodeId v : net.successors(i)) out_arcs.emplace_back(i, v);
    std::vector<Arc> ub_witness = in_arcs.size() <= out_arcs.size() ? in_arcs : out_arcs;
    const int upper = static_cast<int>(ub_witness.size());

    const std::vector<Arc> candidates = net.arcs();
    long long budget = options.budget;
    auto leaf = [&](const std::vector<Arc>& chosen) {
        return !is_middleman(net.with_arcs_removed(chosen), i);
    };
    for (int k = 1; k <= upper; ++k) {
        std::vector<Arc> chosen;
        if (deepen(candidates, k, chosen, 0, budget, leaf, "arc deletion", net.label(i), upper))
            return {k, chosen};
    }
    return {upper, ub_witness};  // unreachable: stripping one side of i always works
}

NodeWitness node_robustness(const DirectedNetwork& net, NodeId i, const SearchOptions& options) {
    require_middleman(net, i);

    // Removing every direct predecessor (or successor) leaves i a source
    // (sink), so min{d⁺, d⁻} bounds the answer; ψ ≤ ρ* holds automatically
    // because the search below finds the true minimum.
    std::vector<NodeId> ub_witness;
    if (net.in_degree(i) <= net.out_degree(i))
        ub_witness = net.predecessors(i);
    else
        ub_witness = net.successors(i);
    const int upper = static_cast<int>(ub_witness.size());

    std::vector<NodeId> candidates;
    for (NodeId j = 0; j < net.node_count(); ++j)
        if (j != i) candidates.push_back(j);

    long long budget = options.budget;
    auto leaf = [&](const std::vector<NodeId>& chosen) {
        return !is_middleman(net.remove_node_set(chosen), i);
    };
    for (int k = 1; k <= upper; ++k) {
        std::vector<NodeId> chosen;
        if (deepen(candidates, k, chosen, 0, budget, leaf, "node deletion", net.label(i), upper))
            return {k, chosen};
    }
    return {upper, ub_witness};
}

std::vector<RobustnessReport> robustness_report(const DirectedNetwork& net,
                                                const SearchOptions& options) {
    std::vector<RobustnessReport> reports;
    for (NodeId i : middleman_set(net).middlemen())
        reports.push_back({i, arc_robustness(net, i, options), dual_arc_robustness(net, i, options),
                           node_robustness(net, i, options)});
    return reports;
}

}  // namespace midnet
