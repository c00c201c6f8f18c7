#include "midnet/middleman.hpp"

#include <algorithm>

#include "midnet/reachability.hpp"

namespace midnet {

const char* to_string(MiddlemanKind k) {
    switch (k) {
        case MiddlemanKind::NotIntermediary: return "not-intermediary";
        case MiddlemanKind::ContestedIntermediary: return "contested-intermediary";
        case MiddlemanKind::RegularMiddleman: return "regular-middleman";
        case MiddlemanKind::StrongMiddleman: return "strong-middleman";
    }
    return "?";
}

std::vector<NodeId> MiddlemanReport::middlemen() const {
    std::vector<NodeId> result;
    for (NodeId i = 0; i < static_cast<NodeId>(kind.size()); ++i)
        if (is_middleman(i)) result.push_back(i);
    return result;
}

std::vector<NodeId> ij_middlemen(const DirectedNetwork& net, NodeId i, NodeId j) {
    net.check_node(i);
    net.check_node(j);
    if (i == j) throw SameNode();
    std::vector<NodeId> result;
    if (!has_path(net, i, j)) return result;
    for (NodeId h = 0; h < net.node_count(); ++h) {
        if (h == i || h == j) continue;
        if (!has_path(net.remove_node(h), i, j)) result.push_back(h);
    }
    return result;
}

namespace {

std::vector<Arc> brokered_pairs_of(const ReachabilityTable& full,
                                   const ReachabilityTable& reduced, NodeId h) {
    std::vector<Arc> pairs;
    const int n = full.node_count();
    for (NodeId i = 0; i < n; ++i) {
        if (i == h) continue;
        NodeSet lost = full.successors(i) - reduced.successors(i);
        lost.reset(h);
        for (auto j = lost.find_first(); j != NodeSet::npos; j = lost.find_next(j))
            pairs.emplace_back(i, static_cast<NodeId>(j));
    }
    return pairs;
}

/// Weak-component count of `net` restricted to the given node subset.
int weak_component_count_over(const DirectedNetwork& net, const std::vector<char>& include) {
    const int n = net.node_count();
    std::vector<char> seen(n, 0);
    std::vector<NodeId> stack;
    int count = 0;
    for (NodeId start = 0; start < n; ++start) {
        if (!include[start] || seen[start]) continue;
        ++count;
        seen[start] = 1;
        stack.push_back(start);
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            for (const auto* adj : {&net.successors(u), &net.predecessors(u)})
                for (NodeId v : *adj)
                    if (include[v] && !seen[v]) {
                        seen[v] = 1;
                        stack.push_back(v);
                    }
        }
    }
    return count;
}

}  // namespace

MiddlemanReport middleman_set(const DirectedNetwork& net) {
    const int n = net.node_count();
    MiddlemanReport report;
    report.kind.assign(n, MiddlemanKind::NotIntermediary);
    report.brokered_pairs.assign(n, {});

    ReachabilityTable full(net);
    std::vector<char> non_isolated(n, 0);
    for (NodeId v = 0; v < n; ++v) non_isolated[v] = net.degree(v) >= 1;
    const int base_components = weak_component_count_over(net, non_isolated);

    for (NodeId h = 0; h < n; ++h) {
        const bool intermediary = classify_node(net, h) == NodeClass::Intermediary;
        if (!intermediary) continue;
        DirectedNetwork reduced = net.remove_node(h);
        ReachabilityTable reduced_table(reduced);
        report.brokered_pairs[h] = brokered_pairs_of(full, reduced_table, h);
        if (report.brokered_pairs[h].empty()) {
            report.kind[h] = MiddlemanKind::ContestedIntermediary;
            continue;
        }
        // Component change measured over nodes that were non-isolated in D,
        // excluding the placeholder h itself.
        std::vector<char> include = non_isolated;
        include[h] = 0;
        const int after = weak_component_count_over(reduced, include);
        report.kind[h] = after > base_components ? MiddlemanKind::StrongMiddleman
                                                 : MiddlemanKind::RegularMiddleman;
    }
    return report;
}

bool is_middleman(const DirectedNetwork& net, NodeId i) {
    net.check_node(i);
    if (classify_node(net, i) != NodeClass::Intermediary) return false;
    ReachabilityTable full(net);
    ReachabilityTable reduced(net.remove_node(i));
    for (NodeId h = 0; h < net.node_count(); ++h) {
        if (h == i) continue;
        NodeSet lost = full.successors(h) - reduced.successors(h);
        lost.reset(i);
        if (lost.any()) return true;
    }
    return false;
}

bool verify_strong_theorem(const DirectedNetwork& net) {
    if (!is_strongly_connected(net)) throw NotStronglyConnected();
    MiddlemanReport report = middleman_set(net);
    return std::none_of(report.kind.begin(), report.kind.end(),
                        [](MiddlemanKind k) { return k == MiddlemanKind::RegularMiddleman; });
}

}  // namespace midnet
