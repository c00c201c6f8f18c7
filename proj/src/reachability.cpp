#include "midnet/reachability.hpp"

#include <deque>

namespace midnet {

std::vector<NodeId> to_vector(const NodeSet& set) {
    std::vector<NodeId> result;
    result.reserve(set.count());
    for (auto i = set.find_first(); i != NodeSet::npos; i = set.find_next(i))
        result.push_back(static_cast<NodeId>(i));
    return result;
}

namespace {

NodeSet bfs_from(const DirectedNetwork& net, NodeId source) {
    const int n = net.node_count();
    NodeSet seen(n);
    std::deque<NodeId> queue;
    for (NodeId j : net.successors(source)) {
        seen.set(j);
        queue.push_back(j);
    }
    while (!queue.empty()) {
        NodeId u = queue.front();
        queue.pop_front();
        for (NodeId v : net.successors(u))
            if (!seen.test(v)) {
                seen.set(v);
                queue.push_back(v);
            }
    }
    seen.reset(source);  // i ∉ S_i even on a cycle through i
    return seen;
}

}  // namespace

ReachabilityTable::ReachabilityTable(const DirectedNetwork& net) {
    const int n = net.node_count();
    successors_.reserve(n);
    predecessors_.assign(n, NodeSet(n));
    direct_succ_.assign(n, NodeSet(n));
    direct_pred_.assign(n, NodeSet(n));
    for (NodeId i = 0; i < n; ++i) {
        successors_.push_back(bfs_from(net, i));
        for (NodeId j : net.successors(i)) direct_succ_[i].set(j);
        for (NodeId j : net.predecessors(i)) direct_pred_[i].set(j);
    }
    for (NodeId i = 0; i < n; ++i)
        for (auto j = successors_[i].find_first(); j != NodeSet::npos;
             j = successors_[i].find_next(j))
            predecessors_[j].set(i);
}

NodeSet ReachabilityTable::reach(NodeId i) const {
    NodeSet r = successors_.at(i);
    r.set(i);
    return r;
}

NodeSet ReachabilityTable::origin(NodeId i) const {
    NodeSet o = predecessors_.at(i);
    o.set(i);
    return o;
}

bool has_path(const DirectedNetwork& net, NodeId i, NodeId j) {
    net.check_node(i);
    net.check_node(j);
    if (i == j) throw SameNode();
    return bfs_from(net, i).test(j);
}

bool is_weakly_connected(const DirectedNetwork& net) {
    return weak_components(net).size() <= 1;
}

bool is_strongly_connected(const DirectedNetwork& net) {
    return strong_components(net).size() <= 1;
}

}  // namespace midnet
