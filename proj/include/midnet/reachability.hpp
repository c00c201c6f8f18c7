#ifndef MIDNET_REACHABILITY_HPP
#define MIDNET_REACHABILITY_HPP

#include <boost/dynamic_bitset.hpp>
#include <vector>

#include "midnet/graph.hpp"

namespace midnet {

using NodeSet = boost::dynamic_bitset<>;

std::vector<NodeId> to_vector(const NodeSet& set);

/// Transitive successor/predecessor sets of every node, computed by
/// breadth-first traversal per source. Bound to the network value it
/// was computed from.
class ReachabilityTable {
public:
    explicit ReachabilityTable(const DirectedNetwork& net);

    int node_count() const { return static_cast<int>(successors_.size()); }

    /// S_i: nodes with an i->j path; i excluded.
    const NodeSet& successors(NodeId i) const { return successors_.at(i); }
    /// P_i: nodes with a j->i path; i excluded.
    const NodeSet& predecessors(NodeId i) const { return predecessors_.at(i); }
    const NodeSet& direct_successors(NodeId i) const { return direct_succ_.at(i); }
    const NodeSet& direct_predecessors(NodeId i) const { return direct_pred_.at(i); }

    /// Reach S̄_i = S_i ∪ {i}.
    NodeSet reach(NodeId i) const;
    /// Origin P̄_i = P_i ∪ {i}.
    NodeSet origin(NodeId i) const;

    bool connected(NodeId i, NodeId j) const { return successors_.at(i).test(j); }

private:
    std::vector<NodeSet> successors_;
    std::vector<NodeSet> predecessors_;
    std::vector<NodeSet> direct_succ_;
    std::vector<NodeSet> direct_pred_;
};

/// True iff at least one ij-path exists. Reflexive queries are rejected
/// (throws SameNode): paths have at least three nodes, so i->i is undefined.
bool has_path(const DirectedNetwork& net, NodeId i, NodeId j);

bool is_weakly_connected(const DirectedNetwork& net);
bool is_strongly_connected(const DirectedNetwork& net);

}  // namespace midnet

#endif
