#ifndef MIDNET_GRAPH_HPP
#define MIDNET_GRAPH_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "midnet/errors.hpp"

namespace midnet {

using NodeId = int;
using Arc = std::pair<NodeId, NodeId>;

enum class NodeClass { Source, Sink, Leaf, Intermediary, Isolated };

const char* to_string(NodeClass c);

/// An immutable directed network without self-loops or duplicate arcs.
/// Node ids are dense indices into the label table; all mutating
/// operations return a new value, so ids stay stable across reductions.
class DirectedNetwork {
public:
    DirectedNetwork() = default;

    /// Builds a network from unique labels and labelled arcs.
    /// Throws DuplicateLabel, UnknownEndpoint, SelfLoop or DuplicateArc.
    static DirectedNetwork build(const std::vector<std::string>& labels,
                                 const std::vector<std::pair<std::string, std::string>>& arcs);

    /// Convenience builder with labels "1".."n" and arcs given as 1-based ids.
    static DirectedNetwork from_arcs(int node_count, const std::vector<Arc>& arcs_one_based);

    int node_count() const { return static_cast<int>(labels_.size()); }
    int arc_count() const { return arc_count_; }

    const std::string& label(NodeId i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<NodeId> find(const std::string& label) const;

    /// Direct successors s_i, sorted ascending.
    const std::vector<NodeId>& successors(NodeId i) const { return out_.at(i); }
    /// Direct predecessors p_i, sorted ascending.
    const std::vector<NodeId>& predecessors(NodeId i) const { return in_.at(i); }

    bool has_arc(NodeId from, NodeId to) const;
    std::vector<Arc> arcs() const;  // sorted lexicographically

    int out_degree(NodeId i) const { return static_cast<int>(out_.at(i).size()); }
    int in_degree(NodeId i) const { return static_cast<int>(in_.at(i).size()); }
    /// Overall degree d_i = #(s_i ∪ p_i).
    int degree(NodeId i) const;

    /// Reduced network D-i: every arc incident to i removed, node kept
    /// as an isolated placeholder so ids remain stable.
    DirectedNetwork remove_node(NodeId i) const;
    DirectedNetwork remove_node_set(std::span<const NodeId> nodes) const;

    /// Reciprocates every arc; idempotent.
    DirectedNetwork symmetrize() const;

    DirectedNetwork with_arcs_added(std::span<const Arc> add) const;
    DirectedNetwork with_arcs_removed(std::span<const Arc> remove) const;

    bool is_undirected() const;

    /// Equality is by label sequence and arc set, not insertion order.
    bool operator==(const DirectedNetwork& other) const;

    void check_node(NodeId i) const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<NodeId>> out_;
    std::vector<std::vector<NodeId>> in_;
    int arc_count_ = 0;

    static DirectedNetwork from_adjacency(std::vector<std::string> labels,
                                          std::vector<std::vector<NodeId>> out);
};

NodeClass classify_node(const DirectedNetwork& net, NodeId i);

/// Partitions of N into maximal weakly / strongly connected node sets.
/// Components are sorted internally and ordered by their smallest node.
std::vector<std::vector<NodeId>> weak_components(const DirectedNetwork& net);
std::vector<std::vector<NodeId>> strong_components(const DirectedNetwork& net);

}  // namespace midnet

#endif
