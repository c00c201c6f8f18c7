#ifndef MIDNET_MIDDLEMAN_HPP
#define MIDNET_MIDDLEMAN_HPP

#include <utility>
#include <vector>

#include "midnet/graph.hpp"

namespace midnet {

enum class MiddlemanKind { NotIntermediary, ContestedIntermediary, RegularMiddleman, StrongMiddleman };

const char* to_string(MiddlemanKind k);

struct MiddlemanReport {
    std::vector<MiddlemanKind> kind;                       // per node
    std::vector<std::vector<Arc>> brokered_pairs;          // per node, sorted (h,j) pairs

    bool is_middleman(NodeId i) const {
        return kind.at(i) == MiddlemanKind::RegularMiddleman ||
               kind.at(i) == MiddlemanKind::StrongMiddleman;
    }
    std::vector<NodeId> middlemen() const;
};

/// M_ij(D): nodes lying on every ij-path, endpoints excluded. Computed by
/// the removal test: h ∈ M_ij iff j is reachable from i in D but not in D-h.
std::vector<NodeId> ij_middlemen(const DirectedNetwork& net, NodeId i, NodeId j);

/// Classifies every node and collects its brokered pairs. A node with at
/// least one brokered pair is a middleman; strong when its removal raises
/// the weak-component count among nodes that were non-isolated in D.
MiddlemanReport middleman_set(const DirectedNetwork& net);

/// True iff i has at least one brokered pair in net.
bool is_middleman(const DirectedNetwork& net, NodeId i);

/// Checks that every middleman of a strongly connected network is strong.
/// Throws NotStronglyConnected otherwise.
bool verify_strong_theorem(const DirectedNetwork& net);

}  // namespace midnet

#endif
