#include "midnet/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace midnet {

const char* to_string(NodeClass c) {
    switch (c) {
        case NodeClass::Source: return "source";
        case NodeClass::Sink: return "sink";
        case NodeClass::Leaf: return "leaf";
        case NodeClass::Intermediary: return "intermediary";
        case NodeClass::Isolated: return "isolated";
    }
    return "?";
}

void DirectedNetwork::check_node(NodeId i) const {
    if (i < 0 || i >= node_count())
        throw InvalidNode("node id out of range: " + std::to_string(i));
}

DirectedNetwork DirectedNetwork::from_adjacency(std::vector<std::string> labels,
                                                std::vector<std::vector<NodeId>> out) {
    DirectedNetwork net;
    net.labels_ = std::move(labels);
    net.out_ = std::move(out);
    net.in_.assign(net.labels_.size(), {});
    net.arc_count_ = 0;
    for (NodeId i = 0; i < net.node_count(); ++i) {
        std::sort(net.out_[i].begin(), net.out_[i].end());
        for (NodeId j : net.out_[i]) net.in_[j].push_back(i);
        net.arc_count_ += static_cast<int>(net.out_[i].size());
    }
    for (auto& preds : net.in_) std::sort(preds.begin(), preds.end());
    return net;
}

DirectedNetwork DirectedNetwork::build(
    const std::vector<std::string>& labels,
    const std::vector<std::pair<std::string, std::string>>& arcs) {
    std::map<std::string, NodeId> index;
    for (NodeId i = 0; i < static_cast<NodeId>(labels.size()); ++i) {
        if (labels[i].empty()) throw Error("empty node label");
        if (!index.emplace(labels[i], i).second) throw DuplicateLabel(labels[i]);
    }
    std::vector<std::vector<NodeId>> out(labels.size());
    std::set<Arc> seen;
    for (const auto& [from, to] : arcs) {
        auto fi = index.find(from);
        if (fi == index.end()) throw UnknownEndpoint(from);
        auto ti = index.find(to);
        if (ti == index.end()) throw UnknownEndpoint(to);
        if (fi->second == ti->second) throw SelfLoop(from);
        if (!seen.emplace(fi->second, ti->second).second) throw DuplicateArc(from, to);
        out[fi->second].push_back(ti->second);
    }
    return from_adjacency(labels, std::move(out));
}

DirectedNetwork DirectedNetwork::from_arcs(int node_count, const std::vector<Arc>& arcs_one_based) {
    std::vector<std::string> labels(node_count);
    for (int i = 0; i < node_count; ++i) labels[i] = std::to_string(i + 1);
    std::vector<std::pair<std::string, std::string>> named;
    named.reserve(arcs_one_based.size());
    for (auto [a, b] : arcs_one_based) named.emplace_back(std::to_string(a), std::to_string(b));
    return build(labels, named);
}

std::optional<NodeId> DirectedNetwork::find(const std::string& label) const {
    for (NodeId i = 0; i < node_count(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

bool DirectedNetwork::has_arc(NodeId from, NodeId to) const {
    check_node(from);
    check_node(to);
    return std::binary_search(out_[from].begin(), out_[from].end(), to);
}

std::vector<Arc> DirectedNetwork::arcs() const {
    std::vector<Arc> all;
    all.reserve(arc_count_);
    for (NodeId i = 0; i < node_count(); ++i)
        for (NodeId j : out_[i]) all.emplace_back(i, j);
    return all;  // already lexicographic: i ascending, out_ sorted
}

int DirectedNetwork::degree(NodeId i) const {
    check_node(i);
    std::vector<NodeId> nbrs;
    std::set_union(out_[i].begin(), out_[i].end(), in_[i].begin(), in_[i].end(),
                   std::back_inserter(nbrs));
    return static_cast<int>(nbrs.size());
}

DirectedNetwork DirectedNetwork::remove_node(NodeId i) const {
    check_node(i);
    return remove_node_set(std::span<const NodeId>(&i, 1));
}

DirectedNetwork DirectedNetwork::remove_node_set(std::span<const NodeId> nodes) const {
    std::vector<char> drop(node_count(), 0);
    for (NodeId i : nodes) {
        check_node(i);
        drop[i] = 1;
    }
    std::vector<std::vector<NodeId>> out(node_count());
    for (NodeId i = 0; i < node_count(); ++i) {
        if (drop[i]) continue;
        for (NodeId j : out_[i])
            if (!drop[j]) out[i].push_back(j);
    }
    return from_adjacency(labels_, std::move(out));
}

DirectedNetwork DirectedNetwork::symmetrize() const {
    std::vector<std::vector<NodeId>> out(node_count());
    for (NodeId i = 0; i < node_count(); ++i) {
        std::set_union(out_[i].begin(), out_[i].end(), in_[i].begin(), in_[i].end(),
                       std::back_inserter(out[i]));
    }
    return from_adjacency(labels_, std::move(out));
}

DirectedNetwork DirectedNetwork::with_arcs_added(std::span<const Arc> add) const {
    std::vector<std::vector<NodeId>> out = out_;
    std::set<Arc> present;
    for (NodeId i = 0; i < node_count(); ++i)
        for (NodeId j : out_[i]) present.emplace(i, j);
    for (auto [a, b] : add) {
        check_node(a);
        check_node(b);
        if (a == b) throw SelfLoop(labels_[a]);
        if (!present.emplace(a, b).second) throw DuplicateArc(labels_[a], labels_[b]);
        out[a].push_back(b);
    }
    return from_adjacency(labels_, std::move(out));
}

DirectedNetwork DirectedNetwork::with_arcs_removed(std::span<const Arc> remove) const {
    std::set<Arc> gone(remove.begin(), remove.end());
    for (auto [a, b] : gone) {
        check_node(a);
        check_node(b);
        if (!has_arc(a, b)) throw Error("cannot remove absent arc " + labels_[a] + " -> " + labels_[b]);
    }
    std::vector<std::vector<NodeId>> out(node_count());
    for (NodeId i = 0; i < node_count(); ++i)
        for (NodeId j : out_[i])
            if (!gone.count({i, j})) out[i].push_back(j);
    return from_adjacency(labels_, std::move(out));
}

bool DirectedNetwork::is_undirected() const {
    for (NodeId i = 0; i < node_count(); ++i)
        for (NodeId j : out_[i])
            if (!has_arc(j, i)) return false;
    return true;
}

bool DirectedNetwork::operator==(const DirectedNetwork& other) const {
    return labels_ == other.labels_ && out_ == other.out_;
}

NodeClass classify_node(const DirectedNetwork& net, NodeId i) {
    net.check_node(i);
    const int dout = net.out_degree(i);
    const int din = net.in_degree(i);
    if (dout == 0 && din == 0) return NodeClass::Isolated;
    if (din == 0) return NodeClass::Source;
    if (dout == 0) return NodeClass::Sink;
    if (net.degree(i) == 1) return NodeClass::Leaf;  // single reciprocated link
    return NodeClass::Intermediary;
}

namespace {

std::vector<std::vector<NodeId>> collect_components(const std::vector<int>& comp, int n) {
    int count = 0;
    for (int c : comp) count = std::max(count, c + 1);
    std::vector<std::vector<NodeId>> result(count);
    for (NodeId i = 0; i < n; ++i) result[comp[i]].push_back(i);
    std::sort(result.begin(), result.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return result;
}

}  // namespace

std::vector<std::vector<NodeId>> weak_components(const DirectedNetwork& net) {
    const int n = net.node_count();
    std::vector<int> comp(n, -1);
    int next = 0;
    std::vector<NodeId> stack;
    for (NodeId start = 0; start < n; ++start) {
        if (comp[start] >= 0) continue;
        comp[start] = next;
        stack.push_back(start);
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            for (const auto* adj : {&net.successors(u), &net.predecessors(u)})
                for (NodeId v : *adj)
                    if (comp[v] < 0) {
                        comp[v] = next;
                        stack.push_back(v);
                    }
        }
        ++next;
    }
    return collect_components(comp, n);
}

std::vector<std::vector<NodeId>> strong_components(const DirectedNetwork& net) {
    // Kosaraju with explicit stacks.
    const int n = net.node_count();
    std::vector<char> visited(n, 0);
    std::vector<NodeId> order;
    order.reserve(n);
    std::vector<std::pair<NodeId, size_t>> frame;
    for (NodeId start = 0; start < n; ++start) {
        if (visited[start]) continue;
        visited[start] = 1;
        frame.emplace_back(start, 0);
        while (!frame.empty()) {
            auto& [u, idx] = frame.back();
            const auto& succ = net.successors(u);
            if (idx < succ.size()) {
                NodeId v = succ[idx++];
                if (!visited[v]) {
                    visited[v] = 1;
                    frame.emplace_back(v, 0);
                }
            } else {
                order.push_back(u);
                frame.pop_back();
            }
        }
    }
    std::vector<int> comp(n, -1);
    int next = 0;
    std::vector<NodeId> stack;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (comp[*it] >= 0) continue;
        comp[*it] = next;
        stack.push_back(*it);
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            for (NodeId v : net.predecessors(u))
                if (comp[v] < 0) {
                    comp[v] = next;
                    stack.push_back(v);
                }
        }
        ++next;
    }
    return collect_components(comp, n);
}

}  // namespace midnet
