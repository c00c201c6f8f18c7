#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "midnet/graph.hpp"

using namespace midnet;

TEST_CASE("build rejects malformed input") {
    CHECK_THROWS_AS(DirectedNetwork::build({"a", "a"}, {}), DuplicateLabel);
    CHECK_THROWS_AS(DirectedNetwork::build({"a"}, {{"a", "b"}}), UnknownEndpoint);
    CHECK_THROWS_AS(DirectedNetwork::build({"a", "b"}, {{"a", "a"}}), SelfLoop);
    CHECK_THROWS_AS(DirectedNetwork::build({"a", "b"}, {{"a", "b"}, {"a", "b"}}), DuplicateArc);
}

TEST_CASE("adjacency accessors on figure 1") {
    const DirectedNetwork net = testnet::fig1();
    CHECK(net.node_count() == 7);
    CHECK(net.arc_count() == 8);
    CHECK(net.successors(1) == std::vector<NodeId>{3, 4});  // node "2" -> {4,5}
    CHECK(net.predecessors(5) == std::vector<NodeId>{3, 4});
    CHECK(net.has_arc(0, 1));
    CHECK_FALSE(net.has_arc(1, 0));
    CHECK(net.out_degree(0) == 2);
    CHECK(net.in_degree(6) == 1);
    CHECK(net.find("7") == NodeId{6});
    CHECK_FALSE(net.find("8").has_value());
}

TEST_CASE("degree counts shared neighbours once") {
    const DirectedNetwork net = testnet::line3();
    CHECK(net.in_degree(1) == 2);
    CHECK(net.out_degree(1) == 2);
    CHECK(net.degree(1) == 2);  // s ∪ p = {1,3}
}

TEST_CASE("node classes") {
    const DirectedNetwork net = testnet::fig1();
    CHECK(classify_node(net, 0) == NodeClass::Source);
    CHECK(classify_node(net, 6) == NodeClass::Sink);
    CHECK(classify_node(net, 2) == NodeClass::Intermediary);

    const DirectedNetwork with_isolated = DirectedNetwork::build({"a", "b", "c"}, {{"a", "b"}});
    CHECK(classify_node(with_isolated, 2) == NodeClass::Isolated);

    const DirectedNetwork loop2 = DirectedNetwork::from_arcs(2, {{1, 2}, {2, 1}});
    CHECK(classify_node(loop2, 0) == NodeClass::Leaf);
}

TEST_CASE("remove_node keeps ids stable") {
    const DirectedNetwork net = testnet::fig1();
    const DirectedNetwork reduced = net.remove_node(4);  // node "5"
    CHECK(reduced.node_count() == 7);
    CHECK(reduced.arc_count() == 5);
    CHECK(classify_node(reduced, 4) == NodeClass::Isolated);
    CHECK(reduced.label(4) == "5");
    CHECK(net.arc_count() == 8);  // original untouched
}

TEST_CASE("remove_node_set equals iterated removal") {
    std::mt19937 rng(7);
    for (int round = 0; round < 50; ++round) {
        const DirectedNetwork net = testnet::random_network(rng, 6, 0.4);
        const std::vector<NodeId> cut{1, 4};
        CHECK(net.remove_node_set(cut) == net.remove_node(1).remove_node(4));
    }
}

TEST_CASE("symmetrize is idempotent and detected") {
    const DirectedNetwork net = testnet::fig1();
    const DirectedNetwork sym = net.symmetrize();
    CHECK_FALSE(net.is_undirected());
    CHECK(sym.is_undirected());
    CHECK(sym.symmetrize() == sym);
    CHECK(sym.arc_count() == 16);
}

TEST_CASE("arc addition and removal round-trip") {
    const DirectedNetwork net = testnet::fig1();
    const std::vector<Arc> extra{{6, 0}, {3, 2}};
    const DirectedNetwork bigger = net.with_arcs_added(extra);
    CHECK(bigger.arc_count() == 10);
    CHECK(bigger.with_arcs_removed(extra) == net);
    CHECK_THROWS_AS(net.with_arcs_added(std::vector<Arc>{{0, 1}}), DuplicateArc);
}

TEST_CASE("weak and strong components") {
    const DirectedNetwork net = DirectedNetwork::from_arcs(6, {{1, 2}, {2, 3}, {3, 1}, {4, 5}});
    const auto weak = weak_components(net);
    REQUIRE(weak.size() == 3);
    CHECK(weak[0] == std::vector<NodeId>{0, 1, 2});
    CHECK(weak[1] == std::vector<NodeId>{3, 4});
    CHECK(weak[2] == std::vector<NodeId>{5});

    const auto strong = strong_components(net);
    CHECK(strong.size() == 4);
    CHECK(strong[0] == std::vector<NodeId>{0, 1, 2});
}

TEST_CASE("equality ignores arc insertion order") {
    const DirectedNetwork a = DirectedNetwork::from_arcs(3, {{1, 2}, {2, 3}});
    const DirectedNetwork b = DirectedNetwork::from_arcs(3, {{2, 3}, {1, 2}});
    CHECK(a == b);
}
