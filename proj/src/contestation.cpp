#include "midnet/contestation.hpp"

#include <algorithm>

#include "midnet/middleman.hpp"
#include "midnet/reachability.hpp"

namespace midnet {

namespace {

void require_intermediary(const DirectedNetwork& net, NodeId i) {
    if (classify_node(net, i) != NodeClass::Intermediary) throw NotIntermediary(net.label(i));
}

std::vector<Arc> coverage_pairs(const ReachabilityTable& table, NodeId i) {
    std::vector<Arc> pairs;
    for (auto h = table.predecessors(i).find_first(); h != NodeSet::npos;
         h = table.predecessors(i).find_next(h))
        for (auto j = table.successors(i).find_first(); j != NodeSet::npos;
             j = table.successors(i).find_next(j))
            if (h != j) pairs.emplace_back(static_cast<NodeId>(h), static_cast<NodeId>(j));
    return pairs;
}

/// Per-candidate coverage of Γ_i as bitsets over the universe index space.
struct CoverProblem {
    std::vector<Arc> universe;                 // Γ_i(D)
    std::vector<NodeId> candidates;            // nodes with a nonempty contribution
    std::vector<boost::dynamic_bitset<>> covers;  // aligned with candidates
    std::vector<boost::dynamic_bitset<>> suffix_union;  // covers[c] | covers[c+1] | ...
};

CoverProblem build_cover_problem(const DirectedNetwork& net, NodeId i) {
    CoverProblem problem;
    ReachabilityTable full(net);
    problem.universe = coverage_pairs(full, i);
    ReachabilityTable reduced(net.remove_node(i));
    const size_t m = problem.universe.size();
    for (NodeId j = 0; j < net.node_count(); ++j) {
        if (j == i) continue;
        NodeSet origin = reduced.origin(j);
        NodeSet reach = reduced.reach(j);
        boost::dynamic_bitset<> covered(m);
        for (size_t p = 0; p < m; ++p)
            if (origin.test(problem.universe[p].first) && reach.test(problem.universe[p].second))
                covered.set(p);
        if (covered.any()) {
            problem.candidates.push_back(j);
            problem.covers.push_back(std::move(covered));
        }
    }
    problem.suffix_union.assign(problem.covers.size() + 1, boost::dynamic_bitset<>(m));
    for (size_t c = problem.covers.size(); c-- > 0;)
        problem.suffix_union[c] = problem.suffix_union[c + 1] | problem.covers[c];
    return problem;
}

/// Lex-first exact cover of fixed size k; empty optional when none exists.
bool find_cover(const CoverProblem& problem, size_t k, size_t first,
                const boost::dynamic_bitset<>& covered, std::vector<NodeId>& chosen) {
    if (covered.count() == problem.universe.size()) return true;
    if (k == 0) return false;
    for (size_t c = first; c < problem.candidates.size(); ++c) {
        // Suffix feasibility: everything from c onward plus current must cover.
        if (!((covered | problem.suffix_union[c]).count() == problem.universe.size())) return false;
        chosen.push_back(problem.candidates[c]);
        if (find_cover(problem, k - 1, c + 1, covered | problem.covers[c], chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

CoverageSet coverage(const DirectedNetwork& net, NodeId i) {
    net.check_node(i);
    require_intermediary(net, i);
    ReachabilityTable table(net);
    return {i, coverage_pairs(table, i)};
}

CoverageSet extended_coverage(const DirectedNetwork& net, NodeId i) {
    net.check_node(i);
    ReachabilityTable table(net);
    std::vector<Arc> pairs;
    NodeSet origin = table.origin(i);
    NodeSet reach = table.reach(i);
    for (auto h = origin.find_first(); h != NodeSet::npos; h = origin.find_next(h))
        for (auto j = reach.find_first(); j != NodeSet::npos; j = reach.find_next(j))
            pairs.emplace_back(static_cast<NodeId>(h), static_cast<NodeId>(j));
    return {i, pairs};
}

bool is_contested_by(const DirectedNetwork& net, NodeId i, std::span<const NodeId> contestors) {
    net.check_node(i);
    for (NodeId c : contestors) {
        net.check_node(c);
        if (c == i) throw TargetInSet(net.label(i));
    }
    require_intermediary(net, i);
    ReachabilityTable full(net);
    ReachabilityTable reduced(net.remove_node(i));
    std::vector<std::pair<NodeSet, NodeSet>> extents;
    extents.reserve(contestors.size());
    for (NodeId c : contestors) extents.emplace_back(reduced.origin(c), reduced.reach(c));
    for (const Arc& pair : coverage_pairs(full, i)) {
        bool hit = false;
        for (const auto& [origin, reach] : extents)
            if (origin.test(pair.first) && reach.test(pair.second)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

bool is_directly_contested(const DirectedNetwork& net, NodeId i, NodeId j) {
    net.check_node(i);
    net.check_node(j);
    if (i == j) throw SameNode();
    ReachabilityTable full(net);
    ReachabilityTable reduced(net.remove_node(i));
    NodeSet preds_ok = reduced.predecessors(j);
    preds_ok.set(j);
    NodeSet succs_ok = reduced.successors(j);
    succs_ok.set(j);
    return full.predecessors(i).is_subset_of(preds_ok) &&
           full.successors(i).is_subset_of(succs_ok);
}

ContestationResult minimal_contesting_set(const DirectedNetwork& net, NodeId i) {
    net.check_node(i);
    require_intermediary(net, i);
    ContestationResult result{i, ContestStatus::Uncontested, std::nullopt, {}};

    CoverProblem problem = build_cover_problem(net, i);
    for (size_t c = 0; c < problem.candidates.size(); ++c)
        if (problem.covers[c].count() == problem.universe.size())
            result.direct_contestors.push_back(problem.candidates[c]);

    if (is_middleman(net, i)) return result;  // duality: middlemen are uncontested

    for (size_t k = 1; k <= problem.candidates.size(); ++k) {
        std::vector<NodeId> chosen;
        boost::dynamic_bitset<> none(problem.universe.size());
        if (find_cover(problem, k, 0, none, chosen)) {
            result.status = ContestStatus::Contested;
            result.minimal_set = chosen;
            return result;
        }
    }
    return result;  // unreachable for non-middleman intermediaries (duality)
}

GreedyCover greedy_contesting_set(const DirectedNetwork& net, NodeId i) {
    net.check_node(i);
    require_intermediary(net, i);
    CoverProblem problem = build_cover_problem(net, i);
    const size_t m = problem.universe.size();

    size_t widest = 0;
    for (const auto& cover : problem.covers) widest = std::max(widest, cover.count());
    GreedyCover result;
    result.lower_bound = widest == 0 ? (m == 0 ? 0 : 1)
                                     : static_cast<int>((m + widest - 1) / widest);

    boost::dynamic_bitset<> covered(m);
    std::vector<char> used(problem.candidates.size(), 0);
    while (covered.count() < m) {
        size_t best = problem.candidates.size();
        size_t best_gain = 0;
        for (size_t c = 0; c < problem.candidates.size(); ++c) {
            if (used[c]) continue;
            size_t gain = (problem.covers[c] - covered).count();
            if (gain > best_gain) {
                best_gain = gain;
                best = c;
            }
        }
        if (best == problem.candidates.size()) {  // no cover exists
            result.set.clear();
            return result;
        }
        used[best] = 1;
        covered |= problem.covers[best];
        result.set.push_back(problem.candidates[best]);
    }
    std::sort(result.set.begin(), result.set.end());
    return result;
}

bool verify_duality(const DirectedNetwork& net) {
    MiddlemanReport report = middleman_set(net);
    for (NodeId i = 0; i < net.node_count(); ++i) {
        if (classify_node(net, i) != NodeClass::Intermediary) continue;
        std::vector<NodeId> everyone;
        for (NodeId j = 0; j < net.node_count(); ++j)
            if (j != i) everyone.push_back(j);
        const bool contested = is_contested_by(net, i, everyone);
        if (report.is_middleman(i) == contested) return false;
    }
    return true;
}

}  // namespace midnet
