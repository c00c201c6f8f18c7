#include "midnet/measures.hpp"

#include <cmath>
#include <deque>
#include <limits>

#include "midnet/reachability.hpp"

namespace midnet {

std::vector<long long> brokerage(const DirectedNetwork& net) {
    const int n = net.node_count();
    ReachabilityTable full(net);
    std::vector<long long> result(n, 0);
    for (NodeId i = 0; i < n; ++i) {
        ReachabilityTable reduced(net.remove_node(i));
        long long differential = 0;
        for (NodeId j = 0; j < n; ++j) {
            if (j == i) continue;
            differential += static_cast<long long>(full.successors(j).count()) -
                            static_cast<long long>(reduced.successors(j).count());
        }
        result[i] = differential - static_cast<long long>(full.predecessors(i).count());
    }
    return result;
}

long long total_potential_brokerage(const DirectedNetwork& net) {
    ReachabilityTable table(net);
    long long total = 0;
    for (NodeId i = 0; i < net.node_count(); ++i)
        total += static_cast<long long>(table.successors(i).count()) - net.out_degree(i);
    return total;
}

PowerTable middleman_power(const DirectedNetwork& net) {
    PowerTable table;
    table.brokerage = brokerage(net);
    table.total_potential = total_potential_brokerage(net);
    const long long denom = std::max<long long>(table.total_potential, 1);
    table.power.reserve(table.brokerage.size());
    for (long long b : table.brokerage) table.power.emplace_back(b, denom);
    return table;
}

namespace {

struct GeodesicInfo {
    std::vector<int> dist;     // -1 when unreachable
    std::vector<BigInt> sigma;  // geodesic counts
};

GeodesicInfo geodesics_from(const DirectedNetwork& net, NodeId source) {
    const int n = net.node_count();
    GeodesicInfo info{std::vector<int>(n, -1), std::vector<BigInt>(n, 0)};
    info.dist[source] = 0;
    info.sigma[source] = 1;
    std::deque<NodeId> queue{source};
    while (!queue.empty()) {
        NodeId u = queue.front();
        queue.pop_front();
        for (NodeId v : net.successors(u)) {
            if (info.dist[v] < 0) {
                info.dist[v] = info.dist[u] + 1;
                queue.push_back(v);
            }
            if (info.dist[v] == info.dist[u] + 1) info.sigma[v] += info.sigma[u];
        }
    }
    return info;
}

}  // namespace

BetweennessTable betweenness(const DirectedNetwork& net) {
    const int n = net.node_count();
    BetweennessTable table;
    table.raw.assign(n, Fraction(0));
    table.normalized.assign(n, Fraction(0));

    std::vector<GeodesicInfo> from(n);
    for (NodeId s = 0; s < n; ++s) from[s] = geodesics_from(net, s);

    for (NodeId h = 0; h < n; ++h)
        for (NodeId j = 0; j < n; ++j) {
            if (j == h || from[h].dist[j] <= 0) continue;
            for (NodeId i = 0; i < n; ++i) {
                if (i == h || i == j) continue;
                if (from[h].dist[i] > 0 && from[i].dist[j] > 0 &&
                    from[h].dist[i] + from[i].dist[j] == from[h].dist[j])
                    table.raw[i] += Fraction(from[h].sigma[i] * from[i].sigma[j],
                                             from[h].sigma[j]);
            }
        }

    BigInt denom = BigInt(n - 1) * BigInt(n - 2);
    if (net.is_undirected()) denom /= 2;
    if (denom > 0)
        for (NodeId i = 0; i < n; ++i) table.normalized[i] = table.raw[i] / denom;
    return table;
}

namespace {

constexpr double kEigenTolerance = 1e-10;
constexpr int kEigenCap = 100000;
constexpr double kPageRankDamping = 0.85;
constexpr double kPageRankTolerance = 1e-12;
constexpr int kPageRankCap = 100000;

std::vector<double> eigenvector_centrality(const DirectedNetwork& net, int& iterations) {
    const int n = net.node_count();
    iterations = 0;
    // Acyclic adjacency is nilpotent: the only eigenvalue is zero, so the
    // limit vector is zero.
    bool acyclic = true;
    for (const auto& component : strong_components(net))
        if (component.size() > 1) acyclic = false;
    if (acyclic) return std::vector<double>(n, 0.0);

    // Power iteration on A + I: same eigenvectors, but the shift breaks the
    // period-2 oscillation that plain iteration exhibits on bipartite
    // undirected networks.
    std::vector<double> x(n, 1.0), next(n);
    for (iterations = 1; iterations <= kEigenCap; ++iterations) {
        for (NodeId i = 0; i < n; ++i) {
            double sum = x[i];
            for (NodeId j : net.predecessors(i)) sum += x[j];
            next[i] = sum;
        }
        double norm = 0;
        for (double v : next) norm += v * v;
        norm = std::sqrt(norm);
        double delta = 0;
        for (NodeId i = 0; i < n; ++i) {
            next[i] /= norm;
            delta = std::max(delta, std::fabs(next[i] - x[i]));
        }
        x = next;
        if (delta < kEigenTolerance) {
            double top = *std::max_element(x.begin(), x.end());
            if (top > 0)
                for (double& v : x) v /= top;
            return x;
        }
    }
    throw NonConvergence("eigenvector power iteration", kEigenCap);
}

std::vector<double> pagerank(const DirectedNetwork& net, int& iterations) {
    const int n = net.node_count();
    std::vector<double> x(n, 1.0 / n), next(n);
    for (iterations = 1; iterations <= kPageRankCap; ++iterations) {
        double dangling = 0;
        for (NodeId j = 0; j < n; ++j)
            if (net.out_degree(j) == 0) dangling += x[j];
        const double base = (1.0 - kPageRankDamping) / n + kPageRankDamping * dangling / n;
        for (NodeId i = 0; i < n; ++i) {
            double sum = 0;
            for (NodeId j : net.predecessors(i)) sum += x[j] / net.out_degree(j);
            next[i] = base + kPageRankDamping * sum;
        }
        double delta = 0;
        for (NodeId i = 0; i < n; ++i) delta += std::fabs(next[i] - x[i]);
        x = next;
        if (delta < kPageRankTolerance) return x;
    }
    throw NonConvergence("pagerank iteration", kPageRankCap);
}

}  // namespace

CentralityTable comparison_centralities(const DirectedNetwork& net) {
    const int n = net.node_count();
    CentralityTable table;
    table.in_degree.resize(n);
    table.out_degree.resize(n);
    table.degree.resize(n);
    for (NodeId i = 0; i < n; ++i) {
        table.in_degree[i] = net.in_degree(i);
        table.out_degree[i] = net.out_degree(i);
        table.degree[i] = net.degree(i);
    }
    table.betweenness = betweenness(net);

    table.closeness.assign(n, 0.0);
    for (NodeId i = 0; i < n; ++i) {
        GeodesicInfo info = geodesics_from(net, i);
        long long total = 0;
        int reachable = 0;
        for (NodeId j = 0; j < n; ++j)
            if (j != i && info.dist[j] > 0) {
                total += info.dist[j];
                ++reachable;
            }
        if (reachable > 0) table.closeness[i] = static_cast<double>(reachable) / total;
    }

    table.eigenvector = eigenvector_centrality(net, table.eigenvector_iterations);
    table.pagerank = pagerank(net, table.pagerank_iterations);
    return table;
}

}  // namespace midnet
