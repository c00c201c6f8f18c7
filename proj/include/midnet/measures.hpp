#ifndef MIDNET_MEASURES_HPP
#define MIDNET_MEASURES_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "midnet/graph.hpp"

namespace midnet {

using BigInt = boost::multiprecision::cpp_int;
using Fraction = boost::multiprecision::cpp_rational;

inline double to_double(const Fraction& f) { return f.convert_to<double>(); }

/// b_i = Σ_{j≠i}[#S_j(D) − #S_j(D−i)] − #P_i(D); equals the number of
/// ordered third-party pairs connected in D but disconnected in D−i.
std::vector<long long> brokerage(const DirectedNetwork& net);

/// B(D) = Σ_i [#S_i − #s_i], the count of indirect successor slots.
long long total_potential_brokerage(const DirectedNetwork& net);

struct PowerTable {
    std::vector<long long> brokerage;
    long long total_potential;
    std::vector<Fraction> power;  // ν_i = b_i / max{B(D), 1}, exact
};

PowerTable middleman_power(const DirectedNetwork& net);

struct BetweennessTable {
    std::vector<Fraction> raw;         // geodesic betweenness over ordered pairs
    std::vector<Fraction> normalized;  // raw / (n−1)(n−2), halved denominator if undirected
};

BetweennessTable betweenness(const DirectedNetwork& net);

struct CentralityTable {
    std::vector<int> in_degree;
    std::vector<int> out_degree;
    std::vector<int> degree;
    BetweennessTable betweenness;
    std::vector<double> closeness;    // reachable_count / Σ dist, out-distances
    std::vector<double> eigenvector;  // principal in-edge eigenvector, max entry 1
    std::vector<double> pagerank;     // damping 0.85
    int eigenvector_iterations = 0;
    int pagerank_iterations = 0;
};

/// Degree, betweenness, closeness, eigenvector and PageRank on the network
/// as given (symmetrize first for the undirected comparison).
/// Throws NonConvergence when an iterative solver exceeds its cap.
CentralityTable comparison_centralities(const DirectedNetwork& net);

}  // namespace midnet

#endif
