#ifndef MIDNET_IO_HPP
#define MIDNET_IO_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "midnet/graph.hpp"
#include "midnet/measures.hpp"
#include "midnet/middleman.hpp"
#include "midnet/robustness.hpp"

namespace midnet {

/// Parsed edge-list file. Grammar: UTF-8 lines; `#` starts a comment to
/// end-of-line; blank lines skipped; an arc line is `SOURCE SEP TARGET`
/// where SEP is a run of spaces/tabs or a single comma; `%undirected`
/// requests symmetrization on load; `%node LABEL [key=value ...]` declares
/// a node (needed for isolated nodes) with optional attributes.
struct EdgeListDocument {
    bool undirected = false;
    std::vector<std::string> declared_nodes;  // %node lines, in file order
    std::map<std::string, std::map<std::string, std::string>> attributes;
    std::vector<std::pair<std::string, std::string>> arcs;
};

/// Throws ParseError (with 1-based line number), SelfLoop, DuplicateArc.
EdgeListDocument parse_edge_list(const std::string& text);

/// Canonical serialization; parse(emit(parse(x))) == parse(x).
std::string emit_edge_list(const EdgeListDocument& doc);

/// Node order: declared nodes first, then arc endpoints by first appearance.
/// Symmetrizes when the document is marked %undirected.
DirectedNetwork to_network(const EdgeListDocument& doc);

enum class Dataset { KrackhardtAdvice, FlorentineMarriage };

std::optional<Dataset> dataset_from_name(const std::string& name);

/// Loads a user-supplied case-study file and validates it against degree
/// checksums (plus arc/component counts for the marriage network).
/// Throws DatasetMissing with instructions, ChecksumMismatch listing every
/// divergent node.
DirectedNetwork load_dataset(Dataset which, const std::filesystem::path& path);

struct NetworkSummary {
    int node_count = 0;
    int arc_count = 0;
    double density = 0.0;  // arcs / n(n−1)
    int weak_components = 0;
    int strong_components = 0;
    int giant_size = 0;         // largest weak component
    double giant_fraction = 0.0;
    int diameter = 0;                 // over ordered reachable pairs in the giant component
    double average_path_length = 0.0;
};

struct NodeRow {
    NodeId id = 0;
    std::string label;
    NodeClass node_class = NodeClass::Isolated;
    MiddlemanKind kind = MiddlemanKind::NotIntermediary;
    int in_degree = 0;
    int out_degree = 0;
    long long brokerage = 0;
    Fraction power;
    Fraction betweenness;  // normalized
    double closeness = 0.0;
    double eigenvector = 0.0;
    double pagerank = 0.0;
    std::optional<int> rho, rho_dual, psi;  // middlemen only
};

struct AnalysisDocument {
    NetworkSummary summary;
    std::vector<NodeRow> nodes;
    std::vector<NodeId> middlemen;
    std::vector<RobustnessReport> robustness;
};

NetworkSummary summarize(const DirectedNetwork& net);

struct AnalyzeOptions {
    bool with_robustness = true;
    SearchOptions search;
};

/// Full per-node analysis; propagates SearchBudgetExceeded from the
/// robustness searches when with_robustness is set.
AnalysisDocument analyze_network(const DirectedNetwork& net, const AnalyzeOptions& = {});

enum class ReportFormat { Table, Json, Csv };

std::optional<ReportFormat> format_from_name(const std::string& name);

/// Table: aligned fixed-width, ν to 3 decimals, `*` regular / `**` strong
/// middleman markers. Json: stable schema with keys summary, nodes[],
/// middlemen[], robustness[]. Csv: fixed header row.
std::string emit_report(const AnalysisDocument& doc, ReportFormat format);

}  // namespace midnet

#endif
