#include "midnet/io.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "midnet/contestation.hpp"
#include "midnet/reachability.hpp"

namespace midnet {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> tokens;
    std::istringstream stream(s);
    std::string token;
    while (stream >> token) tokens.push_back(token);
    return tokens;
}

void parse_node_directive(EdgeListDocument& doc, const std::vector<std::string>& tokens,
                          int line) {
    if (tokens.size() < 2) throw ParseError(line, "%node requires a label");
    const std::string& label = tokens[1];
    if (doc.attributes.count(label)) throw ParseError(line, "node declared twice: " + label);
    doc.declared_nodes.push_back(label);
    auto& attrs = doc.attributes[label];
    for (size_t t = 2; t < tokens.size(); ++t) {
        const auto eq = tokens[t].find('=');
        if (eq == std::string::npos || eq == 0)
            throw ParseError(line, "expected key=value attribute, got: " + tokens[t]);
        const std::string key = tokens[t].substr(0, eq);
        if (attrs.count(key)) throw ParseError(line, "duplicate attribute key: " + key);
        attrs[key] = tokens[t].substr(eq + 1);
    }
}

}  // namespace

EdgeListDocument parse_edge_list(const std::string& text) {
    EdgeListDocument doc;
    std::set<std::pair<std::string, std::string>> seen;
    std::istringstream stream(text);
    std::string raw;
    for (int line = 1; std::getline(stream, raw); ++line) {
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const std::string body = trim(raw);
        if (body.empty()) continue;

        if (body.front() == '%') {
            const std::vector<std::string> tokens = split_ws(body);
            if (tokens[0] == "%undirected") {
                if (tokens.size() > 1) throw ParseError(line, "%undirected takes no arguments");
                doc.undirected = true;
            } else if (tokens[0] == "%node") {
                parse_node_directive(doc, tokens, line);
            } else {
                throw ParseError(line, "unknown directive: " + tokens[0]);
            }
            continue;
        }

        std::string from, to;
        if (const auto comma = body.find(','); comma != std::string::npos) {
            if (body.find(',', comma + 1) != std::string::npos)
                throw ParseError(line, "more than one comma in arc line");
            from = trim(body.substr(0, comma));
            to = trim(body.substr(comma + 1));
            if (from.find_first_of(" \t") != std::string::npos ||
                to.find_first_of(" \t") != std::string::npos)
                throw ParseError(line, "whitespace inside label");
        } else {
            const std::vector<std::string> tokens = split_ws(body);
            if (tokens.size() != 2)
                throw ParseError(line, "expected SOURCE TARGET, got " +
                                           std::to_string(tokens.size()) + " token(s)");
            from = tokens[0];
            to = tokens[1];
        }
        if (from.empty() || to.empty()) throw ParseError(line, "empty label");
        if (from == to) throw SelfLoop(from);
        if (!seen.emplace(from, to).second) throw DuplicateArc(from, to);
        doc.arcs.emplace_back(from, to);
    }
    return doc;
}

std::string emit_edge_list(const EdgeListDocument& doc) {
    std::ostringstream out;
    if (doc.undirected) out << "%undirected\n";
    for (const std::string& label : doc.declared_nodes) {
        out << "%node " << label;
        if (auto it = doc.attributes.find(label); it != doc.attributes.end())
            for (const auto& [key, value] : it->second) out << ' ' << key << '=' << value;
        out << '\n';
    }
    for (const auto& [from, to] : doc.arcs) out << from << ' ' << to << '\n';
    return out.str();
}

DirectedNetwork to_network(const EdgeListDocument& doc) {
    std::vector<std::string> labels = doc.declared_nodes;
    std::set<std::string> known(labels.begin(), labels.end());
    for (const auto& [from, to] : doc.arcs) {
        if (known.insert(from).second) labels.push_back(from);
        if (known.insert(to).second) labels.push_back(to);
    }
    DirectedNetwork net = DirectedNetwork::build(labels, doc.arcs);
    return doc.undirected ? net.symmetrize() : net;
}

// --- case-study datasets ----------------------------------------------------

std::optional<Dataset> dataset_from_name(const std::string& name) {
    if (name == "krackhardt-advice") return Dataset::KrackhardtAdvice;
    if (name == "florentine-marriage") return Dataset::FlorentineMarriage;
    return std::nullopt;
}

namespace {

struct DegreeChecksum {
    const char* label;
    int in_degree;
    int out_degree;
};

// Krackhardt's managerial advice network: per-manager (d⁻, d⁺).
constexpr DegreeChecksum kKrackhardtDegrees[] = {
    {"1", 12, 4}, {"2", 18, 2},  {"3", 3, 9},   {"4", 6, 7},   {"5", 3, 10},  {"6", 0, 1},
    {"7", 11, 6}, {"8", 1, 7},   {"9", 4, 9},   {"10", 8, 5},  {"11", 9, 3},  {"12", 3, 1},
    {"13", 0, 6}, {"14", 10, 4}, {"15", 3, 9},  {"16", 0, 4},  {"17", 0, 5},  {"18", 15, 12},
    {"19", 2, 10}, {"20", 6, 7}, {"21", 15, 8},
};

// Florentine marriage network: per-house (d⁻, d⁺); multi-word house names
// use underscores so they remain single edge-list tokens.
constexpr DegreeChecksum kFlorentineDegrees[] = {
    {"Albizzi", 3, 3},      {"Aldobrandini", 0, 0}, {"Altoviti", 1, 0},
    {"Baroncelli", 0, 0},   {"Benizzi", 0, 1},      {"Bisheri", 1, 0},
    {"Castellani", 1, 3},   {"C-Donati", 1, 0},     {"Da_Uzzano", 1, 1},
    {"Dall'Antella", 0, 1}, {"Davanzati", 0, 1},    {"Della_Casa", 1, 1},
    {"Dietisalvi", 1, 0},   {"Fioravanti", 0, 1},   {"Ginori", 2, 1},
    {"Guadagni", 1, 1},     {"Guicciardini", 0, 1}, {"Lamberteschi", 0, 0},
    {"Medici", 2, 3},       {"Orlandini", 1, 0},    {"Panciatichi", 2, 1},
    {"Pazzi", 4, 3},        {"Pepi", 1, 0},         {"Peruzzi", 2, 4},
    {"Rondinelli", 1, 1},   {"Rucellai", 1, 0},     {"Scambrilla", 1, 0},
    {"Solosmei", 0, 0},     {"Strozzi", 2, 3},      {"Tornabuoni", 1, 0},
    {"Valori", 0, 1},       {"Velluti", 0, 0},
};

void check_degrees(const DirectedNetwork& net, std::span<const DegreeChecksum> expected,
                   const char* what) {
    std::vector<std::string> bad;
    for (const DegreeChecksum& row : expected) {
        const auto id = net.find(row.label);
        if (!id) {
            bad.push_back(std::string(row.label) + " (missing)");
            continue;
        }
        if (net.in_degree(*id) != row.in_degree || net.out_degree(*id) != row.out_degree)
            bad.push_back(std::string(row.label) + " (got " + std::to_string(net.in_degree(*id)) +
                          "/" + std::to_string(net.out_degree(*id)) + ", want " +
                          std::to_string(row.in_degree) + "/" + std::to_string(row.out_degree) +
                          ")");
    }
    if (net.node_count() != static_cast<int>(expected.size()))
        bad.push_back("node count " + std::to_string(net.node_count()) + ", want " +
                      std::to_string(expected.size()));
    if (!bad.empty()) {
        std::string message = std::string(what) + " degree checksums failed:";
        for (const std::string& entry : bad) message += "\n  " + entry;
        throw ChecksumMismatch(message);
    }
}

}  // namespace

DirectedNetwork load_dataset(Dataset which, const std::filesystem::path& path) {
    std::ifstream file(path);
    if (!file) {
        const char* name = which == Dataset::KrackhardtAdvice ? "krackhardt-advice"
                                                              : "florentine-marriage";
        throw DatasetMissing(
            std::string("dataset file not found: ") + path.string() +
            "\nThe " + name + " adjacency data is not bundled with this tool; supply it as an "
            "edge list (one `SOURCE TARGET` arc per line, `%node LABEL` for isolated nodes). "
            "Loading validates every node degree against the published tables.");
    }
    std::stringstream buffer;
    buffer << file.rdbuf();
    DirectedNetwork net = to_network(parse_edge_list(buffer.str()));

    if (which == Dataset::KrackhardtAdvice) {
        check_degrees(net, kKrackhardtDegrees, "krackhardt-advice");
    } else {
        check_degrees(net, kFlorentineDegrees, "florentine-marriage");
        std::vector<std::string> bad;
        if (net.arc_count() != 31)
            bad.push_back("arc count " + std::to_string(net.arc_count()) + ", want 31");
        const auto components = weak_components(net);
        if (components.size() != 9)
            bad.push_back(std::to_string(components.size()) + " weak components, want 9");
        size_t giant = 0;
        for (const auto& component : components) giant = std::max(giant, component.size());
        if (giant != 20)
            bad.push_back("giant component of " + std::to_string(giant) + " nodes, want 20");
        if (!bad.empty()) {
            std::string message = "florentine-marriage structure checks failed:";
            for (const std::string& entry : bad) message += "\n  " + entry;
            throw ChecksumMismatch(message);
        }
    }
    return net;
}

// --- analysis document ------------------------------------------------------

NetworkSummary summarize(const DirectedNetwork& net) {
    NetworkSummary summary;
    summary.node_count = net.node_count();
    summary.arc_count = net.arc_count();
    const long long ordered_pairs =
        static_cast<long long>(net.node_count()) * (net.node_count() - 1);
    if (ordered_pairs > 0)
        summary.density = static_cast<double>(net.arc_count()) / ordered_pairs;
    if (net.node_count() == 0) return summary;

    const auto weak = weak_components(net);
    summary.weak_components = static_cast<int>(weak.size());
    summary.strong_components = static_cast<int>(strong_components(net).size());

    const auto giant = std::max_element(weak.begin(), weak.end(),
                                        [](const auto& a, const auto& b) {
                                            return a.size() < b.size();
                                        });
    summary.giant_size = static_cast<int>(giant->size());
    summary.giant_fraction = static_cast<double>(summary.giant_size) / net.node_count();

    // Diameter and mean distance over ordered reachable pairs inside the
    // giant weak component (arcs never leave a weak component).
    long long total = 0, pairs = 0;
    int diameter = 0;
    std::vector<int> dist(net.node_count());
    for (NodeId source : *giant) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[source] = 0;
        std::deque<NodeId> queue{source};
        while (!queue.empty()) {
            NodeId u = queue.front();
            queue.pop_front();
            for (NodeId v : net.successors(u))
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
        }
        for (NodeId target : *giant)
            if (target != source && dist[target] > 0) {
                total += dist[target];
                ++pairs;
                diameter = std::max(diameter, dist[target]);
            }
    }
    summary.diameter = diameter;
    if (pairs > 0) summary.average_path_length = static_cast<double>(total) / pairs;
    return summary;
}

AnalysisDocument analyze_network(const DirectedNetwork& net, const AnalyzeOptions& options) {
    AnalysisDocument doc;
    doc.summary = summarize(net);
    if (net.node_count() == 0) return doc;

    const MiddlemanReport report = middleman_set(net);
    const PowerTable power = middleman_power(net);
    const CentralityTable centrality = comparison_centralities(net);
    doc.middlemen = report.middlemen();
    if (options.with_robustness)
        for (NodeId i : doc.middlemen)
            doc.robustness.push_back({i, arc_robustness(net, i, options.search),
                                      dual_arc_robustness(net, i, options.search),
                                      node_robustness(net, i, options.search)});

    for (NodeId i = 0; i < net.node_count(); ++i) {
        NodeRow row;
        row.id = i;
        row.label = net.label(i);
        row.node_class = classify_node(net, i);
        row.kind = report.kind[i];
        row.in_degree = net.in_degree(i);
        row.out_degree = net.out_degree(i);
        row.brokerage = power.brokerage[i];
        row.power = power.power[i];
        row.betweenness = centrality.betweenness.normalized[i];
        row.closeness = centrality.closeness[i];
        row.eigenvector = centrality.eigenvector[i];
        row.pagerank = centrality.pagerank[i];
        doc.nodes.push_back(std::move(row));
    }
    for (const RobustnessReport& r : doc.robustness) {
        doc.nodes[r.target].rho = r.rho.value;
        doc.nodes[r.target].rho_dual = r.rho_dual.value;
        doc.nodes[r.target].psi = r.psi.value;
    }
    return doc;
}

// --- report emission ---------------------------------------------------------

std::optional<ReportFormat> format_from_name(const std::string& name) {
    if (name == "table") return ReportFormat::Table;
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    return std::nullopt;
}

namespace {

std::string fixed(double value, int places) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*f", places, value);
    return buffer;
}

const char* stars(MiddlemanKind kind) {
    if (kind == MiddlemanKind::StrongMiddleman) return "**";
    if (kind == MiddlemanKind::RegularMiddleman) return "*";
    return "";
}

std::string opt_int(const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string();
}

std::string emit_table(const AnalysisDocument& doc) {
    std::ostringstream out;
    const NetworkSummary& s = doc.summary;
    out << "nodes: " << s.node_count << "  arcs: " << s.arc_count
        << "  density: " << fixed(s.density, 3) << '\n';
    out << "components: " << s.weak_components << " weak, " << s.strong_components
        << " strong\n";
    out << "giant component: " << s.giant_size << "/" << s.node_count << " nodes ("
        << fixed(100.0 * s.giant_fraction, 1) << "%), diameter " << s.diameter
        << ", avg path length " << fixed(s.average_path_length, 3) << '\n';

    if (doc.middlemen.empty()) {
        out << "no middlemen\n";
    } else {
        out << "middlemen: ";
        for (size_t k = 0; k < doc.middlemen.size(); ++k) {
            const NodeRow& row = doc.nodes[doc.middlemen[k]];
            out << (k ? ", " : "") << row.label << stars(row.kind);
        }
        out << '\n';
    }
    if (doc.nodes.empty()) return out.str();
    out << '\n';

    const std::vector<std::string> header = {"node", "class", "in",  "out", "b",
                                             "nu",   "btw",   "cls", "eig", "pr",
                                             "rho",  "rho*",  "psi"};
    std::vector<std::vector<std::string>> rows;
    for (const NodeRow& n : doc.nodes)
        rows.push_back({n.label + stars(n.kind), to_string(n.node_class),
                        std::to_string(n.in_degree), std::to_string(n.out_degree),
                        std::to_string(n.brokerage), fixed(to_double(n.power), 3),
                        fixed(to_double(n.betweenness), 3), fixed(n.closeness, 3),
                        fixed(n.eigenvector, 3), fixed(n.pagerank, 3), opt_int(n.rho),
                        opt_int(n.rho_dual), opt_int(n.psi)});

    std::vector<size_t> width(header.size());
    for (size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
    }
    auto print_row = [&](const std::vector<std::string>& row) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) out << "  ";
            out << row[c] << std::string(width[c] - row[c].size(), ' ');
        }
        out << '\n';
    };
    print_row(header);
    for (const auto& row : rows) print_row(row);
    return out.str();
}

std::string emit_json(const AnalysisDocument& doc) {
    nlohmann::json j;
    const NetworkSummary& s = doc.summary;
    j["summary"] = {{"nodes", s.node_count},
                    {"arcs", s.arc_count},
                    {"density", s.density},
                    {"weak_components", s.weak_components},
                    {"strong_components", s.strong_components},
                    {"giant", {{"nodes", s.giant_size},
                               {"fraction", s.giant_fraction},
                               {"diameter", s.diameter},
                               {"average_path_length", s.average_path_length}}}};
    j["nodes"] = nlohmann::json::array();
    for (const NodeRow& n : doc.nodes) {
        nlohmann::json row = {{"id", n.id},
                              {"label", n.label},
                              {"class", to_string(n.node_class)},
                              {"kind", to_string(n.kind)},
                              {"in_degree", n.in_degree},
                              {"out_degree", n.out_degree},
                              {"brokerage", n.brokerage},
                              {"power", to_double(n.power)},
                              {"betweenness", to_double(n.betweenness)},
                              {"closeness", n.closeness},
                              {"eigenvector", n.eigenvector},
                              {"pagerank", n.pagerank}};
        row["rho"] = n.rho ? nlohmann::json(*n.rho) : nlohmann::json();
        row["rho_dual"] = n.rho_dual ? nlohmann::json(*n.rho_dual) : nlohmann::json();
        row["psi"] = n.psi ? nlohmann::json(*n.psi) : nlohmann::json();
        j["nodes"].push_back(std::move(row));
    }
    j["middlemen"] = nlohmann::json::array();
    for (NodeId i : doc.middlemen) j["middlemen"].push_back(doc.nodes[i].label);
    j["robustness"] = nlohmann::json::array();
    for (const RobustnessReport& r : doc.robustness) {
        auto arc_labels = [&](const std::vector<Arc>& arcs) {
            nlohmann::json list = nlohmann::json::array();
            for (const Arc& a : arcs)
                list.push_back({doc.nodes[a.first].label, doc.nodes[a.second].label});
            return list;
        };
        nlohmann::json node_labels = nlohmann::json::array();
        for (NodeId v : r.psi.nodes) node_labels.push_back(doc.nodes[v].label);
        j["robustness"].push_back({{"label", doc.nodes[r.target].label},
                                   {"rho", r.rho.value},
                                   {"rho_witness", arc_labels(r.rho.arcs)},
                                   {"rho_dual", r.rho_dual.value},
                                   {"rho_dual_witness", arc_labels(r.rho_dual.arcs)},
                                   {"psi", r.psi.value},
                                   {"psi_witness", node_labels}});
    }
    return j.dump(2) + "\n";
}

std::string emit_csv(const AnalysisDocument& doc) {
    std::ostringstream out;
    out << "node,label,class,kind,in_degree,out_degree,brokerage,power,betweenness,"
           "closeness,eigenvector,pagerank,rho,rho_dual,psi\n";
    for (const NodeRow& n : doc.nodes)
        out << n.id << ',' << n.label << ',' << to_string(n.node_class) << ','
            << to_string(n.kind) << ',' << n.in_degree << ',' << n.out_degree << ','
            << n.brokerage << ',' << fixed(to_double(n.power), 6) << ','
            << fixed(to_double(n.betweenness), 6) << ',' << fixed(n.closeness, 6) << ','
            << fixed(n.eigenvector, 6) << ',' << fixed(n.pagerank, 6) << ','
            << opt_int(n.rho) << ',' << opt_int(n.rho_dual) << ',' << opt_int(n.psi) << '\n';
    return out.str();
}

}  // namespace

std::string emit_report(const AnalysisDocument& doc, ReportFormat format) {
    switch (format) {
        case ReportFormat::Table: return emit_table(doc);
        case ReportFormat::Json: return emit_json(doc);
        case ReportFormat::Csv: return emit_csv(doc);
    }
    return "";
}

}  // namespace midnet
