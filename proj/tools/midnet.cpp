// midnet: middleman analysis of directed networks from edge lists.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "midnet/contestation.hpp"
#include "midnet/io.hpp"
#include "midnet/measures.hpp"
#include "midnet/middleman.hpp"
#include "midnet/robustness.hpp"

namespace {

constexpr int kExitUsage = 2;   // parse or validation failure
constexpr int kExitBudget = 3;  // robustness search budget exceeded

struct CommonOpts {
    std::string input;
    std::string dataset;
    bool undirected = false;
    std::string format = "table";
    long long budget = 5'000'000;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    auto* input = cmd->add_option("input", opts.input, "edge-list file");
    auto* dataset =
        cmd->add_option("--dataset", opts.dataset, "named case-study dataset")
            ->check(CLI::IsMember({"krackhardt-advice", "florentine-marriage"}));
    input->excludes(dataset);
    dataset->excludes(input);
    cmd->add_flag("--undirected", opts.undirected, "symmetrize the network before analysis");
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    cmd->add_option("--budget", opts.budget, "robustness search evaluation cap")
        ->check(CLI::Range(1LL, std::numeric_limits<long long>::max()));
}

midnet::DirectedNetwork load_input(const CommonOpts& opts) {
    midnet::DirectedNetwork net;
    if (!opts.dataset.empty()) {
        const auto which = midnet::dataset_from_name(opts.dataset);
        std::filesystem::path dir = "data";
        if (const char* env = std::getenv("MIDNET_DATA_DIR")) dir = env;
        net = midnet::load_dataset(*which, dir / (opts.dataset + ".edges"));
    } else if (!opts.input.empty()) {
        std::ifstream file(opts.input);
        if (!file) throw midnet::Error("cannot open input file: " + opts.input);
        std::stringstream buffer;
        buffer << file.rdbuf();
        net = midnet::to_network(midnet::parse_edge_list(buffer.str()));
    } else {
        throw midnet::Error("an input file or --dataset is required");
    }
    return opts.undirected ? net.symmetrize() : net;
}

midnet::NodeId resolve_node(const midnet::DirectedNetwork& net, const std::string& label) {
    const auto id = net.find(label);
    if (!id) throw midnet::Error("unknown node: " + label);
    return *id;
}

std::string join_labels(const midnet::DirectedNetwork& net, const std::vector<midnet::NodeId>& nodes) {
    std::string text;
    for (size_t k = 0; k < nodes.size(); ++k) text += (k ? "," : "") + net.label(nodes[k]);
    return text;
}

std::string arc_text(const midnet::DirectedNetwork& net, const std::vector<midnet::Arc>& arcs) {
    std::string text;
    for (size_t k = 0; k < arcs.size(); ++k)
        text += (k ? " " : "") + net.label(arcs[k].first) + "->" + net.label(arcs[k].second);
    return text;
}

int cmd_analyze(const CommonOpts& opts) {
    const midnet::DirectedNetwork net = load_input(opts);
    midnet::AnalyzeOptions analyze_opts;
    analyze_opts.search.budget = opts.budget;
    const midnet::AnalysisDocument doc = midnet::analyze_network(net, analyze_opts);
    std::cout << midnet::emit_report(doc, *midnet::format_from_name(opts.format));
    return 0;
}

int cmd_contest(const CommonOpts& opts, const std::string& label, bool greedy) {
    const midnet::DirectedNetwork net = load_input(opts);
    const midnet::NodeId node = resolve_node(net, label);
    if (midnet::classify_node(net, node) != midnet::NodeClass::Intermediary)
        throw midnet::NotIntermediary(net.label(node));

    nlohmann::json j{{"node", net.label(node)}};
    std::string status_line, direct_line;
    std::vector<midnet::NodeId> direct, chosen_set;
    if (greedy) {
        const midnet::GreedyCover cover = midnet::greedy_contesting_set(net, node);
        const midnet::MiddlemanReport report = midnet::middleman_set(net);
        if (report.is_middleman(node)) {
            status_line = "uncontested — " +
                          std::string(midnet::to_string(report.kind[node]));
            j["status"] = "uncontested";
            j["kind"] = midnet::to_string(report.kind[node]);
        } else {
            status_line = "contested by {" + join_labels(net, cover.set) + "} (greedy, size " +
                          std::to_string(cover.set.size()) + ", lower bound " +
                          std::to_string(cover.lower_bound) + ")";
            j["status"] = "contested";
            chosen_set = cover.set;
            j["greedy_set"] = nlohmann::json::array();
            for (midnet::NodeId c : cover.set) j["greedy_set"].push_back(net.label(c));
            j["lower_bound"] = cover.lower_bound;
        }
    } else {
        const midnet::ContestationResult result = midnet::minimal_contesting_set(net, node);
        direct = result.direct_contestors;
        if (result.status == midnet::ContestStatus::Uncontested) {
            const midnet::MiddlemanReport report = midnet::middleman_set(net);
            status_line = "uncontested — " +
                          std::string(midnet::to_string(report.kind[node]));
            j["status"] = "uncontested";
            j["kind"] = midnet::to_string(report.kind[node]);
        } else {
            chosen_set = *result.minimal_set;
            status_line = "contested by {" + join_labels(net, *result.minimal_set) +
                          "} (minimal, size " + std::to_string(result.minimal_set->size()) + ")";
            j["status"] = "contested";
            j["minimal_set"] = nlohmann::json::array();
            for (midnet::NodeId c : *result.minimal_set)
                j["minimal_set"].push_back(net.label(c));
        }
        if (!direct.empty()) direct_line = "directly contested by " + join_labels(net, direct);
        j["direct_contestors"] = nlohmann::json::array();
        for (midnet::NodeId c : direct) j["direct_contestors"].push_back(net.label(c));
    }

    if (opts.format == "json") {
        std::cout << j.dump(2) << '\n';
    } else if (opts.format == "csv") {
        auto join_semicolon = [&](const std::vector<midnet::NodeId>& nodes) {
            std::string text;
            for (size_t k = 0; k < nodes.size(); ++k)
                text += (k ? ";" : "") + net.label(nodes[k]);
            return text;
        };
        std::cout << "node,status,set,direct_contestors\n";
        std::cout << net.label(node) << ',' << j["status"].get<std::string>() << ','
                  << join_semicolon(chosen_set) << ',' << join_semicolon(direct) << '\n';
    } else {
        std::cout << "node " << net.label(node) << ": " << status_line << '\n';
        if (!direct_line.empty()) std::cout << direct_line << '\n';
    }
    return 0;
}

int cmd_robustness(const CommonOpts& opts, const std::string& label, bool all) {
    const midnet::DirectedNetwork net = load_input(opts);
    midnet::SearchOptions search;
    search.budget = opts.budget;

    std::vector<midnet::NodeId> targets;
    if (all) {
        targets = midnet::middleman_set(net).middlemen();
    } else {
        targets.push_back(resolve_node(net, label));
    }

    nlohmann::json rows = nlohmann::json::array();
    std::ostringstream table, csv;
    csv << "node,rho,rho_dual,psi,rho_witness,rho_dual_witness,psi_witness\n";
    for (midnet::NodeId i : targets) {
        const midnet::ArcWitness rho = midnet::arc_robustness(net, i, search);
        const midnet::ArcWitness dual = midnet::dual_arc_robustness(net, i, search);
        const midnet::NodeWitness psi = midnet::node_robustness(net, i, search);
        table << net.label(i) << ": rho=" << rho.value << " rho*=" << dual.value
              << " psi=" << psi.value << '\n';
        table << "  add " << arc_text(net, rho.arcs) << '\n';
        table << "  remove " << arc_text(net, dual.arcs) << '\n';
        table << "  delete " << join_labels(net, psi.nodes) << '\n';
        std::string psi_text;
        for (size_t k = 0; k < psi.nodes.size(); ++k)
            psi_text += (k ? ";" : "") + net.label(psi.nodes[k]);
        csv << net.label(i) << ',' << rho.value << ',' << dual.value << ',' << psi.value << ','
            << arc_text(net, rho.arcs) << ',' << arc_text(net, dual.arcs) << ',' << psi_text
            << '\n';
        nlohmann::json row{{"node", net.label(i)},
                           {"rho", rho.value},
                           {"rho_dual", dual.value},
                           {"psi", psi.value}};
        rows.push_back(std::move(row));
    }

    if (opts.format == "json")
        std::cout << rows.dump(2) << '\n';
    else if (opts.format == "csv")
        std::cout << csv.str();
    else
        std::cout << table.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"middleman analysis of directed networks"};
    app.require_subcommand(1);

    CommonOpts analyze_opts, contest_opts, robust_opts;
    std::string contest_node, robust_node;
    bool greedy = false, all = false;

    CLI::App* analyze = app.add_subcommand("analyze", "full per-node analysis report");
    add_common(analyze, analyze_opts);

    CLI::App* contest = app.add_subcommand("contest", "contestation analysis of one node");
    add_common(contest, contest_opts);
    contest->add_option("node", contest_node, "target node label")->required();
    contest->add_flag("--greedy", greedy, "use the greedy cover heuristic");

    CLI::App* robustness = app.add_subcommand("robustness", "middleman robustness measures");
    add_common(robustness, robust_opts);
    auto* node_opt = robustness->add_option("node", robust_node, "target middleman label");
    auto* all_flag = robustness->add_flag("--all", all, "every middleman in the network");
    node_opt->excludes(all_flag);
    all_flag->excludes(node_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(analyze_opts);
        if (contest->parsed()) return cmd_contest(contest_opts, contest_node, greedy);
        if (robustness->parsed()) {
            if (!all && robust_node.empty()) {
                std::cerr << "robustness requires a node label or --all\n";
                return kExitUsage;
            }
            return cmd_robustness(robust_opts, robust_node, all);
        }
    } catch (const midnet::SearchBudgetExceeded& e) {
        std::cerr << e.what() << "\nbest bounds: " << e.best_lower << ".." << e.best_upper
                  << '\n';
        return kExitBudget;
    } catch (const midnet::Error& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
