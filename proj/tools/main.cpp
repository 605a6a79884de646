// tempnet: structural bounds and numeric oracles for the reachable subspaces
// of temporal continuous-time linear networks.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tempnet/cactus.hpp"
#include "tempnet/cdg.hpp"
#include "tempnet/json_io.hpp"
#include "tempnet/mdg.hpp"
#include "tempnet/model.hpp"
#include "tempnet/oracle.hpp"
#include "tempnet/rng.hpp"
#include "tempnet/switched.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitSandwichViolation = 3;
constexpr int kExitUnwritableOutput = 4;

struct CommonParams {
    int trials = 5;
    std::uint64_t seed = 42;
    double tol = tempnet::kDefaultRankTol;
    int restarts = 8;
};

nlohmann::json network_summary(const tempnet::TemporalNetwork& net) {
    nlohmann::json out{{"n", net.n}, {"N", net.N()}};
    std::vector<int> m;
    for (const auto& pair : net.pairs)
        m.push_back(pair.m());
    out["m"] = m;
    if (!net.labels.empty())
        out["labels"] = net.labels;
    return out;
}

nlohmann::json one_based(const std::set<int>& states) {
    nlohmann::json arr = nlohmann::json::array();
    for (int s : states)
        arr.push_back(s + 1);
    return arr;
}

nlohmann::json covered_json(const std::map<int, int>& covered) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [state, copy] : covered)
        arr.push_back({state + 1, copy});
    return arr;
}

int run_analyze(const std::string& file, const CommonParams& p, bool witnesses) {
    const tempnet::TemporalNetwork net = tempnet::load_network(file);

    const tempnet::GreedyUnionResult greedy = tempnet::greedy_union_lower_bound(net);
    const int lower_h = tempnet::omega_h_lower_bound(net);
    const tempnet::CdgBound cdg = tempnet::cdg_upper_bound(net);
    const tempnet::RankReport oracle_h =
        tempnet::oracle_gdim_omega_h(net, p.trials, p.seed, p.tol);
    const tempnet::TemporalCactusBound cactus =
        tempnet::temporal_cactus_lower_bound(net, p.restarts, p.seed);
    const tempnet::MdgBound mdg = tempnet::mdg_upper_bound(net);
    const tempnet::RankReport oracle_bar =
        tempnet::oracle_gdim_omegabar(net, p.trials, p.seed, p.tol);
    const tempnet::NecessaryCheck necessary = tempnet::full_dim_necessary_check(net);
    const tempnet::EzzineHaddadReport eh =
        tempnet::ezzine_haddad_report(net, p.trials, p.seed, p.tol);

    std::vector<std::string> violations;
    auto demand = [&](bool ok, const std::string& msg) {
        if (!ok)
            violations.push_back(msg);
    };
    demand(lower_h <= oracle_h.value, "omega_h: lower bound " + std::to_string(lower_h) +
                                          " exceeds oracle " + std::to_string(oracle_h.value));
    demand(oracle_h.value <= cdg.bound, "omega_h: oracle " + std::to_string(oracle_h.value) +
                                            " exceeds upper bound " + std::to_string(cdg.bound));
    if (cdg.bound_n2_refined)
        demand(oracle_h.value <= *cdg.bound_n2_refined,
               "omega_h: oracle " + std::to_string(oracle_h.value) + " exceeds refined bound " +
                   std::to_string(*cdg.bound_n2_refined));
    demand(cactus.bound <= oracle_bar.value,
           "omega_bar: lower bound " + std::to_string(cactus.bound) + " exceeds oracle " +
               std::to_string(oracle_bar.value));
    demand(oracle_bar.value <= mdg.bound, "omega_bar: oracle " + std::to_string(oracle_bar.value) +
                                              " exceeds upper bound " + std::to_string(mdg.bound));
    if (!violations.empty()) {
        for (const auto& v : violations)
            std::cerr << "sandwich violation: " << v << "\n";
        return kExitSandwichViolation;
    }

    nlohmann::json report;
    report["network"] = network_summary(net);
    report["omega_h"] = {{"lower", lower_h},
                         {"upper", cdg.bound},
                         {"oracle", tempnet::rank_report_to_json(oracle_h)}};
    if (cdg.bound_n2_refined)
        report["omega_h"]["upper_n2_refined"] = *cdg.bound_n2_refined;
    report["omega_bar"] = {{"lower", cactus.bound},
                           {"upper", mdg.bound},
                           {"oracle", tempnet::rank_report_to_json(oracle_bar)},
                           {"necessary_check",
                            {{"passes", necessary.passes}, {"grank", necessary.grank}}}};
    report["ezzine_haddad"] = tempnet::ezzine_haddad_to_json(eh);
    report["params"] = {
        {"trials", p.trials}, {"seed", p.seed}, {"tol", p.tol}, {"restarts", p.restarts}};
    if (witnesses) {
        nlohmann::json steps = nlohmann::json::array();
        for (const auto& cover : greedy.step_covers)
            steps.push_back(one_based(cover));
        report["witnesses"] = {
            {"greedy_step_covers", steps},
            {"greedy_picked_subsystems", greedy.picked_subsystems},
            {"cdg_linking", cdg.witness.paths},
            {"mdg_linking", mdg.witness.paths},
            {"temporal_cactus",
             {{"stems", cactus.witness.stems},
              {"cycles", cactus.witness.cycles},
              {"covered", covered_json(cactus.witness.covered)}}}};
    }
    std::cout << report.dump(2) << "\n";
    return kExitOk;
}

int run_crp(const std::string& file, const std::vector<int>& path, bool have_search, int l_max) {
    const tempnet::TemporalNetwork net = tempnet::load_network(file);
    nlohmann::json report;
    if (!path.empty()) {
        const tempnet::CrpCheck check = tempnet::crp_check(net, path);
        report["mode"] = "path";
        report["path"] = path;
        report["passes"] = check.passes;
        report["linking"] = check.linking_size;
    } else if (have_search) {
        report = tempnet::crp_search_to_json(tempnet::crp_min_length_search(net, l_max));
        report["mode"] = "search";
        report["l_max"] = l_max;
    } else {
        std::cerr << "crp needs either --path or --search\n";
        return kExitBadInput;
    }
    std::cout << report.dump(2) << "\n";
    return kExitOk;
}

int run_switched(const std::string& file, std::uint64_t budget, const CommonParams& p) {
    const tempnet::TemporalNetwork net = tempnet::load_network(file);
    const tempnet::SwitchedDimResult result =
        tempnet::switched_dim_lower_bound(net, budget, p.trials, p.seed, p.tol);
    std::cout << tempnet::switched_dim_to_json(result).dump(2) << "\n";
    return kExitOk;
}

int run_export(const std::string& file, const std::string& kind, const std::string& out_path) {
    const tempnet::TemporalNetwork net = tempnet::load_network(file);
    std::string dot;
    if (kind == "cdg")
        dot = tempnet::cdg_to_dot(tempnet::build_cdg(net));
    else if (kind == "mdg")
        dot = tempnet::mdg_to_dot(tempnet::build_mdg(net));
    else
        dot = tempnet::switching_digraph_to_dot(tempnet::build_switching_digraph(net));
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "cannot open " << out_path << " for writing\n";
        return kExitUnwritableOutput;
    }
    out << dot;
    out.flush();
    if (!out.good()) {
        std::cerr << "write to " << out_path << " failed\n";
        return kExitUnwritableOutput;
    }
    return kExitOk;
}

int run_gen_stcp(int n, int m, const std::vector<int>& target, int N, std::uint64_t seed) {
    tempnet::StructuredPair pair;
    pair.a = tempnet::SparsityPattern(n, n);
    pair.b = tempnet::SparsityPattern(n, m);
    tempnet::Rng rng(seed);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (rng.unit() < 0.5)
                pair.a.insert(r, c);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < m; ++c)
            if (rng.unit() < 0.5)
                pair.b.insert(r, c);
    const tempnet::TemporalNetwork net =
        tempnet::stcp_embedding(pair, tempnet::TargetSpec::from_one_based(target), N);
    std::cout << tempnet::network_to_json(net).dump(2) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Structural bounds and numeric oracles for reachable subspaces of temporal networks"};
    app.require_subcommand(1);

    CommonParams params;
    std::string file;
    bool witnesses = false;

    CLI::App* analyze = app.add_subcommand("analyze", "Run all bounds and oracles on a network");
    analyze->add_option("file", file, "network JSON file")->required();
    analyze->add_option("--trials", params.trials, "oracle trials");
    analyze->add_option("--seed", params.seed, "master seed");
    analyze->add_option("--tol", params.tol, "numeric rank tolerance");
    analyze->add_option("--restarts", params.restarts, "temporal cactus restarts");
    analyze->add_flag("--witnesses", witnesses, "include witness structures in the report");

    std::vector<int> crp_path;
    int l_max = 0;
    CLI::App* crp = app.add_subcommand("crp", "Check or search switching paths");
    crp->add_option("file", file, "network JSON file")->required();
    CLI::Option* path_opt =
        crp->add_option("--path", crp_path, "switching path, e.g. 1,2,1")->delimiter(',');
    CLI::Option* search_opt =
        crp->add_option("--search", l_max, "search paths up to this length");
    path_opt->excludes(search_opt);
    search_opt->excludes(path_opt);

    std::uint64_t budget = 720;
    CLI::App* switched = app.add_subcommand("switched", "Permutation lower bound on the switched dimension");
    switched->add_option("file", file, "network JSON file")->required();
    switched->add_option("--budget", budget, "maximum permutations to evaluate");
    switched->add_option("--trials", params.trials, "oracle trials");
    switched->add_option("--seed", params.seed, "master seed");
    switched->add_option("--tol", params.tol, "numeric rank tolerance");

    std::string graph_kind;
    std::string out_path;
    CLI::App* exp = app.add_subcommand("export", "Export a graph in DOT format");
    exp->add_option("file", file, "network JSON file")->required();
    exp->add_option("--graph", graph_kind, "graph kind")
        ->required()
        ->check(CLI::IsMember({"cdg", "mdg", "gsw"}));
    exp->add_option("--out", out_path, "output DOT file")->required();

    int gen_n = 0;
    int gen_m = 1;
    int gen_N = 2;
    std::uint64_t gen_seed = 42;
    std::vector<int> gen_target;
    CLI::App* gen = app.add_subcommand("gen-stcp", "Generate a target-controllability embedding");
    gen->add_option("--n", gen_n, "state dimension")->required();
    gen->add_option("--m", gen_m, "input count of the random pair");
    gen->add_option("--target", gen_target, "target states, e.g. 1,3")
        ->required()
        ->delimiter(',');
    gen->add_option("--N", gen_N, "number of subsystems in the embedding");
    gen->add_option("--seed", gen_seed, "pattern seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (*analyze)
            return run_analyze(file, params, witnesses);
        if (*crp)
            return run_crp(file, crp_path, search_opt->count() > 0, l_max);
        if (*switched)
            return run_switched(file, budget, params);
        if (*exp)
            return run_export(file, graph_kind, out_path);
        if (*gen)
            return run_gen_stcp(gen_n, gen_m, gen_target, gen_N, gen_seed);
    } catch (const tempnet::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
