#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "densepart/errors.hpp"
#include "densepart/experiments.hpp"
#include "densepart/graph.hpp"
#include "densepart/oracle.hpp"
#include "densepart/pipeline.hpp"
#include "densepart/serialize.hpp"
#include "densepart/zero_free.hpp"

namespace densepart::cli {

namespace {

struct GraphSource {
    std::string path;
    std::string gen;
};

void add_graph_source(CLI::App* cmd, GraphSource& src) {
    auto* g = cmd->add_option("--graph", src.path, "Edge-list file (1-based ids)");
    auto* gen = cmd->add_option("--gen", src.gen, "Generator spec gnp:n:p:seed");
    g->excludes(gen);
    gen->excludes(g);
}

Graph load_graph(const GraphSource& src) {
    if (src.path.empty() == src.gen.empty()) throw DomainError("exactly one of --graph and --gen is required");
    if (!src.path.empty()) {
        std::ifstream in(src.path);
        if (!in) throw DomainError("cannot read graph file '" + src.path + "'");
        return parse_edge_list(in);
    }
    std::istringstream ss(src.gen);
    std::string kind, n_s, p_s, seed_s;
    if (!std::getline(ss, kind, ':') || !std::getline(ss, n_s, ':') || !std::getline(ss, p_s, ':') ||
        !std::getline(ss, seed_s) || kind != "gnp")
        throw DomainError("generator spec must look like gnp:n:p:seed");
    try {
        return random_gnp(std::stoi(n_s), std::stod(p_s), std::stoull(seed_s));
    } catch (const std::logic_error&) {
        throw DomainError("generator spec must look like gnp:n:p:seed");
    }
}

std::uint64_t budget_from_env(std::uint64_t fallback) {
    if (const char* v = std::getenv("DENSEPART_BUDGET")) {
        try {
            return std::stoull(v);
        } catch (const std::logic_error&) {
            throw DomainError("DENSEPART_BUDGET must be a positive integer");
        }
    }
    return fallback;
}

class Output {
public:
    Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw DomainError("cannot open output file '" + path + "'");
            stream_ = &file_;
        }
    }
    std::ostream& operator*() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

void emit_json(const std::string& path, std::ostream& out, const nlohmann::ordered_json& j) {
    Output o(path, out);
    *o << j.dump(2) << '\n';
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream ss(s);
    while (std::getline(ss, cur, sep))
        if (!cur.empty()) parts.push_back(cur);
    return parts;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Density partition functions of graphs: approximation, certification and zero experiments"};
    app.require_subcommand(1);
    int threads = 1;
    std::string output;
    std::string format;
    app.add_option("--threads", threads, "Worker threads for parallel sections")->check(CLI::PositiveNumber);

    // approx / exact / extract share graph and tilt options
    GraphSource src;
    int m = 0;
    double gamma = 0, alpha = 0;

    auto* approx = app.add_subcommand("approx", "Approximate ln den_m(G; gamma)");
    add_graph_source(approx, src);
    approx->add_option("--m", m, "Subset size")->required();
    auto* a_gamma = approx->add_option("--gamma", gamma, "Tilt parameter gamma > 0");
    auto* a_alpha = approx->add_option("--alpha", alpha, "Weight parameter alpha in (0,1)");
    a_gamma->excludes(a_alpha);
    a_alpha->excludes(a_gamma);
    std::string mode = "direct";
    int order = 3, max_order = 64;
    double eps = 0.1, rho = 0;
    bool exploratory = false;
    approx->add_option("--mode", mode, "direct | rigorous")->check(CLI::IsMember({"direct", "rigorous"}));
    approx->add_option("--order", order, "Taylor order (direct mode)");
    approx->add_option("--eps", eps, "Additive error target on ln den (rigorous mode)");
    approx->add_option("--max-order", max_order, "Largest Taylor order (rigorous mode)");
    auto* a_rho = approx->add_option("--rho", rho, "Override the strip half-width (exploratory, rigorous mode)");
    approx->add_flag("--exploratory", exploratory, "Run rigorous mode without the zero-free guarantee");
    approx->add_option("--format", format, "json")->check(CLI::IsMember({"json"}));
    approx->add_option("--output", output, "Output file (default stdout)");

    auto* exact = app.add_subcommand("exact", "Exact ln den_m(G; gamma) by enumeration");
    add_graph_source(exact, src);
    exact->add_option("--m", m, "Subset size")->required();
    auto* e_gamma = exact->add_option("--gamma", gamma, "Tilt parameter gamma >= 0");
    auto* e_alpha = exact->add_option("--alpha", alpha, "Weight parameter alpha in (0,1)");
    e_gamma->excludes(e_alpha);
    e_alpha->excludes(e_gamma);
    exact->add_option("--format", format, "json")->check(CLI::IsMember({"json"}));
    exact->add_option("--output", output, "Output file (default stdout)");

    auto* extract = app.add_subcommand("extract", "Find a dense m-subset by successive conditioning");
    add_graph_source(extract, src);
    extract->add_option("--m", m, "Subset size")->required();
    extract->add_option("--gamma", gamma, "Tilt parameter gamma > 0")->required();
    std::string engine = "exact";
    extract->add_option("--engine", engine, "exact | approximate")->check(CLI::IsMember({"exact", "approximate"}));
    extract->add_option("--format", format, "json")->check(CLI::IsMember({"json"}));
    extract->add_option("--output", output, "Output file (default stdout)");

    auto* params = app.add_subcommand("params", "Zero-free domain parameters for delta and m");
    double delta = 0;
    params->add_option("--delta", delta, "delta in (0,1)")->required();
    params->add_option("--m", m, "Subset size (>= 4)")->required();
    auto* p_gamma = params->add_option("--gamma", gamma, "Also report rho for this gamma < delta");
    params->add_option("--format", format, "json")->check(CLI::IsMember({"json"}));
    params->add_option("--output", output, "Output file (default stdout)");

    auto* zeros = app.add_subcommand("zeros", "Random +-1 matrix root-location experiment");
    int n = 0, trials = 0;
    double r_param = 0, tau = 0;
    std::uint64_t seed = 0;
    std::string summary_path;
    bool timing = false;
    zeros->add_option("--n", n, "Vertex count")->required();
    zeros->add_option("--m", m, "Subset size")->required();
    zeros->add_option("--r", r_param, "Radius parameter r > 0")->required();
    zeros->add_option("--tau", tau, "tau > 1")->required();
    zeros->add_option("--trials", trials, "Number of sampled matrices")->required();
    zeros->add_option("--seed", seed, "Base seed")->required();
    zeros->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    zeros->add_option("--summary", summary_path, "Write the summary JSON to this file");
    zeros->add_flag("--timing", timing, "Include per-trial wall time (output is then not reproducible)");
    zeros->add_option("--output", output, "Output file (default stdout)");

    auto* identity = app.add_subcommand("check-identity", "Exact check of the second-moment identity");
    double radius = 0, theta = 0;
    identity->add_option("--n", n, "Vertex count, n(n-1)/2 <= 20")->required();
    identity->add_option("--m", m, "Subset size")->required();
    identity->add_option("--radius", radius, "Radius |z|")->required();
    identity->add_option("--theta", theta, "Argument of z");
    identity->add_option("--format", format, "json")->check(CLI::IsMember({"json"}));
    identity->add_option("--output", output, "Output file (default stdout)");

    auto* sweep = app.add_subcommand("sweep", "Direct-method error against the oracle over a G(n,p) grid");
    std::string config_path, n_list = "10", seeds_spec = "1", m_list = "4", alpha_list = "0.2", order_list = "1,2,3";
    double p = 0.5;
    sweep->add_option("--config", config_path, "JSON grid: n_values, p, seeds, m_values, alphas, orders");
    sweep->add_option("--n", n_list, "Comma-separated vertex counts");
    sweep->add_option("--p", p, "Edge probability");
    sweep->add_option("--seeds", seeds_spec, "Comma list or range a:b (inclusive)");
    sweep->add_option("--m", m_list, "Comma-separated subset sizes");
    sweep->add_option("--alpha", alpha_list, "Comma-separated alphas");
    sweep->add_option("--orders", order_list, "Comma-separated Taylor orders");
    sweep->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--output", output, "Output file (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kValidation;
    }

    try {
        const std::uint64_t budget = budget_from_env(100'000'000);
        const std::uint64_t oracle_budget = budget_from_env(kDefaultOracleBudget);
        const std::uint64_t coeff_budget = budget_from_env(kDefaultCoeffBudget);

        if (approx->parsed() || exact->parsed()) {
            const Graph g = load_graph(src);
            ApproxConfig cfg;
            cfg.m = m;
            auto* go = approx->parsed() ? a_gamma : e_gamma;
            auto* ao = approx->parsed() ? a_alpha : e_alpha;
            if (go->count()) cfg.gamma = gamma;
            if (ao->count()) cfg.alpha = alpha;
            if (approx->parsed()) {
                cfg.mode = mode == "rigorous" ? Mode::Rigorous : Mode::Direct;
                cfg.order = order;
                cfg.eps = eps;
                cfg.max_order = max_order;
                cfg.enumeration.budget = budget;
                if (a_rho->count()) cfg.rho_override = rho;
                cfg.require_guarantee = !exploratory;
            } else {
                cfg.mode = Mode::Exact;
                cfg.enumeration.budget = oracle_budget;
            }
            emit_json(output, out, to_json(approximate(g, cfg)));
        } else if (extract->parsed()) {
            const Graph g = load_graph(src);
            EnumerationOptions opt;
            opt.budget = engine == "exact" ? oracle_budget : budget;
            const auto subset =
                extract_subset(g, m, gamma, engine == "exact" ? Engine::Exact : Engine::Approximate, opt);
            ApproxConfig cfg;
            cfg.m = m;
            cfg.gamma = gamma;
            cfg.mode = engine == "exact" ? Mode::Exact : Mode::Direct;
            cfg.enumeration.budget = opt.budget;
            emit_json(output, out, to_json(approximate(g, cfg), subset));
        } else if (params->parsed()) {
            auto zp = solve_params(delta, m);
            if (p_gamma->count()) zp.rho = rho_for(zp, gamma, m);
            emit_json(output, out, to_json(zp));
        } else if (zeros->parsed()) {
            const auto res = run_zero_experiment(n, m, r_param, tau, trials, seed, threads, coeff_budget);
            Output o(output, out);
            if (format == "json") {
                nlohmann::ordered_json j;
                j["summary"] = to_json(res.summary);
                j["records"] = nlohmann::ordered_json::array();
                for (const auto& rec : res.records) j["records"].push_back(to_json(rec, timing));
                *o << j.dump(2) << '\n';
            } else {
                write_zero_csv(*o, res.records, timing);
            }
            if (!summary_path.empty()) {
                std::ofstream s(summary_path, std::ios::binary);
                if (!s) throw DomainError("cannot open summary file '" + summary_path + "'");
                s << to_json(res.summary).dump(2) << '\n';
            }
            err << "in-disc frequency " << format_double(res.summary.frequency) << " (" << res.summary.in_disc_count
                << "/" << (res.summary.trials - res.summary.failures) << "), bound 1/tau = "
                << format_double(res.summary.bound) << (res.summary.above_threshold ? "" : " [below threshold]")
                << '\n';
        } else if (identity->parsed()) {
            const auto chk = expectation_identity_check(n, m, radius, theta);
            emit_json(output, out,
                      {{"n", n}, {"m", m}, {"radius", radius}, {"theta", theta},
                       {"lhs", chk.lhs}, {"rhs", chk.rhs}, {"abs_diff", std::abs(chk.lhs - chk.rhs)}});
        } else if (sweep->parsed()) {
            SweepConfig cfg;
            try {
                if (!config_path.empty()) {
                    std::ifstream in(config_path);
                    if (!in) throw DomainError("cannot read config file '" + config_path + "'");
                    const auto j = nlohmann::json::parse(in);
                    cfg.n_values = j.value("n_values", cfg.n_values);
                    cfg.p = j.value("p", cfg.p);
                    cfg.seeds = j.value("seeds", cfg.seeds);
                    cfg.m_values = j.value("m_values", cfg.m_values);
                    cfg.alphas = j.value("alphas", cfg.alphas);
                    cfg.orders = j.value("orders", cfg.orders);
                } else {
                    cfg.n_values.clear();
                    for (const auto& s : split(n_list, ',')) cfg.n_values.push_back(std::stoi(s));
                    cfg.p = p;
                    cfg.seeds.clear();
                    if (seeds_spec.find(':') != std::string::npos) {
                        const auto ends = split(seeds_spec, ':');
                        if (ends.size() != 2) throw DomainError("--seeds range must look like a:b");
                        for (auto s = std::stoull(ends[0]); s <= std::stoull(ends[1]); ++s) cfg.seeds.push_back(s);
                    } else {
                        for (const auto& s : split(seeds_spec, ',')) cfg.seeds.push_back(std::stoull(s));
                    }
                    cfg.m_values.clear();
                    for (const auto& s : split(m_list, ',')) cfg.m_values.push_back(std::stoi(s));
                    cfg.alphas.clear();
                    for (const auto& s : split(alpha_list, ',')) cfg.alphas.push_back(std::stod(s));
                    cfg.orders.clear();
                    for (const auto& s : split(order_list, ',')) cfg.orders.push_back(std::stoi(s));
                }
            } catch (const std::logic_error&) {
                throw DomainError("sweep grid values must be numbers");
            } catch (const nlohmann::json::exception& e) {
                throw DomainError(std::string("invalid sweep config: ") + e.what());
            }
            cfg.budget = oracle_budget;
            const auto records = convergence_sweep(cfg);
            Output o(output, out);
            if (format == "json") {
                auto j = nlohmann::ordered_json::array();
                for (const auto& r : records) j.push_back(to_json(r));
                *o << j.dump(2) << '\n';
            } else {
                write_sweep_csv(*o, records);
            }
        }
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << " (raise DENSEPART_BUDGET or shrink the instance)\n";
        return kBudget;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return kBudget;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    }
    return kOk;
}

}  // namespace densepart::cli
