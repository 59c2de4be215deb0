#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ramsey/adversary.hpp"
#include "ramsey/arrow.hpp"
#include "ramsey/config.hpp"
#include "ramsey/detectors.hpp"
#include "ramsey/harness.hpp"
#include "ramsey/io.hpp"
#include "ramsey/separation.hpp"
#include "ramsey/theory.hpp"

using namespace ramsey;
using nlohmann::json;

namespace {

int cmd_sample(const std::string& out, std::size_t n, double p, std::uint64_t master,
               std::uint64_t stream) {
    Graph g = sample_gnp(n, p, Seed{master, stream});
    write_graph_file(g, out);
    std::cout << "wrote " << out << ": " << g.num_vertices() << " vertices, " << g.num_edges()
              << " edges\n";
    return 0;
}

int cmd_theory(std::size_t r, std::size_t n, double p, std::size_t t,
               std::optional<std::size_t> big_n) {
    std::size_t nv = big_n.value_or(r * n + t);
    auto print = [](const std::string& name, double v) {
        std::cout << "  " << name << " = " << v << '\n';
    };
    std::cout << "r = " << r << ", n = " << n << " (path edges), p = " << p << ", t = " << t
              << ", N = " << nv << '\n';
    std::cout << "ramsey numbers\n";
    print("chvatal_ramsey(r, n)", static_cast<double>(theory::chvatal_ramsey(r, n)));
    print("goodness_lower_bound(r+1, n+1, 1)",
          static_cast<double>(theory::goodness_lower_bound(r + 1, n + 1, 1)));
    std::cout << "expectations\n";
    print("expected_clique_count(N, p, r)", theory::expected_clique_count(nv, p, r));
    print("expected_boundary(r, n, t, p)", theory::expected_boundary(r, n, t, p));
    print("expected_pinned_cliques(r, n, t, p)", theory::expected_pinned_cliques(r, n, t, p));
    auto reg = theory::regime_thresholds(r, n);
    std::cout << "p thresholds\n";
    print("p_general = n^(-2/(r+1))", reg.p_general);
    print("p_klr = n^(-2/(r+2))", reg.p_klr);
    if (p > 0.0 && p <= 1.0) {
        auto tt = theory::t_thresholds(r, n, p);
        std::cout << "t thresholds at p\n";
        if (tt.t_general) print("t_general = p^(-(r+1)/2) log x", *tt.t_general);
        else std::cout << "  t_general: not applicable (x <= 1)\n";
        print("t_klr_scale = 1/p", tt.t_klr_scale);
        print("t_zero_specific = p^(-C(r+1,2)) n^(-(r-1))", tt.t_zero_specific);
        theory::RegimeParams params{r, n, p, t, nv};
        print("x = p n^(2/(r+1))", params.x());
    }
    return 0;
}

int cmd_decompose(const std::string& graph_file, const std::string& colouring_file,
                  std::size_t r, std::size_t n, std::size_t t) {
    Graph g = read_graph_file(graph_file);
    TwoColouring col = read_colouring_file(colouring_file, g);
    auto outcome = decompose_blue_partite(col, r, n, t);
    if (auto* path = std::get_if<PathWitness>(&outcome)) {
        std::cout << witness_to_text(*path) << '\n';
    } else {
        auto& w = std::get<WeakPartiteWitness>(outcome);
        std::cout << witness_to_text(PartitionWitness{w.sets}) << '\n';
    }
    return 0;
}

int cmd_adversary(const std::string& graph_file, const std::string& strategy, std::size_t r,
                  std::size_t n, std::size_t t, const std::string& verify,
                  const std::string& out_colouring, const std::string& report_file) {
    Graph g = read_graph_file(graph_file);
    VerificationMode mode =
        verify == "heuristic" ? VerificationMode::Heuristic : VerificationMode::Exact;

    AdversaryResult res;
    if (strategy == "hitting") res = strategy_hitting_set(g, r, n, mode);
    else if (strategy == "boundary") res = strategy_boundary(g, r, n, t, mode);
    else if (strategy == "pinned") res = strategy_pinned_cliques(g, r, n, t, mode);
    else {
        std::cerr << "unknown strategy: " << strategy << '\n';
        return 1;
    }

    std::ostream* rep = &std::cout;
    std::ofstream rep_file;
    if (!report_file.empty()) {
        rep_file.open(report_file);
        if (!rep_file) {
            std::cerr << report_file << ": cannot open for writing\n";
            return 1;
        }
        rep = &rep_file;
    }
    for (const auto& check : res.verification) {
        json j{{"name", check.name},
               {"pass", check.pass},
               {"exact", check.exact},
               {"witness", check.witness_text}};
        *rep << j.dump() << '\n';
    }
    json summary{{"name", "strategy_outcome"},
                 {"strategy", strategy_name(res.strategy)},
                 {"pass", res.success},
                 {"witness", res.failure_reason}};
    *rep << summary.dump() << '\n';

    if (res.colouring) {
        write_colouring_file(*res.colouring, out_colouring);
        std::cout << (res.success ? "avoiding colouring written to "
                                  : "non-avoiding colouring written to ")
                  << out_colouring << '\n';
    } else {
        std::cout << "strategy failed before producing a colouring: " << res.failure_reason
                  << '\n';
    }
    return res.success ? 0 : 1;
}

int cmd_arrow_exact(const std::string& graph_file, std::size_t r, std::size_t n,
                    std::uint64_t budget, const std::string& certificate) {
    Graph g = read_graph_file(graph_file);
    auto verdict = arrow_exact(g, r, n, budget);
    switch (verdict.kind) {
        case ArrowKind::Holds:
            std::cout << "ArrowHolds: every colouring has a red P_" << n << " or a blue K_"
                      << r + 1 << " (nodes=" << verdict.nodes_explored << ")\n";
            return 0;
        case ArrowKind::Fails: {
            std::cout << "ArrowFails: avoiding colouring found (nodes="
                      << verdict.nodes_explored << ")\n";
            if (!certificate.empty()) {
                write_colouring_file(*verdict.certificate, certificate);
                std::cout << "certificate written to " << certificate << '\n';
            }
            return 1;
        }
        case ArrowKind::Unknown:
        default:
            std::cout << "Unknown: " << verdict.reason << " (nodes=" << verdict.nodes_explored
                      << ")\n";
            return 2;
    }
}

int cmd_sweep(const std::string& config_file, const std::string& out_dir, std::size_t workers) {
    ExperimentConfig cfg = load_experiment_config(config_file);
    auto result = run_sweep(cfg, out_dir, workers);
    std::cout << "sweep complete: " << result.records.size() << " trials, "
              << result.curve.points.size() << " curve points\n";
    std::cout << "records: " << out_dir << "/records.csv\n";
    std::cout << "chart:   " << out_dir << "/curve.svg\n";
    for (const auto& pt : result.curve.points)
        std::cout << "  " << result.curve.axis << " = " << pt.value << "  fraction = "
                  << pt.fraction << "  ci = [" << pt.ci.low << ", " << pt.ci.high << "]  ("
                  << pt.trials << " trials)\n";
    return 0;
}

int cmd_plot(const std::string& in_csv, const std::string& out_svg, const std::string& axis) {
    auto records = parse_csv_file(in_csv);
    auto curve = aggregate_curve(records, axis);
    emit_svg(curve, out_svg);
    std::cout << "wrote " << out_svg << " (" << curve.points.size() << " points)\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clique-versus-path Ramsey experiments on random graphs"};
    app.require_subcommand(1);

    // sample
    auto* sample = app.add_subcommand("sample", "Sample G(N,p) to an edge-list file");
    std::string sample_out = "graph.txt";
    std::size_t sample_n = 10;
    double sample_p = 0.5;
    std::uint64_t sample_seed = 0, sample_stream = 0;
    sample->add_option("--n", sample_n, "vertex count")->required();
    sample->add_option("--p", sample_p, "edge probability")->check(CLI::Range(0.0, 1.0))->required();
    sample->add_option("--seed", sample_seed, "master seed");
    sample->add_option("--stream", sample_stream, "stream id");
    sample->add_option("--out", sample_out, "output file");

    // theory
    auto* theory_cmd = app.add_subcommand("theory", "Print formula values as a table");
    std::size_t th_r = 2, th_n = 10, th_t = 0;
    double th_p = 0.1;
    std::optional<std::size_t> th_nv;
    theory_cmd->add_option("--r", th_r)->required();
    theory_cmd->add_option("--n", th_n)->required();
    theory_cmd->add_option("--p", th_p)->required();
    theory_cmd->add_option("--t", th_t);
    theory_cmd->add_option("--N", th_nv, "vertex count (default rn + t)");

    // decompose
    auto* dec = app.add_subcommand("decompose", "Red P_n or weak blue (r+1)-partite witness");
    std::string dec_graph, dec_col;
    std::size_t dec_r = 2, dec_n = 4, dec_t = 1;
    dec->add_option("--graph", dec_graph)->required();
    dec->add_option("--colouring", dec_col)->required();
    dec->add_option("--r", dec_r)->required();
    dec->add_option("--n", dec_n)->required();
    dec->add_option("--t", dec_t)->required();

    // adversary
    auto* adv = app.add_subcommand("adversary", "Run an avoiding-colouring construction");
    std::string adv_graph, adv_strategy, adv_verify = "exact";
    std::string adv_out = "colouring.txt", adv_report;
    std::size_t adv_r = 2, adv_n = 4, adv_t = 0;
    adv->add_option("--graph", adv_graph)->required();
    adv->add_option("--strategy", adv_strategy, "hitting | boundary | pinned")->required();
    adv->add_option("--r", adv_r)->required();
    adv->add_option("--n", adv_n)->required();
    adv->add_option("--t", adv_t);
    adv->add_option("--verify", adv_verify, "exact | heuristic");
    adv->add_option("--out", adv_out, "colouring output file");
    adv->add_option("--report", adv_report, "JSON-lines report file (default stdout)");

    // arrow-exact
    auto* arrow = app.add_subcommand("arrow-exact", "Decide G -> (K_{r+1}, P_n) exactly");
    std::string ar_graph, ar_cert;
    std::size_t ar_r = 2, ar_n = 2;
    std::uint64_t ar_budget = 50'000'000;
    arrow->add_option("--graph", ar_graph)->required();
    arrow->add_option("--r", ar_r)->required();
    arrow->add_option("--n", ar_n)->required();
    arrow->add_option("--budget", ar_budget, "search node budget");
    arrow->add_option("--certificate", ar_cert, "write avoiding colouring here on failure");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Monte Carlo sweep from a config file");
    std::string sw_config, sw_out = "sweep-out";
    std::size_t sw_workers = 1;
    sweep->add_option("--config", sw_config)->required();
    sweep->add_option("--out", sw_out)->required();
    sweep->add_option("--workers", sw_workers);

    // plot
    auto* plot = app.add_subcommand("plot", "Render a records CSV as an SVG curve");
    std::string pl_in, pl_out = "curve.svg", pl_x = "p";
    plot->add_option("--in", pl_in)->required();
    plot->add_option("--out", pl_out)->required();
    plot->add_option("--x", pl_x, "p | t | x");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sample) return cmd_sample(sample_out, sample_n, sample_p, sample_seed, sample_stream);
        if (*theory_cmd) return cmd_theory(th_r, th_n, th_p, th_t, th_nv);
        if (*dec) return cmd_decompose(dec_graph, dec_col, dec_r, dec_n, dec_t);
        if (*adv)
            return cmd_adversary(adv_graph, adv_strategy, adv_r, adv_n, adv_t, adv_verify,
                                 adv_out, adv_report);
        if (*arrow) return cmd_arrow_exact(ar_graph, ar_r, ar_n, ar_budget, ar_cert);
        if (*sweep) return cmd_sweep(sw_config, sw_out, sw_workers);
        if (*plot) return cmd_plot(pl_in, pl_out, pl_x);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return *arrow ? 3 : 1;
    }
    return 0;
}
