// Command-line driver: dataset ingestion, synthetic graph generation,
// trust inference, heuristic-vs-oracle comparison, leave-one-out
// evaluation and full experiment sweeps.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pathtrust/dataio.hpp"
#include "pathtrust/enumerate.hpp"
#include "pathtrust/generate.hpp"
#include "pathtrust/inference.hpp"
#include "pathtrust/sweep.hpp"

namespace pt = pathtrust;
namespace fs = std::filesystem;

namespace {

struct CommonOpts {
    std::string trust_file;
    std::string rating_file;
    std::string method = "all";
    std::string weight = "indeg";
    int lmax = 3;
    double cth = -1.0;
    double alpha = 0.0;  // 0 -> mean-scaled cutoff
    double q = 0.0;
    double epsilon = 0.0;
    int heavy_min = 20;
    int cold_max = 4;
    unsigned threads = 0;
    std::uint64_t seed = 0;
    double scale_min = 0.5;
    double scale_max = 4.0;
};

void add_inference_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--method", o.method, "all|h1|h2")->check(CLI::IsMember({"all", "h1", "h2"}));
    cmd->add_option("--weight", o.weight, "indeg|delta|gamma")
        ->check(CLI::IsMember({"indeg", "delta", "gamma"}));
    cmd->add_option("--lmax", o.lmax, "maximum propagation length")->check(CLI::Range(2, 16));
    cmd->add_option("--cth", o.cth, "cutoff scale (default: 1 for indeg, 10*lmax otherwise)");
    cmd->add_option("--alpha", o.alpha, "percentile cutoff in (0,100); 0 uses the scaled mean");
    cmd->add_option("--q", o.q, "delta numerator scale (default 1/lmax)");
    cmd->add_option("--eps", o.epsilon, "delta denominator offset");
    cmd->add_option("--heavy-min", o.heavy_min, "min rating count of a heavy item");
    cmd->add_option("--cold-max", o.cold_max, "max rating count of a cold item");
    cmd->add_option("--threads", o.threads, "worker threads (0 = hardware)");
    cmd->add_option("--seed", o.seed, "random seed");
}

pt::RunConfig to_run_config(const CommonOpts& o) {
    pt::RunConfig cfg;
    cfg.lmax = o.lmax;
    cfg.method = pt::method_from_name(o.method);
    cfg.weight = pt::weight_kind_from_name(o.weight);
    cfg.cth = o.cth;
    if (o.alpha > 0.0) cfg.alpha = o.alpha;
    cfg.q = o.q;
    cfg.epsilon = o.epsilon;
    cfg.heavy_min_count = o.heavy_min;
    cfg.cold_max_count = o.cold_max;
    cfg.threads = o.threads;
    return cfg;
}

pt::IngestResult load_dataset(const CommonOpts& o, std::optional<std::size_t> user_cap = {}) {
    pt::IngestOptions opts;
    opts.user_cap = user_cap;
    opts.seed = o.seed;
    opts.scale = {o.scale_min, o.scale_max};
    return pt::ingest(o.trust_file, o.rating_file, opts);
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

std::vector<std::string> parse_str_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Path-based trust inference over directed social networks"};
    app.require_subcommand(1);

    CommonOpts o;

    // generate
    std::size_t gen_nodes = 100, gen_m = 3;
    std::string gen_out;
    auto* generate = app.add_subcommand("generate", "seeded power-law trust graph");
    generate->add_option("--nodes", gen_nodes, "node count")->required();
    generate->add_option("--m", gen_m, "edges per node");
    generate->add_option("--seed", o.seed, "random seed");
    generate->add_option("--out", gen_out, "edge list output")->required();

    // ingest
    std::string out_dir;
    std::size_t user_cap = 0;
    auto* ingest = app.add_subcommand("ingest", "filter a raw trust/rating dataset");
    ingest->add_option("--trust", o.trust_file)->required()->check(CLI::ExistingFile);
    ingest->add_option("--ratings", o.rating_file)->required()->check(CLI::ExistingFile);
    ingest->add_option("--user-cap", user_cap, "seeded uniform user subsample");
    ingest->add_option("--seed", o.seed);
    ingest->add_option("--scale-min", o.scale_min);
    ingest->add_option("--scale-max", o.scale_max);
    ingest->add_option("--out-dir", out_dir)->required();

    // infer
    std::string infer_out;
    auto* infer = app.add_subcommand("infer", "build an inferred trust network");
    infer->add_option("--trust", o.trust_file)->required()->check(CLI::ExistingFile);
    infer->add_option("--ratings", o.rating_file, "needed for gamma weights")
        ->check(CLI::ExistingFile);
    infer->add_option("--scale-min", o.scale_min);
    infer->add_option("--scale-max", o.scale_max);
    add_inference_flags(infer, o);
    infer->add_option("--out", infer_out, "inferred edge list output")->required();

    // compare
    std::string compare_out;
    auto* compare = app.add_subcommand("compare", "heuristic vs all-path oracle metrics");
    compare->add_option("--trust", o.trust_file)->required()->check(CLI::ExistingFile);
    compare->add_option("--ratings", o.rating_file)->check(CLI::ExistingFile);
    compare->add_option("--scale-min", o.scale_min);
    compare->add_option("--scale-max", o.scale_max);
    add_inference_flags(compare, o);
    compare->add_option("--out", compare_out, "comparison CSV output")->required();

    // evaluate
    std::string inferred_file, eval_out, dataset_label = "dataset", method_label = "all";
    auto* evaluate = app.add_subcommand("evaluate", "leave-one-out rating prediction");
    evaluate->add_option("--trust", o.trust_file, "ingested trust file")
        ->required()
        ->check(CLI::ExistingFile);
    evaluate->add_option("--ratings", o.rating_file)->required()->check(CLI::ExistingFile);
    evaluate->add_option("--inferred", inferred_file, "dense-id inferred edge list")
        ->required()
        ->check(CLI::ExistingFile);
    evaluate->add_option("--scale-min", o.scale_min);
    evaluate->add_option("--scale-max", o.scale_max);
    evaluate->add_option("--dataset", dataset_label);
    evaluate->add_option("--method", method_label);
    evaluate->add_option("--out", eval_out, "evaluation CSV output")->required();

    // sweep
    std::string methods_arg = "all,h1,h2", lmax_arg = "3", weights_arg = "indeg";
    std::string alpha_sweep;  // "10:90:10"
    bool do_eval = false;
    auto* sweep = app.add_subcommand("sweep", "run a configuration grid and emit reports");
    sweep->add_option("--trust", o.trust_file)->required()->check(CLI::ExistingFile);
    sweep->add_option("--ratings", o.rating_file)->check(CLI::ExistingFile);
    sweep->add_option("--scale-min", o.scale_min);
    sweep->add_option("--scale-max", o.scale_max);
    sweep->add_option("--methods", methods_arg, "comma list of all|h1|h2");
    sweep->add_option("--lmax-list", lmax_arg, "comma list of lengths");
    sweep->add_option("--weights", weights_arg, "comma list of indeg|delta|gamma");
    sweep->add_option("--cth", o.cth);
    sweep->add_option("--q", o.q);
    sweep->add_option("--eps", o.epsilon);
    sweep->add_option("--heavy-min", o.heavy_min);
    sweep->add_option("--cold-max", o.cold_max);
    sweep->add_option("--threads", o.threads);
    sweep->add_option("--seed", o.seed);
    sweep->add_option("--alpha-sweep", alpha_sweep, "lo:hi:step percentile sweep");
    sweep->add_flag("--evaluate", do_eval, "also run leave-one-out evaluation");
    sweep->add_option("--dataset", dataset_label, "label used in reports");
    sweep->add_option("--out-dir", out_dir)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed()) {
            auto g = pt::generate_powerlaw(gen_nodes, gen_m, o.seed);
            pt::write_edge_list(gen_out, g);
            std::printf("generated %zu nodes, %zu edges -> %s\n", g.node_count(),
                        g.edge_count(), gen_out.c_str());
            return 0;
        }

        if (ingest->parsed()) {
            auto data = load_dataset(
                o, user_cap > 0 ? std::optional<std::size_t>(user_cap) : std::nullopt);
            fs::create_directories(out_dir);
            pt::write_edge_list(out_dir + "/trust.tsv", data.graph, &data.user_ids);
            pt::write_ratings(out_dir + "/ratings.tsv", data.ratings, &data.user_ids,
                              &data.item_ids);
            std::printf("users=%zu items=%zu ratings=%zu ties=%zu\n", data.user_ids.size(),
                        data.item_ids.size(), data.ratings.rating_count(), data.tie_count);
            return 0;
        }

        if (infer->parsed()) {
            pt::TrustGraph graph;
            std::optional<pt::RatingTable> ratings;
            if (!o.rating_file.empty()) {
                auto data = load_dataset(o);
                graph = std::move(data.graph);
                ratings = std::move(data.ratings);
            } else {
                graph = pt::read_edge_list(o.trust_file);
            }
            pt::ExperimentRunner runner(graph, ratings ? &*ratings : nullptr, "cli");
            auto result = runner.run(to_run_config(o));
            pt::write_edge_list(infer_out, *result.inferred);
            std::printf("path_count=%zu edges=%zu density=%.6f -> %s\n",
                        result.report.path_count, result.report.edges, result.report.density,
                        infer_out.c_str());
            return 0;
        }

        if (compare->parsed()) {
            pt::TrustGraph graph;
            std::optional<pt::RatingTable> ratings;
            if (!o.rating_file.empty()) {
                auto data = load_dataset(o);
                graph = std::move(data.graph);
                ratings = std::move(data.ratings);
            } else {
                graph = pt::read_edge_list(o.trust_file);
            }
            pt::ExperimentRunner runner(graph, ratings ? &*ratings : nullptr, "cli");
            pt::RunConfig cfg = to_run_config(o);
            std::vector<pt::ComparisonReport> rows;
            pt::RunConfig oracle_cfg = cfg;
            oracle_cfg.method = pt::Method::All;
            rows.push_back(runner.run(oracle_cfg).report);
            if (cfg.method != pt::Method::All) rows.push_back(runner.run(cfg).report);
            pt::write_comparison_csv(compare_out, rows);
            std::printf("wrote %zu rows -> %s\n", rows.size(), compare_out.c_str());
            return 0;
        }

        if (evaluate->parsed()) {
            auto data = load_dataset(o);
            auto inferred = pt::read_inferred_edge_list(inferred_file);
            auto report = pt::evaluate_loo(inferred, data.ratings);
            std::vector<std::pair<std::string, pt::EvalReport>> rows{{method_label, report}};
            pt::write_eval_csv(eval_out, rows, dataset_label);
            std::printf("mae=%.4f rmse=%.4f coverage=%.2f%% -> %s\n", report.mae, report.rmse,
                        report.coverage_pct, eval_out.c_str());
            return 0;
        }

        if (sweep->parsed()) {
            pt::TrustGraph graph;
            std::optional<pt::RatingTable> ratings;
            if (!o.rating_file.empty()) {
                auto data = load_dataset(o);
                graph = std::move(data.graph);
                ratings = std::move(data.ratings);
            } else {
                graph = pt::read_edge_list(o.trust_file);
            }
            fs::create_directories(out_dir);
            pt::ExperimentRunner runner(graph, ratings ? &*ratings : nullptr, dataset_label,
                                        out_dir);

            std::vector<pt::ComparisonReport> rows;
            std::vector<std::pair<std::string, pt::EvalReport>> eval_rows;
            for (int lmax : parse_int_list(lmax_arg)) {
                for (const auto& wname : parse_str_list(weights_arg)) {
                    for (const auto& mname : parse_str_list(methods_arg)) {
                        CommonOpts ro = o;
                        ro.lmax = lmax;
                        ro.method = mname;
                        ro.weight = wname;
                        auto result = runner.run(to_run_config(ro));
                        rows.push_back(result.report);
                        if (do_eval && ratings) {
                            eval_rows.emplace_back(mname + "-" + wname,
                                                   runner.evaluate(*result.inferred));
                        }
                    }
                }
            }
            if (!rows.empty())
                pt::write_comparison_csv(out_dir + "/comparison.csv", rows);
            if (!eval_rows.empty())
                pt::write_eval_csv(out_dir + "/eval.csv", eval_rows, dataset_label);

            if (!alpha_sweep.empty()) {
                double lo = 10, hi = 90, step = 10;
                std::sscanf(alpha_sweep.c_str(), "%lf:%lf:%lf", &lo, &hi, &step);
                std::vector<double> alphas;
                for (double a = lo; a <= hi + 1e-9; a += step) alphas.push_back(a);
                pt::RunConfig base = to_run_config(o);
                base.lmax = parse_int_list(lmax_arg).front();
                auto density_rows = runner.alpha_density_sweep(base, alphas);
                pt::write_alpha_density_csv(out_dir + "/alpha_density.csv", density_rows);
            }
            std::printf("wrote %zu comparison rows -> %s\n", rows.size(), out_dir.c_str());
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
