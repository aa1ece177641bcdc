// Command-line front end: run single experiments, rank features, generate
// synthetic device telemetry, or run a whole experiment suite.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include <kmanb/kmanb.hpp>

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw kmanb::DataError("cannot open file for writing: " + path);
    out << content;
}

int cmd_run(const kmanb::ExperimentConfig& config, const std::string& out_path,
            const std::string& format) {
    kmanb::ExperimentResult result = kmanb::run_experiment(config);
    write_file(out_path, kmanb::emit_report({result}, format));
    std::cout << config.device << '/' << config.algorithm << ": accuracy "
              << result.apr.accuracy << ", precision " << result.apr.precision << ", recall "
              << result.apr.recall << '\n';
    return 0;
}

int cmd_rank(const std::string& device, const std::string& input, const std::string& out_path) {
    kmanb::Dataset data = kmanb::load_csv(input, kmanb::device_profile(device));
    kmanb::FeatureRanking ranking = kmanb::rank_features(data);
    if (out_path.size() > 5 && out_path.substr(out_path.size() - 5) == ".json") {
        kmanb::json arr = kmanb::json::array();
        for (const auto& [name, score] : ranking.scores)
            arr.push_back({{"feature", name}, {"score", score}});
        write_file(out_path, arr.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "feature,score\n";
        for (const auto& [name, score] : ranking.scores)
            out << name << ',' << score << '\n';
        write_file(out_path, out.str());
    }
    return 0;
}

int cmd_synth(const std::string& device, const std::string& scale, double separation,
              std::uint64_t seed, const std::string& out_path) {
    kmanb::ClassCounts counts = scale == "processed" ? kmanb::processed_counts(device)
                                                     : kmanb::train_test_counts(device);
    kmanb::Dataset data =
        kmanb::synthesize(kmanb::device_profile(device), counts, seed, separation);
    kmanb::write_csv(out_path, data);
    std::cout << "wrote " << data.instances.size() << " rows to " << out_path << '\n';
    return 0;
}

int cmd_suite(const std::string& config_path, const std::string& out_dir, std::uint64_t seed) {
    std::ifstream in(config_path);
    if (!in) throw kmanb::DataError("cannot open suite config: " + config_path);
    kmanb::json doc = kmanb::json::parse(in);
    std::vector<kmanb::ExperimentConfig> configs;
    for (const auto& item : doc) configs.push_back(kmanb::config_from_json(item));

    std::vector<kmanb::ExperimentResult> results = kmanb::run_suite(configs, seed);
    std::filesystem::create_directories(out_dir);
    write_file(out_dir + "/report.json", kmanb::emit_report(results, "json"));
    write_file(out_dir + "/report.csv", kmanb::emit_report(results, "csv"));
    write_file(out_dir + "/report.md", kmanb::emit_report(results, "md"));
    std::size_t failed = 0;
    for (const auto& r : results)
        if (!r.error.empty()) ++failed;
    std::cout << results.size() << " experiments, " << failed << " failed; reports in "
              << out_dir << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"KMANB IoT anomaly-detection experiments"};
    app.require_subcommand(1);

    kmanb::ExperimentConfig config;
    std::string out_path, format = "json", target = "type";
    int k_override = -1, rf_mtry = -1;
    bool have_test = false, have_split = false;

    auto* run = app.add_subcommand("run", "run one experiment");
    run->add_option("--device", config.device, "device profile name")->required();
    run->add_option("--algorithm", config.algorithm, "kmanb|nb|knn|rf")
        ->check(CLI::IsMember({"kmanb", "nb", "knn", "rf"}))
        ->required();
    run->add_option("--train", config.train_path, "training CSV")->required();
    auto* test_opt = run->add_option("--test", config.test_path, "test CSV");
    auto* split_opt =
        run->add_option("--split", config.split_fraction, "train fraction for a stratified split");
    test_opt->excludes(split_opt);
    run->add_option("--seed", config.seed, "experiment seed");
    run->add_flag("--drop-top-feature", config.drop_top_feature,
                  "remove the top SU-ranked feature before training");
    run->add_option("--rounds", config.boost_rounds, "boosting rounds");
    run->add_option("--k-override", k_override, "override the C=A+1 cluster count");
    run->add_flag("--kmeans-plus-plus", config.kmeans_plus_plus,
                  "use k-means++ seeding instead of random training points");
    run->add_option("--knn-k", config.knn_k, "neighbors for knn");
    run->add_option("--rf-trees", config.rf_trees, "trees for rf");
    run->add_option("--rf-mtry", rf_mtry, "features tried per rf split");
    run->add_option("--target", target, "type|label")
        ->check(CLI::IsMember({"type", "label"}));
    run->add_option("--out", out_path, "output report path")->required();
    run->add_option("--format", format, "json|csv|md")
        ->check(CLI::IsMember({"json", "csv", "md"}));

    std::string rank_device, rank_input, rank_out;
    auto* rank = app.add_subcommand("rank", "rank features by correlation with attack type");
    rank->add_option("--device", rank_device)->required();
    rank->add_option("--input", rank_input, "input CSV")->required();
    rank->add_option("--out", rank_out, "output path (.json for JSON, else CSV)")->required();

    std::string synth_device, synth_scale = "train_test", synth_out;
    double synth_separation = 6.0;
    std::uint64_t synth_seed = 0;
    auto* synth = app.add_subcommand("synth", "generate a synthetic device dataset");
    synth->add_option("--device", synth_device)->required();
    synth->add_option("--scale", synth_scale, "train_test|processed")
        ->check(CLI::IsMember({"train_test", "processed"}));
    synth->add_option("--separation", synth_separation, "class separation in std deviations");
    synth->add_option("--seed", synth_seed);
    synth->add_option("--out", synth_out, "output CSV path")->required();

    std::string suite_config, suite_out;
    std::uint64_t suite_seed = 0;
    auto* suite = app.add_subcommand("suite", "run a JSON-configured experiment suite");
    suite->add_option("--config", suite_config, "JSON array of experiment configs")->required();
    suite->add_option("--out", suite_out, "output directory")->required();
    suite->add_option("--seed", suite_seed, "suite seed (per-experiment seeds derive from it)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*run) {
            have_test = test_opt->count() > 0;
            have_split = split_opt->count() > 0;
            if (have_test && have_split) return 1;
            if (k_override >= 0) config.k_override = k_override;
            if (rf_mtry >= 0) config.rf_mtry = rf_mtry;
            config.target = target == "label" ? kmanb::Target::label
                                              : kmanb::Target::attack_type;
            return cmd_run(config, out_path, format);
        }
        if (*rank) return cmd_rank(rank_device, rank_input, rank_out);
        if (*synth)
            return cmd_synth(synth_device, synth_scale, synth_separation, synth_seed, synth_out);
        if (*suite) return cmd_suite(suite_config, suite_out, suite_seed);
    } catch (const kmanb::DataError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 1;
}
