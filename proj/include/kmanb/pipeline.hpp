#ifndef KMANB_PIPELINE_HPP
#define KMANB_PIPELINE_HPP

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kmanb/adaboost.hpp"
#include "kmanb/dataset.hpp"
#include "kmanb/eval.hpp"
#include "kmanb/feature_rank.hpp"
#include "kmanb/kmeans.hpp"
#include "kmanb/knn.hpp"
#include "kmanb/naive_bayes.hpp"
#include "kmanb/profiles.hpp"
#include "kmanb/random_forest.hpp"
#include "kmanb/serialize.hpp"
#include "kmanb/version.hpp"

namespace kmanb {

struct SynthSpec {
    std::string scale = "train_test"; // train_test | processed
    double separation = 6.0;
};

struct ExperimentConfig {
    std::string device;
    std::string algorithm = "kmanb"; // kmanb | nb | knn | rf
    std::string train_path;          // empty when synthetic
    std::string test_path;           // empty -> stratified split of the train source
    std::optional<SynthSpec> synth;
    std::uint64_t seed = 0;
    double split_fraction = 0.7;
    bool drop_top_feature = false;
    int boost_rounds = 10;
    std::optional<int> k_override;
    bool kmeans_plus_plus = false;
    int knn_k = 1;
    int rf_trees = 100;
    std::optional<int> rf_mtry;
    Target target = Target::attack_type;
};

struct ClusterDiagnostics {
    int k = 0;
    double sse = 0.0;
    double purity = 0.0;
    int iterations = 0;
};

struct ExperimentResult {
    ExperimentConfig config;
    AprReport apr;
    TimingReport timing;
    std::optional<ClusterDiagnostics> cluster;
    std::optional<FeatureRanking> ranking;
    std::string error; // nonempty when a suite cell failed
};

namespace detail {

inline void check_same_profile(const Dataset& train, const Dataset& test) {
    if (train.profile.device != test.profile.device ||
        train.profile.features.size() != test.profile.features.size())
        throw SchemaError("train and test datasets use different profiles");
    for (std::size_t f = 0; f < train.profile.features.size(); ++f)
        if (train.profile.features[f].name != test.profile.features[f].name ||
            train.profile.features[f].kind != test.profile.features[f].kind)
            throw SchemaError("train and test datasets use different profiles (feature '" +
                              train.profile.features[f].name + "')");
}

// Step 1 of the pipeline: optional top-feature removal (ranked on train
// only), then min-max normalization fitted on train and applied to both.
inline void prepare(Dataset& train, Dataset& test, const ExperimentConfig& config,
                    ExperimentResult& result) {
    check_same_profile(train, test);
    if (config.drop_top_feature) {
        FeatureRanking ranking = rank_features(train);
        result.ranking = ranking;
        const std::string& top = ranking.scores.front().first;
        train = drop_feature(train, top);
        test = drop_feature(test, top);
    }
    NormalizationParams params = normalize_fit(train);
    train = normalize_apply(params, train);
    test = normalize_apply(params, test);
}

inline AprReport score(const Dataset& test, const std::vector<std::string>& predictions,
                       Target target) {
    std::vector<std::string> truths;
    truths.reserve(test.instances.size());
    for (const Instance& inst : test.instances)
        truths.push_back(target_class_of(inst, target));
    return apr(confusion(truths, predictions, target_class_order(test.profile, target)));
}

} // namespace detail

inline ExperimentResult run_kmanb(Dataset train, Dataset test, const ExperimentConfig& config) {
    ExperimentResult result;
    result.config = config;
    detail::prepare(train, test, config, result);

    int k = config.k_override ? *config.k_override : cluster_count(train.profile);

    ClusterModel cluster_model;
    Dataset aug_train;
    BoostedModel boosted;
    result.timing.train_seconds = timed([&] {
        cluster_model = fit(train, k, config.seed, 500,
                            config.kmeans_plus_plus ? KmeansInit::plus_plus
                                                    : KmeansInit::random_points);
        aug_train = augment(train, cluster_model);
        boosted = boost_fit(aug_train, BoostConfig{config.boost_rounds, config.target},
                            config.seed);
    });

    ClusterClassMapping mapping = class_to_cluster(cluster_model, train);
    result.cluster = ClusterDiagnostics{k, cluster_model.final_sse, mapping.purity,
                                        cluster_model.iterations_run};

    std::vector<std::string> predictions;
    result.timing.test_seconds = timed([&] {
        Dataset aug_test = augment(test, cluster_model);
        predictions.reserve(aug_test.instances.size());
        for (const Instance& inst : aug_test.instances)
            predictions.push_back(boost_predict(boosted, inst));
    });

    result.apr = detail::score(test, predictions, config.target);
    return result;
}

inline ExperimentResult run_baseline(const std::string& algorithm, Dataset train, Dataset test,
                                     const ExperimentConfig& config) {
    ExperimentResult result;
    result.config = config;
    result.config.algorithm = algorithm;
    detail::prepare(train, test, config, result);

    std::vector<std::string> predictions;
    predictions.reserve(test.instances.size());

    if (algorithm == "nb") {
        NbModel model;
        result.timing.train_seconds = timed([&] {
            std::vector<double> weights(train.instances.size(), 1.0);
            model = nb_fit(train, weights, config.target);
        });
        result.timing.test_seconds = timed([&] {
            for (const Instance& inst : test.instances)
                predictions.push_back(nb_predict(model, inst));
        });
    } else if (algorithm == "knn") {
        KnnModel model;
        result.timing.train_seconds =
            timed([&] { model = knn_fit(train, config.knn_k, config.target); });
        result.timing.test_seconds = timed([&] {
            for (const Instance& inst : test.instances)
                predictions.push_back(knn_predict(model, inst));
        });
    } else if (algorithm == "rf") {
        int d = static_cast<int>(train.profile.features.size());
        int m_try = config.rf_mtry
                        ? *config.rf_mtry
                        : std::min(d, static_cast<int>(std::floor(std::log2(d))) + 1);
        RandomForestModel model;
        result.timing.train_seconds = timed(
            [&] { model = rf_fit(train, config.rf_trees, m_try, config.seed, config.target); });
        result.timing.test_seconds = timed([&] {
            for (const Instance& inst : test.instances)
                predictions.push_back(rf_predict(model, inst));
        });
    } else {
        throw DataError("unknown baseline algorithm '" + algorithm + "'");
    }

    result.apr = detail::score(test, predictions, config.target);
    return result;
}

// Resolve the configured data sources into a (train, test) pair.
inline std::pair<Dataset, Dataset> materialize(const ExperimentConfig& config) {
    if (!config.train_path.empty() && config.synth)
        throw DataError("experiment specifies both a train file and a synthetic source");
    Dataset source;
    DeviceProfile profile = device_profile(config.device);
    if (config.synth) {
        ClassCounts counts = config.synth->scale == "processed"
                                 ? processed_counts(config.device)
                                 : train_test_counts(config.device);
        source = synthesize(profile, counts, config.seed, config.synth->separation);
    } else if (!config.train_path.empty()) {
        source = load_csv(config.train_path, profile);
    } else {
        throw DataError("experiment has no data source (train file or synth spec)");
    }
    if (!config.test_path.empty()) {
        Dataset test = load_csv(config.test_path, profile);
        return {std::move(source), std::move(test)};
    }
    return stratified_split(source, config.split_fraction, config.seed);
}

inline ExperimentResult run_experiment(const ExperimentConfig& config) {
    auto [train, test] = materialize(config);
    if (config.algorithm == "kmanb")
        return run_kmanb(std::move(train), std::move(test), config);
    return run_baseline(config.algorithm, std::move(train), std::move(test), config);
}

inline std::vector<ExperimentResult> run_suite(const std::vector<ExperimentConfig>& configs,
                                               std::uint64_t suite_seed) {
    Rng seeder(suite_seed);
    std::vector<ExperimentResult> results;
    for (std::size_t i = 0; i < configs.size(); ++i) {
        ExperimentConfig config = configs[i];
        config.seed = seeder.derive(i);
        try {
            results.push_back(run_experiment(config));
        } catch (const std::exception& e) {
            ExperimentResult failed;
            failed.config = config;
            failed.error = e.what();
            results.push_back(std::move(failed));
        }
    }
    return results;
}

inline json to_json(const ExperimentConfig& config) {
    json j = {{"device", config.device},
              {"algorithm", config.algorithm},
              {"seed", config.seed},
              {"split_fraction", config.split_fraction},
              {"drop_top_feature", config.drop_top_feature},
              {"boost_rounds", config.boost_rounds},
              {"kmeans_plus_plus", config.kmeans_plus_plus},
              {"knn_k", config.knn_k},
              {"rf_trees", config.rf_trees},
              {"target", config.target == Target::attack_type ? "type" : "label"}};
    if (!config.train_path.empty()) j["train"] = config.train_path;
    if (!config.test_path.empty()) j["test"] = config.test_path;
    if (config.k_override) j["k_override"] = *config.k_override;
    if (config.rf_mtry) j["rf_mtry"] = *config.rf_mtry;
    if (config.synth)
        j["synth"] = {{"scale", config.synth->scale}, {"separation", config.synth->separation}};
    return j;
}

inline ExperimentConfig config_from_json(const json& j) {
    ExperimentConfig config;
    config.device = j.at("device").get<std::string>();
    config.algorithm = j.value("algorithm", std::string("kmanb"));
    config.train_path = j.value("train", std::string());
    config.test_path = j.value("test", std::string());
    if (j.contains("synth")) {
        SynthSpec spec;
        spec.scale = j["synth"].value("scale", std::string("train_test"));
        spec.separation = j["synth"].value("separation", 6.0);
        config.synth = spec;
    }
    config.seed = j.value("seed", 0ULL);
    config.split_fraction = j.value("split_fraction", 0.7);
    config.drop_top_feature = j.value("drop_top_feature", false);
    config.boost_rounds = j.value("boost_rounds", 10);
    config.kmeans_plus_plus = j.value("kmeans_plus_plus", false);
    if (j.contains("k_override")) config.k_override = j["k_override"].get<int>();
    config.knn_k = j.value("knn_k", 1);
    config.rf_trees = j.value("rf_trees", 100);
    if (j.contains("rf_mtry")) config.rf_mtry = j["rf_mtry"].get<int>();
    std::string target = j.value("target", std::string("type"));
    if (target == "label") {
        config.target = Target::label;
    } else if (target == "type") {
        config.target = Target::attack_type;
    } else {
        throw DataError("target must be 'type' or 'label'");
    }
    return config;
}

inline json to_json(const ExperimentResult& result) {
    json j = {{"version", version},
              {"config", to_json(result.config)},
              {"apr", to_json(result.apr)},
              {"timing", to_json(result.timing)}};
    if (result.cluster)
        j["cluster"] = {{"k", result.cluster->k},
                        {"sse", result.cluster->sse},
                        {"purity", result.cluster->purity},
                        {"iterations", result.cluster->iterations}};
    if (result.ranking) {
        json scores = json::array();
        for (const auto& [name, score] : result.ranking->scores)
            scores.push_back({{"feature", name}, {"score", score}});
        j["feature_ranking"] = scores;
    }
    if (!result.error.empty()) j["error"] = result.error;
    return j;
}

namespace detail {

inline std::string sig6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return std::string(buf);
}

} // namespace detail

// Combined report. Markdown mirrors the result-table layout: one table per
// device, one column per algorithm, rows Accuracy..Test Time.
inline std::string emit_report(const std::vector<ExperimentResult>& results,
                               const std::string& format) {
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : results) arr.push_back(to_json(r));
        return arr.dump(2) + "\n";
    }
    if (format == "csv") {
        std::ostringstream out;
        out << "device,algorithm,accuracy,precision,recall,train_seconds,test_seconds,error\n";
        for (const auto& r : results) {
            out << r.config.device << ',' << r.config.algorithm << ',';
            if (r.error.empty()) {
                out << detail::sig6(r.apr.accuracy) << ',' << detail::sig6(r.apr.precision) << ','
                    << detail::sig6(r.apr.recall) << ',' << detail::sig6(r.timing.train_seconds)
                    << ',' << detail::sig6(r.timing.test_seconds) << ',';
            } else {
                out << ",,,,," << detail::csv_quote(r.error);
            }
            out << '\n';
        }
        return out.str();
    }
    if (format == "md" || format == "markdown") {
        std::vector<std::string> devices;
        for (const auto& r : results)
            if (std::find(devices.begin(), devices.end(), r.config.device) == devices.end())
                devices.push_back(r.config.device);
        std::ostringstream out;
        const char* rows[] = {"Accuracy", "Precision", "Recall", "Train Time", "Test Time"};
        for (const std::string& device : devices) {
            std::vector<const ExperimentResult*> cols;
            for (const auto& r : results)
                if (r.config.device == device) cols.push_back(&r);
            out << "### " << device << "\n\n|  |";
            for (const auto* r : cols) out << ' ' << r->config.algorithm << " |";
            out << "\n|---|";
            for (std::size_t i = 0; i < cols.size(); ++i) out << "---|";
            out << '\n';
            for (int row = 0; row < 5; ++row) {
                out << "| " << rows[row] << " |";
                for (const auto* r : cols) {
                    if (!r->error.empty()) {
                        out << " error |";
                        continue;
                    }
                    double v = row == 0   ? r->apr.accuracy
                               : row == 1 ? r->apr.precision
                               : row == 2 ? r->apr.recall
                               : row == 3 ? r->timing.train_seconds
                                          : r->timing.test_seconds;
                    out << ' ' << detail::sig6(v) << " |";
                }
                out << '\n';
            }
            out << '\n';
        }
        return out.str();
    }
    throw DataError("unknown report format '" + format + "' (expected json, csv or md)");
}

} // namespace kmanb

#endif
