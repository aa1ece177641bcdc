#ifndef KMANB_SERIALIZE_HPP
#define KMANB_SERIALIZE_HPP

#include <json.hpp>

#include "kmanb/adaboost.hpp"
#include "kmanb/eval.hpp"
#include "kmanb/kmeans.hpp"
#include "kmanb/knn.hpp"
#include "kmanb/naive_bayes.hpp"
#include "kmanb/random_forest.hpp"

// JSON forms for fitted models and evaluation reports.

namespace kmanb {

using nlohmann::json;

inline const char* kind_name(FeatureKind k) {
    switch (k) {
    case FeatureKind::numeric: return "numeric";
    case FeatureKind::nominal: return "nominal";
    case FeatureKind::datestamp: return "datestamp";
    case FeatureKind::timestamp: return "timestamp";
    }
    return "numeric";
}

inline json to_json(const DeviceProfile& profile) {
    json features = json::array();
    for (const FeatureSchema& f : profile.features)
        features.push_back({{"name", f.name},
                            {"kind", kind_name(f.kind)},
                            {"categories", f.categories}});
    return {{"device", profile.device},
            {"features", features},
            {"attack_types", profile.attack_types}};
}

inline json to_json(const ClusterModel& model) {
    return {{"k", model.k},
            {"feature_columns", model.feature_columns},
            {"categories", EncoderAccess::categories(model.encoder)},
            {"centroids", model.centroids},
            {"seed", model.seed},
            {"iterations_run", model.iterations_run},
            {"final_sse", model.final_sse}};
}

inline json to_json(const NbModel& model) {
    json numeric = json::array();
    json nominal = json::array();
    for (std::size_t c = 0; c < model.classes.size(); ++c) {
        json means = json::array(), vars = json::array();
        for (const auto& g : model.numeric_params[c]) {
            means.push_back(g.mean);
            vars.push_back(g.variance);
        }
        numeric.push_back({{"class", model.classes[c]}, {"mean", means}, {"variance", vars}});
        nominal.push_back({{"class", model.classes[c]},
                           {"tables", model.nominal_tables[c]},
                           {"unseen_mass", model.unseen_mass[c]}});
    }
    return {{"classes", model.classes},
            {"priors", model.priors},
            {"numeric_params", numeric},
            {"nominal_tables", nominal},
            {"variance_floor", model.variance_floor}};
}

inline json to_json(const BoostedModel& model) {
    json stages = json::array();
    for (const auto& s : model.stages)
        stages.push_back({{"alpha", s.alpha}, {"nb_model", to_json(s.model)}});
    return {{"classes", model.classes},
            {"stages", stages},
            {"config",
             {{"rounds", model.config.rounds},
              {"target", model.config.target == Target::attack_type ? "type" : "label"}}},
            {"seed", model.seed}};
}

inline json to_json(const KnnModel& model) {
    return {{"k", model.k},
            {"classes", model.classes},
            {"stored", model.stored},
            {"stored_class", model.stored_class}};
}

inline json to_json(const DecisionTreeNode& node) {
    if (node.is_leaf) return {{"leaf", node.leaf_class}};
    json j = {{"feature", node.feature},
              {"left", to_json(*node.left)},
              {"right", to_json(*node.right)}};
    if (node.numeric_split) {
        j["threshold"] = node.threshold;
    } else {
        j["category"] = node.category;
    }
    return j;
}

inline json to_json(const RandomForestModel& model) {
    json trees = json::array();
    for (const auto& t : model.trees) trees.push_back(to_json(*t));
    return {{"n_trees", model.n_trees},
            {"m_try", model.m_try},
            {"seed", model.seed},
            {"classes", model.classes},
            {"trees", trees}};
}

inline json to_json(const AprReport& report) {
    json per_class = json::array();
    for (const auto& pc : report.per_class)
        per_class.push_back({{"class", pc.cls},
                             {"precision", pc.precision},
                             {"recall", pc.recall},
                             {"support", pc.support},
                             {"tp", pc.tp},
                             {"fp", pc.fp},
                             {"fn", pc.fn},
                             {"tn", pc.tn}});
    return {{"accuracy", report.accuracy},
            {"precision", report.precision},
            {"recall", report.recall},
            {"averaging", AprReport::averaging},
            {"zero_division_warning", report.zero_division_warning},
            {"per_class", per_class}};
}

inline json to_json(const TimingReport& timing) {
    return {{"train_seconds", timing.train_seconds}, {"test_seconds", timing.test_seconds}};
}

} // namespace kmanb

#endif
