#ifndef KMANB_NAIVE_BAYES_HPP
#define KMANB_NAIVE_BAYES_HPP

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "kmanb/dataset.hpp"

namespace kmanb {

enum class Target { attack_type, label };

inline std::string target_class_of(const Instance& inst, Target target) {
    if (target == Target::attack_type) return inst.attack_type;
    return inst.label == Label::normal ? "normal" : "anomaly";
}

inline std::vector<std::string> target_class_order(const DeviceProfile& profile, Target target) {
    if (target == Target::attack_type) return profile.class_order();
    return {"normal", "anomaly"};
}

// Hybrid Naive Bayes: Gaussian likelihood per (class, numeric feature),
// add-one-smoothed category tables per (class, nominal feature). Instance
// weights are first-class so boosting can reweight rather than resample.
struct NbModel {
    std::vector<std::string> classes;
    std::vector<double> priors;

    struct Gaussian {
        double mean = 0.0;
        double variance = 1.0;
    };
    // numeric_params[class][feature]; entries unused for nominal features
    std::vector<std::vector<Gaussian>> numeric_params;
    // nominal_tables[class][feature][category], plus the smoothed mass an
    // unseen category receives
    std::vector<std::vector<std::vector<double>>> nominal_tables;
    std::vector<std::vector<double>> unseen_mass;

    // per-feature floor: 1e-6 * global_range^2, never below 1e-12
    std::vector<double> variance_floor;

    DeviceProfile profile; // schema the model was fitted on
    Target target = Target::attack_type;

    int class_index(const std::string& cls) const {
        for (std::size_t i = 0; i < classes.size(); ++i)
            if (classes[i] == cls) return static_cast<int>(i);
        return -1;
    }
};

inline NbModel nb_fit(const Dataset& data, const std::vector<double>& weights,
                      Target target = Target::attack_type) {
    std::size_t n = data.instances.size();
    if (n == 0) throw DataError("nb_fit: dataset is empty");
    if (weights.size() != n) throw DataError("nb_fit: weight count does not match instance count");
    double total_w = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw DataError("nb_fit: negative instance weight");
        total_w += w;
    }
    if (total_w <= 0.0) throw DataError("nb_fit: total weight is zero");

    NbModel model;
    model.profile = data.profile;
    model.target = target;

    // rescale weights to sum n so smoothing is invariant to weight scale
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = weights[i] * static_cast<double>(n) / total_w;

    std::map<std::string, double> class_weight;
    for (std::size_t i = 0; i < n; ++i)
        class_weight[target_class_of(data.instances[i], target)] += w[i];
    for (const std::string& cls : target_class_order(data.profile, target)) {
        auto it = class_weight.find(cls);
        if (it == class_weight.end()) continue;
        if (it->second <= 0.0)
            throw DataError("nb_fit: class '" + cls + "' has zero total weight");
        model.classes.push_back(cls);
        model.priors.push_back(it->second / static_cast<double>(n));
    }

    std::size_t n_classes = model.classes.size();
    std::size_t n_features = data.profile.features.size();

    model.variance_floor.assign(n_features, 1e-12);
    for (std::size_t f = 0; f < n_features; ++f) {
        if (!kind_is_numeric(data.profile.features[f].kind)) continue;
        double lo = cell_num(data.instances[0].values[f]);
        double hi = lo;
        for (const Instance& inst : data.instances) {
            double v = cell_num(inst.values[f]);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        double range = hi - lo;
        model.variance_floor[f] = std::max(1e-6 * range * range, 1e-12);
    }

    model.numeric_params.assign(n_classes, std::vector<NbModel::Gaussian>(n_features));
    model.nominal_tables.assign(n_classes, std::vector<std::vector<double>>(n_features));
    model.unseen_mass.assign(n_classes, std::vector<double>(n_features, 0.0));

    std::vector<std::size_t> ci(n);
    for (std::size_t i = 0; i < n; ++i)
        ci[i] = static_cast<std::size_t>(
            model.class_index(target_class_of(data.instances[i], target)));

    for (std::size_t f = 0; f < n_features; ++f) {
        const FeatureSchema& schema = data.profile.features[f];
        if (kind_is_numeric(schema.kind)) {
            std::vector<double> sum(n_classes, 0.0);
            for (std::size_t i = 0; i < n; ++i)
                sum[ci[i]] += w[i] * cell_num(data.instances[i].values[f]);
            std::vector<double> mean(n_classes);
            for (std::size_t c = 0; c < n_classes; ++c)
                mean[c] = sum[c] / class_weight[model.classes[c]];
            std::vector<double> var(n_classes, 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                double d = cell_num(data.instances[i].values[f]) - mean[ci[i]];
                var[ci[i]] += w[i] * d * d;
            }
            for (std::size_t c = 0; c < n_classes; ++c)
                model.numeric_params[c][f] = {
                    mean[c], std::max(var[c] / class_weight[model.classes[c]],
                                      model.variance_floor[f])};
        } else {
            std::size_t ncat = schema.categories.size();
            std::vector<std::vector<double>> counts(n_classes, std::vector<double>(ncat, 0.0));
            for (std::size_t i = 0; i < n; ++i) {
                int idx = schema.category_index(cell_str(data.instances[i].values[f]));
                if (idx >= 0) counts[ci[i]][static_cast<std::size_t>(idx)] += w[i];
            }
            for (std::size_t c = 0; c < n_classes; ++c) {
                double denom = class_weight[model.classes[c]] + static_cast<double>(ncat);
                for (double& cnt : counts[c]) cnt = (cnt + 1.0) / denom;
                model.nominal_tables[c][f] = std::move(counts[c]);
                model.unseen_mass[c][f] = 1.0 / denom;
            }
        }
    }
    return model;
}

inline std::vector<double> nb_log_scores(const NbModel& model, const Instance& inst) {
    constexpr double half_log_2pi = 0.91893853320467274178;
    std::vector<double> scores(model.classes.size());
    for (std::size_t c = 0; c < model.classes.size(); ++c) {
        double s = std::log(model.priors[c]);
        for (std::size_t f = 0; f < model.profile.features.size(); ++f) {
            const FeatureSchema& schema = model.profile.features[f];
            if (kind_is_numeric(schema.kind)) {
                const auto& g = model.numeric_params[c][f];
                double d = cell_num(inst.values[f]) - g.mean;
                s += -0.5 * std::log(g.variance) - half_log_2pi - d * d / (2.0 * g.variance);
            } else {
                int idx = schema.category_index(cell_str(inst.values[f]));
                double p = idx >= 0 ? model.nominal_tables[c][f][static_cast<std::size_t>(idx)]
                                    : model.unseen_mass[c][f];
                s += std::log(p);
            }
        }
        scores[c] = s;
    }
    return scores;
}

inline std::vector<double> nb_posterior(const NbModel& model, const Instance& inst) {
    std::vector<double> scores = nb_log_scores(model, inst);
    double mx = scores[0];
    for (double s : scores) mx = std::max(mx, s);
    double z = 0.0;
    for (double& s : scores) {
        s = std::exp(s - mx);
        z += s;
    }
    for (double& s : scores) s /= z;
    return scores;
}

inline std::string nb_predict(const NbModel& model, const Instance& inst) {
    std::vector<double> scores = nb_log_scores(model, inst);
    std::size_t best = 0;
    for (std::size_t c = 1; c < scores.size(); ++c)
        if (scores[c] > scores[best]) best = c; // ties keep the earlier class
    return model.classes[best];
}

} // namespace kmanb

#endif
