#ifndef KMANB_ADABOOST_HPP
#define KMANB_ADABOOST_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "kmanb/naive_bayes.hpp"

namespace kmanb {

struct BoostConfig {
    int rounds = 10;
    Target target = Target::attack_type;
};

// AdaBoost.M1 over weighted Naive Bayes base learners, reweighting rather
// than resampling.
struct BoostedModel {
    struct Stage {
        NbModel model;
        double alpha = 0.0;
    };
    std::vector<Stage> stages;
    std::vector<std::string> classes;
    BoostConfig config;
    std::uint64_t seed = 0;
    // diagnostic: instance-weight sum after each round's renormalization
    std::vector<double> round_weight_sums;
};

inline BoostedModel boost_fit(const Dataset& data, const BoostConfig& config,
                              std::uint64_t seed = 0) {
    std::size_t n = data.instances.size();
    if (n == 0) throw DataError("boost_fit: dataset is empty");
    if (config.rounds < 1) throw DataError("boost_fit: rounds must be >= 1");

    BoostedModel model;
    model.config = config;
    model.seed = seed;

    std::vector<double> weights(n, 1.0 / static_cast<double>(n));
    for (int round = 0; round < config.rounds; ++round) {
        NbModel stage = nb_fit(data, weights, config.target);
        if (round == 0) {
            if (stage.classes.size() < 2)
                throw DataError("boost_fit: boosting needs at least 2 classes");
            model.classes = stage.classes;
        }

        std::vector<bool> wrong(n, false);
        double error = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            wrong[i] = nb_predict(stage, data.instances[i]) !=
                       target_class_of(data.instances[i], config.target);
            if (wrong[i]) error += weights[i];
        }

        if (error <= 0.0) {
            // perfect stage: keep it with a large capped weight and stop
            model.stages.push_back({std::move(stage), 10.0});
            model.round_weight_sums.push_back(1.0);
            break;
        }
        if (error >= 0.5) {
            if (model.stages.empty())
                model.stages.push_back({std::move(stage), 1e-9});
            break;
        }

        double ratio = (1.0 - error) / error;
        model.stages.push_back({std::move(stage), std::log(ratio)});

        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (wrong[i]) weights[i] *= ratio;
            total += weights[i];
        }
        for (double& w : weights) w /= total;
        double sum = 0.0;
        for (double w : weights) sum += w;
        model.round_weight_sums.push_back(sum);
    }
    return model;
}

inline std::string boost_predict(const BoostedModel& model, const Instance& inst) {
    std::vector<double> votes(model.classes.size(), 0.0);
    for (const auto& stage : model.stages) {
        std::string pred = nb_predict(stage.model, inst);
        for (std::size_t c = 0; c < model.classes.size(); ++c)
            if (model.classes[c] == pred) {
                votes[c] += stage.alpha;
                break;
            }
    }
    std::size_t best = 0;
    for (std::size_t c = 1; c < votes.size(); ++c)
        if (votes[c] > votes[best]) best = c; // ties keep the earlier class
    return model.classes[best];
}

} // namespace kmanb

#endif
