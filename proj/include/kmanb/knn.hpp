#ifndef KMANB_KNN_HPP
#define KMANB_KNN_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "kmanb/encode.hpp"
#include "kmanb/naive_bayes.hpp"

namespace kmanb {

// Brute-force KNN over the same encoded space as K-means. Stores the whole
// training set.
struct KnnModel {
    Encoder encoder;
    std::vector<std::vector<double>> stored;
    std::vector<std::size_t> stored_class; // index into classes
    std::vector<std::string> classes;
    int k = 1;
    Target target = Target::attack_type;
};

inline KnnModel knn_fit(const Dataset& data, int k, Target target = Target::attack_type) {
    if (k <= 0) throw DataError("knn_fit: k must be positive");
    if (static_cast<std::size_t>(k) > data.instances.size())
        throw DataError("knn_fit: k exceeds instance count");
    KnnModel model;
    model.k = k;
    model.target = target;
    model.encoder = Encoder::fit(data.profile);
    model.stored = model.encoder.encode_all(data);

    for (const std::string& cls : target_class_order(data.profile, target)) {
        bool present = false;
        for (const Instance& inst : data.instances)
            if (target_class_of(inst, target) == cls) { present = true; break; }
        if (present) model.classes.push_back(cls);
    }
    model.stored_class.reserve(data.instances.size());
    for (const Instance& inst : data.instances) {
        std::string cls = target_class_of(inst, target);
        for (std::size_t c = 0; c < model.classes.size(); ++c)
            if (model.classes[c] == cls) {
                model.stored_class.push_back(c);
                break;
            }
    }
    return model;
}

inline std::string knn_predict(const KnnModel& model, const Instance& inst) {
    std::vector<double> q = model.encoder.encode(inst);
    std::size_t n = model.stored.size();
    std::size_t k = static_cast<std::size_t>(model.k);

    // indices ordered by (distance, stored index); boundary ties go to the
    // lower stored index
    std::vector<std::pair<double, std::size_t>> order(n);
    for (std::size_t i = 0; i < n; ++i)
        order[i] = {squared_distance(q, model.stored[i]), i};
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end());

    std::vector<std::size_t> votes(model.classes.size(), 0);
    for (std::size_t i = 0; i < k; ++i) ++votes[model.stored_class[order[i].second]];
    std::size_t best = 0;
    for (std::size_t c = 1; c < votes.size(); ++c)
        if (votes[c] > votes[best]) best = c; // mode ties keep the earlier class
    return model.classes[best];
}

} // namespace kmanb

#endif
