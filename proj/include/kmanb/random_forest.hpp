#ifndef KMANB_RANDOM_FOREST_HPP
#define KMANB_RANDOM_FOREST_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "kmanb/naive_bayes.hpp"
#include "kmanb/rng.hpp"

namespace kmanb {

// Classification tree node: numeric splits compare against a threshold
// (<= goes left), nominal splits are one-vs-rest on a single category.
struct DecisionTreeNode {
    bool is_leaf = true;
    std::size_t leaf_class = 0;

    std::size_t feature = 0;
    bool numeric_split = true;
    double threshold = 0.0;
    std::string category;
    std::unique_ptr<DecisionTreeNode> left, right;
};

struct RandomForestModel {
    std::vector<std::unique_ptr<DecisionTreeNode>> trees;
    int n_trees = 0;
    int m_try = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> classes;
    DeviceProfile profile;
    Target target = Target::attack_type;
};

namespace detail {

inline double entropy(const std::vector<std::size_t>& counts, std::size_t total) {
    if (total == 0) return 0.0;
    double h = 0.0;
    for (std::size_t c : counts) {
        if (c == 0) continue;
        double p = static_cast<double>(c) / static_cast<double>(total);
        h -= p * std::log(p);
    }
    return h;
}

struct TreeBuilder {
    const Dataset& data;
    const std::vector<std::size_t>& cls; // class index per instance
    std::size_t n_classes;
    int m_try;
    Rng rng;

    std::unique_ptr<DecisionTreeNode> build(std::vector<std::size_t>& idx, std::size_t depth) {
        auto node = std::make_unique<DecisionTreeNode>();

        std::vector<std::size_t> counts(n_classes, 0);
        for (std::size_t i : idx) ++counts[cls[i]];
        std::size_t best_c = 0;
        for (std::size_t c = 1; c < n_classes; ++c)
            if (counts[c] > counts[best_c]) best_c = c;
        node->leaf_class = best_c;

        bool pure = counts[best_c] == idx.size();
        if (pure || idx.size() < 2 || depth > data.instances.size()) return node;

        double parent_entropy = entropy(counts, idx.size());
        double best_gain = 0.0;
        std::size_t best_feature = 0;
        bool best_numeric = true;
        double best_threshold = 0.0;
        std::string best_category;

        // m_try features sampled without replacement
        std::size_t n_features = data.profile.features.size();
        std::vector<std::size_t> feats(n_features);
        for (std::size_t f = 0; f < n_features; ++f) feats[f] = f;
        fisher_yates_shuffle(feats, rng);
        feats.resize(std::min<std::size_t>(static_cast<std::size_t>(m_try), n_features));

        for (std::size_t f : feats) {
            const FeatureSchema& schema = data.profile.features[f];
            if (kind_is_numeric(schema.kind)) {
                // candidate thresholds: midpoints between sorted distinct values
                std::vector<std::pair<double, std::size_t>> vals;
                vals.reserve(idx.size());
                for (std::size_t i : idx)
                    vals.emplace_back(cell_num(data.instances[i].values[f]), cls[i]);
                std::sort(vals.begin(), vals.end());

                std::vector<std::size_t> left_counts(n_classes, 0);
                std::size_t n_left = 0;
                for (std::size_t v = 0; v + 1 < vals.size(); ++v) {
                    ++left_counts[vals[v].second];
                    ++n_left;
                    if (vals[v].first == vals[v + 1].first) continue;
                    std::vector<std::size_t> right_counts = counts;
                    for (std::size_t c = 0; c < n_classes; ++c) right_counts[c] -= left_counts[c];
                    std::size_t n_right = idx.size() - n_left;
                    double child = (static_cast<double>(n_left) * entropy(left_counts, n_left) +
                                    static_cast<double>(n_right) * entropy(right_counts, n_right)) /
                                   static_cast<double>(idx.size());
                    double gain = parent_entropy - child;
                    if (gain > best_gain) {
                        best_gain = gain;
                        best_feature = f;
                        best_numeric = true;
                        best_threshold = (vals[v].first + vals[v + 1].first) / 2.0;
                    }
                }
            } else {
                // one-vs-rest per category
                std::map<std::string, std::vector<std::size_t>> per_cat;
                for (std::size_t i : idx)
                    per_cat[cell_str(data.instances[i].values[f])].push_back(cls[i]);
                for (const auto& [cat, members] : per_cat) {
                    if (members.size() == idx.size()) continue;
                    std::vector<std::size_t> left_counts(n_classes, 0);
                    for (std::size_t c : members) ++left_counts[c];
                    std::vector<std::size_t> right_counts = counts;
                    for (std::size_t c = 0; c < n_classes; ++c) right_counts[c] -= left_counts[c];
                    std::size_t n_left = members.size();
                    std::size_t n_right = idx.size() - n_left;
                    double child = (static_cast<double>(n_left) * entropy(left_counts, n_left) +
                                    static_cast<double>(n_right) * entropy(right_counts, n_right)) /
                                   static_cast<double>(idx.size());
                    double gain = parent_entropy - child;
                    if (gain > best_gain) {
                        best_gain = gain;
                        best_feature = f;
                        best_numeric = false;
                        best_category = cat;
                    }
                }
            }
        }

        if (best_gain <= 0.0) return node;

        std::vector<std::size_t> left_idx, right_idx;
        for (std::size_t i : idx) {
            const Cell& v = data.instances[i].values[best_feature];
            bool go_left = best_numeric ? cell_num(v) <= best_threshold
                                        : cell_str(v) == best_category;
            (go_left ? left_idx : right_idx).push_back(i);
        }
        if (left_idx.empty() || right_idx.empty()) return node;

        node->is_leaf = false;
        node->feature = best_feature;
        node->numeric_split = best_numeric;
        node->threshold = best_threshold;
        node->category = best_category;
        node->left = build(left_idx, depth + 1);
        node->right = build(right_idx, depth + 1);
        return node;
    }
};

} // namespace detail

inline RandomForestModel rf_fit(const Dataset& data, int n_trees, int m_try, std::uint64_t seed,
                                Target target = Target::attack_type, bool bootstrap = true) {
    std::size_t n = data.instances.size();
    if (n == 0) throw DataError("rf_fit: dataset is empty");
    if (n_trees <= 0) throw DataError("rf_fit: n_trees must be positive");
    if (m_try <= 0 || static_cast<std::size_t>(m_try) > data.profile.features.size())
        throw DataError("rf_fit: m_try must lie in [1, feature count]");

    RandomForestModel model;
    model.n_trees = n_trees;
    model.m_try = m_try;
    model.seed = seed;
    model.profile = data.profile;
    model.target = target;
    for (const std::string& cls : target_class_order(data.profile, target)) {
        bool present = false;
        for (const Instance& inst : data.instances)
            if (target_class_of(inst, target) == cls) { present = true; break; }
        if (present) model.classes.push_back(cls);
    }

    std::vector<std::size_t> cls(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::string c = target_class_of(data.instances[i], target);
        for (std::size_t j = 0; j < model.classes.size(); ++j)
            if (model.classes[j] == c) { cls[i] = j; break; }
    }

    Rng seeder(seed);
    for (int t = 0; t < n_trees; ++t) {
        std::uint64_t tree_seed = seeder.derive(static_cast<std::uint64_t>(t));
        Rng tree_rng(tree_seed);
        std::vector<std::size_t> idx(n);
        if (bootstrap) {
            for (std::size_t i = 0; i < n; ++i)
                idx[i] = static_cast<std::size_t>(tree_rng.next_below(n));
        } else {
            for (std::size_t i = 0; i < n; ++i) idx[i] = i;
        }
        detail::TreeBuilder builder{data, cls, model.classes.size(), m_try, Rng(tree_seed ^ 0x5bf0'3635ULL)};
        model.trees.push_back(builder.build(idx, 0));
    }
    return model;
}

inline std::size_t tree_predict(const DecisionTreeNode& root, const Instance& inst) {
    const DecisionTreeNode* node = &root;
    while (!node->is_leaf) {
        const Cell& v = inst.values[node->feature];
        bool go_left = node->numeric_split ? cell_num(v) <= node->threshold
                                           : cell_str(v) == node->category;
        node = go_left ? node->left.get() : node->right.get();
    }
    return node->leaf_class;
}

inline std::string rf_predict(const RandomForestModel& model, const Instance& inst) {
    std::vector<std::size_t> votes(model.classes.size(), 0);
    for (const auto& tree : model.trees) ++votes[tree_predict(*tree, inst)];
    std::size_t best = 0;
    for (std::size_t c = 1; c < votes.size(); ++c)
        if (votes[c] > votes[best]) best = c; // ties keep the earlier class
    return model.classes[best];
}

} // namespace kmanb

#endif
