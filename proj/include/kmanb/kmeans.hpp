#ifndef KMANB_KMEANS_HPP
#define KMANB_KMEANS_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "kmanb/dataset.hpp"
#include "kmanb/encode.hpp"
#include "kmanb/rng.hpp"

namespace kmanb {

struct ClusterModel {
    int k = 0;
    std::vector<std::vector<double>> centroids;
    int iterations_run = 0;
    double final_sse = 0.0;
    std::vector<std::string> feature_columns;
    Encoder encoder;
    std::uint64_t seed = 0;
    // SSE after each assignment step; non-increasing by construction
    std::vector<double> sse_trace;
};

struct ClusterClassMapping {
    std::vector<std::string> majority_class; // per cluster
    std::size_t incorrectly_clustered = 0;
    double purity = 0.0;
};

enum class KmeansInit { random_points, plus_plus };

// C (clusters) = A (anomalies) + 1 (normal)
inline int cluster_count(const DeviceProfile& profile) {
    return static_cast<int>(profile.attack_types.size()) + 1;
}

inline std::size_t nearest_centroid(const std::vector<std::vector<double>>& centroids,
                                    const std::vector<double>& p) {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < centroids.size(); ++j) {
        double d = squared_distance(p, centroids[j]);
        if (d < best_d) { // ties break to the lowest index
            best_d = d;
            best = j;
        }
    }
    return best;
}

namespace detail {

inline double assignment_pass(const std::vector<std::vector<double>>& points,
                              const std::vector<std::vector<double>>& centroids,
                              std::vector<std::size_t>& assignment) {
    double sse = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        assignment[i] = nearest_centroid(centroids, points[i]);
        sse += squared_distance(points[i], centroids[assignment[i]]);
    }
    return sse;
}

} // namespace detail

inline ClusterModel fit(const Dataset& data, int k, std::uint64_t seed,
                        int max_iterations = 500,
                        KmeansInit init = KmeansInit::random_points) {
    std::size_t n = data.instances.size();
    if (n == 0) throw DataError("kmeans fit: dataset is empty");
    if (k <= 0) throw DataError("kmeans fit: k must be positive");
    if (static_cast<std::size_t>(k) > n)
        throw DataError("kmeans fit: k exceeds instance count");

    ClusterModel model;
    model.k = k;
    model.seed = seed;
    model.encoder = Encoder::fit(data.profile);
    model.feature_columns = model.encoder.feature_columns();

    std::vector<std::vector<double>> points = model.encoder.encode_all(data);

    Rng rng(seed);
    model.centroids.clear();
    if (init == KmeansInit::plus_plus) {
        // k-means++: weight each candidate by squared distance to the
        // nearest centroid chosen so far
        model.centroids.push_back(points[rng.next_below(n)]);
        std::vector<double> dist(n);
        while (model.centroids.size() < static_cast<std::size_t>(k)) {
            double total = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                dist[i] = squared_distance(points[i], model.centroids[0]);
                for (std::size_t j = 1; j < model.centroids.size(); ++j)
                    dist[i] = std::min(dist[i], squared_distance(points[i], model.centroids[j]));
                total += dist[i];
            }
            std::size_t pick = 0;
            if (total > 0.0) {
                double r = rng.next_double() * total;
                double acc = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    acc += dist[i];
                    if (acc >= r) { pick = i; break; }
                    pick = i;
                }
            } else {
                pick = rng.next_below(n);
            }
            model.centroids.push_back(points[pick]);
        }
    } else {
        // default: k distinct seeded training points (distinct coordinates
        // where possible, distinct indices otherwise)
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        fisher_yates_shuffle(order, rng);
        for (std::size_t i = 0;
             i < n && model.centroids.size() < static_cast<std::size_t>(k); ++i) {
            const auto& cand = points[order[i]];
            bool dup = false;
            for (const auto& c : model.centroids)
                if (c == cand) { dup = true; break; }
            if (!dup) model.centroids.push_back(cand);
        }
        for (std::size_t i = 0; model.centroids.size() < static_cast<std::size_t>(k); ++i)
            model.centroids.push_back(points[order[i % n]]);
    }

    std::vector<std::size_t> assignment(n), prev(n, n);
    for (int iter = 0; iter < max_iterations; ++iter) {
        double sse = detail::assignment_pass(points, model.centroids, assignment);
        model.sse_trace.push_back(sse);
        model.iterations_run = iter + 1;
        if (assignment == prev) break;
        if (iter == max_iterations - 1) break; // keep centroids consistent with final_sse
        prev = assignment;

        std::vector<std::vector<double>> sums(static_cast<std::size_t>(k),
                                              std::vector<double>(points[0].size(), 0.0));
        std::vector<std::size_t> sizes(static_cast<std::size_t>(k), 0);
        for (std::size_t i = 0; i < n; ++i) {
            ++sizes[assignment[i]];
            for (std::size_t d = 0; d < points[i].size(); ++d)
                sums[assignment[i]][d] += points[i][d];
        }
        for (int j = 0; j < k; ++j) {
            if (sizes[static_cast<std::size_t>(j)] == 0) continue;
            for (std::size_t d = 0; d < sums[static_cast<std::size_t>(j)].size(); ++d)
                model.centroids[static_cast<std::size_t>(j)][d] =
                    sums[static_cast<std::size_t>(j)][d] /
                    static_cast<double>(sizes[static_cast<std::size_t>(j)]);
        }

        // empty-cluster repair: move each empty centroid onto the point
        // currently farthest from its assigned centroid
        std::vector<bool> taken(n, false);
        for (int j = 0; j < k; ++j) {
            if (sizes[static_cast<std::size_t>(j)] != 0) continue;
            std::size_t far_i = 0;
            double far_d = -1.0;
            for (std::size_t i = 0; i < n; ++i) {
                if (taken[i]) continue;
                double d = squared_distance(points[i], model.centroids[assignment[i]]);
                if (d > far_d) {
                    far_d = d;
                    far_i = i;
                }
            }
            taken[far_i] = true;
            model.centroids[static_cast<std::size_t>(j)] = points[far_i];
        }
    }

    model.final_sse = model.sse_trace.back();
    return model;
}

inline std::size_t assign_encoded(const ClusterModel& model, const std::vector<double>& p) {
    return nearest_centroid(model.centroids, p);
}

inline std::size_t assign(const ClusterModel& model, const Instance& inst) {
    return assign_encoded(model, model.encoder.encode(inst));
}

inline double sse(const ClusterModel& model, const Dataset& data) {
    double total = 0.0;
    for (const Instance& inst : data.instances) {
        std::vector<double> p = model.encoder.encode(inst);
        total += squared_distance(p, model.centroids[assign_encoded(model, p)]);
    }
    return total;
}

// Diagnostics only: map each cluster to its majority attack type. The labels
// are never consulted during fit.
inline ClusterClassMapping class_to_cluster(const ClusterModel& model, const Dataset& data) {
    std::size_t n = data.instances.size();
    std::vector<std::map<std::string, std::size_t>> tallies(
        static_cast<std::size_t>(model.k));
    std::map<std::string, std::size_t> global;
    std::vector<std::size_t> assigned(n);
    for (std::size_t i = 0; i < n; ++i) {
        assigned[i] = assign(model, data.instances[i]);
        ++tallies[assigned[i]][data.instances[i].attack_type];
        ++global[data.instances[i].attack_type];
    }

    ClusterClassMapping mapping;
    mapping.majority_class.resize(static_cast<std::size_t>(model.k));
    for (int j = 0; j < model.k; ++j) {
        const auto& t = tallies[static_cast<std::size_t>(j)];
        std::string best;
        std::size_t best_n = 0, best_global = 0;
        for (const auto& [cls, cnt] : t) {
            // ties: more globally frequent class, then lexicographic (map order)
            if (cnt > best_n || (cnt == best_n && global[cls] > best_global)) {
                best = cls;
                best_n = cnt;
                best_global = global[cls];
            }
        }
        mapping.majority_class[static_cast<std::size_t>(j)] = best;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (data.instances[i].attack_type != mapping.majority_class[assigned[i]])
            ++mapping.incorrectly_clustered;
    mapping.purity =
        n == 0 ? 0.0
               : 1.0 - static_cast<double>(mapping.incorrectly_clustered) / static_cast<double>(n);
    return mapping;
}

// Appends the hard cluster assignment as a nominal feature `cluster` with
// categories c0..c(k-1).
inline Dataset augment(const Dataset& data, const ClusterModel& model) {
    if (!model.encoder.matches(data.profile))
        throw SchemaError("augment: model fitted on a different schema");
    if (data.profile.feature_index("cluster") >= 0)
        throw SchemaError("augment: dataset already has a 'cluster' feature");

    Dataset out = data;
    FeatureSchema cluster_feature;
    cluster_feature.name = "cluster";
    cluster_feature.kind = FeatureKind::nominal;
    for (int j = 0; j < model.k; ++j)
        cluster_feature.categories.push_back("c" + std::to_string(j));
    out.profile.features.push_back(cluster_feature);

    for (std::size_t i = 0; i < data.instances.size(); ++i) {
        std::size_t j = assign(model, data.instances[i]);
        out.instances[i].values.emplace_back(cluster_feature.categories[j]);
    }
    return out;
}

} // namespace kmanb

#endif
