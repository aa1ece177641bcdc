#ifndef KMANB_FEATURE_RANK_HPP
#define KMANB_FEATURE_RANK_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "kmanb/dataset.hpp"

namespace kmanb {

struct FeatureRanking {
    std::vector<std::pair<std::string, double>> scores; // descending, ties in input order
    int bins = 10;
};

namespace detail {

inline double entropy_from_counts(const std::map<int, std::size_t>& counts, std::size_t total) {
    double h = 0.0;
    for (const auto& [_, c] : counts) {
        double p = static_cast<double>(c) / static_cast<double>(total);
        h -= p * std::log(p);
    }
    return h;
}

// equal-frequency discretization; duplicate boundaries merged
inline std::vector<int> discretize(const std::vector<double>& values, int bins) {
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> boundaries;
    for (int b = 1; b < bins; ++b) {
        std::size_t pos = sorted.size() * static_cast<std::size_t>(b) /
                          static_cast<std::size_t>(bins);
        double v = sorted[std::min(pos, sorted.size() - 1)];
        if (boundaries.empty() || v > boundaries.back()) boundaries.push_back(v);
    }
    std::vector<int> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        int bin = 0;
        for (double b : boundaries)
            if (values[i] >= b) ++bin;
        out[i] = bin;
    }
    return out;
}

} // namespace detail

// SU(X,Y) = 2 I(X;Y) / (H(X) + H(Y)), natural-log entropies; 0 when both
// marginals are degenerate.
inline double symmetric_uncertainty_discrete(const std::vector<int>& x,
                                             const std::vector<int>& y) {
    if (x.size() != y.size())
        throw DataError("symmetric_uncertainty: value/label length mismatch");
    if (x.empty()) throw DataError("symmetric_uncertainty: empty input");
    std::size_t n = x.size();
    std::map<int, std::size_t> cx, cy;
    std::map<std::pair<int, int>, std::size_t> cxy;
    for (std::size_t i = 0; i < n; ++i) {
        ++cx[x[i]];
        ++cy[y[i]];
        ++cxy[{x[i], y[i]}];
    }
    double hx = detail::entropy_from_counts(cx, n);
    double hy = detail::entropy_from_counts(cy, n);
    if (hx + hy <= 0.0) return 0.0;
    double hxy = 0.0;
    for (const auto& [_, c] : cxy) {
        double p = static_cast<double>(c) / static_cast<double>(n);
        hxy -= p * std::log(p);
    }
    double mi = hx + hy - hxy;
    double su = 2.0 * mi / (hx + hy);
    return std::clamp(su, 0.0, 1.0);
}

inline double symmetric_uncertainty(const std::vector<double>& values,
                                    const std::vector<int>& labels, int bins = 10) {
    if (values.size() != labels.size())
        throw DataError("symmetric_uncertainty: value/label length mismatch");
    if (values.empty()) throw DataError("symmetric_uncertainty: empty input");
    return symmetric_uncertainty_discrete(detail::discretize(values, bins), labels);
}

// SU of every feature against the attack-type label, descending.
inline FeatureRanking rank_features(const Dataset& data, int bins = 10) {
    if (data.instances.empty()) throw DataError("rank_features: dataset is empty");
    std::size_t n = data.instances.size();

    std::vector<int> labels(n);
    {
        std::map<std::string, int> ids;
        for (std::size_t i = 0; i < n; ++i) {
            auto [it, _] = ids.try_emplace(data.instances[i].attack_type,
                                           static_cast<int>(ids.size()));
            labels[i] = it->second;
        }
    }

    FeatureRanking ranking;
    ranking.bins = bins;
    for (std::size_t f = 0; f < data.profile.features.size(); ++f) {
        const FeatureSchema& schema = data.profile.features[f];
        double score;
        if (kind_is_numeric(schema.kind)) {
            std::vector<double> values(n);
            for (std::size_t i = 0; i < n; ++i) values[i] = cell_num(data.instances[i].values[f]);
            score = symmetric_uncertainty(values, labels, bins);
        } else {
            std::vector<int> values(n);
            for (std::size_t i = 0; i < n; ++i)
                values[i] = schema.category_index(cell_str(data.instances[i].values[f]));
            score = symmetric_uncertainty_discrete(values, labels);
        }
        ranking.scores.emplace_back(schema.name, score);
    }
    std::stable_sort(ranking.scores.begin(), ranking.scores.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    return ranking;
}

inline Dataset drop_feature(const Dataset& data, const std::string& name) {
    if (name == "label" || name == "type")
        throw DataError("drop_feature: cannot drop a label column");
    int f = data.profile.feature_index(name);
    if (f < 0) throw DataError("drop_feature: unknown feature '" + name + "'");

    Dataset out;
    out.profile = data.profile;
    out.profile.features.erase(out.profile.features.begin() + f);
    out.instances = data.instances;
    for (Instance& inst : out.instances)
        inst.values.erase(inst.values.begin() + f);
    return out;
}

} // namespace kmanb

#endif
