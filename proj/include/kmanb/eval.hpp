#ifndef KMANB_EVAL_HPP
#define KMANB_EVAL_HPP

#include <chrono>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "kmanb/dataset.hpp"

namespace kmanb {

struct ConfusionMatrix {
    std::vector<std::string> classes;
    // counts[i][j] = instances with true class i predicted as class j
    std::vector<std::vector<std::size_t>> counts;

    std::size_t total() const {
        std::size_t t = 0;
        for (const auto& row : counts)
            for (std::size_t c : row) t += c;
        return t;
    }
};

struct AprReport {
    double accuracy = 0.0;
    double precision = 0.0; // support-weighted
    double recall = 0.0;    // support-weighted

    struct PerClass {
        std::string cls;
        double precision = 0.0;
        double recall = 0.0;
        std::size_t support = 0;
        std::size_t tp = 0, fp = 0, fn = 0, tn = 0;
    };
    std::vector<PerClass> per_class;
    static constexpr const char* averaging = "support-weighted";
    bool zero_division_warning = false;
};

struct TimingReport {
    double train_seconds = 0.0;
    double test_seconds = 0.0;
};

inline ConfusionMatrix confusion(const std::vector<std::string>& truths,
                                 const std::vector<std::string>& predictions,
                                 const std::vector<std::string>& classes) {
    if (truths.size() != predictions.size())
        throw DataError("confusion: truth/prediction length mismatch");
    ConfusionMatrix m;
    m.classes = classes;
    m.counts.assign(classes.size(), std::vector<std::size_t>(classes.size(), 0));
    auto index_of = [&classes](const std::string& cls) {
        for (std::size_t i = 0; i < classes.size(); ++i)
            if (classes[i] == cls) return i;
        throw DataError("confusion: unknown class '" + cls + "'");
    };
    for (std::size_t i = 0; i < truths.size(); ++i)
        ++m.counts[index_of(truths[i])][index_of(predictions[i])];
    return m;
}

// One-vs-rest TP/FP/FN/TN per class; report precision/recall are
// support-weighted means of the per-class values.
inline AprReport apr(const ConfusionMatrix& m) {
    std::size_t total = m.total();
    if (total == 0) throw DataError("apr: empty confusion matrix");

    AprReport report;
    std::size_t trace = 0;
    double weighted_precision = 0.0, weighted_recall = 0.0;
    for (std::size_t c = 0; c < m.classes.size(); ++c) {
        AprReport::PerClass pc;
        pc.cls = m.classes[c];
        pc.tp = m.counts[c][c];
        std::size_t row = 0, col = 0;
        for (std::size_t j = 0; j < m.classes.size(); ++j) {
            row += m.counts[c][j];
            col += m.counts[j][c];
        }
        pc.fn = row - pc.tp;
        pc.fp = col - pc.tp;
        pc.tn = total - pc.tp - pc.fp - pc.fn;
        pc.support = row;
        if (pc.tp + pc.fp > 0) {
            pc.precision = static_cast<double>(pc.tp) / static_cast<double>(pc.tp + pc.fp);
        } else {
            report.zero_division_warning = true;
        }
        if (pc.tp + pc.fn > 0) {
            pc.recall = static_cast<double>(pc.tp) / static_cast<double>(pc.tp + pc.fn);
        } else {
            report.zero_division_warning = true;
        }
        trace += pc.tp;
        weighted_precision += pc.precision * static_cast<double>(pc.support);
        // recall * support simplifies to tp; summing tp keeps the
        // weighted-recall = accuracy identity exact in floating point
        weighted_recall += static_cast<double>(pc.tp);
        report.per_class.push_back(pc);
    }
    report.accuracy = static_cast<double>(trace) / static_cast<double>(total);
    report.precision = weighted_precision / static_cast<double>(total);
    report.recall = weighted_recall / static_cast<double>(total);
    return report;
}

// Wall-clock timing of exactly one phase (a fit or a predict loop).
template <typename F>
auto timed(F&& phase) {
    auto start = std::chrono::steady_clock::now();
    if constexpr (std::is_void_v<decltype(phase())>) {
        phase();
        auto stop = std::chrono::steady_clock::now();
        return std::chrono::duration<double>(stop - start).count();
    } else {
        auto result = phase();
        auto stop = std::chrono::steady_clock::now();
        return std::make_pair(std::move(result),
                              std::chrono::duration<double>(stop - start).count());
    }
}

} // namespace kmanb

#endif
