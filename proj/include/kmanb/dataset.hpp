#ifndef KMANB_DATASET_HPP
#define KMANB_DATASET_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "kmanb/rng.hpp"

namespace kmanb {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// bad input data / files (CLI exit code 2)
struct DataError : Error {
    using Error::Error;
};

// schema mismatches between profiles, models and datasets
struct SchemaError : DataError {
    using DataError::DataError;
};

enum class FeatureKind { numeric, nominal, datestamp, timestamp };

inline bool kind_is_numeric(FeatureKind k) {
    // timestamps are converted to seconds-since-midnight at load time
    return k == FeatureKind::numeric || k == FeatureKind::timestamp;
}

struct FeatureSchema {
    std::string name;
    FeatureKind kind = FeatureKind::numeric;
    std::vector<std::string> categories; // nominal/datestamp only, grows during load

    int category_index(const std::string& value) const {
        for (std::size_t i = 0; i < categories.size(); ++i)
            if (categories[i] == value) return static_cast<int>(i);
        return -1;
    }

    void add_category(const std::string& value) {
        if (category_index(value) < 0) categories.push_back(value);
    }
};

struct DeviceProfile {
    std::string device;
    std::vector<FeatureSchema> features; // excludes label and type columns
    std::vector<std::string> attack_types;

    int feature_index(const std::string& name) const {
        for (std::size_t i = 0; i < features.size(); ++i)
            if (features[i].name == name) return static_cast<int>(i);
        return -1;
    }

    bool is_attack_type(const std::string& t) const {
        return std::find(attack_types.begin(), attack_types.end(), t) != attack_types.end();
    }

    // normal first, then attack types in table order
    std::vector<std::string> class_order() const {
        std::vector<std::string> out{"normal"};
        out.insert(out.end(), attack_types.begin(), attack_types.end());
        return out;
    }
};

enum class Label { normal, anomaly };

// numeric/timestamp cells hold double, nominal/datestamp cells hold the string
using Cell = std::variant<double, std::string>;

inline double cell_num(const Cell& c) { return std::get<double>(c); }
inline const std::string& cell_str(const Cell& c) { return std::get<std::string>(c); }

struct Instance {
    std::vector<Cell> values;
    Label label = Label::normal;
    std::string attack_type = "normal";
};

struct Dataset {
    DeviceProfile profile;
    std::vector<Instance> instances;

    std::size_t size() const { return instances.size(); }
};

struct MinMax {
    double min = 0.0;
    double max = 0.0;
};

struct NormalizationParams {
    // aligned with profile.features; engaged for numeric/timestamp features only
    std::vector<std::optional<MinMax>> per_feature;
};

namespace detail {

inline std::string lowercase(std::string s) {
    for (char& c : s)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return s;
}

// canonical header form: lowercase, spaces and hyphens become underscores
inline std::string canon_name(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == ' ' || c == '-') {
            out.push_back('_');
        } else if (c >= 'A' && c <= 'Z') {
            out.push_back(static_cast<char>(c - 'A' + 'a'));
        } else {
            out.push_back(c);
        }
    }
    return out;
}

inline bool parse_double(const std::string& s, double& out) {
    const char* b = s.data();
    const char* e = s.data() + s.size();
    while (b < e && (*b == ' ' || *b == '\t')) ++b;
    auto r = std::from_chars(b, e, out);
    if (r.ec != std::errc{}) return false;
    while (r.ptr < e && (*r.ptr == ' ' || *r.ptr == '\t')) ++r.ptr;
    return r.ptr == e;
}

// shortest round-trip formatting
inline std::string format_double(double v) {
    char buf[32];
    auto r = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, r.ptr);
}

// "HH:MM:SS" -> seconds since midnight; plain numbers pass through
inline bool parse_time(const std::string& s, double& out) {
    int h = 0, m = 0;
    double sec = 0;
    std::size_t c1 = s.find(':');
    if (c1 == std::string::npos) return parse_double(s, out);
    std::size_t c2 = s.find(':', c1 + 1);
    if (c2 == std::string::npos) return false;
    try {
        h = std::stoi(s.substr(0, c1));
        m = std::stoi(s.substr(c1 + 1, c2 - c1 - 1));
        if (!parse_double(s.substr(c2 + 1), sec)) return false;
    } catch (const std::exception&) {
        return false;
    }
    if (h < 0 || h > 23 || m < 0 || m > 59 || sec < 0 || sec >= 60) return false;
    out = h * 3600.0 + m * 60.0 + sec;
    return true;
}

inline std::string format_time(double seconds) {
    long long t = std::llround(seconds);
    if (t < 0) t = 0;
    if (t > 86399) t = 86399;
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%02lld:%02lld:%02lld", t / 3600, (t / 60) % 60, t % 60);
    return std::string(buf);
}

inline bool bool_like(const std::string& lower) {
    return lower == "true" || lower == "false" || lower == "on" || lower == "off" ||
           lower == "0" || lower == "1";
}

// RFC 4180 record reader; returns false at end of input
inline bool read_record(std::istream& in, std::vector<std::string>& fields) {
    fields.clear();
    std::string field;
    bool in_quotes = false;
    bool any = false;
    int ch;
    while ((ch = in.get()) != EOF) {
        any = true;
        char c = static_cast<char>(ch);
        if (in_quotes) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get();
                    field.push_back('"');
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(c);
            }
        } else if (c == '"') {
            in_quotes = true;
        } else if (c == ',') {
            fields.push_back(field);
            field.clear();
        } else if (c == '\r') {
            if (in.peek() == '\n') in.get();
            fields.push_back(field);
            return true;
        } else if (c == '\n') {
            fields.push_back(field);
            return true;
        } else {
            field.push_back(c);
        }
    }
    if (!any) return false;
    fields.push_back(field);
    return true;
}

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

inline std::string join_classes(const DeviceProfile& profile) {
    std::string out = "normal";
    for (const auto& a : profile.attack_types) out += ", " + a;
    return out;
}

} // namespace detail

inline Dataset load_csv(std::istream& in, const DeviceProfile& profile) {
    Dataset data;
    data.profile = profile;

    std::vector<std::string> header;
    if (!detail::read_record(in, header))
        throw SchemaError("empty input: missing CSV header row");

    std::vector<int> col_of_feature(profile.features.size(), -1);
    int label_col = -1, type_col = -1;
    for (std::size_t c = 0; c < header.size(); ++c) {
        std::string name = detail::canon_name(header[c]);
        if (name == "label") {
            label_col = static_cast<int>(c);
        } else if (name == "type") {
            type_col = static_cast<int>(c);
        } else {
            for (std::size_t f = 0; f < profile.features.size(); ++f)
                if (detail::canon_name(profile.features[f].name) == name)
                    col_of_feature[f] = static_cast<int>(c);
        }
    }
    for (std::size_t f = 0; f < profile.features.size(); ++f)
        if (col_of_feature[f] < 0)
            throw SchemaError("missing column '" + profile.features[f].name + "' for device " +
                              profile.device);
    if (label_col < 0) throw SchemaError("missing column 'label'");
    if (type_col < 0) throw SchemaError("missing column 'type'");

    std::vector<std::string> fields;
    std::size_t row = 0;
    while (detail::read_record(in, fields)) {
        ++row;
        if (fields.size() == 1 && fields[0].empty()) continue; // trailing blank line
        if (fields.size() != header.size())
            throw DataError("row " + std::to_string(row) + ": expected " +
                            std::to_string(header.size()) + " fields, got " +
                            std::to_string(fields.size()));

        Instance inst;
        inst.values.reserve(profile.features.size());
        for (std::size_t f = 0; f < profile.features.size(); ++f) {
            FeatureSchema& schema = data.profile.features[f];
            const std::string& raw = fields[static_cast<std::size_t>(col_of_feature[f])];
            if (raw.empty())
                throw DataError("row " + std::to_string(row) + ": blank cell in column '" +
                                schema.name + "'");
            switch (schema.kind) {
            case FeatureKind::numeric: {
                double v;
                if (!detail::parse_double(raw, v))
                    throw DataError("row " + std::to_string(row) + ": unparseable numeric value '" +
                                    raw + "' in column '" + schema.name + "'");
                inst.values.emplace_back(v);
                break;
            }
            case FeatureKind::timestamp: {
                double v;
                if (!detail::parse_time(raw, v))
                    throw DataError("row " + std::to_string(row) + ": unparseable time value '" +
                                    raw + "' in column '" + schema.name + "'");
                inst.values.emplace_back(v);
                break;
            }
            case FeatureKind::nominal:
            case FeatureKind::datestamp: {
                std::string v = raw;
                std::string lower = detail::lowercase(raw);
                if (schema.kind == FeatureKind::nominal && detail::bool_like(lower))
                    v = lower; // boolean-looking values are coerced to lowercase nominals
                schema.add_category(v);
                inst.values.emplace_back(std::move(v));
                break;
            }
            }
        }

        const std::string& label_raw = fields[static_cast<std::size_t>(label_col)];
        if (label_raw == "0") {
            inst.label = Label::normal;
        } else if (label_raw == "1") {
            inst.label = Label::anomaly;
        } else {
            throw DataError("row " + std::to_string(row) + ": label must be 0 or 1, got '" +
                            label_raw + "'");
        }

        inst.attack_type = detail::lowercase(fields[static_cast<std::size_t>(type_col)]);
        if (inst.attack_type != "normal" && !profile.is_attack_type(inst.attack_type))
            throw DataError("row " + std::to_string(row) + ": unknown attack type '" +
                            inst.attack_type + "'; allowed: " + detail::join_classes(profile));
        if ((inst.label == Label::normal) != (inst.attack_type == "normal"))
            throw DataError("row " + std::to_string(row) + ": label and type disagree ('" +
                            label_raw + "' vs '" + inst.attack_type + "')");

        data.instances.push_back(std::move(inst));
    }
    return data;
}

inline Dataset load_csv(const std::string& path, const DeviceProfile& profile) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path);
    return load_csv(in, profile);
}

inline void write_csv(std::ostream& out, const Dataset& data) {
    for (std::size_t f = 0; f < data.profile.features.size(); ++f) {
        if (f) out << ',';
        out << detail::csv_quote(data.profile.features[f].name);
    }
    out << ",label,type\n";
    for (const Instance& inst : data.instances) {
        for (std::size_t f = 0; f < data.profile.features.size(); ++f) {
            if (f) out << ',';
            const FeatureSchema& schema = data.profile.features[f];
            switch (schema.kind) {
            case FeatureKind::numeric:
                out << detail::format_double(cell_num(inst.values[f]));
                break;
            case FeatureKind::timestamp:
                out << detail::format_time(cell_num(inst.values[f]));
                break;
            case FeatureKind::nominal:
            case FeatureKind::datestamp:
                out << detail::csv_quote(cell_str(inst.values[f]));
                break;
            }
        }
        out << ',' << (inst.label == Label::normal ? '0' : '1') << ','
            << detail::csv_quote(inst.attack_type) << '\n';
    }
}

inline void write_csv(const std::string& path, const Dataset& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open file for writing: " + path);
    write_csv(out, data);
}

inline NormalizationParams normalize_fit(const Dataset& data) {
    if (data.instances.empty()) throw DataError("normalize_fit: dataset is empty");
    NormalizationParams params;
    params.per_feature.resize(data.profile.features.size());
    for (std::size_t f = 0; f < data.profile.features.size(); ++f) {
        if (!kind_is_numeric(data.profile.features[f].kind)) continue;
        MinMax mm{cell_num(data.instances[0].values[f]), cell_num(data.instances[0].values[f])};
        for (const Instance& inst : data.instances) {
            double v = cell_num(inst.values[f]);
            mm.min = std::min(mm.min, v);
            mm.max = std::max(mm.max, v);
        }
        params.per_feature[f] = mm;
    }
    return params;
}

inline Dataset normalize_apply(const NormalizationParams& params, const Dataset& data) {
    if (params.per_feature.size() != data.profile.features.size())
        throw SchemaError("normalize_apply: params fitted on a different schema");
    Dataset out = data;
    for (std::size_t f = 0; f < out.profile.features.size(); ++f) {
        bool numeric = kind_is_numeric(out.profile.features[f].kind);
        if (numeric != params.per_feature[f].has_value())
            throw SchemaError("normalize_apply: feature kind mismatch at '" +
                              out.profile.features[f].name + "'");
        if (!numeric) continue;
        const MinMax& mm = *params.per_feature[f];
        double range = mm.max - mm.min;
        for (Instance& inst : out.instances) {
            double v = cell_num(inst.values[f]);
            double scaled = range > 0.0 ? (v - mm.min) / range : 0.0;
            inst.values[f] = std::clamp(scaled, 0.0, 1.0);
        }
    }
    return out;
}

inline std::pair<Dataset, Dataset> stratified_split(const Dataset& data, double train_fraction,
                                                    std::uint64_t seed) {
    if (!(train_fraction > 0.0 && train_fraction < 1.0))
        throw DataError("stratified_split: train_fraction must lie in (0,1)");

    std::map<std::string, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < data.instances.size(); ++i)
        by_class[data.instances[i].attack_type].push_back(i);
    for (const auto& [cls, idx] : by_class)
        if (idx.size() < 2)
            throw DataError("stratified_split: class '" + cls + "' has fewer than 2 instances");

    Rng rng(seed);
    std::vector<bool> in_train(data.instances.size(), false);
    // iterate classes in canonical order so the partition is seed-stable
    for (const std::string& cls : data.profile.class_order()) {
        auto it = by_class.find(cls);
        if (it == by_class.end()) continue;
        std::vector<std::size_t> idx = it->second;
        fisher_yates_shuffle(idx, rng);
        std::size_t n = idx.size();
        auto want = static_cast<std::size_t>(std::llround(train_fraction * static_cast<double>(n)));
        want = std::clamp<std::size_t>(want, 1, n - 1);
        for (std::size_t i = 0; i < want; ++i) in_train[idx[i]] = true;
    }

    Dataset train, test;
    train.profile = data.profile;
    test.profile = data.profile;
    for (std::size_t i = 0; i < data.instances.size(); ++i)
        (in_train[i] ? train : test).instances.push_back(data.instances[i]);
    return {std::move(train), std::move(test)};
}

// Seeded Gaussian/categorical generator shaped like the ToN_IoT device files.
// Class signatures: numeric means spaced `separation` standard deviations apart,
// a per-class date string, and skewed per-class category tables.
inline Dataset synthesize(const DeviceProfile& profile,
                          const std::vector<std::pair<std::string, long long>>& counts,
                          std::uint64_t seed, double separation) {
    if (separation < 0.0) throw DataError("synthesize: separation must be >= 0");
    std::vector<std::string> order = profile.class_order();
    std::map<std::string, std::size_t> want;
    for (const auto& [cls, n] : counts) {
        if (n < 0) throw DataError("synthesize: negative count for class '" + cls + "'");
        if (std::find(order.begin(), order.end(), cls) == order.end())
            throw DataError("synthesize: unknown class '" + cls + "' for device " + profile.device);
        want[cls] += static_cast<std::size_t>(n);
    }

    Dataset data;
    data.profile = profile;

    // per-feature nominal category defaults when the profile ships none
    for (FeatureSchema& schema : data.profile.features) {
        if (schema.kind == FeatureKind::nominal && schema.categories.empty())
            schema.categories = {"a", "b"};
    }

    Rng rng(seed);
    for (std::size_t ci = 0; ci < order.size(); ++ci) {
        const std::string& cls = order[ci];
        auto it = want.find(cls);
        if (it == want.end()) continue;
        std::string date_value = std::to_string(ci + 1) + "-Apr-19";
        for (std::size_t r = 0; r < it->second; ++r) {
            Instance inst;
            inst.label = cls == "normal" ? Label::normal : Label::anomaly;
            inst.attack_type = cls;
            inst.values.reserve(data.profile.features.size());
            for (FeatureSchema& schema : data.profile.features) {
                switch (schema.kind) {
                case FeatureKind::numeric: {
                    double v = static_cast<double>(ci) * separation + rng.next_gaussian();
                    inst.values.emplace_back(v);
                    break;
                }
                case FeatureKind::timestamp: {
                    // class means spread across the day, sigma = 900 s
                    double v = 14400.0 + static_cast<double>(ci) * separation * 900.0 +
                               rng.next_gaussian() * 900.0;
                    v = std::clamp(std::round(v), 0.0, 86399.0);
                    inst.values.emplace_back(v);
                    break;
                }
                case FeatureKind::datestamp: {
                    schema.add_category(date_value);
                    inst.values.emplace_back(date_value);
                    break;
                }
                case FeatureKind::nominal: {
                    std::size_t ncat = schema.categories.size();
                    std::size_t favored = ci % ncat;
                    std::size_t pick;
                    if (rng.next_double() < 0.85) {
                        pick = favored;
                    } else {
                        pick = rng.next_below(ncat);
                    }
                    inst.values.emplace_back(schema.categories[pick]);
                    break;
                }
                }
            }
            data.instances.push_back(std::move(inst));
        }
    }
    return data;
}

} // namespace kmanb

#endif
