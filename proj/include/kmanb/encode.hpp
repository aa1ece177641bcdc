#ifndef KMANB_ENCODE_HPP
#define KMANB_ENCODE_HPP

#include <string>
#include <vector>

#include "kmanb/dataset.hpp"

namespace kmanb {

// Maps instances into the numeric space shared by K-means and KNN:
// numeric features pass through, nominal/datestamp features become one-hot
// blocks over the category set frozen at fit time. An unseen test category
// encodes to all-zeros for its block.
class Encoder {
public:
    Encoder() = default;

    static Encoder fit(const DeviceProfile& profile) {
        Encoder e;
        for (const FeatureSchema& f : profile.features) {
            Block b;
            b.name = f.name;
            b.kind = f.kind;
            b.offset = e.dim_;
            if (kind_is_numeric(f.kind)) {
                b.width = 1;
            } else {
                b.categories = f.categories;
                b.width = f.categories.size();
            }
            e.dim_ += b.width;
            e.blocks_.push_back(std::move(b));
        }
        return e;
    }

    std::size_t dim() const { return dim_; }

    std::vector<std::string> feature_columns() const {
        std::vector<std::string> out;
        out.reserve(blocks_.size());
        for (const Block& b : blocks_) out.push_back(b.name);
        return out;
    }

    bool matches(const DeviceProfile& profile) const {
        if (profile.features.size() != blocks_.size()) return false;
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (profile.features[i].name != blocks_[i].name ||
                profile.features[i].kind != blocks_[i].kind)
                return false;
        return true;
    }

    std::vector<double> encode(const Instance& inst) const {
        std::vector<double> out(dim_, 0.0);
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            const Block& b = blocks_[i];
            if (kind_is_numeric(b.kind)) {
                out[b.offset] = cell_num(inst.values[i]);
            } else {
                const std::string& v = cell_str(inst.values[i]);
                for (std::size_t c = 0; c < b.categories.size(); ++c) {
                    if (b.categories[c] == v) {
                        out[b.offset + c] = 1.0;
                        break;
                    }
                }
            }
        }
        return out;
    }

    std::vector<std::vector<double>> encode_all(const Dataset& data) const {
        std::vector<std::vector<double>> out;
        out.reserve(data.instances.size());
        for (const Instance& inst : data.instances) out.push_back(encode(inst));
        return out;
    }

private:
    struct Block {
        std::string name;
        FeatureKind kind;
        std::size_t offset = 0;
        std::size_t width = 0;
        std::vector<std::string> categories;
    };
    std::vector<Block> blocks_;
    std::size_t dim_ = 0;

    friend struct EncoderAccess;
};

// test/serialization access to the frozen category tables
struct EncoderAccess {
    static std::vector<std::vector<std::string>> categories(const Encoder& e) {
        std::vector<std::vector<std::string>> out;
        for (const auto& b : e.blocks_) out.push_back(b.categories);
        return out;
    }
};

inline double squared_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

} // namespace kmanb

#endif
