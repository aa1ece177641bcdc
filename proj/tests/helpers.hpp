#ifndef KMANB_TEST_HELPERS_HPP
#define KMANB_TEST_HELPERS_HPP

#include <string>
#include <vector>

#include <kmanb/dataset.hpp>

namespace helpers {

// bare numeric profile with features f0..f(d-1)
inline kmanb::DeviceProfile numeric_profile(int d,
                                            std::vector<std::string> attacks = {"ddos"}) {
    kmanb::DeviceProfile p;
    p.device = "test";
    for (int i = 0; i < d; ++i) {
        kmanb::FeatureSchema f;
        f.name = "f" + std::to_string(i);
        f.kind = kmanb::FeatureKind::numeric;
        p.features.push_back(f);
    }
    p.attack_types = std::move(attacks);
    return p;
}

inline kmanb::Dataset numeric_dataset(const kmanb::DeviceProfile& profile,
                                      const std::vector<std::vector<double>>& rows,
                                      const std::vector<std::string>& types) {
    kmanb::Dataset data;
    data.profile = profile;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        kmanb::Instance inst;
        for (double v : rows[i]) inst.values.emplace_back(v);
        inst.attack_type = types[i];
        inst.label = types[i] == "normal" ? kmanb::Label::normal : kmanb::Label::anomaly;
        data.instances.push_back(std::move(inst));
    }
    return data;
}

// single nominal feature profile
inline kmanb::DeviceProfile nominal_profile(std::vector<std::string> categories,
                                            std::vector<std::string> attacks = {"ddos"}) {
    kmanb::DeviceProfile p;
    p.device = "test";
    kmanb::FeatureSchema f;
    f.name = "f0";
    f.kind = kmanb::FeatureKind::nominal;
    f.categories = std::move(categories);
    p.features.push_back(f);
    p.attack_types = std::move(attacks);
    return p;
}

inline kmanb::Dataset nominal_dataset(const kmanb::DeviceProfile& profile,
                                      const std::vector<std::string>& values,
                                      const std::vector<std::string>& types) {
    kmanb::Dataset data;
    data.profile = profile;
    for (std::size_t i = 0; i < values.size(); ++i) {
        kmanb::Instance inst;
        inst.values.emplace_back(values[i]);
        inst.attack_type = types[i];
        inst.label = types[i] == "normal" ? kmanb::Label::normal : kmanb::Label::anomaly;
        data.instances.push_back(std::move(inst));
    }
    return data;
}

} // namespace helpers

#endif
