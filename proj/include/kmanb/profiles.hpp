#ifndef KMANB_PROFILES_HPP
#define KMANB_PROFILES_HPP

#include <string>
#include <vector>

#include "kmanb/dataset.hpp"

namespace kmanb {

// Device schemas and per-class row counts for the seven ToN_IoT telemetry
// device types, at both the train_test and the larger processed scale.

using ClassCounts = std::vector<std::pair<std::string, long long>>;

inline DeviceProfile device_profile(const std::string& device) {
    auto feat = [](std::string name, FeatureKind kind,
                   std::vector<std::string> cats = {}) {
        FeatureSchema s;
        s.name = std::move(name);
        s.kind = kind;
        s.categories = std::move(cats);
        return s;
    };
    DeviceProfile p;
    p.device = device;
    if (device == "fridge") {
        p.features = {feat("date", FeatureKind::datestamp),
                      feat("time", FeatureKind::timestamp),
                      feat("fridge_temperature", FeatureKind::numeric),
                      feat("temp_condition", FeatureKind::nominal, {"high", "low"})};
        p.attack_types = {"password", "xss", "ddos", "ransomware", "injection", "backdoor"};
    } else if (device == "garage_door") {
        p.features = {feat("date", FeatureKind::datestamp),
                      feat("time", FeatureKind::timestamp),
                      feat("door_state", FeatureKind::nominal, {"true", "false"}),
                      feat("sphone_signal", FeatureKind::nominal, {"true", "false"})};
        p.attack_types = {"password", "xss", "ddos", "ransomware", "injection", "backdoor",
                          "scanning"};
    } else if (device == "gps_tracker") {
        p.features = {feat("date", FeatureKind::datestamp),
                      feat("time", FeatureKind::timestamp),
                      feat("latitude", FeatureKind::numeric),
                      feat("longitude", FeatureKind::numeric)};
        p.attack_types = {"password", "xss", "ddos", "ransomware", "injection", "backdoor",
                          "scanning"};
    } else if (device == "modbus") {
        p.features = {feat("date", FeatureKind::datestamp),
                      feat("time", FeatureKind::timestamp),
                      feat("fc1_read_input_register", FeatureKind::numeric),
                      feat("fc2_read_discrete_value", FeatureKind::numeric),
                      feat("fc3_read_holding_register", FeatureKind::numeric),
                      feat("fc4_read_coil", FeatureKind::numeric)};
        p.attack_types = {"password", "xss", "injection", "backdoor", "scanning"};
    } else if (device == "motion_light") {
        p.features = {feat("date", FeatureKind::datestamp),
                      feat("time", FeatureKind::timestamp),
                      feat("motion_status", FeatureKind::numeric),
                      feat("light_status", FeatureKind::nominal, {"on", "off"})};
        p.attack_types = {"password", "xss", "ddos", "ransomware", "injection", "backdoor",
                          "scanning"};
    } else if (device == "thermostat") {
        p.features = {feat("date", FeatureKind::datestamp),
                      feat("time", FeatureKind::timestamp),
                      feat("current_temp", FeatureKind::numeric),
                      feat("thermostat_status", FeatureKind::nominal, {"on", "off"})};
        p.attack_types = {"password", "xss", "ransomware", "injection", "backdoor", "scanning"};
    } else if (device == "weather") {
        p.features = {feat("date", FeatureKind::datestamp),
                      feat("time", FeatureKind::timestamp),
                      feat("temperature", FeatureKind::numeric),
                      feat("pressure", FeatureKind::numeric),
                      feat("humidity", FeatureKind::numeric)};
        p.attack_types = {"password", "xss", "ddos", "ransomware", "injection", "backdoor",
                          "scanning"};
    } else {
        throw DataError("unknown device '" + device +
                        "'; expected one of fridge, garage_door, gps_tracker, modbus, "
                        "motion_light, thermostat, weather");
    }
    return p;
}

inline std::vector<std::string> device_names() {
    return {"fridge", "garage_door", "gps_tracker", "modbus",
            "motion_light", "thermostat", "weather"};
}

inline ClassCounts train_test_counts(const std::string& device) {
    if (device == "fridge")
        return {{"normal", 35000}, {"password", 5000}, {"xss", 2042},      {"ddos", 5000},
                {"ransomware", 2902}, {"injection", 5000}, {"backdoor", 5000}};
    if (device == "garage_door")
        return {{"normal", 35000}, {"password", 5000}, {"xss", 1156},      {"ddos", 5000},
                {"ransomware", 2902}, {"injection", 5000}, {"backdoor", 5000},
                {"scanning", 529}};
    if (device == "gps_tracker")
        return {{"normal", 35000}, {"password", 5000}, {"xss", 577},       {"ddos", 5000},
                {"ransomware", 2833}, {"injection", 5000}, {"backdoor", 5000},
                {"scanning", 550}};
    if (device == "modbus")
        return {{"normal", 35000}, {"password", 5000}, {"xss", 577},
                {"injection", 5000}, {"backdoor", 5000}, {"scanning", 529}};
    if (device == "motion_light")
        return {{"normal", 35000}, {"password", 5000}, {"xss", 449},       {"ddos", 5000},
                {"ransomware", 2264}, {"injection", 5000}, {"backdoor", 5000},
                {"scanning", 1775}};
    if (device == "thermostat")
        return {{"normal", 35000}, {"password", 5000}, {"xss", 449},
                {"ransomware", 2264}, {"injection", 5000}, {"backdoor", 5000},
                {"scanning", 61}};
    if (device == "weather")
        return {{"normal", 35000}, {"password", 5000}, {"xss", 866},       {"ddos", 5000},
                {"ransomware", 2865}, {"injection", 5000}, {"backdoor", 5000},
                {"scanning", 529}};
    throw DataError("unknown device '" + device + "'");
}

inline ClassCounts processed_counts(const std::string& device) {
    if (device == "fridge")
        return {{"normal", 206758}, {"password", 28425}, {"xss", 2042},  {"ddos", 10233},
                {"ransomware", 2902}, {"injection", 7079}, {"backdoor", 35568}};
    if (device == "garage_door")
        return {{"normal", 25807}, {"password", 16617}, {"ddos", 10230},
                {"injection", 6331}, {"backdoor", 30230}, {"scanning", 529}};
    if (device == "gps_tracker")
        return {{"normal", 140488}, {"password", 25176}, {"xss", 577},   {"ddos", 10226},
                {"ransomware", 2833}, {"injection", 6904}, {"backdoor", 35571},
                {"scanning", 550}};
    if (device == "modbus")
        return {{"normal", 133839}, {"password", 18815}, {"xss", 498},
                {"injection", 5186}, {"backdoor", 40005}, {"scanning", 529}};
    if (device == "motion_light")
        return {{"normal", 178591}, {"password", 17521}, {"xss", 449},   {"ddos", 8121},
                {"ransomware", 2264}, {"injection", 5595}, {"backdoor", 28209},
                {"scanning", 1775}};
    if (device == "thermostat")
        return {{"normal", 129563}, {"password", 8435}, {"xss", 449},
                {"ransomware", 2264}, {"injection", 9498}, {"backdoor", 35568},
                {"scanning", 61}};
    if (device == "weather")
        return {{"normal", 160529}, {"password", 25715}, {"xss", 866},   {"ddos", 15182},
                {"ransomware", 2865}, {"injection", 9726}, {"backdoor", 35641},
                {"scanning", 529}};
    throw DataError("unknown device '" + device + "'");
}

} // namespace kmanb

#endif
