#include <doctest.h>

#include <cmath>

#include <kmanb/feature_rank.hpp>
#include <kmanb/profiles.hpp>

#include "helpers.hpp"

using namespace kmanb;

TEST_CASE("symmetric uncertainty endpoints") {
    std::vector<int> y{0, 0, 0, 1, 1, 1};
    SUBCASE("identical variables score 1") {
        CHECK(symmetric_uncertainty_discrete(y, y) == doctest::Approx(1.0).epsilon(1e-12));
        std::vector<int> relabeled{7, 7, 7, 3, 3, 3}; // bijective renaming
        CHECK(symmetric_uncertainty_discrete(relabeled, y) ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("independent variables score 0") {
        std::vector<int> x{0, 1, 0, 1, 0, 1};
        std::vector<int> yy{0, 0, 1, 1, 2, 2};
        CHECK(symmetric_uncertainty_discrete(x, yy) == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("a constant variable scores 0") {
        std::vector<int> x(6, 4);
        CHECK(symmetric_uncertainty_discrete(x, y) == 0.0);
        CHECK(symmetric_uncertainty_discrete(x, x) == 0.0); // H(X)+H(Y)=0 case
    }
}

TEST_CASE("symmetric uncertainty matches a hand-computed contingency table") {
    // counts: (0,0)=2 (0,1)=1 (1,0)=1 (1,1)=2, n=6
    std::vector<int> x{0, 0, 0, 1, 1, 1};
    std::vector<int> y{0, 0, 1, 0, 1, 1};
    double hx = std::log(2.0);
    double hxy = (2.0 / 3.0) * std::log(3.0) + (1.0 / 3.0) * std::log(6.0);
    double expected = 2.0 * (2.0 * hx - hxy) / (2.0 * hx);
    CHECK(symmetric_uncertainty_discrete(x, y) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("symmetric uncertainty is symmetric and bounded") {
    Rng rng(77);
    for (int rep = 0; rep < 50; ++rep) {
        std::size_t n = 5 + rng.next_below(100);
        std::vector<int> x(n), y(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = static_cast<int>(rng.next_below(4));
            y[i] = static_cast<int>(rng.next_below(3));
        }
        double xy = symmetric_uncertainty_discrete(x, y);
        double yx = symmetric_uncertainty_discrete(y, x);
        CHECK(std::abs(xy - yx) <= 1e-12);
        CHECK(xy >= 0.0);
        CHECK(xy <= 1.0);
    }
}

TEST_CASE("symmetric uncertainty input validation") {
    CHECK_THROWS_AS(symmetric_uncertainty_discrete({0, 1}, {0}), DataError);
    CHECK_THROWS_AS(symmetric_uncertainty_discrete({}, {}), DataError);
    CHECK_THROWS_AS(symmetric_uncertainty({1.0}, {0, 1}), DataError);
}

TEST_CASE("equal-frequency discretization preserves a binwise relationship") {
    std::vector<double> values;
    std::vector<int> labels;
    for (int i = 0; i < 100; ++i) {
        values.push_back(static_cast<double>(i));
        labels.push_back(i / 10);
    }
    // ten equal-frequency bins align exactly with the labels
    CHECK(symmetric_uncertainty(values, labels, 10) == doctest::Approx(1.0).epsilon(1e-12));

    // heavily duplicated values collapse boundaries instead of failing
    std::vector<double> dupes(50, 1.0);
    std::vector<int> mixed;
    for (int i = 0; i < 50; ++i) mixed.push_back(i % 2);
    CHECK(symmetric_uncertainty(dupes, mixed, 10) == 0.0);
}

TEST_CASE("rank_features orders by score with stable ties") {
    auto profile = helpers::numeric_profile(3);
    std::vector<std::vector<double>> rows;
    std::vector<std::string> types;
    Rng rng(9);
    for (int i = 0; i < 200; ++i) {
        double noise = rng.next_gaussian();
        bool attack = i % 2 == 0;
        // f0 determines the class, f1 duplicates f0, f2 is noise
        double signal = attack ? 1.0 : 0.0;
        rows.push_back({signal, signal, noise});
        types.push_back(attack ? "ddos" : "normal");
    }
    auto data = helpers::numeric_dataset(profile, rows, types);
    FeatureRanking ranking = rank_features(data);
    REQUIRE(ranking.scores.size() == 3);
    CHECK(ranking.scores[0].first == "f0"); // tie with f1 keeps input order
    CHECK(ranking.scores[1].first == "f1");
    CHECK(ranking.scores[2].first == "f2");
    CHECK(ranking.scores[0].second == ranking.scores[1].second);
    CHECK(ranking.scores[0].second == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ranking.scores[2].second < 0.2);
}

TEST_CASE("rank_features puts date first on the fridge synthetic") {
    Dataset data = synthesize(device_profile("fridge"), train_test_counts("fridge"), 42, 6.0);
    data.instances.resize(5000);
    FeatureRanking ranking = rank_features(data);
    CHECK(ranking.scores[0].first == "date");
}

TEST_CASE("drop_feature removes exactly the named column") {
    Dataset data = synthesize(device_profile("fridge"), {{"normal", 20}, {"ddos", 10}}, 1, 3.0);
    Dataset out = drop_feature(data, "fridge_temperature");
    CHECK(out.profile.feature_index("fridge_temperature") == -1);
    CHECK(out.profile.features.size() == data.profile.features.size() - 1);
    REQUIRE(out.instances.size() == data.instances.size());
    for (std::size_t i = 0; i < out.instances.size(); ++i) {
        CHECK(out.instances[i].values.size() == data.instances[i].values.size() - 1);
        CHECK(out.instances[i].attack_type == data.instances[i].attack_type);
    }
    // remaining columns keep their values
    int f = out.profile.feature_index("temp_condition");
    int f_orig = data.profile.feature_index("temp_condition");
    REQUIRE(f >= 0);
    for (std::size_t i = 0; i < out.instances.size(); ++i)
        CHECK(cell_str(out.instances[i].values[static_cast<std::size_t>(f)]) ==
              cell_str(data.instances[i].values[static_cast<std::size_t>(f_orig)]));
}

TEST_CASE("drop_feature error paths") {
    Dataset data = synthesize(device_profile("fridge"), {{"normal", 5}, {"ddos", 5}}, 1, 3.0);
    CHECK_THROWS_AS(drop_feature(data, "label"), DataError);
    CHECK_THROWS_AS(drop_feature(data, "type"), DataError);
    CHECK_THROWS_WITH_AS(drop_feature(data, "bogus"), doctest::Contains("bogus"), DataError);
}
