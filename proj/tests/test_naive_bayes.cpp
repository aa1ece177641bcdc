#include <doctest.h>

#include <cmath>
#include <numeric>

#include <kmanb/naive_bayes.hpp>

#include "helpers.hpp"

using namespace kmanb;

namespace {

// exact rational arithmetic for the hand-dataset oracle
struct Fraction {
    long long num = 0;
    long long den = 1;

    Fraction() = default;
    Fraction(long long n, long long d = 1) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    Fraction operator*(const Fraction& o) const { return Fraction(num * o.num, den * o.den); }
    Fraction operator+(const Fraction& o) const {
        return Fraction(num * o.den + o.num * den, den * o.den);
    }
    Fraction operator/(const Fraction& o) const { return Fraction(num * o.den, den * o.num); }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Brute-force posterior for a single-nominal-feature dataset with uniform
// weights, mirroring prior * likelihood with add-one smoothing, normalized.
// Kept independent of the NbModel code path.
std::vector<Fraction> rational_posterior(const Dataset& data,
                                         const std::vector<std::string>& classes,
                                         const std::string& value) {
    const FeatureSchema& schema = data.profile.features[0];
    long long n = static_cast<long long>(data.instances.size());
    long long ncat = static_cast<long long>(schema.categories.size());

    std::vector<Fraction> joint;
    for (const std::string& cls : classes) {
        long long class_count = 0, value_count = 0;
        for (const Instance& inst : data.instances) {
            if (inst.attack_type != cls) continue;
            ++class_count;
            if (cell_str(inst.values[0]) == value) ++value_count;
        }
        Fraction prior(class_count, n);
        Fraction likelihood(value_count + 1, class_count + ncat);
        joint.push_back(prior * likelihood);
    }
    Fraction total(0);
    for (const Fraction& j : joint) total = total + j;
    for (Fraction& j : joint) j = j / total;
    return joint;
}

} // namespace

TEST_CASE("nb_fit priors are weighted class frequencies") {
    auto profile = helpers::numeric_profile(1);
    SUBCASE("single class") {
        auto data = helpers::numeric_dataset(profile, {{1}, {2}}, {"normal", "normal"});
        NbModel model = nb_fit(data, {1.0, 1.0});
        REQUIRE(model.classes == std::vector<std::string>{"normal"});
        CHECK(model.priors[0] == 1.0);
    }
    SUBCASE("30/70 split") {
        std::vector<std::vector<double>> rows;
        std::vector<std::string> types;
        for (int i = 0; i < 30; ++i) {
            rows.push_back({0.0});
            types.push_back("normal");
        }
        for (int i = 0; i < 70; ++i) {
            rows.push_back({1.0});
            types.push_back("ddos");
        }
        auto data = helpers::numeric_dataset(profile, rows, types);
        NbModel model = nb_fit(data, std::vector<double>(100, 1.0));
        CHECK(model.priors[0] == doctest::Approx(0.3));
        CHECK(model.priors[1] == doctest::Approx(0.7));
    }
}

TEST_CASE("nb_fit add-one smoothing over the full category set") {
    auto profile = helpers::nominal_profile({"high", "low"}, {"a"});
    auto data = helpers::nominal_dataset(profile, {"high", "high"}, {"a", "a"});
    NbModel model = nb_fit(data, {1.0, 1.0});
    CHECK(model.nominal_tables[0][0][0] == doctest::Approx(0.75)); // (2+1)/(2+2)
    CHECK(model.nominal_tables[0][0][1] == doctest::Approx(0.25)); // (0+1)/(2+2)
}

TEST_CASE("nb_fit weight error paths") {
    auto profile = helpers::numeric_profile(1);
    auto data = helpers::numeric_dataset(profile, {{1}, {2}}, {"normal", "ddos"});
    CHECK_THROWS_AS(nb_fit(data, {1.0, -0.5}), DataError);
    CHECK_THROWS_WITH_AS(nb_fit(data, {1.0, 0.0}), doctest::Contains("ddos"), DataError);
}

TEST_CASE("nb_posterior matches hand arithmetic") {
    SUBCASE("single-class model is certain") {
        auto profile = helpers::numeric_profile(1);
        auto data = helpers::numeric_dataset(profile, {{0}, {1}}, {"normal", "normal"});
        NbModel model = nb_fit(data, {1.0, 1.0});
        Instance q;
        q.values.emplace_back(123.0);
        CHECK(nb_posterior(model, q)[0] == doctest::Approx(1.0));
    }
    SUBCASE("two-class nominal example") {
        auto profile = helpers::nominal_profile({"high", "low"}, {"b"});
        auto data = helpers::nominal_dataset(profile, {"high", "high", "low", "low"},
                                             {"normal", "normal", "b", "b"});
        NbModel model = nb_fit(data, std::vector<double>(4, 1.0));
        // p(high|normal)=3/4, p(high|b)=1/4, equal priors
        Instance q;
        q.values.emplace_back(std::string("high"));
        auto post = nb_posterior(model, q);
        CHECK(post[0] == doctest::Approx(0.75).epsilon(1e-12));
        CHECK(post[1] == doctest::Approx(0.25).epsilon(1e-12));
    }
    SUBCASE("symmetric Gaussians give 0.5/0.5 at the midpoint") {
        auto profile = helpers::numeric_profile(1, {"b"});
        auto data = helpers::numeric_dataset(profile, {{-1.5}, {-0.5}, {0.5}, {1.5}},
                                             {"normal", "normal", "b", "b"});
        NbModel model = nb_fit(data, std::vector<double>(4, 1.0));
        Instance q;
        q.values.emplace_back(0.0);
        auto post = nb_posterior(model, q);
        CHECK(post[0] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(post[1] == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("posteriors match the exact rational oracle on the hand dataset") {
    auto profile = helpers::nominal_profile({"a", "b"}, {"ddos"});
    auto data =
        helpers::nominal_dataset(profile, {"a", "a", "a", "b"}, {"normal", "normal", "ddos", "ddos"});
    NbModel model = nb_fit(data, std::vector<double>(4, 1.0));

    for (const std::string& value : {"a", "b"}) {
        auto oracle = rational_posterior(data, model.classes, value);
        Instance q;
        q.values.emplace_back(value);
        auto post = nb_posterior(model, q);
        for (std::size_t c = 0; c < post.size(); ++c)
            CHECK(post[c] == doctest::Approx(oracle[c].value()).epsilon(1e-12));
        // predicted class equals the rational argmax (ties to earlier class)
        std::size_t best = 0;
        for (std::size_t c = 1; c < oracle.size(); ++c)
            if (oracle[c].value() > oracle[best].value()) best = c;
        CHECK(nb_predict(model, q) == model.classes[best]);
    }
}

TEST_CASE("nb_predict tie goes to the earlier class") {
    auto profile = helpers::nominal_profile({"a", "b"}, {"ddos"});
    auto data = helpers::nominal_dataset(profile, {"a", "b", "a", "b"},
                                         {"normal", "normal", "ddos", "ddos"});
    NbModel model = nb_fit(data, std::vector<double>(4, 1.0));
    Instance q;
    q.values.emplace_back(std::string("a"));
    CHECK(nb_predict(model, q) == "normal");
}

TEST_CASE("posterior normalization holds on random models and instances") {
    Rng rng(2024);
    auto profile = helpers::numeric_profile(2, {"x"});
    {
        kmanb::FeatureSchema f;
        f.name = "cat";
        f.kind = FeatureKind::nominal;
        f.categories = {"p", "q", "r"};
        profile.features.push_back(f);
    }
    for (int rep = 0; rep < 100; ++rep) {
        Dataset data;
        data.profile = profile;
        std::size_t n = 10 + rng.next_below(40);
        for (std::size_t i = 0; i < n; ++i) {
            Instance inst;
            inst.values.emplace_back(rng.next_gaussian() * 5);
            inst.values.emplace_back(rng.next_gaussian());
            inst.values.emplace_back(profile.features[2].categories[rng.next_below(3)]);
            inst.attack_type = rng.next_double() < 0.5 ? "normal" : "x";
            inst.label = inst.attack_type == "normal" ? Label::normal : Label::anomaly;
            data.instances.push_back(std::move(inst));
        }
        bool has_both = false, has_normal = false, has_x = false;
        for (const auto& inst : data.instances) {
            has_normal |= inst.attack_type == "normal";
            has_x |= inst.attack_type == "x";
        }
        has_both = has_normal && has_x;
        if (!has_both) continue;
        NbModel model = nb_fit(data, std::vector<double>(n, 1.0));

        for (int q = 0; q < 10; ++q) {
            Instance inst;
            inst.values.emplace_back(rng.next_gaussian() * 20);
            inst.values.emplace_back(rng.next_gaussian() * 20);
            // occasionally probe an unseen category
            inst.values.emplace_back(q == 0 ? std::string("unseen")
                                            : profile.features[2].categories[rng.next_below(3)]);
            auto post = nb_posterior(model, inst);
            double sum = 0.0;
            for (double p : post) sum += p;
            REQUIRE(sum == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("doubling all weights leaves the fitted model unchanged") {
    auto profile = helpers::numeric_profile(1, {"x"});
    {
        kmanb::FeatureSchema f;
        f.name = "cat";
        f.kind = FeatureKind::nominal;
        f.categories = {"p", "q"};
        profile.features.push_back(f);
    }
    Dataset data;
    data.profile = profile;
    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        Instance inst;
        inst.values.emplace_back(rng.next_gaussian());
        inst.values.emplace_back(profile.features[1].categories[rng.next_below(2)]);
        inst.attack_type = i % 2 ? "normal" : "x";
        inst.label = inst.attack_type == "normal" ? Label::normal : Label::anomaly;
        data.instances.push_back(std::move(inst));
    }
    std::vector<double> w(20);
    for (double& x : w) x = 0.5 + rng.next_double();
    std::vector<double> w2 = w;
    for (double& x : w2) x *= 2.0;

    NbModel a = nb_fit(data, w);
    NbModel b = nb_fit(data, w2);
    for (std::size_t c = 0; c < a.classes.size(); ++c) {
        CHECK(a.priors[c] == doctest::Approx(b.priors[c]).epsilon(1e-12));
        CHECK(a.numeric_params[c][0].mean ==
              doctest::Approx(b.numeric_params[c][0].mean).epsilon(1e-12));
        CHECK(a.numeric_params[c][0].variance ==
              doctest::Approx(b.numeric_params[c][0].variance).epsilon(1e-12));
        for (std::size_t t = 0; t < a.nominal_tables[c][1].size(); ++t)
            CHECK(a.nominal_tables[c][1][t] ==
                  doctest::Approx(b.nominal_tables[c][1][t]).epsilon(1e-12));
    }
}

TEST_CASE("argmax agrees between log-space scores and normalized posteriors") {
    Rng rng(44);
    auto profile = helpers::numeric_profile(3, {"x", "y"});
    for (int rep = 0; rep < 20; ++rep) {
        Dataset data;
        data.profile = profile;
        for (int i = 0; i < 30; ++i) {
            Instance inst;
            for (int f = 0; f < 3; ++f) inst.values.emplace_back(rng.next_gaussian() * 4);
            inst.attack_type = i % 3 == 0 ? "normal" : (i % 3 == 1 ? "x" : "y");
            inst.label = inst.attack_type == "normal" ? Label::normal : Label::anomaly;
            data.instances.push_back(std::move(inst));
        }
        NbModel model = nb_fit(data, std::vector<double>(30, 1.0));
        for (int q = 0; q < 10; ++q) {
            Instance inst;
            for (int f = 0; f < 3; ++f) inst.values.emplace_back(rng.next_gaussian() * 4);
            auto post = nb_posterior(model, inst);
            std::size_t best = 0;
            for (std::size_t c = 1; c < post.size(); ++c)
                if (post[c] > post[best]) best = c;
            CHECK(nb_predict(model, inst) == model.classes[best]);
        }
    }
}

TEST_CASE("deterministic nominal feature yields perfect training accuracy") {
    auto profile = helpers::nominal_profile({"n", "d"}, {"ddos"});
    std::vector<std::string> values, types;
    for (int i = 0; i < 50; ++i) {
        values.push_back(i % 2 ? "n" : "d");
        types.push_back(i % 2 ? "normal" : "ddos");
    }
    auto data = helpers::nominal_dataset(profile, values, types);
    NbModel model = nb_fit(data, std::vector<double>(50, 1.0));
    for (const auto& inst : data.instances)
        CHECK(nb_predict(model, inst) == inst.attack_type);
}
