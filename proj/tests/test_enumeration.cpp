#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <stdexcept>

#include "topo2d/enumeration.hpp"
#include "topo2d/topo_numbers.hpp"

using namespace topo2d;

namespace {
std::map<int, int> hist(std::initializer_list<int> counts) {
    std::map<int, int> m;
    int k = 0;
    for (int v : counts) m[k++] = v;
    return m;
}
}  // namespace

TEST_CASE("distributions match the published tables") {
    CHECK(distribution(Metric::T4).counts == hist({16, 117, 102, 20, 1}));
    CHECK(distribution(Metric::T8).counts == hist({1, 132, 102, 20, 1}));
    CHECK(distribution(Metric::T4Complement).counts == hist({16, 117, 102, 20, 1}));
    CHECK(distribution(Metric::T8Complement).counts == hist({1, 132, 102, 20, 1}));
    CHECK(distribution(Metric::H).counts == hist({17, 116, 102, 20, 1}));
    CHECK(distribution(Metric::Y4).counts == hist({17, 116, 102, 20, 1}));
    CHECK(distribution(Metric::Y8).counts == hist({17, 116, 102, 20, 1}));
    for (Metric m : {Metric::T4, Metric::T8, Metric::T4Complement, Metric::T8Complement, Metric::H,
                     Metric::Y4, Metric::Y8}) {
        const auto d = distribution(m);
        CHECK(d.total() == 256);
        CHECK(d.at(5) == 0);
        const auto ref = reference_counts(m);
        for (int k = 0; k <= 4; ++k) CHECK(d.at(k) == ref[k]);
    }
}

TEST_CASE("metric names round trip") {
    for (Metric m : {Metric::T4, Metric::T8, Metric::T4Complement, Metric::T8Complement, Metric::H,
                     Metric::Y4, Metric::Y8}) {
        CHECK(parse_metric(metric_name(m)) == m);
    }
    CHECK_FALSE(parse_metric("T6").has_value());
}

TEST_CASE("duality check passes") {
    const EquivalenceReport r = duality_check();
    CHECK(r.passed());
    CHECK(r.checks.size() == 4);
    for (const auto& c : r.checks) CHECK(c.counterexamples.empty());
    CHECK(distribution(Metric::T4).counts == distribution(Metric::T4Complement).counts);
    CHECK(distribution(Metric::T8).counts == distribution(Metric::T8Complement).counts);
}

TEST_CASE("equivalence report") {
    for (int canvas : {5, 7}) {
        const EquivalenceReport r = equivalence_report(canvas);
        INFO(r.to_text());
        CHECK(r.passed());
        for (const auto& c : r.checks) CHECK(c.counterexamples.empty());

        const auto* y8h = r.find("yokoi8_equals_hilditch");
        REQUIRE(y8h != nullptr);
        CHECK(y8h->exceptions.empty());

        const auto* y4 = r.find("yokoi4_equals_t4");
        REQUIRE(y4 != nullptr);
        CHECK(y4->exceptions == std::vector<std::uint8_t>{255});

        for (const char* name : {"hilditch_equals_t8", "yokoi8_equals_t8"}) {
            const auto* check = r.find(name);
            REQUIRE(check != nullptr);
            CHECK(check->exceptions.size() == 16);
            for (auto m : check->exceptions) CHECK(is_interior({m}, Adjacency::Eight));
        }
        CHECK(r.find("hilditch_vs_oracle_n8") != nullptr);
        CHECK(r.find("hilditch_vs_oracle_n4") == nullptr);
        CHECK(r.find("no_such_check") == nullptr);
    }
}

TEST_CASE("deletability rate") {
    for (Adjacency n : {Adjacency::Four, Adjacency::Eight}) {
        const auto rate = deletability_rate(n);
        CHECK(rate.count == 116);
        CHECK(rate.total == 256);
        CHECK(rate.percent_text() == "45.31");
        CHECK(rate.percent() == doctest::Approx(45.31));
        const auto rest = non_simple_rate(n);
        CHECK(rest.count == 140);
        CHECK(rest.percent_text() == "54.69");
    }
}

TEST_CASE("percentage rounding is half-up") {
    CHECK(make_rate(1, 8).percent_text() == "12.50");
    CHECK(make_rate(1, 3).percent_text() == "33.33");
    CHECK(make_rate(2, 3).percent_text() == "66.67");
    CHECK(make_rate(1, 80000).percent_text() == "0.00");
    CHECK(make_rate(1, 20000).percent_text() == "0.01");  // exact tie 0.005
    CHECK(make_rate(3, 3).percent_text() == "100.00");
    CHECK_THROWS_AS(make_rate(1, 0), std::invalid_argument);
}

TEST_CASE("count tables") {
    const auto& tables = count_tables();
    REQUIRE(tables.size() == 3);
    for (const auto& t : tables) CHECK(table_deviations(t).empty());

    CHECK(format_table_csv(tables[1]) ==
          "metric,k,count\n"
          "H,0,17\nH,1,116\nH,2,102\nH,3,20\nH,4,1\n"
          "T8,0,1\nT8,1,132\nT8,2,102\nT8,3,20\nT8,4,1\n");

    const std::string text = format_table_text(tables[0]);
    CHECK(text.find("T4_COMPLEMENT") != std::string::npos);
    CHECK(text.find("    117") != std::string::npos);
    CHECK(text.find("k>4") != std::string::npos);
}
