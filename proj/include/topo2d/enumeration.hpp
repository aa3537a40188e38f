#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "topo2d/grid.hpp"

namespace topo2d {

enum class Metric { T4, T8, T4Complement, T8Complement, H, Y4, Y8 };

/// CSV/report name: T4, T8, T4_COMPLEMENT, T8_COMPLEMENT, H, Y4, Y8.
std::string_view metric_name(Metric m);
std::optional<Metric> parse_metric(std::string_view name);

int evaluate(Metric m, NeighborhoodConfig c);

struct MetricDistribution {
    Metric metric = Metric::T4;
    std::map<int, int> counts;  // k -> number of masks; k = 0..4 always present

    int at(int k) const;
    int total() const;
    friend bool operator==(const MetricDistribution&, const MetricDistribution&) = default;
};

MetricDistribution distribution(Metric m);

/// Published counts for k = 0..4 of every metric over the 256 configurations.
std::array<int, 5> reference_counts(Metric m);

/// One exhaustively checked statement. `exceptions` lists the masks where an
/// identity is expected not to hold; `counterexamples` lists the masks where
/// the statement actually failed and must be empty for a pass.
struct IdentityCheck {
    std::string name;
    std::string statement;
    bool passed = false;
    std::vector<std::uint8_t> counterexamples;
    std::vector<std::uint8_t> exceptions;
};

struct EquivalenceReport {
    std::vector<IdentityCheck> checks;

    bool passed() const;
    const IdentityCheck* find(std::string_view name) const;
    std::string to_text() const;
};

/// Object and complement topological numbers have the same distribution,
/// and the complement number of c equals the object number of ~c.
EquivalenceReport duality_check();

/// Every local characterization against the oracle (evaluated on an
/// `oracle_canvas` canvas) plus the metric identities and their exception sets.
EquivalenceReport equivalence_report(int oracle_canvas = 5);

struct DeletabilityRate {
    int count = 0;
    int total = 256;
    int percent_hundredths = 0;  // rounded half-up

    double percent() const { return percent_hundredths / 100.0; }
    std::string percent_text() const;  // e.g. "45.31"
};

/// Simple configurations out of 256 for adjacency n.
DeletabilityRate deletability_rate(Adjacency n);

/// Non-simple configurations out of 256 for adjacency n.
DeletabilityRate non_simple_rate(Adjacency n);

DeletabilityRate make_rate(int count, int total);

/// A group of distributions reported together.
struct CountTable {
    std::string name;
    std::string title;
    std::vector<Metric> metrics;
};

/// The three count tables: topological numbers, Hilditch, Yokoi.
const std::vector<CountTable>& count_tables();

/// Aligned text with one row per metric and columns k=0..4, k>4.
std::string format_table_text(const CountTable& table);

/// Header `metric,k,count`, metric-major in table order then k ascending.
std::string format_table_csv(const CountTable& table);

/// Every k whose count differs from the published table, per metric.
std::vector<std::string> table_deviations(const CountTable& table);

}  // namespace topo2d
