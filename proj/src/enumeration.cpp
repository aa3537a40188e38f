#include "topo2d/enumeration.hpp"

#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "topo2d/simplicity.hpp"
#include "topo2d/topo_numbers.hpp"

namespace topo2d {
namespace {

constexpr std::array<Metric, 7> kAllMetrics{Metric::T4, Metric::T8, Metric::T4Complement,
                                            Metric::T8Complement, Metric::H, Metric::Y4,
                                            Metric::Y8};

using MaskPredicate = std::function<bool(NeighborhoodConfig)>;
using MaskMetric = std::function<int(NeighborhoodConfig)>;

std::string adjacency_suffix(Adjacency n) { return n == Adjacency::Four ? "_n4" : "_n8"; }

// Characterization `method` against the oracle table over all 256 masks.
IdentityCheck characterization_check(Adjacency n, Characterization method,
                                        const SimplicityLut& oracle) {
    IdentityCheck check;
    check.name = std::string(to_string(method)) + "_vs_oracle" + adjacency_suffix(n);
    check.statement = std::string(to_string(method)) + " classifies exactly the " +
                      std::to_string(to_int(n)) + "-simple configurations";
    const SimplicityLut lut = build_lut(n, method);
    for (NeighborhoodConfig c : all_configs()) {
        if (lut[c] != oracle[c]) check.counterexamples.push_back(c.mask);
    }
    check.passed = check.counterexamples.empty();
    return check;
}

// lhs(c) == rhs(c) everywhere except on masks satisfying `expected_exception`,
// where lhs must equal lhs_there and rhs must equal rhs_there.
IdentityCheck identity_check(std::string name, std::string statement, const MaskMetric& lhs,
                                const MaskMetric& rhs, const MaskPredicate& expected_exception,
                                int lhs_there, int rhs_there) {
    IdentityCheck check{std::move(name), std::move(statement), false, {}, {}};
    for (NeighborhoodConfig c : all_configs()) {
        const int l = lhs(c);
        const int r = rhs(c);
        const bool differs = l != r;
        if (differs) check.exceptions.push_back(c.mask);
        const bool expected = expected_exception(c);
        if (differs != expected || (expected && (l != lhs_there || r != rhs_there))) {
            check.counterexamples.push_back(c.mask);
        }
    }
    check.passed = check.counterexamples.empty();
    return check;
}

std::string join_masks(const std::vector<std::uint8_t>& masks) {
    std::ostringstream os;
    for (std::size_t i = 0; i < masks.size(); ++i) {
        if (i > 0) os << ' ';
        os << static_cast<int>(masks[i]);
    }
    return os.str();
}

}  // namespace

std::string_view metric_name(Metric m) {
    switch (m) {
        case Metric::T4: return "T4";
        case Metric::T8: return "T8";
        case Metric::T4Complement: return "T4_COMPLEMENT";
        case Metric::T8Complement: return "T8_COMPLEMENT";
        case Metric::H: return "H";
        case Metric::Y4: return "Y4";
        case Metric::Y8: return "Y8";
    }
    return "?";
}

std::optional<Metric> parse_metric(std::string_view name) {
    for (Metric m : kAllMetrics) {
        if (metric_name(m) == name) return m;
    }
    return std::nullopt;
}

int evaluate(Metric m, NeighborhoodConfig c) {
    switch (m) {
        case Metric::T4: return topological_number(c, Adjacency::Four);
        case Metric::T8: return topological_number(c, Adjacency::Eight);
        case Metric::T4Complement: return topological_number_complement(c, Adjacency::Four);
        case Metric::T8Complement: return topological_number_complement(c, Adjacency::Eight);
        case Metric::H: return hilditch(c);
        case Metric::Y4: return yokoi(c, Adjacency::Four);
        case Metric::Y8: return yokoi(c, Adjacency::Eight);
    }
    throw std::invalid_argument("unknown metric");
}

int MetricDistribution::at(int k) const {
    auto it = counts.find(k);
    return it == counts.end() ? 0 : it->second;
}

int MetricDistribution::total() const {
    int sum = 0;
    for (const auto& [k, v] : counts) sum += v;
    return sum;
}

MetricDistribution distribution(Metric m) {
    MetricDistribution d{m, {}};
    for (int k = 0; k <= 4; ++k) d.counts[k] = 0;
    for (NeighborhoodConfig c : all_configs()) ++d.counts[evaluate(m, c)];
    return d;
}

std::array<int, 5> reference_counts(Metric m) {
    switch (m) {
        case Metric::T4:
        case Metric::T4Complement: return {16, 117, 102, 20, 1};
        case Metric::T8:
        case Metric::T8Complement: return {1, 132, 102, 20, 1};
        case Metric::H:
        case Metric::Y4:
        case Metric::Y8: return {17, 116, 102, 20, 1};
    }
    throw std::invalid_argument("unknown metric");
}

bool EquivalenceReport::passed() const {
    for (const auto& c : checks) {
        if (!c.passed) return false;
    }
    return true;
}

const IdentityCheck* EquivalenceReport::find(std::string_view name) const {
    for (const auto& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

std::string EquivalenceReport::to_text() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.statement;
        if (!c.exceptions.empty()) os << " [exceptions: " << c.exceptions.size() << "]";
        os << '\n';
        if (!c.counterexamples.empty()) {
            os << "     counterexample masks: " << join_masks(c.counterexamples) << '\n';
        }
    }
    return os.str();
}

EquivalenceReport duality_check() {
    EquivalenceReport report;
    for (Adjacency n : {Adjacency::Four, Adjacency::Eight}) {
        const Metric object = n == Adjacency::Four ? Metric::T4 : Metric::T8;
        const Metric complement = n == Adjacency::Four ? Metric::T4Complement : Metric::T8Complement;
        const MetricDistribution a = distribution(object);
        const MetricDistribution b = distribution(complement);

        IdentityCheck hist;
        hist.name = "distribution_duality" + adjacency_suffix(n);
        hist.statement = std::string(metric_name(object)) + " and " +
                         std::string(metric_name(complement)) + " have equal histograms";
        hist.passed = a.counts == b.counts;
        report.checks.push_back(std::move(hist));

        IdentityCheck per_mask;
        per_mask.name = "complement_bijection" + adjacency_suffix(n);
        per_mask.statement = std::string(metric_name(complement)) + "(c) = " +
                             std::string(metric_name(object)) + "(~c) for every mask";
        for (NeighborhoodConfig c : all_configs()) {
            if (evaluate(complement, c) != evaluate(object, complement_config(c))) {
                per_mask.counterexamples.push_back(c.mask);
            }
        }
        per_mask.passed = per_mask.counterexamples.empty();
        report.checks.push_back(std::move(per_mask));
    }
    return report;
}

EquivalenceReport equivalence_report(int oracle_canvas) {
    EquivalenceReport report;
    for (Adjacency n : {Adjacency::Four, Adjacency::Eight}) {
        const SimplicityLut oracle = build_oracle_lut(n, oracle_canvas);

        IdentityCheck count;
        count.name = "simple_count" + adjacency_suffix(n);
        count.statement = "116 of 256 configurations are " + std::to_string(to_int(n)) + "-simple";
        count.passed = oracle.popcount() == 116;
        report.checks.push_back(std::move(count));

        report.checks.push_back(characterization_check(n, Characterization::TwoTopoNumbers, oracle));
        report.checks.push_back(
            characterization_check(n, Characterization::TopoNumberPlusInterior, oracle));
        if (n == Adjacency::Eight) {
            report.checks.push_back(characterization_check(n, Characterization::Hilditch, oracle));
        }
        report.checks.push_back(characterization_check(n, Characterization::Yokoi, oracle));
    }

    const MaskMetric t4 = [](NeighborhoodConfig c) { return topological_number(c, Adjacency::Four); };
    const MaskMetric t8 = [](NeighborhoodConfig c) { return topological_number(c, Adjacency::Eight); };
    const MaskMetric h = [](NeighborhoodConfig c) { return hilditch(c); };
    const MaskMetric y4 = [](NeighborhoodConfig c) { return yokoi(c, Adjacency::Four); };
    const MaskMetric y8 = [](NeighborhoodConfig c) { return yokoi(c, Adjacency::Eight); };
    const MaskPredicate interior4 = [](NeighborhoodConfig c) { return is_interior(c, Adjacency::Four); };
    const MaskPredicate interior8 = [](NeighborhoodConfig c) { return is_interior(c, Adjacency::Eight); };
    const MaskPredicate never = [](NeighborhoodConfig) { return false; };

    report.checks.push_back(identity_check(
        "hilditch_equals_t8", "H = T8 except on the 16 8-interior masks, where H = 0 and T8 = 1", h,
        t8, interior8, 0, 1));
    report.checks.push_back(
        identity_check("yokoi8_equals_hilditch", "Y8 = H on every mask", y8, h, never, 0, 0));
    report.checks.push_back(identity_check(
        "yokoi4_equals_t4", "Y4 = T4 except on mask 255, where Y4 = 0 and T4 = 1", y4, t4,
        interior4, 0, 1));
    report.checks.push_back(identity_check(
        "yokoi8_equals_t8", "Y8 = T8 except on the 16 8-interior masks, where Y8 = 0 and T8 = 1",
        y8, t8, interior8, 0, 1));
    return report;
}

std::string DeletabilityRate::percent_text() const {
    std::ostringstream os;
    os << percent_hundredths / 100 << '.' << std::setw(2) << std::setfill('0')
       << percent_hundredths % 100;
    return os.str();
}

DeletabilityRate make_rate(int count, int total) {
    if (total <= 0 || count < 0) throw std::invalid_argument("make_rate: bad fraction");
    // round(count * 10000 / total) with ties going up
    const long long scaled = 2LL * count * 10000 + total;
    return {count, total, static_cast<int>(scaled / (2LL * total))};
}

DeletabilityRate deletability_rate(Adjacency n) {
    return make_rate(static_cast<int>(build_oracle_lut(n, 5).popcount()), 256);
}

DeletabilityRate non_simple_rate(Adjacency n) {
    return make_rate(256 - static_cast<int>(build_oracle_lut(n, 5).popcount()), 256);
}

const std::vector<CountTable>& count_tables() {
    static const std::vector<CountTable> tables{
        {"topological_numbers", "Topological numbers of the object and its complement",
         {Metric::T4, Metric::T8, Metric::T8Complement, Metric::T4Complement}},
        {"hilditch", "Hilditch crossing number vs T8", {Metric::H, Metric::T8}},
        {"yokoi", "Yokoi numbers vs topological numbers",
         {Metric::Y4, Metric::T4, Metric::Y8, Metric::T8}},
    };
    return tables;
}

std::string format_table_text(const CountTable& table) {
    std::ostringstream os;
    os << table.title << '\n';
    os << std::left << std::setw(15) << "metric";
    for (int k = 0; k <= 4; ++k) os << std::right << std::setw(7) << ("k=" + std::to_string(k));
    os << std::right << std::setw(7) << "k>4" << '\n';
    for (Metric m : table.metrics) {
        const MetricDistribution d = distribution(m);
        int above = 0;
        for (const auto& [k, v] : d.counts) {
            if (k > 4) above += v;
        }
        os << std::left << std::setw(15) << metric_name(m);
        for (int k = 0; k <= 4; ++k) os << std::right << std::setw(7) << d.at(k);
        os << std::right << std::setw(7) << above << '\n';
    }
    return os.str();
}

std::string format_table_csv(const CountTable& table) {
    std::ostringstream os;
    os << "metric,k,count\n";
    for (Metric m : table.metrics) {
        for (const auto& [k, v] : distribution(m).counts) {
            os << metric_name(m) << ',' << k << ',' << v << '\n';
        }
    }
    return os.str();
}

std::vector<std::string> table_deviations(const CountTable& table) {
    std::vector<std::string> out;
    for (Metric m : table.metrics) {
        const MetricDistribution d = distribution(m);
        const auto expected = reference_counts(m);
        for (const auto& [k, v] : d.counts) {
            const int want = k <= 4 ? expected[static_cast<std::size_t>(k)] : 0;
            if (v != want) {
                out.push_back(std::string(metric_name(m)) + " k=" + std::to_string(k) + ": got " +
                              std::to_string(v) + ", expected " + std::to_string(want));
            }
        }
    }
    return out;
}

}  // namespace topo2d
