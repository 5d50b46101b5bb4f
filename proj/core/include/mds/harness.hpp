#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mds/arboricity.hpp"
#include "mds/generators.hpp"
#include "mds/graph.hpp"
#include "mds/greedy.hpp"
#include "mds/hybrid.hpp"
#include "mds/ingest.hpp"
#include "mds/rounding.hpp"

namespace mds {

struct FileSource {
    std::string path;
    GraphFormat format = GraphFormat::EdgeList;
};

struct GraphSource {
    std::variant<FamilyParams, FileSource> source;
    std::string id;  // row label

    Graph load() const;
};

/// How the arboricity fed to rounding/hybrid thresholds is obtained.
struct ArboricitySource {
    enum class Kind { FamilyFormula, DensityLowerBound, UserValue };
    Kind kind = Kind::FamilyFormula;
    int user_value = 1;

    ArboricityEstimate resolve(const Graph& g, const GraphSource& src) const;
};

struct AlgorithmSpec {
    enum class Kind { Greedy, Round, Hybrid, Exact };
    Kind kind = Kind::Greedy;
    std::string label;
    TiePolicy tie = TiePolicy::MinId;
    RoundingVariant::Tag variant_tag = RoundingVariant::Tag::A1;  // Round/Hybrid
    double alpha = 0.5;                                           // Hybrid
    std::size_t max_n = 32;                                       // Exact
};

enum class LowerBoundMode { Lp1, Decomposition };
enum class OutputFormat { Csv, Markdown };

struct ExperimentSpec {
    std::vector<GraphSource> graphs;
    std::vector<AlgorithmSpec> algorithms;
    ArboricitySource arboricity;
    LowerBoundMode bound_mode = LowerBoundMode::Lp1;
    double prefix_fraction = 0.5;  // decomposition mode
    OutputFormat output = OutputFormat::Csv;
    std::uint64_t seed = 0;
};

struct AlgorithmCell {
    std::string name;
    std::size_t size = 0;
    double ratio = 0.0;
    double elapsed_seconds = 0.0;
    bool valid = false;
};

struct ReportRow {
    std::string graph_id;
    std::size_t n = 0, m = 0;
    std::string bound_label;  // "L*" or "max{M*,N*}"
    double bound = 0.0;
    std::string arboricity_note;
    std::vector<AlgorithmCell> cells;
};

struct ExperimentReport {
    std::vector<ReportRow> rows;
    void write_csv(std::ostream& out) const;
    void write_markdown(std::ostream& out) const;
};

/// Runs every algorithm on every graph, revalidates each output with
/// is_dominating (invalid output is a hard failure) and reports
/// size / lower-bound ratios.
ExperimentReport run_experiment(const ExperimentSpec& spec);

/// Ratio formatting used in reports: 2 decimals, half-up.
std::string format_ratio(double value);

/// Named benchmark suites mirroring the published tables.
ExperimentSpec suite_spec(const std::string& name, std::uint64_t seed);

/// Plain-text key=value config for `bench --config`.
ExperimentSpec parse_config(std::istream& in);

}  // namespace mds
