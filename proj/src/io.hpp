#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "metrics.hpp"

namespace socnet {

struct ParseError : std::runtime_error {
    uint64_t line;
    ParseError(uint64_t line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
          line(line_no) {}
};

struct LoadResult {
    DirectedGraph graph;
    std::vector<std::string> labels; // dense id -> original label
    uint64_t duplicates_dropped = 0;
    uint64_t self_loops_dropped = 0;
};

// Edge-list format: one "src dst" per line, whitespace- or comma-separated
// labels, `#` comment lines ignored. A `# nodes N` header (written by
// write_edge_list) pre-creates N nodes so isolated nodes round-trip.
LoadResult load_edge_list(std::istream& in);
LoadResult load_edge_list(const std::string& path);

// Sorted by (src, dst); byte-stable for identical graphs.
void write_edge_list(const DirectedGraph& g, std::ostream& out);
void write_edge_list(const DirectedGraph& g, const std::string& path);

struct MetricDelta {
    std::string name;
    double left = 0.0;
    double right = 0.0;
    double abs_delta = 0.0;
    double rel_delta = 0.0; // |l-r| / max(|l|, eps)
};

struct ComparisonReport {
    std::array<MetricDelta, 6> rows; // nodes, edges, avg_degree, diameter, apl, modularity
    double objective = 0.0;
};

// Weighted normalized L1 distance over the summary metric vector. Both
// reports must have been computed with identical metric settings.
ComparisonReport compare(const MetricsReport& left, const MetricsReport& right,
                         const std::array<double, 6>& weights = {1, 1, 1, 1, 1, 1});

struct LogLogPoint {
    double value = 0.0;
    double density = 0.0;
};

// Drops zero values; bins == 0 emits raw (value, count) points, otherwise
// logarithmically binned density points (count / bin width at the bin's
// geometric midpoint).
std::vector<LogLogPoint> export_loglog(const DegreeHistogram& hist, uint32_t bins = 0);
std::vector<LogLogPoint> export_loglog(std::span<const double> values, uint32_t bins = 0);

void write_points_csv(std::span<const LogLogPoint> points, std::ostream& out);

// Flat key = value report; floats printed with 6 significant digits.
void write_metrics_report(const MetricsReport& r, std::ostream& out);
void write_comparison_report(const ComparisonReport& r, std::ostream& out);
void write_centrality_csv(std::span<const double> scores, std::ostream& out);

std::string format_double(double v); // %.6g

} // namespace socnet
