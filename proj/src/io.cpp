#include "io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace socnet {

namespace {

constexpr double kObjectiveEps = 1e-9;

std::vector<std::string> split_tokens(const std::string& line) {
    std::string normalized = line;
    std::replace(normalized.begin(), normalized.end(), ',', ' ');
    std::istringstream iss(normalized);
    std::vector<std::string> tokens;
    std::string tok;
    while (iss >> tok) tokens.push_back(tok);
    return tokens;
}

} // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

LoadResult load_edge_list(std::istream& in) {
    LoadResult out;
    std::unordered_map<std::string, NodeId> id_of;
    auto intern = [&](const std::string& label) {
        auto it = id_of.find(label);
        if (it != id_of.end()) return it->second;
        NodeId id = out.graph.add_node(0);
        id_of.emplace(label, id);
        out.labels.push_back(label);
        return id;
    };

    std::string line;
    uint64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#') {
            // writer header: "# nodes N" pre-creates dense integer labels
            auto tokens = split_tokens(line.substr(first + 1));
            if (tokens.size() == 2 && tokens[0] == "nodes") {
                uint64_t n = std::strtoull(tokens[1].c_str(), nullptr, 10);
                for (uint64_t i = out.graph.node_count(); i < n; ++i)
                    intern(std::to_string(i));
            }
            continue;
        }
        auto tokens = split_tokens(line);
        if (tokens.size() != 2)
            throw ParseError(line_no, "expected two labels, got " +
                                          std::to_string(tokens.size()));
        NodeId src = intern(tokens[0]);
        NodeId dst = intern(tokens[1]);
        if (src == dst) {
            ++out.self_loops_dropped;
        } else if (!out.graph.add_edge(src, dst)) {
            ++out.duplicates_dropped;
        }
    }
    return out;
}

LoadResult load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list: " + path);
    return load_edge_list(in);
}

void write_edge_list(const DirectedGraph& g, std::ostream& out) {
    out << "# nodes " << g.node_count() << '\n';
    for (NodeId v = 0; v < g.node_count(); ++v) {
        auto nbrs = g.neighbors_out(v);
        std::vector<NodeId> sorted(nbrs.begin(), nbrs.end());
        std::sort(sorted.begin(), sorted.end());
        for (NodeId w : sorted) out << v << ' ' << w << '\n';
    }
}

void write_edge_list(const DirectedGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_edge_list(g, out);
    if (!out) throw std::runtime_error("write failed: " + path);
}

ComparisonReport compare(const MetricsReport& left, const MetricsReport& right,
                         const std::array<double, 6>& weights) {
    if (!(left.settings == right.settings))
        throw std::invalid_argument("metric settings mismatch between reports");

    auto row = [](const char* name, double l, double r) {
        MetricDelta d;
        d.name = name;
        d.left = l;
        d.right = r;
        d.abs_delta = std::abs(l - r);
        d.rel_delta = d.abs_delta / std::max(std::abs(l), kObjectiveEps);
        return d;
    };

    ComparisonReport out;
    out.rows[0] = row("nodes", static_cast<double>(left.nodes), static_cast<double>(right.nodes));
    out.rows[1] = row("edges", static_cast<double>(left.edges), static_cast<double>(right.edges));
    out.rows[2] = row("avg_degree", left.avg_degree, right.avg_degree);
    out.rows[3] = row("diameter", static_cast<double>(left.diameter), static_cast<double>(right.diameter));
    out.rows[4] = row("avg_path_length", left.avg_path_length, right.avg_path_length);
    out.rows[5] = row("modularity", left.modularity, right.modularity);
    for (size_t i = 0; i < out.rows.size(); ++i)
        out.objective += weights[i] * out.rows[i].rel_delta;
    return out;
}

namespace {

std::vector<LogLogPoint> binned_points(std::vector<std::pair<double, double>> samples,
                                       uint32_t bins) {
    std::vector<LogLogPoint> out;
    if (samples.empty()) return out;
    std::sort(samples.begin(), samples.end());
    if (bins == 0) {
        for (auto [v, c] : samples) out.push_back({v, c});
        return out;
    }
    double lo = samples.front().first;
    double hi = samples.back().first;
    if (lo == hi) {
        double total = 0.0;
        for (auto [v, c] : samples) total += c;
        out.push_back({lo, total});
        return out;
    }
    double log_lo = std::log(lo);
    double step = (std::log(hi) - log_lo) / bins;
    for (uint32_t b = 0; b < bins; ++b) {
        double left = std::exp(log_lo + b * step);
        double right = std::exp(log_lo + (b + 1) * step);
        double count = 0.0;
        for (auto [v, c] : samples) {
            bool in_bin = b + 1 == bins ? (v >= left && v <= right)
                                        : (v >= left && v < right);
            if (in_bin) count += c;
        }
        if (count > 0.0)
            out.push_back({std::sqrt(left * right), count / (right - left)});
    }
    return out;
}

} // namespace

std::vector<LogLogPoint> export_loglog(const DegreeHistogram& hist, uint32_t bins) {
    std::vector<std::pair<double, double>> samples;
    for (auto [degree, count] : hist)
        if (degree > 0 && count > 0)
            samples.emplace_back(static_cast<double>(degree),
                                 static_cast<double>(count));
    return binned_points(std::move(samples), bins);
}

std::vector<LogLogPoint> export_loglog(std::span<const double> values, uint32_t bins) {
    std::map<double, double> counts;
    for (double v : values)
        if (v > 0.0) counts[v] += 1.0;
    std::vector<std::pair<double, double>> samples(counts.begin(), counts.end());
    return binned_points(std::move(samples), bins);
}

void write_points_csv(std::span<const LogLogPoint> points, std::ostream& out) {
    out << "value,density\n";
    for (const auto& p : points)
        out << format_double(p.value) << ',' << format_double(p.density) << '\n';
}

void write_metrics_report(const MetricsReport& r, std::ostream& out) {
    out << "nodes = " << r.nodes << '\n';
    out << "edges = " << r.edges << '\n';
    out << "avg_degree = " << format_double(r.avg_degree) << '\n';
    out << "diameter = " << r.diameter << '\n';
    out << "avg_path_length = " << format_double(r.avg_path_length) << '\n';
    if (r.modularity_defined)
        out << "modularity = " << format_double(r.modularity) << '\n';
    else
        out << "modularity = undefined\n";
    out << "paths_sampled = " << (r.paths_sampled ? "true" : "false") << '\n';
    out << "betweenness_sampled = " << (r.betweenness_sampled ? "true" : "false") << '\n';
    out << "closeness_sampled = " << (r.closeness_sampled ? "true" : "false") << '\n';
    out << "eigen_converged = " << (r.eigen_converged ? "true" : "false") << '\n';
}

void write_comparison_report(const ComparisonReport& r, std::ostream& out) {
    out << "metric,left,right,abs_delta,rel_delta\n";
    for (const auto& row : r.rows) {
        out << row.name << ',' << format_double(row.left) << ','
            << format_double(row.right) << ',' << format_double(row.abs_delta)
            << ',' << format_double(row.rel_delta) << '\n';
    }
    out << "objective = " << format_double(r.objective) << '\n';
}

void write_centrality_csv(std::span<const double> scores, std::ostream& out) {
    out << "node,score\n";
    for (size_t i = 0; i < scores.size(); ++i)
        out << i << ',' << format_double(scores[i]) << '\n';
}

} // namespace socnet
