#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "animst/centrality.hpp"
#include "animst/dataset.hpp"
#include "animst/mst.hpp"

namespace animst {

// Centrality report: tab-separated text. The first line is the version tag
// "#animst-centrality-v1", the second the column header
//   id title degree eigenvector betweenness_raw betweenness closeness total
// then one row per vertex, sorted by descending total (ties by vertex
// index). Reals are written with 17 significant digits.
inline constexpr std::string_view kReportTag = "#animst-centrality-v1";
inline constexpr std::string_view kDistributionTag = "#animst-distributions-v1";

struct ReportRow {
  std::string id;
  std::string title;
  double degree = 0.0;
  double eigen = 0.0;
  double betweenness_raw = 0.0;
  double betweenness = 0.0;
  double closeness = 0.0;
  double total = 0.0;
};

void write_centrality_report(std::ostream& out, const Catalog& catalog,
                             const CentralityReport& report);
std::vector<ReportRow> read_centrality_report(std::istream& in);

/// Same columns as the report but unsorted (vertex index order), for
/// distribution plots.
void write_distributions(std::ostream& out, const Catalog& catalog,
                         const CentralityReport& report);

enum class Measure { degree, eigenvector, betweenness, closeness, total };

/// Parses degree|eigenvector|betweenness|closeness|total; usage error
/// otherwise.
Measure parse_measure(std::string_view name);
double measure_value(const ReportRow& row, Measure measure);

/// The top `n` rows by the chosen measure, descending; ties keep report
/// order.
std::vector<ReportRow> top_by(std::vector<ReportRow> rows, Measure measure,
                              std::size_t n);

/// Undirected DOT graph for neato: nodes in index order, then edges sorted
/// by (u, v), each with len and weight set to the fused distance.
void write_dot(std::ostream& out, const SpanningTree& tree,
               const Catalog& catalog, bool with_titles);

}  // namespace animst
