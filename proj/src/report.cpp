#include "animst/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>

#include "animst/error.hpp"

namespace animst {
namespace {

constexpr std::string_view kColumns =
    "id\ttitle\tdegree\teigenvector\tbetweenness_raw\tbetweenness\tcloseness\ttotal";

std::string real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Tabs and newlines would break the row structure.
std::string cell(std::string_view s) {
  std::string out(s);
  std::replace_if(out.begin(), out.end(), [](char c) { return c == '\t' || c == '\n' || c == '\r'; },
                  ' ');
  return out;
}

void write_row(std::ostream& out, const Catalog& catalog, const CentralityReport& r,
               std::size_t v) {
  out << cell(catalog[v].id) << '\t' << cell(catalog[v].title) << '\t' << real(r.degree[v])
      << '\t' << real(r.eigen[v]) << '\t' << r.betweenness_raw[v] << '\t'
      << real(r.betweenness[v]) << '\t' << real(r.closeness[v]) << '\t' << real(r.total[v])
      << '\n';
}

void check_sizes(const Catalog& catalog, const CentralityReport& r) {
  if (r.total.size() != catalog.size())
    throw Error(ErrorKind::validation, "centrality report does not match catalog size");
}

std::string dot_quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + '"';
}

double parse_real(const std::string& field, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const double v = std::stod(field, &used);
    if (used == field.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::validation,
              "report line " + std::to_string(line_no) + ": bad number '" + field + "'");
}

}  // namespace

void write_centrality_report(std::ostream& out, const Catalog& catalog,
                             const CentralityReport& report) {
  check_sizes(catalog, report);
  std::vector<std::size_t> order(catalog.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return report.total[a] > report.total[b];
  });
  out << kReportTag << '\n' << kColumns << '\n';
  for (auto v : order) write_row(out, catalog, report, v);
}

void write_distributions(std::ostream& out, const Catalog& catalog,
                         const CentralityReport& report) {
  check_sizes(catalog, report);
  out << kDistributionTag << '\n' << kColumns << '\n';
  for (std::size_t v = 0; v < catalog.size(); ++v) write_row(out, catalog, report, v);
}

std::vector<ReportRow> read_centrality_report(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || (line != kReportTag && line != kDistributionTag))
    throw Error(ErrorKind::validation, "not a centrality report (missing version tag)");
  if (!std::getline(in, line) || line != kColumns)
    throw Error(ErrorKind::validation, "centrality report has an unexpected header");
  std::vector<ReportRow> rows;
  std::size_t line_no = 2;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::size_t start = 0;
    for (std::size_t tab; (tab = line.find('\t', start)) != std::string::npos; start = tab + 1)
      f.push_back(line.substr(start, tab - start));
    f.push_back(line.substr(start));
    if (f.size() != 8)
      throw Error(ErrorKind::validation, "report line " + std::to_string(line_no) +
                                             ": expected 8 columns, got " +
                                             std::to_string(f.size()));
    rows.push_back({f[0], f[1], parse_real(f[2], line_no), parse_real(f[3], line_no),
                    parse_real(f[4], line_no), parse_real(f[5], line_no),
                    parse_real(f[6], line_no), parse_real(f[7], line_no)});
  }
  return rows;
}

Measure parse_measure(std::string_view name) {
  if (name == "degree") return Measure::degree;
  if (name == "eigenvector") return Measure::eigenvector;
  if (name == "betweenness") return Measure::betweenness;
  if (name == "closeness") return Measure::closeness;
  if (name == "total") return Measure::total;
  throw Error(ErrorKind::usage, "unknown measure '" + std::string(name) +
                                    "' (expected degree, eigenvector, betweenness, "
                                    "closeness or total)");
}

double measure_value(const ReportRow& row, Measure measure) {
  switch (measure) {
    case Measure::degree: return row.degree;
    case Measure::eigenvector: return row.eigen;
    case Measure::betweenness: return row.betweenness;
    case Measure::closeness: return row.closeness;
    case Measure::total: return row.total;
  }
  return row.total;
}

std::vector<ReportRow> top_by(std::vector<ReportRow> rows, Measure measure, std::size_t n) {
  std::stable_sort(rows.begin(), rows.end(), [&](const ReportRow& a, const ReportRow& b) {
    return measure_value(a, measure) > measure_value(b, measure);
  });
  if (rows.size() > n) rows.resize(n);
  return rows;
}

void write_dot(std::ostream& out, const SpanningTree& tree, const Catalog& catalog,
               bool with_titles) {
  if (tree.size() != catalog.size())
    throw Error(ErrorKind::validation, "tree has " + std::to_string(tree.size()) +
                                           " vertices but the catalog has " +
                                           std::to_string(catalog.size()) + " records");
  out << "graph mst {\n";
  for (std::size_t v = 0; v < catalog.size(); ++v) {
    const auto& r = catalog[v];
    out << "  " << dot_quoted(r.id) << " [label=" << dot_quoted(with_titles ? r.title : r.id) << "];\n";
  }
  std::vector<WeightedEdge> edges(tree.edges().begin(), tree.edges().end());
  std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (const auto& e : edges) {
    const auto w = real(e.w);
    out << "  " << dot_quoted(catalog[e.u].id) << " -- " << dot_quoted(catalog[e.v].id) << " [len=" << w
        << ", weight=" << w << "];\n";
  }
  out << "}\n";
}

}  // namespace animst
