#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>

#include "backbone/graph.hpp"

namespace bb {

/// Csv: header `source,target,weight`, comma separated, '.' decimal.
/// Whitespace: three whitespace separated columns, no header.
/// Auto picks Whitespace for a `.txt` extension and Csv otherwise.
enum class EdgeListFormat { Auto, Csv, Whitespace };

struct LoadOptions {
  EdgeListFormat format = EdgeListFormat::Auto;
  DuplicatePolicy duplicates = DuplicatePolicy::Error;
};

struct LoadResult {
  WeightedGraph graph;
  std::size_t self_loops_dropped = 0;
};

EdgeListFormat resolve_format(const std::filesystem::path& path, EdgeListFormat requested);

/// Throws ParseError (with 1-based line number) on malformed rows and
/// DataError for non-positive weights or duplicates under the Error policy.
LoadResult read_edge_list(std::istream& in, EdgeListFormat format, const LoadOptions& options = {});
LoadResult load_edge_list(const std::filesystem::path& path, const LoadOptions& options = {});

/// Rows in canonical key order; weights use the shortest representation that
/// parses back to the same double.
void write_edge_list(std::ostream& out, const WeightedGraph& g, EdgeListFormat format = EdgeListFormat::Csv);
void save_edge_list(const WeightedGraph& g, const std::filesystem::path& path,
                    EdgeListFormat format = EdgeListFormat::Auto);

/// Shortest round-trip decimal form of a double.
std::string format_double(double x);

}  // namespace bb
