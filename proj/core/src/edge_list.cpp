#include "backbone/edge_list.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "backbone/error.hpp"

namespace bb {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_number(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double x = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return x;
}

// RFC-4180 style split: fields may be wrapped in double quotes, "" escapes a quote.
std::vector<std::string> split_csv(std::string_view line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(c);
      }
    } else if (c == '"' && trim(cur).empty()) {
      cur.clear();
      quoted = true;
      was_quoted = true;
    } else if (c == ',') {
      fields.push_back(was_quoted ? cur : std::string(trim(cur)));
      cur.clear();
      was_quoted = false;
    } else {
      cur.push_back(c);
    }
  }
  if (quoted) throw ParseError(line_no, "unterminated quoted field");
  fields.push_back(was_quoted ? cur : std::string(trim(cur)));
  return fields;
}

std::vector<std::string> split_whitespace(std::string_view line) {
  std::vector<std::string> fields;
  std::istringstream is{std::string(line)};
  std::string tok;
  while (is >> tok) fields.push_back(tok);
  return fields;
}

bool needs_quotes(std::string_view s) {
  return s.find_first_of(",\"\n\r") != std::string_view::npos || s != trim(s);
}

void write_csv_field(std::ostream& out, std::string_view s) {
  if (!needs_quotes(s)) {
    out << s;
    return;
  }
  out << '"';
  for (char c : s) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

}  // namespace

std::string format_double(double x) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc()) throw Error("cannot format number");
  return std::string(buf.data(), ptr);
}

EdgeListFormat resolve_format(const std::filesystem::path& path, EdgeListFormat requested) {
  if (requested != EdgeListFormat::Auto) return requested;
  return path.extension() == ".txt" ? EdgeListFormat::Whitespace : EdgeListFormat::Csv;
}

LoadResult read_edge_list(std::istream& in, EdgeListFormat format, const LoadOptions& options) {
  if (format == EdgeListFormat::Auto) format = EdgeListFormat::Csv;
  GraphBuilder builder(options.duplicates);
  std::string line;
  std::size_t line_no = 0;
  bool seen_first = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (line_no == 1 && view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
    if (view.empty() || view.front() == '#') continue;

    auto fields = format == EdgeListFormat::Csv ? split_csv(view, line_no) : split_whitespace(view);
    if (fields.size() != 3) {
      throw ParseError(line_no, "expected 3 columns (source, target, weight), found " +
                                    std::to_string(fields.size()));
    }
    auto weight = parse_number(fields[2]);
    if (!seen_first) {
      seen_first = true;
      if (!weight && format == EdgeListFormat::Csv) continue;  // header row
    }
    if (!weight) throw ParseError(line_no, "weight '" + fields[2] + "' is not a number");
    if (fields[0].empty() || fields[1].empty()) throw ParseError(line_no, "empty node label");
    if (!(*weight > 0.0) || !std::isfinite(*weight)) {
      throw ParseError(line_no, "weight must be positive and finite, got '" + fields[2] + "'");
    }
    try {
      builder.add_edge(fields[0], fields[1], *weight);
    } catch (const ParseError&) {
      throw;
    } catch (const DataError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return LoadResult{builder.build(), builder.self_loops_dropped()};
}

LoadResult load_edge_list(const std::filesystem::path& path, const LoadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  return read_edge_list(in, resolve_format(path, options.format), options);
}

void write_edge_list(std::ostream& out, const WeightedGraph& g, EdgeListFormat format) {
  if (format == EdgeListFormat::Whitespace) {
    for (const Edge& e : g.edges()) {
      const auto& u = g.label(e.u);
      const auto& v = g.label(e.v);
      if (u.find_first_of(" \t") != std::string::npos || v.find_first_of(" \t") != std::string::npos) {
        throw DataError("label with whitespace cannot be written in whitespace format");
      }
      out << u << ' ' << v << ' ' << format_double(e.weight) << '\n';
    }
    return;
  }
  out << "source,target,weight\n";
  for (const Edge& e : g.edges()) {
    write_csv_field(out, g.label(e.u));
    out << ',';
    write_csv_field(out, g.label(e.v));
    out << ',' << format_double(e.weight) << '\n';
  }
}

void save_edge_list(const WeightedGraph& g, const std::filesystem::path& path, EdgeListFormat format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  write_edge_list(out, g, resolve_format(path, format));
  out.flush();
  if (!out) throw DataError("write failed for '" + path.string() + "'");
}

}  // namespace bb
