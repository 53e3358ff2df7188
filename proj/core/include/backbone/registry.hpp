#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "backbone/backbone.hpp"
#include "backbone/graph.hpp"

namespace bb {

enum class Category { Statistical, Structural, Hybrid };
enum class Scope { Local, Global, LocalAndGlobal };

std::string_view to_string(Category c);
std::string_view to_string(Scope s);

/// Descriptive metadata for a scoring method: its family, which networks it
/// applies to, what it filters (edges or nodes) and at what scope, the
/// parameter names it exposes, and the filters it accepts.
struct MethodInfo {
  std::string name;
  std::string title;
  Category category = Category::Structural;
  bool weighted = true;
  bool unweighted = false;
  Target filter_type = Target::Edges;
  Scope scope = Scope::Global;
  std::vector<std::string> parameters;
  FilterSet filters;
};

using ScoringFunction = std::function<Backbone(const WeightedGraph&, const MethodParams&)>;
/// Maps (original, filtered backbone) to a number.
using MeasureFunction = std::function<double(const WeightedGraph&, const WeightedGraph&)>;

struct MethodEntry {
  MethodInfo info;
  ScoringFunction score;
};

struct MeasureEntry {
  std::string name;
  MeasureFunction compute;
};

/// Named scoring methods and evaluation measures, iterated in registration
/// order. Registration is a setup step; lookups are safe to share across
/// threads afterwards.
class Registry {
 public:
  /// Empty registry.
  Registry() = default;

  /// Registry preloaded with every built-in method and measure.
  static Registry with_builtins();
  /// Shared read-only instance of with_builtins().
  static const Registry& builtin();

  /// Throws UsageError for an empty or duplicate name or a missing function.
  void register_method(MethodInfo info, ScoringFunction score);
  void register_measure(std::string name, MeasureFunction compute);

  bool has_method(std::string_view name) const;
  bool has_measure(std::string_view name) const;

  /// Throws UsageError listing the known names.
  const MethodEntry& method(std::string_view name) const;
  const MeasureEntry& measure(std::string_view name) const;

  std::vector<std::string> method_names() const;
  std::vector<std::string> measure_names() const;

  /// Scores g with the named method and checks the result: the Backbone
  /// must satisfy its invariants and agree with the registered metadata
  /// (target, filters). Violations raise MethodError.
  Backbone run(std::string_view name, const WeightedGraph& g, const MethodParams& params = {}) const;

 private:
  std::vector<MethodEntry> methods_;
  std::vector<MeasureEntry> measures_;
  std::map<std::string, std::size_t, std::less<>> method_index_;
  std::map<std::string, std::size_t, std::less<>> measure_index_;
};

}  // namespace bb
