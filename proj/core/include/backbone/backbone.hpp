#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "backbone/graph.hpp"

namespace bb {

enum class Target { Edges, Nodes };
enum class Direction { LowerIsStronger, HigherIsStronger };
enum class FilterKind { Boolean, Threshold, Fraction };

std::string_view to_string(Target t);
std::string_view to_string(Direction d);
std::string_view to_string(FilterKind k);
/// Accepts "boolean", "threshold", "fraction".
FilterKind parse_filter_kind(std::string_view name);

/// Small set of filter kinds.
class FilterSet {
 public:
  constexpr FilterSet() = default;
  constexpr FilterSet(std::initializer_list<FilterKind> kinds) {
    for (FilterKind k : kinds) bits_ |= bit(k);
  }

  constexpr bool contains(FilterKind k) const { return (bits_ & bit(k)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  friend constexpr bool operator==(FilterSet, FilterSet) = default;

 private:
  static constexpr std::uint8_t bit(FilterKind k) { return static_cast<std::uint8_t>(1u << static_cast<unsigned>(k)); }
  std::uint8_t bits_ = 0;
};

/// Values attached by a scoring method to every edge (or every node) of a
/// source graph. Values are indexed like the source's edges or nodes.
///
/// A method may also attach a boolean view, the substructure the boolean
/// filter extracts, when it differs from "value == 1" (for instance a score
/// cutoff, or a prefix rule over sorted scores).
class Backbone {
 public:
  Backbone(WeightedGraph source, std::string method_name, Target target, std::string value_name,
           Direction direction, std::vector<double> values, FilterSet compatible_filters);

  const WeightedGraph& source() const noexcept { return source_; }
  const std::string& method_name() const noexcept { return method_name_; }
  Target target() const noexcept { return target_; }
  const std::string& value_name() const noexcept { return value_name_; }
  Direction direction() const noexcept { return direction_; }
  const std::vector<double>& values() const noexcept { return values_; }
  FilterSet compatible_filters() const noexcept { return compatible_; }

  bool is_p_value() const noexcept { return direction_ == Direction::LowerIsStronger; }

  double value(EdgeIndex e) const { return values_.at(e); }
  double value(const EdgeKey& key) const;
  double node_value(std::string_view label) const;

  void set_boolean_view(std::vector<std::uint8_t> mask);
  /// Boolean view if one was attached, otherwise values equal to 1.0.
  std::vector<std::uint8_t> boolean_mask() const;
  bool has_boolean_view() const noexcept { return boolean_view_.has_value(); }

  void add_warning(std::string message) { warnings_.push_back(std::move(message)); }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  void rename(std::string method_name) { method_name_ = std::move(method_name); }

  /// Throws MethodError when the value vector does not cover the target
  /// items, p-values leave [0,1], or boolean values are not exactly 0/1.
  void validate() const;

 private:
  WeightedGraph source_;
  std::string method_name_;
  Target target_;
  std::string value_name_;
  Direction direction_;
  std::vector<double> values_;
  FilterSet compatible_;
  std::optional<std::vector<std::uint8_t>> boolean_view_;
  std::vector<std::string> warnings_;
};

/// Value name used by boolean substructure extractors.
inline constexpr std::string_view kBooleanValue = "in_backbone";

/// Free-form numeric method parameters, plus the shared switches every
/// method may consult.
struct MethodParams {
  std::map<std::string, double, std::less<>> values;
  bool round_weights = false;
  std::uint64_t seed = 0;

  double get(std::string_view name, double fallback) const;
  bool has(std::string_view name) const { return values.find(name) != values.end(); }
};

}  // namespace bb
