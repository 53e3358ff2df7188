#include "backbone/backbone.hpp"

#include <cmath>

#include "backbone/error.hpp"

namespace bb {

std::string_view to_string(Target t) { return t == Target::Edges ? "edges" : "nodes"; }

std::string_view to_string(Direction d) {
  return d == Direction::LowerIsStronger ? "lower_is_stronger" : "higher_is_stronger";
}

std::string_view to_string(FilterKind k) {
  switch (k) {
    case FilterKind::Boolean: return "boolean";
    case FilterKind::Threshold: return "threshold";
    case FilterKind::Fraction: return "fraction";
  }
  return "?";
}

FilterKind parse_filter_kind(std::string_view name) {
  if (name == "boolean") return FilterKind::Boolean;
  if (name == "threshold") return FilterKind::Threshold;
  if (name == "fraction") return FilterKind::Fraction;
  throw UsageError("unknown filter '" + std::string(name) + "' (expected boolean, threshold or fraction)");
}

Backbone::Backbone(WeightedGraph source, std::string method_name, Target target, std::string value_name,
                   Direction direction, std::vector<double> values, FilterSet compatible_filters)
    : source_(std::move(source)),
      method_name_(std::move(method_name)),
      target_(target),
      value_name_(std::move(value_name)),
      direction_(direction),
      values_(std::move(values)),
      compatible_(compatible_filters) {}

double Backbone::value(const EdgeKey& key) const {
  if (target_ != Target::Edges) throw UsageError("backbone '" + method_name_ + "' scores nodes, not edges");
  auto e = source_.find_edge(key.u, key.v);
  if (!e) throw UsageError("edge (" + key.u + ", " + key.v + ") is not in the graph");
  return values_.at(*e);
}

double Backbone::node_value(std::string_view label) const {
  if (target_ != Target::Nodes) throw UsageError("backbone '" + method_name_ + "' scores edges, not nodes");
  return values_.at(source_.index_of(label));
}

void Backbone::set_boolean_view(std::vector<std::uint8_t> mask) {
  const std::size_t expected = target_ == Target::Edges ? source_.edge_count() : source_.node_count();
  if (mask.size() != expected) throw MethodError("boolean view size mismatch for '" + method_name_ + "'");
  boolean_view_ = std::move(mask);
}

std::vector<std::uint8_t> Backbone::boolean_mask() const {
  if (boolean_view_) return *boolean_view_;
  std::vector<std::uint8_t> mask(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) mask[i] = values_[i] == 1.0 ? 1 : 0;
  return mask;
}

void Backbone::validate() const {
  const std::size_t expected = target_ == Target::Edges ? source_.edge_count() : source_.node_count();
  if (values_.size() != expected) {
    throw MethodError("method '" + method_name_ + "' produced " + std::to_string(values_.size()) +
                      " values for " + std::to_string(expected) + " " + std::string(to_string(target_)));
  }
  if (compatible_.empty()) throw MethodError("method '" + method_name_ + "' declares no compatible filter");
  for (double v : values_) {
    if (std::isnan(v)) throw MethodError("method '" + method_name_ + "' produced NaN");
    if (is_p_value() && (v < 0.0 || v > 1.0)) {
      throw MethodError("method '" + method_name_ + "' produced p-value outside [0,1]");
    }
  }
  const bool boolean_only = compatible_ == FilterSet{FilterKind::Boolean};
  if (boolean_only && !boolean_view_) {
    for (double v : values_) {
      if (v != 0.0 && v != 1.0) throw MethodError("method '" + method_name_ + "' boolean value not 0/1");
    }
  }
}

double MethodParams::get(std::string_view name, double fallback) const {
  auto it = values.find(name);
  return it == values.end() ? fallback : it->second;
}

}  // namespace bb
