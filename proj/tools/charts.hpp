#pragma once

#include <string>
#include <vector>

#include "backbone/compare.hpp"

namespace bb::cli {

struct Sample {
  std::string label;
  std::vector<double> values;
};

/// Radar chart: one axis per measure, one polygon per report row. Each axis
/// is scaled by the largest finite value on it.
std::string radar_svg(const ComparisonReport& report);

/// Line chart of every series against the sweep; NaN points break the line.
std::string progression_svg(const ProgressionSeries& series);

/// Scatter of empirical CDF points (x, F(x)) for each sample.
std::string distribution_svg(const std::vector<Sample>& samples, const std::string& x_label);

}  // namespace bb::cli
