#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace linkq {

struct CurveSeries {
  std::string name;
  std::vector<std::pair<std::uint64_t, double>> points;  // (q, mean m')
};

/// Minimal line chart: linear axes, one polyline per series, legend. Output
/// depends only on the inputs.
void write_svg_chart(std::ostream& out, const std::vector<CurveSeries>& series, const std::string& title);

}  // namespace linkq
