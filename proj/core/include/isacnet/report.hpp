#pragma once

#include <string>
#include <vector>

#include "isacnet/netmodel.hpp"
#include "isacnet/regioncore.hpp"

namespace isacnet {

struct RegionRow {
  double target_sensing = 0.0;
  double max_throughput = 0.0;
};

/// Boundary summary ready for rendering: headline scalars plus evenly
/// spaced boundary samples (segment endpoints always included).
struct RegionTable {
  std::string name;
  double max_throughput = 0.0;      // f*
  double max_sensing = 0.0;         // s*
  double free_communication = 0.0;  // f~
  double free_sensing = 0.0;        // s~
  std::vector<RegionRow> rows;
  RegionBoundary boundary;
};

RegionTable build_region_table(const std::string& name, const ValidatedNetwork& net,
                               int sample_count, double free_sensing_delta);

/// CSV with header `target_sensing,max_throughput`, one row per
/// sample, values printed with up to 12 significant digits. Parsing
/// the output and serializing again reproduces it byte for byte.
std::string to_csv(const std::vector<RegionRow>& rows);
std::vector<RegionRow> parse_csv(const std::string& text);

/// Standalone SVG picture of the region: filled area under the
/// boundary, axes with tick labels, marked corner points.
std::string region_svg(const RegionTable& table, int width = 640, int height = 480);

/// Human-readable per-segment listing (range, slope, matched k).
std::string segment_report(const RegionBoundary& boundary);

}  // namespace isacnet
