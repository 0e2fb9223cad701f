#include "isacnet/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

namespace isacnet {
namespace {

// Up to 12 significant digits, no trailing zero padding.
std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double parse_number(const std::string& token, int line) {
  std::size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &consumed);
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line) + ": not a number: \"" + token + "\"");
  }
  if (consumed != token.size()) {
    throw ParseError("line " + std::to_string(line) + ": trailing characters in \"" + token +
                     "\"");
  }
  return value;
}

}  // namespace

RegionTable build_region_table(const std::string& name, const ValidatedNetwork& net,
                               int sample_count, double free_sensing_delta) {
  if (sample_count == 1 || sample_count < 0) {
    throw ValidationError("sample count must be 0 (adaptive) or at least 2");
  }

  RegionTable table;
  table.name = name;
  table.boundary = trace_region(net);
  table.max_throughput = table.boundary.max_throughput;
  table.max_sensing = table.boundary.max_sensing;
  table.free_communication = table.boundary.free_communication;

  if (table.max_sensing > 0.0) {
    const double delta =
        free_sensing_delta > 0.0 ? free_sensing_delta : 1e-4 * table.max_sensing;
    table.free_sensing = approx_free_sensing(net, delta).value;
  }

  if (table.max_sensing <= 0.0) {
    table.rows.push_back({0.0, table.max_throughput});
  } else if (sample_count == 0) {
    // Adaptive: the traced corner points, re-ordered by sensing.
    for (auto it = table.boundary.breakpoints.rbegin(); it != table.boundary.breakpoints.rend();
         ++it) {
      table.rows.push_back({it->sensing, it->throughput});
    }
  } else {
    for (int i = 0; i < sample_count; ++i) {
      const double target = table.max_sensing * i / (sample_count - 1);
      table.rows.push_back({target, max_throughput_at_sensing(net, target).value});
    }
  }
  return table;
}

std::string to_csv(const std::vector<RegionRow>& rows) {
  std::string out = "target_sensing,max_throughput\n";
  for (const RegionRow& row : rows) {
    out += format_value(row.target_sensing);
    out += ',';
    out += format_value(row.max_throughput);
    out += '\n';
  }
  return out;
}

std::vector<RegionRow> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_number = 0;
  std::vector<RegionRow> rows;
  if (text.empty()) {
    throw ParseError("line 1: expected header \"target_sensing,max_throughput\"");
  }
  while (std::getline(in, line)) {
    ++line_number;
    if (line_number == 1) {
      if (line != "target_sensing,max_throughput") {
        throw ParseError("line 1: expected header \"target_sensing,max_throughput\"");
      }
      continue;
    }
    if (line.empty()) continue;
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos) {
      throw ParseError("line " + std::to_string(line_number) +
                       ": expected two comma-separated values");
    }
    RegionRow row;
    row.target_sensing = parse_number(line.substr(0, comma), line_number);
    row.max_throughput = parse_number(line.substr(comma + 1), line_number);
    rows.push_back(row);
  }
  return rows;
}

std::string region_svg(const RegionTable& table, int width, int height) {
  const double margin = 56.0;
  const double span_s = std::max(table.max_sensing, 1e-9);
  const double span_f = std::max(table.max_throughput, 1e-9);
  const double plot_w = width - 2 * margin;
  const double plot_h = height - 2 * margin;

  auto x_of = [&](double s) { return margin + plot_w * (s / span_s); };
  auto y_of = [&](double f) { return height - margin - plot_h * (f / span_f); };

  // Boundary polyline runs from the max-sensing corner to the
  // max-throughput corner; prepend the region's outline for the fill.
  std::vector<SensingThroughputPoint> outline = table.boundary.breakpoints;
  if (outline.empty()) outline.push_back({0.0, table.max_throughput});

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  svg << "  <rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

  // Filled region: boundary plus the two axis legs back to the origin.
  svg << "  <polygon fill=\"#cfe3f5\" stroke=\"none\" points=\"";
  svg << x_of(0.0) << ',' << y_of(0.0) << ' ';
  for (auto it = outline.rbegin(); it != outline.rend(); ++it) {
    svg << x_of(it->sensing) << ',' << y_of(it->throughput) << ' ';
  }
  svg << x_of(outline.front().sensing) << ',' << y_of(0.0);
  svg << "\"/>\n";

  // Axes with end labels.
  svg << "  <line x1=\"" << margin << "\" y1=\"" << (height - margin) << "\" x2=\""
      << (width - margin) << "\" y2=\"" << (height - margin)
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg << "  <line x1=\"" << margin << "\" y1=\"" << (height - margin) << "\" x2=\"" << margin
      << "\" y2=\"" << margin << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg << "  <text x=\"" << (width / 2.0) << "\" y=\"" << (height - margin / 3.0)
      << "\" text-anchor=\"middle\" font-size=\"13\">sensing</text>\n";
  svg << "  <text x=\"" << (margin / 3.0) << "\" y=\"" << (height / 2.0)
      << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 " << (margin / 3.0)
      << ' ' << (height / 2.0) << ")\">throughput</text>\n";
  svg << "  <text x=\"" << x_of(span_s) << "\" y=\"" << (height - margin + 16)
      << "\" text-anchor=\"middle\" font-size=\"11\">" << format_value(table.max_sensing)
      << "</text>\n";
  svg << "  <text x=\"" << (margin - 8) << "\" y=\"" << (y_of(span_f) + 4)
      << "\" text-anchor=\"end\" font-size=\"11\">" << format_value(table.max_throughput)
      << "</text>\n";
  svg << "  <text x=\"" << (margin - 8) << "\" y=\"" << (y_of(0.0) + 4)
      << "\" text-anchor=\"end\" font-size=\"11\">0</text>\n";

  // One polyline for the boundary itself.
  svg << "  <polyline fill=\"none\" stroke=\"#1f4e8c\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < outline.size(); ++i) {
    if (i) svg << ' ';
    svg << x_of(outline[i].sensing) << ',' << y_of(outline[i].throughput);
  }
  svg << "\"/>\n";

  // Corner markers: Z at the max-sensing end, X at the max-throughput
  // end, Y_i between.
  for (std::size_t i = 0; i < outline.size(); ++i) {
    const double cx = x_of(outline[i].sensing);
    const double cy = y_of(outline[i].throughput);
    svg << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"4\" fill=\"#1f4e8c\"/>\n";
    std::string label;
    if (i == 0) {
      label = outline.size() == 1 ? "X" : "Z";
    } else if (i + 1 == outline.size()) {
      label = "X";
    } else {
      label = "Y" + std::to_string(i);
    }
    svg << "  <text x=\"" << (cx + 8) << "\" y=\"" << (cy - 8) << "\" font-size=\"12\">" << label
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string segment_report(const RegionBoundary& boundary) {
  std::ostringstream out;
  if (boundary.segments.empty()) {
    out << "boundary is the single point (" << format_value(boundary.max_sensing) << ", "
        << format_value(boundary.max_throughput) << ")\n";
    return out.str();
  }
  for (std::size_t i = 0; i < boundary.segments.size(); ++i) {
    const BoundarySegment& seg = boundary.segments[i];
    out << "segment " << (i + 1) << ": (" << format_value(seg.start.sensing) << ", "
        << format_value(seg.start.throughput) << ") -> (" << format_value(seg.end.sensing)
        << ", " << format_value(seg.end.throughput) << "), slope " << format_value(seg.slope);
    if (seg.k.has_value()) {
      out << ", k=" << *seg.k;
    } else if (std::fabs(seg.slope) <= 1e-9) {
      out << " (free-sensing edge)";
    }
    out << '\n';
  }
  for (const auto& gap : boundary.unresolved) {
    out << "unresolved kink neighborhood: [" << format_value(gap.first) << ", "
        << format_value(gap.second) << "]\n";
  }
  return out.str();
}

}  // namespace isacnet
