#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "isacnet/report.hpp"
#include "test_networks.hpp"

using namespace isacnet;

namespace {

size_t count_occurrences(const std::string& text, const std::string& needle) {
  size_t count = 0;
  for (size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

// Minimal well-formedness check: every element closes, nesting matches,
// attribute quotes are balanced. Enough to catch broken emission.
bool well_formed_markup(const std::string& text) {
  std::vector<std::string> stack;
  size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '<') {
      ++i;
      continue;
    }
    if (i + 1 >= text.size()) return false;
    const bool closing = text[i + 1] == '/';
    size_t j = i + (closing ? 2 : 1);
    std::string name;
    while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                               text[j] == '-' || text[j] == '_')) {
      name += text[j++];
    }
    if (name.empty()) return false;
    bool quoted = false;
    bool self_closed = false;
    while (j < text.size()) {
      const char c = text[j];
      if (c == '"') quoted = !quoted;
      if (!quoted && c == '>') {
        self_closed = text[j - 1] == '/';
        break;
      }
      ++j;
    }
    if (j >= text.size() || quoted) return false;
    if (closing) {
      if (stack.empty() || stack.back() != name) return false;
      stack.pop_back();
    } else if (!self_closed) {
      stack.push_back(name);
    }
    i = j + 1;
  }
  return stack.empty();
}

}  // namespace

TEST_CASE("uniform tables sample the level function") {
  const ValidatedNetwork net = validate_network(fixtures::k5_path());
  const RegionTable table = build_region_table("k5", net, 12, 0.0);
  CHECK(table.name == "k5");
  CHECK(table.max_throughput == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(table.max_sensing == 11.0);
  CHECK(table.free_communication == doctest::Approx(0.0));
  CHECK(table.free_sensing == doctest::Approx(3.0).epsilon(1e-3));
  REQUIRE(table.rows.size() == 12);
  for (size_t i = 0; i < table.rows.size(); ++i) {
    const double target = 11.0 * static_cast<double>(i) / 11.0;
    CHECK(table.rows[i].target_sensing == doctest::Approx(target).epsilon(1e-12));
    const double expected = std::min(4.0, (11.0 - target) / 2.0);
    CHECK(table.rows[i].max_throughput == doctest::Approx(expected).epsilon(1e-9));
  }
  CHECK(table.rows.front().target_sensing == 0.0);
  CHECK(table.rows.back().target_sensing == 11.0);

  CHECK_THROWS_AS(build_region_table("k5", net, 1, 0.0), ValidationError);
  CHECK_THROWS_AS(build_region_table("k5", net, -3, 0.0), ValidationError);
}

TEST_CASE("adaptive tables carry the breakpoints") {
  const ValidatedNetwork net = validate_network(fixtures::k5_path());
  const RegionTable table = build_region_table("k5", net, 0, 0.0);
  REQUIRE(table.rows.size() == 3);
  CHECK(table.rows[0].target_sensing == 0.0);
  CHECK(table.rows[1].target_sensing == doctest::Approx(3.0).epsilon(1e-7));
  CHECK(table.rows[2].target_sensing == 11.0);
  CHECK(table.boundary.segments.size() == 2);

  // Networks without sensing capability collapse to a single row.
  const RegionTable none =
      build_region_table("flat", validate_network(fixtures::no_area_path()), 0, 0.0);
  REQUIRE(none.rows.size() == 1);
  CHECK(none.rows[0].target_sensing == 0.0);
  CHECK(none.max_sensing == 0.0);
  CHECK(none.free_sensing == 0.0);
}

TEST_CASE("csv emission is stable under reparsing") {
  const ValidatedNetwork net = validate_network(fixtures::k5_path());
  for (int samples : {0, 7, 12}) {
    const RegionTable table = build_region_table("k5", net, samples, 0.0);
    const std::string csv = to_csv(table.rows);
    CHECK(csv.rfind("target_sensing,max_throughput\n", 0) == 0);

    const std::vector<RegionRow> parsed = parse_csv(csv);
    REQUIRE(parsed.size() == table.rows.size());
    CHECK(to_csv(parsed) == csv);
    for (size_t i = 0; i < parsed.size(); ++i) {
      CHECK(parsed[i].target_sensing ==
            doctest::Approx(table.rows[i].target_sensing).epsilon(1e-11));
      CHECK(parsed[i].max_throughput ==
            doctest::Approx(table.rows[i].max_throughput).epsilon(1e-11));
    }
  }
}

TEST_CASE("csv parsing rejects malformed tables") {
  CHECK_THROWS_AS(parse_csv(""), ParseError);
  CHECK_THROWS_AS(parse_csv("sensing,throughput\n0,1\n"), ParseError);
  CHECK_THROWS_AS(parse_csv("target_sensing,max_throughput\n0\n"), ParseError);
  CHECK_THROWS_AS(parse_csv("target_sensing,max_throughput\n0,abc\n"), ParseError);
  CHECK_THROWS_AS(parse_csv("target_sensing,max_throughput\n0,1,2\n"), ParseError);
  CHECK(parse_csv("target_sensing,max_throughput\n").empty());
}

TEST_CASE("svg chart is well formed with one mark per breakpoint") {
  const ValidatedNetwork net = validate_network(fixtures::k5_path());
  const RegionTable table = build_region_table("k5", net, 0, 0.0);
  const std::string svg = region_svg(table);

  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(well_formed_markup(svg));
  CHECK(count_occurrences(svg, "<polyline") == 1);
  CHECK(count_occurrences(svg, "<circle") == table.boundary.breakpoints.size());
  CHECK(svg.find("sensing") != std::string::npos);
  CHECK(svg.find("throughput") != std::string::npos);

  // Degenerate single-point region still renders.
  const RegionTable none =
      build_region_table("flat", validate_network(fixtures::no_area_path()), 0, 0.0);
  const std::string flat_svg = region_svg(none);
  CHECK(well_formed_markup(flat_svg));
  CHECK(count_occurrences(flat_svg, "<circle") == 1);
}

TEST_CASE("segment report names slopes, k and the flat edge") {
  const ValidatedNetwork net = validate_network(fixtures::k5_path());
  const RegionTable table = build_region_table("k5", net, 0, 0.0);
  const std::string report = segment_report(table.boundary);
  CHECK(report.find("segment 1: (11, 0) -> (3, 4), slope -0.5, k=2") != std::string::npos);
  CHECK(report.find("(free-sensing edge)") != std::string::npos);
  CHECK(report.find("unresolved kink neighborhood: [") != std::string::npos);

  const RegionTable diamond =
      build_region_table("diamond", validate_network(fixtures::diamond()), 0, 0.0);
  const std::string one = segment_report(diamond.boundary);
  CHECK(one.find("slope -1, k=1") != std::string::npos);
  CHECK(one.find("unresolved") == std::string::npos);
}
