#pragma once

#include <optional>
#include <ostream>
#include <string>

namespace isacnet::cli {

struct RegionArgs {
  std::string network_path;
  std::optional<int> samples;  // unset: adaptive tracing
  std::optional<std::string> csv_out;
  std::optional<std::string> svg_out;
};

int cmd_validate(const std::string& path, std::ostream& out);
int cmd_region(const RegionArgs& args, std::ostream& out);
int cmd_point(const std::string& path, double sensing,
              const std::optional<std::string>& witness_out, std::ostream& out);
int cmd_free(const std::string& path, std::optional<double> delta, std::ostream& out);
int cmd_compare(const std::string& path, std::ostream& out);

/// Full argv-to-exit-code surface: parses arguments, dispatches, and
/// maps failures to the exit contract (0 success, 1 I/O, 2 invalid
/// input, 3 usage, 4 internal inconsistency).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace isacnet::cli
