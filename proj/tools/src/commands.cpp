#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>

#include <CLI11.hpp>

#include "isacnet/analytic1d.hpp"
#include "isacnet/errors.hpp"
#include "isacnet/netmodel.hpp"
#include "isacnet/regioncore.hpp"
#include "isacnet/report.hpp"
#include "isacnet/serialization.hpp"

namespace isacnet::cli {
namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

ValidatedNetwork load_validated(const std::string& path) {
  return validate_network(load_network(path));
}

}  // namespace

int cmd_validate(const std::string& path, std::ostream& out) {
  const ValidatedNetwork net = load_validated(path);
  const SensingLinkSets sets = sensing_link_sets(net);
  out << "|V|=" << net.node_count() << ", |U|=" << net.links().size()
      << ", |U(A)|=" << sets.u_a.size() << ", s*=" << fmt(max_sensing(net)) << "\n";
  out << "source: " << net.source() << ", sink: " << net.sink() << "\n";
  out << "network OK\n";
  return 0;
}

int cmd_region(const RegionArgs& args, std::ostream& out) {
  const ValidatedNetwork net = load_validated(args.network_path);
  const std::string name = std::filesystem::path(args.network_path).stem().string();
  const RegionTable table = build_region_table(name, net, args.samples.value_or(0), 0.0);

  out << "network: " << table.name << "\n";
  out << "f* = " << fmt(table.max_throughput) << ", s* = " << fmt(table.max_sensing)
      << ", f~ = " << fmt(table.free_communication) << ", s~ = " << fmt(table.free_sensing)
      << "\n";
  if (table.max_sensing <= 0.0) {
    out << "degenerate region: the sensing area spans no links; boundary is the single point (0, "
        << fmt(table.max_throughput) << ")\n";
  } else {
    out << segment_report(table.boundary);
  }

  if (args.csv_out.has_value()) {
    write_file_atomic(*args.csv_out, to_csv(table.rows));
    out << "wrote " << *args.csv_out << "\n";
  } else {
    out << to_csv(table.rows);
  }
  if (args.svg_out.has_value()) {
    write_file_atomic(*args.svg_out, region_svg(table));
    out << "wrote " << *args.svg_out << "\n";
  }
  return 0;
}

int cmd_point(const std::string& path, double sensing,
              const std::optional<std::string>& witness_out, std::ostream& out) {
  const ValidatedNetwork net = load_validated(path);
  const double s_star = max_sensing(net);
  if (sensing < 0.0 || sensing > s_star) {
    throw UsageError("T_S must be in [0, " + fmt(s_star) + "]");
  }
  const ThroughputResult result = max_throughput_at_sensing(net, sensing);
  out << "max throughput = " << fmt(result.value) << "\n";
  if (witness_out.has_value()) {
    write_file_atomic(*witness_out, serialize_witness(result.witness, net));
    out << "wrote " << *witness_out << "\n";
  }
  return 0;
}

int cmd_free(const std::string& path, std::optional<double> delta, std::ostream& out) {
  const ValidatedNetwork net = load_validated(path);
  const double s_star = max_sensing(net);
  const double f_star = max_throughput(net);
  const double f_tilde = free_communication(net);

  FreeSensingResult fs;
  if (s_star > 0.0) {
    fs = approx_free_sensing(net, delta.value_or(1e-4 * s_star));
  }
  out << "f* = " << fmt(f_star) << "\n";
  out << "s* = " << fmt(s_star) << "\n";
  out << "f~ = " << fmt(f_tilde) << "\n";
  out << "s~ = " << fmt(fs.value) << "\n";
  out << "lp_calls = " << fs.lp_calls << "\n";
  out << "avoiding path: " << (has_avoiding_path(net) ? "yes" : "no") << "\n";
  return 0;
}

int cmd_compare(const std::string& path, std::ostream& out) {
  const ValidatedNetwork net = load_validated(path);
  const std::optional<PathNetwork> chain = classify_path(net);
  if (!chain.has_value()) {
    throw UsageError("not a one-dimensional path network; use the region command instead");
  }

  constexpr int kSampleCount = 50;
  double worst = 0.0;
  for (int i = 0; i < kSampleCount; ++i) {
    const double f = chain->c_min * i / (kSampleCount - 1);
    const double s = analytic_boundary(*chain, f);
    const double v = max_throughput_at_sensing(net, s).value;
    worst = std::max(worst, std::fabs(v - f));
  }
  out << "max deviation = " << fmt(worst) << " over " << kSampleCount
      << " throughput samples\n";
  if (worst > 1e-6) {
    out << "deviation exceeds 1e-6: analytic and solver boundaries disagree\n";
    return 4;
  }
  return 0;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sensing-throughput region analysis for capacity-shared relay networks"};
  app.require_subcommand(1);

  std::string network_path;

  CLI::App* validate = app.add_subcommand("validate", "Check a network file and print a summary");
  validate->add_option("network-file", network_path, "Network description file")->required();

  RegionArgs region_args;
  bool adaptive = false;
  int samples = 0;
  CLI::App* region =
      app.add_subcommand("region", "Trace the sensing-throughput boundary and emit tables");
  region->add_option("network-file", network_path, "Network description file")->required();
  CLI::Option* samples_opt =
      region->add_option("--samples", samples, "Evaluate this many uniform sensing targets");
  CLI::Option* adaptive_opt =
      region->add_flag("--adaptive", adaptive, "Trace breakpoints adaptively (default)");
  samples_opt->excludes(adaptive_opt);
  std::string csv_out;
  std::string svg_out;
  CLI::Option* csv_opt = region->add_option("--csv", csv_out, "Write the table to this file");
  CLI::Option* svg_opt = region->add_option("--svg", svg_out, "Write a boundary plot here");

  double sensing = 0.0;
  std::string witness_out;
  CLI::App* point = app.add_subcommand("point", "Max throughput at one sensing target");
  point->add_option("network-file", network_path, "Network description file")->required();
  point->add_option("--sensing", sensing, "Total sensing target T_S")->required();
  CLI::Option* witness_opt =
      point->add_option("--witness", witness_out, "Write the achieving rate assignment here");

  double delta = 0.0;
  CLI::App* free_cmd = app.add_subcommand("free", "Characteristic quantities and free sensing");
  free_cmd->add_option("network-file", network_path, "Network description file")->required();
  CLI::Option* delta_opt = free_cmd
                               ->add_option("--delta", delta,
                                            "Bisection tolerance (default s* * 1e-4)")
                               ->check(CLI::PositiveNumber);

  CLI::App* compare = app.add_subcommand("compare", "Analytic vs solver boundary on a path");
  compare->add_option("network-file", network_path, "Network description file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }

  try {
    if (validate->parsed()) return cmd_validate(network_path, out);
    if (region->parsed()) {
      region_args.network_path = network_path;
      if (*samples_opt) region_args.samples = samples;
      if (*csv_opt) region_args.csv_out = csv_out;
      if (*svg_opt) region_args.svg_out = svg_out;
      return cmd_region(region_args, out);
    }
    if (point->parsed()) {
      return cmd_point(network_path, sensing,
                       *witness_opt ? std::optional<std::string>(witness_out) : std::nullopt, out);
    }
    if (free_cmd->parsed()) {
      return cmd_free(network_path, *delta_opt ? std::optional<double>(delta) : std::nullopt,
                      out);
    }
    if (compare->parsed()) return cmd_compare(network_path, out);
    err << "error: no command given\n";
    return 3;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace isacnet::cli
