// Command-line driver: regime / classify / trace / witness / fedpoint /
// verify subcommands over a JSON instance config.
//
// Exit codes: 0 success, 1 runtime/domain failures and verification
// violations, 2 malformed arguments or config.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "minregion/errors.hpp"
#include "minregion/federated.hpp"
#include "minregion/io.hpp"
#include "minregion/quadratic.hpp"
#include "minregion/region.hpp"
#include "minregion/verify.hpp"

namespace {

using namespace minregion;

Vec parse_point(const std::string& text, std::size_t want_dim) {
  Vec out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw InvalidInput("point: expected comma-separated numbers, got '" +
                         text + "'");
    }
  }
  if (out.size() != want_dim)
    throw InvalidInput("point: expected " + std::to_string(want_dim) +
                       " coordinates, got " + std::to_string(out.size()));
  return out;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw InvalidInput("cannot open output file '" + path + "'");
  return os;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Attainable region of the minimizer of a sum of two strongly "
               "convex functions"};
  app.require_subcommand(1);

  std::string cfg_path, point_str, csv_path, svg_path, mode;
  int k = 1;
  int samples_flag = 0;
  std::uint64_t trials_flag = 0, seed_flag = 0;
  double spread = 1.0;

  auto add_config = [&](CLI::App* cmd) {
    cmd->add_option("-c,--config", cfg_path, "JSON config file")->required();
  };

  CLI::App* cmd_regime =
      app.add_subcommand("regime", "Print the region regime and thresholds");
  add_config(cmd_regime);

  CLI::App* cmd_classify =
      app.add_subcommand("classify", "Classify a point against the region");
  add_config(cmd_classify);
  cmd_classify
      ->add_option("-p,--point", point_str, "point as comma-separated numbers")
      ->required();

  CLI::App* cmd_trace =
      app.add_subcommand("trace", "Sample the region boundary to CSV (2-D)");
  add_config(cmd_trace);
  cmd_trace->add_option("-o,--output", csv_path, "CSV output path")->required();
  cmd_trace->add_option("--svg", svg_path, "also render an SVG to this path");
  cmd_trace->add_option("--samples", samples_flag,
                        "points per curve segment (>= 2)");

  CLI::App* cmd_witness = app.add_subcommand(
      "witness", "Construct quadratic witnesses at an interior point");
  add_config(cmd_witness);
  cmd_witness
      ->add_option("-p,--point", point_str, "point as comma-separated numbers")
      ->required();
  cmd_witness->add_option("-k,--count", k, "number of distinct witnesses")
      ->check(CLI::PositiveNumber);

  CLI::App* cmd_fed = app.add_subcommand(
      "fedpoint", "Curvature-weighted aggregation point and its membership");
  add_config(cmd_fed);

  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "Monte-Carlo soundness / completeness verification");
  add_config(cmd_verify);
  cmd_verify->add_option("--mode", mode, "sound or complete")
      ->required()
      ->check(CLI::IsMember({"sound", "complete"}));
  cmd_verify->add_option("--trials", trials_flag, "trial count override");
  cmd_verify->add_option("--seed", seed_flag, "RNG seed override");
  cmd_verify->add_option("--spread", spread,
                         "relative eigenvalue/curvature spread (sound mode)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    CliConfig cfg = config_from_file(cfg_path);
    const ProblemInstance& inst = cfg.instance;

    if (cmd_regime->parsed()) {
      print(to_json(regime(inst)));
    } else if (cmd_classify->parsed()) {
      const Vec p = parse_point(point_str, inst.dim());
      print(to_json(classify(inst, p, cfg.tol), angle_report(inst, p)));
    } else if (cmd_trace->parsed()) {
      if (cmd_trace->count("--samples")) {
        if (samples_flag < 2)
          throw InvalidInput("--samples must be an integer >= 2");
        cfg.samples = samples_flag;
      }
      const BoundaryTrace tr = trace_boundary(inst, cfg.samples);
      {
        std::ofstream os = open_output(csv_path);
        write_trace_csv(os, tr);
      }
      json summary{{"case", to_string(tr.kind)},
                   {"samples", tr.samples},
                   {"csv", csv_path}};
      json segs = json::array();
      for (const TraceSegment& s : tr.segments)
        segs.push_back(json{{"tag", to_string(s.kind)},
                            {"closed", s.closed},
                            {"size", s.points.size()}});
      summary["segments"] = std::move(segs);
      if (!svg_path.empty()) {
        std::ofstream os = open_output(svg_path);
        write_trace_svg(os, tr);
        summary["svg"] = svg_path;
      }
      print(summary);
    } else if (cmd_witness->parsed()) {
      const Vec p = parse_point(point_str, inst.dim());
      if (k == 1) {
        print(to_json(witness_pair(inst, p)));
      } else {
        json arr = json::array();
        for (const WitnessPair& w : witness_family(inst, p, k))
          arr.push_back(to_json(w));
        print(json{{"count", k}, {"witnesses", std::move(arr)}});
      }
    } else if (cmd_fed->parsed()) {
      print(to_json(fed_point(inst)));
    } else if (cmd_verify->parsed()) {
      if (cmd_verify->count("--trials")) cfg.trials = trials_flag;
      if (cmd_verify->count("--seed")) cfg.seed = seed_flag;
      const VerificationReport rep =
          mode == "sound"
              ? mc_soundness(inst, cfg.trials, spread, cfg.seed, cfg.tol)
              : mc_completeness(inst, cfg.trials, cfg.seed);
      print(to_json(rep));
      if (!rep.ok()) return 1;
    }
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
