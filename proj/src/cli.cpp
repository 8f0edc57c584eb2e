#include "mergegram/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "mergegram/dendrogram.hpp"
#include "mergegram/diagram.hpp"
#include "mergegram/error.hpp"
#include "mergegram/experiments.hpp"
#include "mergegram/io.hpp"
#include "mergegram/matching.hpp"
#include "mergegram/mst.hpp"

namespace mergegram {

namespace {

struct Common {
  std::string output;
  int precision = 9;
  bool json = false;
};

struct InputOptions {
  std::string path;
  bool matrix = false;
};

void add_common(CLI::App* cmd, Common& c, bool diagram_output) {
  cmd->add_option("-o,--output", c.output, "Write to this file instead of stdout");
  cmd->add_option("--precision", c.precision,
                  "Significant digits for reals; 0 for shortest exact form")
      ->capture_default_str();
  if (diagram_output) cmd->add_flag("--json", c.json, "Emit the diagram as JSON");
}

void add_input(CLI::App* cmd, InputOptions& in, bool required = true) {
  auto* opt = cmd->add_option("-i,--input", in.path, "Point cloud CSV (or matrix with --matrix)")
                  ->check(CLI::ExistingFile);
  if (required) opt->required();
  cmd->add_flag("--matrix", in.matrix, "Input is a distance matrix CSV");
}

MetricInput load_metric(const InputOptions& in) {
  const std::string text = io::read_file(in.path);
  if (in.matrix) return io::parse_matrix_csv(text);
  return io::parse_cloud_csv(text);
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
  if (c.output.empty()) {
    out << text;
  } else {
    io::write_file(c.output, text);
  }
}

std::string render(const Diagram& d, const Common& c) {
  return c.json ? io::write_diagram_json(d, c.precision) : io::write_diagram_csv(d, c.precision);
}

std::string render_dendrogram(const Dendrogram& d, int precision) {
  std::string text;
  for (const MergeEvent& e : d.events) {
    text += io::format_real(e.scale, precision) + ';';
    for (std::size_t k = 0; k < e.merged.size(); ++k) {
      if (k > 0) text += '+';
      text += std::to_string(e.merged[k]);
    }
    text += "->" + std::to_string(e.created) + '\n';
  }
  return text;
}

std::string stability_table(const std::vector<StabilityRow>& rows, bool max, int precision) {
  std::string text = "a,b\n";
  for (const StabilityRow& r : rows) {
    text += io::format_real(r.eps, precision) + ',' +
            io::format_real(max ? r.max_bd : r.avg_bd, precision) + '\n';
  }
  return text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mergegrams, 0D persistence and bottleneck distances of finite point clouds",
               "mergegram"};
  app.set_version_flag("--version", std::string("mergegram ") + kVersion);
  app.require_subcommand(1);

  Common common;
  InputOptions input;
  double scale_factor = 0.5;
  std::uint64_t seed = 1;
  std::function<void()> action;

  auto add_scale = [&](CLI::App* cmd) {
    cmd->add_option("--scale-factor", scale_factor,
                    "Merge scale per unit edge length (0.5: ball radius, 1: distance)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  auto* mst_cmd = app.add_subcommand("mst", "Minimum spanning tree edges as u,v,length");
  add_input(mst_cmd, input);
  add_common(mst_cmd, common, false);
  mst_cmd->callback([&] {
    action = [&] {
      emit(common, io::write_mst_csv(compute_mst(load_metric(input)), common.precision), out);
    };
  });

  auto* dendro_cmd = app.add_subcommand("dendrogram", "Single-linkage merge events");
  add_input(dendro_cmd, input);
  add_scale(dendro_cmd);
  add_common(dendro_cmd, common, false);
  dendro_cmd->callback([&] {
    action = [&] {
      const Dendrogram d = sl_dendrogram(compute_mst(load_metric(input)), scale_factor);
      emit(common, render_dendrogram(d, common.precision), out);
    };
  });

  bool keep_zero_life = false;
  auto* mg_cmd = app.add_subcommand("mergegram", "Mergegram of the single-linkage dendrogram");
  add_input(mg_cmd, input);
  add_scale(mg_cmd);
  mg_cmd->add_flag("--keep-zero-life", keep_zero_life,
                   "Keep birth == death dots produced by tied edges");
  add_common(mg_cmd, common, true);
  mg_cmd->callback([&] {
    action = [&] {
      const Mst mst = compute_mst(load_metric(input));
      emit(common, render(mergegram_from_mst(mst, scale_factor, !keep_zero_life), common), out);
    };
  });

  std::string from_mergegram;
  auto* pd0_cmd = app.add_subcommand("pd0", "0D persistence diagram");
  add_input(pd0_cmd, input, false);
  auto* from_opt = pd0_cmd->add_option("--from-mergegram", from_mergegram,
                                       "Derive from a mergegram CSV instead of a cloud")
                       ->check(CLI::ExistingFile);
  pd0_cmd->get_option("--input")->excludes(from_opt);
  add_scale(pd0_cmd);
  add_common(pd0_cmd, common, true);
  pd0_cmd->callback([&] {
    if (input.path.empty() && from_mergegram.empty()) {
      throw CLI::RequiredError("--input or --from-mergegram");
    }
    action = [&] {
      const Diagram pd = from_mergegram.empty()
                             ? pd0_from_mst(compute_mst(load_metric(input)), scale_factor)
                             : pd0_from_mergegram(io::parse_diagram_csv(io::read_file(from_mergegram)));
      emit(common, render(pd, common), out);
    };
  });

  std::string first;
  std::string second;
  auto* bd_cmd = app.add_subcommand("bottleneck", "Bottleneck distance between two diagram CSVs");
  bd_cmd->add_option("first", first, "Diagram CSV")->required()->check(CLI::ExistingFile);
  bd_cmd->add_option("second", second, "Diagram CSV")->required()->check(CLI::ExistingFile);
  add_common(bd_cmd, common, false);
  bd_cmd->callback([&] {
    action = [&] {
      const double bd = bottleneck_distance(io::parse_diagram_csv(io::read_file(first)),
                                            io::parse_diagram_csv(io::read_file(second)));
      emit(common, io::format_real(bd, common.precision) + '\n', out);
    };
  });

  auto* hd_cmd = app.add_subcommand("hausdorff", "Hausdorff distance between two cloud CSVs");
  hd_cmd->add_option("first", first, "Point cloud CSV")->required()->check(CLI::ExistingFile);
  hd_cmd->add_option("second", second, "Point cloud CSV")->required()->check(CLI::ExistingFile);
  add_common(hd_cmd, common, false);
  hd_cmd->callback([&] {
    action = [&] {
      const double hd = hausdorff_distance(io::parse_cloud_csv(io::read_file(first)),
                                           io::parse_cloud_csv(io::read_file(second)));
      emit(common, io::format_real(hd, common.precision) + '\n', out);
    };
  });

  std::size_t n_points = 0;
  std::size_t dim = 3;
  std::vector<double> cube{0.0, 100.0};
  bool ball = false;
  auto* gen_cmd = app.add_subcommand("gen", "Uniform random point cloud");
  gen_cmd->add_option("-n,--n-points", n_points, "Number of points")->required();
  gen_cmd->add_option("--dim", dim, "Dimension")->check(CLI::PositiveNumber)->capture_default_str();
  auto* cube_opt = gen_cmd->add_option("--cube", cube, "Cube bounds lo,hi")
                       ->delimiter(',')
                       ->expected(2)
                       ->capture_default_str();
  gen_cmd->add_flag("--ball", ball, "Sample the unit ball instead of a cube")->excludes(cube_opt);
  gen_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
  add_common(gen_cmd, common, false);
  gen_cmd->callback([&] {
    action = [&] {
      Rng rng(seed);
      const Region region = ball ? Region{UnitBall{}} : Region{Cube{cube[0], cube[1]}};
      emit(common, io::write_cloud_csv(generate_cloud(n_points, dim, region, rng), common.precision),
           out);
    };
  });

  double eps = 1.0;
  auto* perturb_cmd = app.add_subcommand("perturb", "1-3 random points in the eps-ball of each point");
  add_input(perturb_cmd, input);
  perturb_cmd->get_option("--matrix")->description("(unsupported for perturb)");
  perturb_cmd->add_option("--eps", eps, "Noise bound")->check(CLI::NonNegativeNumber)->capture_default_str();
  perturb_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
  add_common(perturb_cmd, common, false);
  perturb_cmd->callback([&] {
    action = [&] {
      if (input.matrix) throw Error("perturb needs a point cloud");
      Rng rng(seed);
      const PointCloud cloud = io::parse_cloud_csv(io::read_file(input.path));
      emit(common, io::write_cloud_csv(perturb_cloud(cloud, eps, rng), common.precision), out);
    };
  });

  auto* nn2_cmd = app.add_subcommand("nn2", "Distances to the two nearest neighbours");
  add_input(nn2_cmd, input);
  add_common(nn2_cmd, common, true);
  nn2_cmd->callback([&] {
    action = [&] { emit(common, render(nn2_diagram(load_metric(input)), common), out); };
  });

  StabilityConfig stab;
  std::string preset = "ci";
  std::string out_dir = ".";
  auto* stab_cmd = app.add_subcommand("stability", "Bottleneck vs noise-bound sweep");
  stab_cmd->add_option("--preset", preset, "ci (N=20, K=20) or full (N=100, K=100)")
      ->check(CLI::IsMember({"ci", "full"}))
      ->capture_default_str();
  auto* sn = stab_cmd->add_option("--n-points", stab.n_points, "Black points per trial");
  auto* sd = stab_cmd->add_option("--dim", stab.dim, "Dimension");
  auto* sk = stab_cmd->add_option("--trials", stab.trials, "Trials per noise bound");
  auto* se0 = stab_cmd->add_option("--eps-min", stab.eps_min, "Smallest noise bound");
  auto* se1 = stab_cmd->add_option("--eps-max", stab.eps_max, "Largest noise bound");
  auto* ses = stab_cmd->add_option("--eps-step", stab.eps_step, "Noise bound step");
  auto* sc = stab_cmd->add_option("--cube", cube, "Cube bounds lo,hi")->delimiter(',')->expected(2);
  stab_cmd->add_option("--seed", stab.seed, "Random seed")->capture_default_str();
  add_scale(stab_cmd);
  stab_cmd->add_option("--out-dir", out_dir, "Directory for TableAvg.csv and TableMax.csv")
      ->capture_default_str();
  add_common(stab_cmd, common, false);
  stab_cmd->callback([&] {
    action = [&] {
      StabilityConfig cfg = preset == "full" ? StabilityConfig::full() : StabilityConfig{};
      // Explicit flags override the preset.
      auto take = [](CLI::Option* opt, auto& dst, const auto& src) {
        if (opt->count() > 0) dst = src;
      };
      take(sn, cfg.n_points, stab.n_points);
      take(sd, cfg.dim, stab.dim);
      take(sk, cfg.trials, stab.trials);
      take(se0, cfg.eps_min, stab.eps_min);
      take(se1, cfg.eps_max, stab.eps_max);
      take(ses, cfg.eps_step, stab.eps_step);
      if (sc->count() > 0) cfg.region = Cube{cube[0], cube[1]};
      cfg.seed = stab.seed;
      cfg.scale_factor = scale_factor;
      const auto rows = stability_experiment(cfg);
      std::filesystem::create_directories(out_dir);
      io::write_file(std::filesystem::path(out_dir) / "TableAvg.csv",
                     stability_table(rows, false, common.precision));
      io::write_file(std::filesystem::path(out_dir) / "TableMax.csv",
                     stability_table(rows, true, common.precision));
      std::string summary = "eps,avg_bd,max_bd,avg_hd,max_hd\n";
      for (const StabilityRow& r : rows) {
        summary += io::format_real(r.eps, common.precision) + ',' +
                   io::format_real(r.avg_bd, common.precision) + ',' +
                   io::format_real(r.max_bd, common.precision) + ',' +
                   io::format_real(r.avg_hd, common.precision) + ',' +
                   io::format_real(r.max_hd, common.precision) + '\n';
      }
      emit(common, summary, out);
    };
  });

  DatasetConfig data_cfg;
  bool evaluate = false;
  double train_fraction = 0.8;
  std::size_t k = 1;
  auto* data_cmd = app.add_subcommand("classify-data", "Generate the isometry-classification dataset");
  data_cmd->add_option("--preset", preset, "ci (20 copies) or full (100 copies)")
      ->check(CLI::IsMember({"ci", "full"}))
      ->capture_default_str();
  data_cmd->add_option("--out-dir", out_dir, "Output directory")->required();
  auto* dc = data_cmd->add_option("--classes", data_cfg.classes, "Number of classes");
  auto* db = data_cmd->add_option("--base-size", data_cfg.base_size, "Points per base cloud");
  auto* dk = data_cmd->add_option("--copies", data_cfg.copies, "Samples per class");
  auto* da = data_cmd->add_option("--added", data_cfg.added_points, "Extra eps-close points");
  auto* de = data_cmd->add_option("--eps", data_cfg.eps, "Noise bound");
  auto* dd = data_cmd->add_option("--dim", data_cfg.dim, "Dimension");
  data_cmd->add_option("--seed", data_cfg.seed, "Random seed")->capture_default_str();
  add_scale(data_cmd);
  data_cmd->add_flag("--evaluate", evaluate, "Report k-NN accuracy on a seeded split");
  data_cmd->add_option("--train-fraction", train_fraction, "Training share per class")
      ->capture_default_str();
  data_cmd->add_option("-k,--neighbours", k, "k for k-NN")->capture_default_str();
  add_common(data_cmd, common, false);
  data_cmd->callback([&] {
    action = [&] {
      DatasetConfig cfg = preset == "full" ? DatasetConfig::full() : DatasetConfig{};
      auto take = [](CLI::Option* opt, auto& dst, const auto& src) {
        if (opt->count() > 0) dst = src;
      };
      take(dc, cfg.classes, data_cfg.classes);
      take(db, cfg.base_size, data_cfg.base_size);
      take(dk, cfg.copies, data_cfg.copies);
      take(da, cfg.added_points, data_cfg.added_points);
      take(de, cfg.eps, data_cfg.eps);
      take(dd, cfg.dim, data_cfg.dim);
      cfg.seed = data_cfg.seed;
      cfg.scale_factor = scale_factor;
      const ClassificationDataset data = generate_classification_dataset(cfg);
      export_dataset(data, out_dir, common.precision);
      std::string report = "samples," + std::to_string(data.samples.size()) + '\n';
      if (evaluate) {
        const Split split = stratified_split(data, train_fraction, cfg.seed);
        const std::pair<const char*, Invariant> kinds[] = {
            {"mergegram", Invariant::kMergegram}, {"pd0", Invariant::kPd0}, {"nn2", Invariant::kNn2}};
        for (const auto& [name, which] : kinds) {
          report += std::string("accuracy_") + name + ',' +
                    io::format_real(evaluate_split(data, split, which, k).accuracy, common.precision) +
                    '\n';
        }
      }
      emit(common, report, out);
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto chosen = app.get_subcommands();
    out << (chosen.empty() ? app.help() : chosen.front()->help());
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    const auto chosen = app.get_subcommands();
    err << (chosen.empty() ? app.help() : chosen.front()->help());
    return 2;
  }

  try {
    if (action) action();
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace mergegram
