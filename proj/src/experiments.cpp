#include "mergegram/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "json.hpp"
#include "mergegram/error.hpp"
#include "mergegram/io.hpp"
#include "mergegram/matching.hpp"
#include "mergegram/mst.hpp"

namespace mergegram {

Diagram nn2_diagram(const MetricInput& metric) {
  const std::size_t n = metric.size();
  if (n < 3) throw Error("NN(2) undefined for fewer than 3 points");
  Diagram out;
  for (std::size_t i = 0; i < n; ++i) {
    double first = kInfinity;
    double second = kInfinity;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double d = metric.distance(i, j);
      if (!(d > 0.0)) continue;
      if (d < first) {
        second = first;
        first = d;
      } else if (d < second) {
        second = d;
      }
    }
    if (second == kInfinity) {
      throw Error("NN(2) undefined: point " + std::to_string(i) +
                  " has fewer than two distinct neighbours");
    }
    out.add({first, second});
  }
  return out;
}

Diagram mergegram_of(const MetricInput& metric, double scale_factor) {
  return mergegram_from_mst(compute_mst(metric), scale_factor);
}

StabilityConfig StabilityConfig::full() {
  StabilityConfig cfg;
  cfg.n_points = 100;
  cfg.trials = 100;
  cfg.eps_min = 0.1;
  cfg.eps_max = 10.0;
  cfg.eps_step = 0.1;
  return cfg;
}

std::vector<double> StabilityConfig::eps_grid() const {
  if (!(eps_min > 0.0) || !(eps_step > 0.0) || !(eps_max >= eps_min)) {
    throw Error("eps grid must be positive and increasing");
  }
  // Values are min + k*step (not accumulated) so the grid is exact on reruns.
  std::vector<double> grid;
  const auto count = static_cast<std::size_t>(std::floor((eps_max - eps_min) / eps_step + 1e-9)) + 1;
  for (std::size_t k = 0; k < count; ++k) grid.push_back(eps_min + static_cast<double>(k) * eps_step);
  return grid;
}

StabilityTrial stability_trial(const StabilityConfig& cfg, std::size_t eps_index, double eps,
                               std::size_t trial) {
  Rng rng = Rng::stream(cfg.seed, {0, eps_index, trial});
  const PointCloud black = generate_cloud(cfg.n_points, cfg.dim, cfg.region, rng);
  const PointCloud red = perturb_cloud(black, eps, rng);
  const Diagram mg_black = mergegram_of(black, cfg.scale_factor);
  const Diagram mg_red = mergegram_of(red, cfg.scale_factor);
  return {bottleneck_distance(mg_black, mg_red), hausdorff_distance(black, red)};
}

std::vector<StabilityRow> stability_experiment(const StabilityConfig& cfg) {
  if (cfg.trials == 0) throw Error("stability experiment needs at least one trial");
  if (cfg.n_points == 0) throw Error("stability experiment needs at least one point");
  const auto grid = cfg.eps_grid();
  std::vector<StabilityRow> rows;
  for (std::size_t e = 0; e < grid.size(); ++e) {
    StabilityRow row;
    row.eps = grid[e];
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      const StabilityTrial r = stability_trial(cfg, e, grid[e], t);
      if (r.hd > grid[e] + 1e-9 || r.bd > r.hd + 1e-9) {
        throw ExperimentError("stability bound violated (seed " + std::to_string(cfg.seed) +
                              ", eps index " + std::to_string(e) + ", trial " +
                              std::to_string(t) + "): BD=" + io::format_real(r.bd) +
                              " HD=" + io::format_real(r.hd) + " eps=" +
                              io::format_real(grid[e]));
      }
      row.avg_bd += r.bd;
      row.avg_hd += r.hd;
      row.max_bd = std::max(row.max_bd, r.bd);
      row.max_hd = std::max(row.max_hd, r.hd);
    }
    row.avg_bd /= static_cast<double>(cfg.trials);
    row.avg_hd /= static_cast<double>(cfg.trials);
    rows.push_back(row);
  }
  return rows;
}

DatasetConfig DatasetConfig::full() {
  DatasetConfig cfg;
  cfg.copies = 100;
  return cfg;
}

SampleClouds make_sample(const PointCloud& base, const DatasetConfig& cfg, std::size_t class_id,
                         std::size_t index) {
  Rng rng = Rng::stream(cfg.seed, {2, class_id, index});
  const std::size_t dim = base.dim();
  PointCloud noisy(dim);
  std::vector<double> p(dim);
  for (std::size_t i = 0; i < base.size(); ++i) {
    const auto q = base.point(i);
    for (std::size_t k = 0; k < dim; ++k) p[k] = q[k] + rng.uniform(-cfg.eps, cfg.eps);
    noisy.push_back(p);
  }
  for (std::size_t a = 0; a < cfg.added_points; ++a) {
    const auto anchor = rng.uniform_int(0, base.size() - 1);
    noisy.push_back(sample_ball(base.point(anchor), cfg.eps, rng));
  }
  const Matrix rotation = random_rotation(dim, rng);
  PointCloud rotated = apply_isometry(noisy, rotation, {});
  return {std::move(noisy), std::move(rotated)};
}

ClassificationDataset generate_classification_dataset(const DatasetConfig& cfg) {
  if (cfg.classes == 0 || cfg.base_size == 0 || cfg.dim == 0) {
    throw Error("dataset needs classes, points and a dimension");
  }
  if (!(cfg.eps >= 0.0)) throw Error("noise bound must be >= 0");
  ClassificationDataset data;
  data.config = cfg;
  for (std::size_t c = 0; c < cfg.classes; ++c) {
    Rng rng = Rng::stream(cfg.seed, {1, c});
    data.bases.push_back(generate_cloud(cfg.base_size, cfg.dim, UnitBall{}, rng));
  }
  for (std::size_t c = 0; c < cfg.classes; ++c) {
    for (std::size_t j = 0; j < cfg.copies; ++j) {
      SampleClouds clouds = make_sample(data.bases[c], cfg, c, j);
      const MetricInput metric(clouds.rotated);
      const Mst mst = compute_mst(metric);
      Diagram mg = mergegram_from_mst(mst, cfg.scale_factor);
      Diagram pd0 = pd0_from_mst(mst, cfg.scale_factor);
      Diagram nn2 = nn2_diagram(metric);
      data.samples.push_back(
          Sample{c, std::move(clouds.rotated), std::move(mg), std::move(pd0), std::move(nn2)});
    }
  }
  return data;
}

void export_dataset(const ClassificationDataset& data, const std::filesystem::path& dir,
                    int precision) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  std::vector<std::size_t> next(data.config.classes, 0);
  for (const Sample& s : data.samples) {
    const fs::path class_dir = dir / ("class_" + std::to_string(s.class_id));
    fs::create_directories(class_dir);
    const std::string stem = "sample_" + std::to_string(next[s.class_id]++);
    io::write_file(class_dir / (stem + ".cloud.csv"), io::write_cloud_csv(s.cloud, precision));
    io::write_file(class_dir / (stem + ".mg.csv"), io::write_diagram_csv(s.mergegram, precision));
    io::write_file(class_dir / (stem + ".pd0.csv"), io::write_diagram_csv(s.pd0, precision));
    io::write_file(class_dir / (stem + ".nn2.csv"), io::write_diagram_csv(s.nn2, precision));
  }
  const auto& cfg = data.config;
  nlohmann::ordered_json manifest = {
      {"classes", cfg.classes},     {"base_size", cfg.base_size},
      {"copies", cfg.copies},       {"added_points", cfg.added_points},
      {"eps", cfg.eps},             {"dim", cfg.dim},
      {"seed", cfg.seed},           {"scale_factor", cfg.scale_factor},
      {"samples", data.samples.size()},
  };
  io::write_file(dir / "manifest.json", manifest.dump(2) + "\n");
}

Split stratified_split(const ClassificationDataset& data, double train_fraction,
                       std::uint64_t seed) {
  if (!(train_fraction >= 0.0 && train_fraction <= 1.0)) {
    throw Error("train fraction must lie in [0, 1]");
  }
  Split split;
  for (std::size_t c = 0; c < data.config.classes; ++c) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < data.samples.size(); ++i) {
      if (data.samples[i].class_id == c) members.push_back(i);
    }
    // Fisher-Yates with the library generator.
    Rng rng = Rng::stream(seed, {3, c});
    for (std::size_t i = members.size(); i > 1; --i) {
      std::swap(members[i - 1], members[rng.uniform_int(0, i - 1)]);
    }
    const auto n_train =
        static_cast<std::size_t>(std::llround(train_fraction * static_cast<double>(members.size())));
    split.train.insert(split.train.end(), members.begin(), members.begin() + n_train);
    split.test.insert(split.test.end(), members.begin() + n_train, members.end());
  }
  std::sort(split.train.begin(), split.train.end());
  std::sort(split.test.begin(), split.test.end());
  return split;
}

KnnResult knn_classify(const std::vector<LabeledDiagram>& train,
                       const std::vector<LabeledDiagram>& test, std::size_t k) {
  if (train.empty()) throw Error("k-NN needs a nonempty training set");
  if (k == 0) throw Error("k must be at least 1");
  const std::size_t neighbours = std::min(k, train.size());

  KnnResult result;
  std::size_t correct = 0;
  std::vector<std::pair<double, std::size_t>> ranked(train.size());
  for (const LabeledDiagram& query : test) {
    for (std::size_t i = 0; i < train.size(); ++i) {
      ranked[i] = {bottleneck_distance(query.diagram, train[i].diagram), i};
    }
    std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(neighbours),
                      ranked.end());

    // label -> (votes, nearest distance)
    std::map<std::size_t, std::pair<std::size_t, double>> votes;
    for (std::size_t r = 0; r < neighbours; ++r) {
      const auto [dist, index] = ranked[r];
      auto [it, fresh] = votes.try_emplace(train[index].label, 0, dist);
      (void)fresh;
      ++it->second.first;
    }
    std::size_t best_label = votes.begin()->first;
    auto best = votes.begin()->second;
    for (const auto& [label, tally] : votes) {
      // std::map iterates labels in increasing order, so strict comparisons
      // keep the smallest label on a full tie.
      if (tally.first > best.first || (tally.first == best.first && tally.second < best.second)) {
        best_label = label;
        best = tally;
      }
    }
    result.predicted.push_back(best_label);
    if (best_label == query.label) ++correct;
  }
  result.accuracy = test.empty() ? 0.0 : static_cast<double>(correct) / static_cast<double>(test.size());
  return result;
}

KnnResult evaluate_split(const ClassificationDataset& data, const Split& split, Invariant which,
                         std::size_t k) {
  auto pick = [&](std::size_t i) -> LabeledDiagram {
    const Sample& s = data.samples[i];
    switch (which) {
      case Invariant::kMergegram: return {s.class_id, s.mergegram};
      case Invariant::kPd0: return {s.class_id, s.pd0};
      case Invariant::kNn2: return {s.class_id, s.nn2};
    }
    return {};
  };
  std::vector<LabeledDiagram> train;
  std::vector<LabeledDiagram> test;
  for (std::size_t i : split.train) train.push_back(pick(i));
  for (std::size_t i : split.test) test.push_back(pick(i));
  return knn_classify(train, test, k);
}

}  // namespace mergegram
