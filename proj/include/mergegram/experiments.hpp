#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "mergegram/diagram.hpp"
#include "mergegram/metric.hpp"

namespace mergegram {

/// Diagram of (distance to 1st, distance to 2nd nearest neighbour) over all
/// points, counting only positive distances. Needs at least three points.
Diagram nn2_diagram(const MetricInput& metric);

/// Mergegram of a cloud or matrix under the given scale convention.
Diagram mergegram_of(const MetricInput& metric, double scale_factor = 0.5);

/// Perturbation-stability sweep: black clouds versus their eps-ball red
/// perturbations, for every eps on the grid.
struct StabilityConfig {
  std::size_t n_points = 20;
  std::size_t dim = 3;
  Region region = Cube{0.0, 100.0};
  double eps_min = 0.5;
  double eps_max = 5.0;
  double eps_step = 0.5;
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  double scale_factor = 0.5;

  /// N = 100 points, K = 100 trials, eps in [0.1, 10] with step 0.1.
  static StabilityConfig full();

  std::vector<double> eps_grid() const;
};

struct StabilityRow {
  double eps = 0.0;
  double avg_bd = 0.0;
  double max_bd = 0.0;
  double avg_hd = 0.0;
  double max_hd = 0.0;
};

struct StabilityTrial {
  double bd = 0.0;
  double hd = 0.0;
};

/// One trial; deterministic in (cfg.seed, eps_index, trial).
StabilityTrial stability_trial(const StabilityConfig& cfg, std::size_t eps_index, double eps,
                               std::size_t trial);

/// Throws ExperimentError naming the trial if BD > HD + 1e-9 or HD > eps + 1e-9.
std::vector<StabilityRow> stability_experiment(const StabilityConfig& cfg);

/// Isometry-classification dataset: noisy, augmented, rotated copies of
/// random base clouds in the unit ball.
struct DatasetConfig {
  std::size_t classes = 10;
  std::size_t base_size = 100;
  std::size_t copies = 20;
  std::size_t added_points = 25;
  double eps = 0.01;
  std::size_t dim = 2;
  std::uint64_t seed = 1;
  double scale_factor = 0.5;

  /// 10 classes x 100 copies of 100-point clouds with 25 added points.
  static DatasetConfig full();
};

struct SampleClouds {
  PointCloud unrotated;  // perturbed base plus added points
  PointCloud rotated;
};

/// Build sample `index` of a class from its base cloud.
SampleClouds make_sample(const PointCloud& base, const DatasetConfig& cfg, std::size_t class_id,
                         std::size_t index);

struct Sample {
  std::size_t class_id = 0;
  PointCloud cloud;
  Diagram mergegram;
  Diagram pd0;
  Diagram nn2;
};

struct ClassificationDataset {
  DatasetConfig config;
  std::vector<PointCloud> bases;  // one per class
  std::vector<Sample> samples;    // class-major
};

ClassificationDataset generate_classification_dataset(const DatasetConfig& cfg);

/// Writes class_<i>/sample_<j>.{cloud,mg,pd0,nn2}.csv and manifest.json.
void export_dataset(const ClassificationDataset& data, const std::filesystem::path& dir,
                    int precision = 0);

struct Split {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

/// Seeded per-class split: round(train_fraction * class size) train samples.
Split stratified_split(const ClassificationDataset& data, double train_fraction,
                       std::uint64_t seed);

struct LabeledDiagram {
  std::size_t label = 0;
  Diagram diagram;
};

struct KnnResult {
  std::vector<std::size_t> predicted;
  double accuracy = 0.0;
};

/// k-NN under bottleneck distance. Neighbours are ranked by (distance, train
/// index); vote ties go to the class with the nearest neighbour, then to the
/// smallest class id.
KnnResult knn_classify(const std::vector<LabeledDiagram>& train,
                       const std::vector<LabeledDiagram>& test, std::size_t k);

enum class Invariant { kMergegram, kPd0, kNn2 };

/// Accuracy of k-NN on the given invariant of a dataset split.
KnnResult evaluate_split(const ClassificationDataset& data, const Split& split, Invariant which,
                         std::size_t k = 1);

}  // namespace mergegram
