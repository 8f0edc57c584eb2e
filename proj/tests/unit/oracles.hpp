#pragma once

// Brute-force reference implementations used only by the tests. None of
// them call into the code paths they check.

#include <cstddef>
#include <vector>

#include "mergegram/diagram.hpp"
#include "mergegram/metric.hpp"

namespace mergegram::oracle {

/// Minimum over all n^(n-2) labelled spanning trees (Pruefer sequences).
/// Returns the sorted edge lengths of one minimising tree; the multiset is
/// the same for every minimiser.
std::vector<double> brute_force_mst_lengths(const MetricInput& metric);

double brute_force_mst_total(const MetricInput& metric);

/// Minimum over every partial injection of finite dots (unmatched dots go to
/// the diagonal) and every permutation of infinite dots.
double brute_force_bottleneck(const Diagram& a, const Diagram& b);

/// Single-linkage clusters at threshold `s` straight from the chain
/// definition (d <= s along a chain), as a label per point where labels are
/// the smallest index in each cluster.
std::vector<std::size_t> sl_partition(const MetricInput& metric, double s);

/// The fixed Fig.-style five point shortest-path metric used throughout.
DistanceMatrix five_point_matrix();

}  // namespace mergegram::oracle
