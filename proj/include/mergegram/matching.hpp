#pragma once

#include "mergegram/diagram.hpp"

namespace mergegram {

/// L-infinity distance between two finite dots.
double linf_distance(const Dot& a, const Dot& b);

/// True iff a bijection between a and b, with diagonal points available on
/// both sides, moves every dot by at most delta in L-infinity. Infinite dots
/// can only be matched to infinite dots, at cost |birth difference|.
bool delta_matching_exists(const Diagram& a, const Diagram& b, double delta);

/// Least delta admitting a delta-matching; +inf when the diagrams carry
/// different numbers of infinite dots. The result is always one of the
/// candidate values (a dot-to-dot, dot-to-diagonal or birth-gap distance),
/// never a numerical approximation.
double bottleneck_distance(const Diagram& a, const Diagram& b);

}  // namespace mergegram
