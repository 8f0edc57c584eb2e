#include "mergegram/matching.hpp"

#include <algorithm>
#include <cmath>

#include "bipartite.hpp"
#include "mergegram/error.hpp"

namespace mergegram {

namespace {

struct Split {
  std::vector<Dot> finite;
  std::vector<double> infinite_births;  // sorted
};

Split split(const Diagram& d) {
  Split s;
  for (const auto& [dot, mult] : d) {
    if (dot.is_infinite()) {
      s.infinite_births.insert(s.infinite_births.end(), mult, dot.birth);
    } else {
      s.finite.insert(s.finite.end(), mult, dot);
    }
  }
  std::sort(s.infinite_births.begin(), s.infinite_births.end());
  return s;
}

/// Bottleneck cost of the infinite dots; sorted order is optimal on a line.
double infinite_part(const Split& a, const Split& b) {
  if (a.infinite_births.size() != b.infinite_births.size()) return kInfinity;
  double worst = 0.0;
  for (std::size_t i = 0; i < a.infinite_births.size(); ++i) {
    worst = std::max(worst, std::abs(a.infinite_births[i] - b.infinite_births[i]));
  }
  return worst;
}

/// Can every dot of `heavy` (indices into `from`) be matched into `to`
/// within delta?
bool covers(const std::vector<Dot>& from, const std::vector<std::size_t>& heavy,
            const std::vector<Dot>& to, double delta) {
  if (heavy.empty()) return true;
  if (heavy.size() > to.size()) return false;
  detail::BipartiteMatcher matcher(heavy.size(), to.size());
  for (std::size_t i = 0; i < heavy.size(); ++i) {
    bool any = false;
    for (std::size_t j = 0; j < to.size(); ++j) {
      if (linf_distance(from[heavy[i]], to[j]) <= delta) {
        matcher.add_edge(i, j);
        any = true;
      }
    }
    if (!any) return false;
  }
  return matcher.max_matching() == heavy.size();
}

std::vector<std::size_t> off_diagonal(const std::vector<Dot>& dots, double delta) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dots.size(); ++i) {
    if (dots[i].diagonal_distance() > delta) out.push_back(i);
  }
  return out;
}

// The augmented graph (each side's dots plus one diagonal proxy per dot of
// the other side, proxies mutually adjacent) has a perfect matching iff some
// matching between the finite dots covers every dot farther than delta from
// the diagonal on both sides. By the Mendelsohn-Dulmage theorem that holds
// iff each side's far dots can be covered separately.
bool finite_feasible(const std::vector<Dot>& a, const std::vector<Dot>& b, double delta) {
  return covers(a, off_diagonal(a, delta), b, delta) &&
         covers(b, off_diagonal(b, delta), a, delta);
}

}  // namespace

double linf_distance(const Dot& a, const Dot& b) {
  return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

bool delta_matching_exists(const Diagram& a, const Diagram& b, double delta) {
  if (!(delta >= 0.0)) throw Error("delta must be nonnegative");
  const Split sa = split(a);
  const Split sb = split(b);
  if (infinite_part(sa, sb) > delta) return false;
  return finite_feasible(sa.finite, sb.finite, delta);
}

double bottleneck_distance(const Diagram& a, const Diagram& b) {
  const Split sa = split(a);
  const Split sb = split(b);
  const double inf_cost = infinite_part(sa, sb);
  if (inf_cost == kInfinity) return kInfinity;

  const auto& fa = sa.finite;
  const auto& fb = sb.finite;

  // Matching everything to the diagonal is always feasible.
  double upper = 0.0;
  for (const Dot& d : fa) upper = std::max(upper, d.diagonal_distance());
  for (const Dot& d : fb) upper = std::max(upper, d.diagonal_distance());
  // Every dot must go somewhere: its cheapest partner bounds the answer below.
  double lower = inf_cost;
  auto cheapest = [](const Dot& d, const std::vector<Dot>& other) {
    double best = d.diagonal_distance();
    for (const Dot& o : other) best = std::min(best, linf_distance(d, o));
    return best;
  };
  for (const Dot& d : fa) lower = std::max(lower, cheapest(d, fb));
  for (const Dot& d : fb) lower = std::max(lower, cheapest(d, fa));
  if (lower >= upper) return lower;

  std::vector<double> candidates{lower, upper};
  auto consider = [&](double c) {
    if (c > lower && c < upper) candidates.push_back(c);
  };
  for (const Dot& d : fa) consider(d.diagonal_distance());
  for (const Dot& d : fb) consider(d.diagonal_distance());
  for (const Dot& x : fa) {
    for (const Dot& y : fb) consider(linf_distance(x, y));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // Feasibility is monotone in delta; find the first feasible candidate.
  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;  // upper is feasible
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (finite_feasible(fa, fb, candidates[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return std::max(inf_cost, candidates[lo]);
}

}  // namespace mergegram
