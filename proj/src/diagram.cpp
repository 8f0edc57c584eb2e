#include "mergegram/diagram.hpp"

#include <cmath>
#include <string>

#include "bipartite.hpp"
#include "mergegram/error.hpp"

namespace mergegram {

namespace {

void check_dot(const Dot& dot) {
  if (!std::isfinite(dot.birth) || dot.birth < 0.0) {
    throw Error("dot birth must be finite and nonnegative");
  }
  if (std::isnan(dot.death) || dot.death < dot.birth) throw Error("dot death must be >= birth");
}

bool close(double x, double y, double tol) {
  if (x == y) return true;
  return std::abs(x - y) <= tol;
}

bool close(const Dot& a, const Dot& b, double tol) {
  return close(a.birth, b.birth, tol) && close(a.death, b.death, tol);
}

}  // namespace

Diagram::Diagram(std::initializer_list<Dot> dots) {
  for (const Dot& d : dots) add(d);
}

void Diagram::add(Dot dot, std::size_t count) {
  if (count == 0) return;
  check_dot(dot);
  dots_[dot] += count;
  total_ += count;
}

void Diagram::remove(Dot dot, std::size_t count) {
  auto it = dots_.find(dot);
  if (it == dots_.end() || it->second < count) throw Error("diagram subtraction underflow");
  it->second -= count;
  total_ -= count;
  if (it->second == 0) dots_.erase(it);
}

std::size_t Diagram::multiplicity(Dot dot) const {
  auto it = dots_.find(dot);
  return it == dots_.end() ? 0 : it->second;
}

std::size_t Diagram::infinite_count() const {
  std::size_t n = 0;
  for (const auto& [dot, mult] : dots_) {
    if (dot.is_infinite()) n += mult;
  }
  return n;
}

std::vector<Dot> Diagram::expanded() const {
  std::vector<Dot> out;
  out.reserve(total_);
  for (const auto& [dot, mult] : dots_) out.insert(out.end(), mult, dot);
  return out;
}

Diagram add(const Diagram& a, const Diagram& b) {
  Diagram out = a;
  for (const auto& [dot, mult] : b) out.add(dot, mult);
  return out;
}

Diagram subtract(const Diagram& a, const Diagram& b, double tol) {
  Diagram out = a;
  for (const auto& [dot, mult] : b) {
    for (std::size_t copy = 0; copy < mult; ++copy) {
      if (out.multiplicity(dot) > 0) {
        out.remove(dot);
        continue;
      }
      bool removed = false;
      for (const auto& [candidate, count] : out) {
        if (close(candidate, dot, tol)) {
          out.remove(candidate);
          removed = true;
          break;
        }
      }
      if (!removed) throw Error("diagram subtraction underflow");
    }
  }
  return out;
}

bool equals(const Diagram& a, const Diagram& b, double tol) {
  if (a.total() != b.total()) return false;
  if (a == b) return true;
  if (tol <= 0.0) return false;
  const auto left = a.expanded();
  const auto right = b.expanded();
  detail::BipartiteMatcher matcher(left.size(), right.size());
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (close(left[i], right[j], tol)) matcher.add_edge(i, j);
    }
  }
  return matcher.max_matching() == left.size();
}

Diagram mergegram_from_mst(const Mst& mst, double scale_factor, bool drop_zero_life) {
  if (!(scale_factor > 0.0) || !std::isfinite(scale_factor)) {
    throw Error("scale factor must be positive");
  }
  if (!is_spanning_tree(mst)) throw Error("invalid MST");

  UnionFind components(mst.n);
  // Birth scale of the component rooted at each index.
  std::vector<double> prev(mst.n, 0.0);
  Diagram out;
  auto emit = [&](Dot dot) {
    if (!(drop_zero_life && dot.birth == dot.death)) out.add(dot);
  };
  for (const Edge& e : mst.edges) {
    const double scale = scale_factor * e.length;
    const std::size_t c1 = components.find(e.u);
    const std::size_t c2 = components.find(e.v);
    emit({prev[c1], scale});
    emit({prev[c2], scale});
    prev[components.unite(c1, c2)] = scale;
  }
  out.add({prev[components.find(0)], kInfinity});
  return out;
}

Diagram mergegram_from_dendrogram(const Dendrogram& d) {
  Diagram out;
  for (const MergeSetLife& life : merge_set_lives(d)) {
    if (life.birth != life.death) out.add({life.birth, life.death});
  }
  return out;
}

Diagram pd0_from_mst(const Mst& mst, double scale_factor) {
  if (!(scale_factor > 0.0) || !std::isfinite(scale_factor)) {
    throw Error("scale factor must be positive");
  }
  if (!is_spanning_tree(mst)) throw Error("invalid MST");
  Diagram out;
  for (const Edge& e : mst.edges) {
    const double scale = scale_factor * e.length;
    if (scale > 0.0) out.add({0.0, scale});
  }
  out.add({0.0, kInfinity});
  return out;
}

Diagram pd0_from_mergegram(const Diagram& mergegram) {
  if (mergegram.infinite_count() != 1) {
    throw Error("not a valid mergegram: expected exactly one infinite dot");
  }
  // Net count (deaths - births) per positive scale, in increasing order.
  std::map<double, long long> net;
  for (const auto& [dot, mult] : mergegram) {
    const auto m = static_cast<long long>(mult);
    if (dot.death > 0.0) net[dot.death] += m;
    if (dot.birth > 0.0) net[dot.birth] -= m;
  }
  Diagram out;
  for (const auto& [scale, count] : net) {
    if (count < 0) {
      throw Error("not a valid mergegram: more births than deaths at scale " +
                  std::to_string(scale));
    }
    out.add({0.0, scale}, static_cast<std::size_t>(count));
  }
  return out;
}

Diagram pd0_from_dendrogram(const Dendrogram& d) {
  const auto violations = validate_dendrogram(d);
  if (!violations.empty()) throw Error("invalid dendrogram: " + violations.front().message);
  Diagram out;
  for (const MergeEvent& e : d.events) {
    if (e.scale > 0.0) out.add({0.0, e.scale}, e.merged.size() - 1);
  }
  out.add({0.0, kInfinity});
  return out;
}

}  // namespace mergegram
