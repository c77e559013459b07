#ifndef AMESO_ARP_HPP
#define AMESO_ARP_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ameso/domain.hpp"
#include "ameso/errors.hpp"
#include "ameso/objective.hpp"
#include "ameso/oracle.hpp"
#include "ameso/solver1d.hpp"

namespace ameso {

struct ArpConfig {
  double C = 0.0;
  /// Permutation of the box axes; the sweep recurses on the back entry.
  /// Empty means the given axis order.
  std::vector<std::size_t> axis_order;
  /// Per-axis sweep starts; missing axes start at their interval midpoint.
  std::map<std::size_t, std::int64_t> start_points;
  bool memoize = true;
  double value_tolerance = 0.0;
};

/// One sweep of the recursion: which axis it ran on, which parent sweep
/// value spawned it (empty at the root), its 1-D report, and the sweeps it
/// spawned in turn, in evaluation order.
struct ArpTraceNode {
  std::size_t axis = 0;
  std::optional<std::int64_t> fixed_value;
  SolveReport report;
  std::vector<ArpTraceNode> children;
};

struct ArpReport {
  IntPoint argmin;
  double min_value = 0.0;
  std::uint64_t total_evaluations = 0; // raw objective calls
  /// visited coordinate values per recursion depth, 0 = outermost sweep
  std::vector<std::vector<std::int64_t>> per_level_visited;
  ArpTraceNode trace;
};

/// A box problem with some axes pinned to fixed values; its value is the
/// minimum of the objective over the remaining free axes.
struct ConditionalProblem {
  BoxDomain base;
  std::map<std::size_t, std::int64_t> fixed;
  Objective objective;
};

namespace detail {

struct ArpSubResult {
  double min_value = 0.0;
  std::vector<std::int64_t> argmin_coords; // full dimension
  ArpTraceNode node;
};

struct ArpContext {
  const BoxDomain& box;
  const Objective& f;
  const ArpConfig& cfg;
  std::vector<std::size_t> order;

  std::optional<std::int64_t> start_for(std::size_t axis) const {
    auto it = cfg.start_points.find(axis);
    if (it == cfg.start_points.end()) return std::nullopt;
    return it->second;
  }
};

/// Solves the sub-box spanned by order[0..level] with all other axes pinned
/// in `fixed`; the sweep runs on order[level].
inline ArpSubResult arp_solve_level(const ArpContext& ctx, std::size_t level,
                                    std::vector<std::optional<std::int64_t>>& fixed,
                                    std::optional<std::int64_t> spawned_by) {
  const std::size_t axis = ctx.order[level];
  const IntervalDomain& sweep_axis = ctx.box.axis(axis);
  const Solve1DConfig sweep_cfg{ctx.cfg.C, ctx.start_for(axis), ctx.cfg.value_tolerance};

  ArpSubResult res;
  res.node.axis = axis;
  res.node.fixed_value = spawned_by;

  if (level == 0) {
    // innermost sweep evaluates the raw objective
    const std::size_t n = ctx.box.dimension();
    const Objective leaf([&](const IntPoint& p) {
      std::vector<std::int64_t> c(n);
      for (std::size_t a = 0; a < n; ++a) c[a] = (a == axis) ? p[0] : *fixed[a];
      return ctx.f(IntPoint(std::move(c)));
    });
    res.node.report = solve_1d(sweep_axis, leaf, sweep_cfg);
    res.min_value = res.node.report.min_value;
    res.argmin_coords.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      res.argmin_coords[a] = (a == axis) ? res.node.report.argmin : *fixed[a];
    }
    return res;
  }

  struct ChildEntry {
    double min_value;
    std::vector<std::int64_t> argmin_coords;
  };
  std::unordered_map<std::int64_t, ChildEntry> solved;

  const Objective sweep_value([&](const IntPoint& p) {
    const std::int64_t l = p[0];
    if (ctx.cfg.memoize) {
      auto it = solved.find(l);
      if (it != solved.end()) return it->second.min_value;
    }
    fixed[axis] = l;
    ArpSubResult child = arp_solve_level(ctx, level - 1, fixed, l);
    fixed[axis] = std::nullopt;
    res.node.children.push_back(std::move(child.node));
    solved[l] = ChildEntry{child.min_value, std::move(child.argmin_coords)};
    return solved[l].min_value;
  });

  res.node.report = solve_1d(sweep_axis, sweep_value, sweep_cfg);
  res.min_value = res.node.report.min_value;
  res.argmin_coords = solved.at(res.node.report.argmin).argmin_coords;
  return res;
}

inline void collect_visited(const ArpTraceNode& node, std::size_t depth,
                            std::vector<std::set<std::int64_t>>& levels) {
  if (levels.size() <= depth) levels.resize(depth + 1);
  levels[depth].insert(node.report.visited.begin(), node.report.visited.end());
  for (const auto& child : node.children) collect_visited(child, depth + 1, levels);
}

inline std::vector<std::size_t> resolve_axis_order(const BoxDomain& d,
                                                   const std::vector<std::size_t>& order) {
  const std::size_t n = d.dimension();
  if (order.empty()) {
    std::vector<std::size_t> identity(n);
    std::iota(identity.begin(), identity.end(), 0);
    return identity;
  }
  if (order.size() != n) {
    throw ArgumentError("axis_order must list every axis exactly once");
  }
  std::vector<bool> seen(n, false);
  for (std::size_t a : order) {
    if (a >= n || seen[a]) {
      throw ArgumentError("axis_order must be a permutation of 0.." +
                          std::to_string(n - 1));
    }
    seen[a] = true;
  }
  return order;
}

} // namespace detail

/// Minimizes f over a product box: a 1-D sweep on the last axis of the
/// order, where each sweep value is the recursively solved minimum over the
/// remaining axes. Sound whenever (d, f) satisfies the pair inequality at
/// cfg.C, because conditional pairs inherit the constant.
inline ArpReport solve_arp(const BoxDomain& d, const Objective& f,
                           const ArpConfig& cfg) {
  if (cfg.C < 0.0) throw ArgumentError("solve_arp: C must be non-negative");
  detail::ArpContext ctx{d, f, cfg, detail::resolve_axis_order(d, cfg.axis_order)};
  for (const auto& [axis, value] : cfg.start_points) {
    if (axis >= d.dimension()) {
      throw ArgumentError("start point given for nonexistent axis " +
                          std::to_string(axis));
    }
    if (!d.axis(axis).contains(value)) {
      throw ArgumentError("start point " + std::to_string(value) +
                          " outside axis " + std::to_string(axis));
    }
  }

  const std::uint64_t calls_before = f.eval_count();
  std::vector<std::optional<std::int64_t>> fixed(d.dimension());
  detail::ArpSubResult top =
      detail::arp_solve_level(ctx, d.dimension() - 1, fixed, std::nullopt);

  std::vector<std::set<std::int64_t>> levels;
  detail::collect_visited(top.node, 0, levels);
  std::vector<std::vector<std::int64_t>> per_level;
  per_level.reserve(levels.size());
  for (const auto& s : levels) per_level.emplace_back(s.begin(), s.end());

  return ArpReport{IntPoint(std::move(top.argmin_coords)), top.min_value,
                   f.eval_count() - calls_before, std::move(per_level),
                   std::move(top.node)};
}

/// Value of the conditional function: the objective at the point when every
/// axis is pinned, otherwise the minimum over the free axes (solved
/// recursively).
inline double conditional_value(const ConditionalProblem& p, const ArpConfig& cfg = {}) {
  const std::size_t n = p.base.dimension();
  for (const auto& [axis, value] : p.fixed) {
    if (axis >= n) {
      throw ArgumentError("conditional_value: fixed axis " + std::to_string(axis) +
                          " out of range");
    }
    if (!p.base.axis(axis).contains(value)) {
      throw ArgumentError("conditional_value: fixed value " + std::to_string(value) +
                          " outside axis " + std::to_string(axis));
    }
  }

  std::vector<std::size_t> free_axes;
  for (std::size_t a = 0; a < n; ++a) {
    if (!p.fixed.count(a)) free_axes.push_back(a);
  }

  if (free_axes.empty()) {
    std::vector<std::int64_t> c(n);
    for (const auto& [axis, value] : p.fixed) c[axis] = value;
    return p.objective(IntPoint(std::move(c)));
  }

  std::vector<IntervalDomain> sub_axes;
  sub_axes.reserve(free_axes.size());
  for (std::size_t a : free_axes) sub_axes.push_back(p.base.axis(a));
  const BoxDomain sub_box(std::move(sub_axes));

  const Objective embedded([&](const IntPoint& q) {
    std::vector<std::int64_t> c(n);
    for (const auto& [axis, value] : p.fixed) c[axis] = value;
    for (std::size_t i = 0; i < free_axes.size(); ++i) c[free_axes[i]] = q[i];
    return p.objective(IntPoint(std::move(c)));
  });

  // reindex config entries from base axes to sub-box axes
  ArpConfig sub_cfg;
  sub_cfg.C = cfg.C;
  sub_cfg.memoize = cfg.memoize;
  sub_cfg.value_tolerance = cfg.value_tolerance;
  std::map<std::size_t, std::size_t> base_to_sub;
  for (std::size_t i = 0; i < free_axes.size(); ++i) base_to_sub[free_axes[i]] = i;
  for (std::size_t a : cfg.axis_order) {
    auto it = base_to_sub.find(a);
    if (it != base_to_sub.end()) sub_cfg.axis_order.push_back(it->second);
  }
  for (const auto& [axis, value] : cfg.start_points) {
    auto it = base_to_sub.find(axis);
    if (it != base_to_sub.end()) sub_cfg.start_points[it->second] = value;
  }

  return solve_arp(sub_box, embedded, sub_cfg).min_value;
}

/// Test harness: the conditional pair obtained by keeping `argument_axes`
/// as arguments (and minimizing over the rest, by exhaustive scan) must not
/// need a larger constant than the full pair.
inline bool check_conditional_inheritance(const BoxDomain& d, const Objective& f,
                                          std::vector<std::size_t> argument_axes,
                                          const OracleConfig& cfg = {}) {
  const std::size_t n = d.dimension();
  if (argument_axes.empty()) {
    throw ArgumentError("check_conditional_inheritance: need at least one argument axis");
  }
  std::sort(argument_axes.begin(), argument_axes.end());
  argument_axes.erase(std::unique(argument_axes.begin(), argument_axes.end()),
                      argument_axes.end());
  if (argument_axes.back() >= n) {
    throw ArgumentError("check_conditional_inheritance: axis out of range");
  }

  const double full_C = minimal_C(Domain{d}, f, cfg).minimal_C;

  std::vector<std::size_t> free_axes;
  for (std::size_t a = 0; a < n; ++a) {
    if (!std::binary_search(argument_axes.begin(), argument_axes.end(), a)) {
      free_axes.push_back(a);
    }
  }
  if (free_axes.empty()) return true; // the conditional pair is the pair itself

  std::vector<IntervalDomain> arg_axes_dom;
  for (std::size_t a : argument_axes) arg_axes_dom.push_back(d.axis(a));
  const BoxDomain arg_box(std::move(arg_axes_dom));

  std::vector<IntervalDomain> free_axes_dom;
  for (std::size_t a : free_axes) free_axes_dom.push_back(d.axis(a));
  const BoxDomain free_box(std::move(free_axes_dom));

  const Objective conditional([&, argument_axes, free_axes](const IntPoint& args) {
    std::vector<std::int64_t> c(n);
    for (std::size_t i = 0; i < argument_axes.size(); ++i) {
      c[argument_axes[i]] = args[i];
    }
    double best = 0.0;
    bool first = true;
    for_each_point(Domain{free_box}, [&](const IntPoint& q) {
      for (std::size_t i = 0; i < free_axes.size(); ++i) c[free_axes[i]] = q[i];
      const double v = f(IntPoint(c));
      if (first || v < best) {
        best = v;
        first = false;
      }
    });
    return best;
  });

  const double cond_C = minimal_C(Domain{arg_box}, conditional, cfg).minimal_C;
  return cond_C <= full_C + cfg.tolerance;
}

} // namespace ameso

#endif // AMESO_ARP_HPP
