#ifndef AMESO_DOMAIN_HPP
#define AMESO_DOMAIN_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ameso/errors.hpp"
#include "ameso/point.hpp"

namespace ameso {

/// The integers {lower, lower+1, ..., upper}. Singletons are excluded:
/// lower < upper is required.
class IntervalDomain {
public:
  IntervalDomain(std::int64_t lower, std::int64_t upper)
      : lower_(lower), upper_(upper) {
    if (lower >= upper) {
      throw ArgumentError("IntervalDomain requires lower < upper, got [" +
                          std::to_string(lower) + "," + std::to_string(upper) + "]");
    }
  }

  std::int64_t lower() const noexcept { return lower_; }
  std::int64_t upper() const noexcept { return upper_; }

  std::uint64_t size() const noexcept {
    return static_cast<std::uint64_t>(upper_ - lower_) + 1;
  }

  bool contains(std::int64_t v) const noexcept { return lower_ <= v && v <= upper_; }

  /// ceil((lower+upper)/2), the default sweep start.
  std::int64_t midpoint() const noexcept { return ceil_avg(lower_, upper_); }

  friend bool operator==(const IntervalDomain&, const IntervalDomain&) = default;

private:
  std::int64_t lower_;
  std::int64_t upper_;
};

/// A product of intervals, one per dimension. Membership is coordinatewise.
class BoxDomain {
public:
  explicit BoxDomain(std::vector<IntervalDomain> axes) : axes_(std::move(axes)) {
    if (axes_.empty()) throw ArgumentError("BoxDomain requires at least one axis");
  }

  std::size_t dimension() const noexcept { return axes_.size(); }
  const IntervalDomain& axis(std::size_t i) const { return axes_.at(i); }
  const std::vector<IntervalDomain>& axes() const noexcept { return axes_; }

  std::uint64_t size() const {
    std::uint64_t n = 1;
    for (const auto& ax : axes_) {
      if (n > std::numeric_limits<std::uint64_t>::max() / ax.size()) {
        throw ResourceError("BoxDomain size overflows a 64-bit count");
      }
      n *= ax.size();
    }
    return n;
  }

  bool contains(const IntPoint& p) const {
    if (p.dimension() != axes_.size()) {
      throw DimensionError("BoxDomain::contains: point dimension " +
                           std::to_string(p.dimension()) + " vs box dimension " +
                           std::to_string(axes_.size()));
    }
    for (std::size_t i = 0; i < axes_.size(); ++i) {
      if (!axes_[i].contains(p[i])) return false;
    }
    return true;
  }

  friend bool operator==(const BoxDomain&, const BoxDomain&) = default;

private:
  std::vector<IntervalDomain> axes_;
};

/// A finite enumerated point set, held sorted lexicographically and
/// deduplicated. Any finite set is accepted; midpoint closure is a checked
/// property, not a constructor invariant.
class ExplicitSet {
public:
  explicit ExplicitSet(std::vector<IntPoint> pts) : points_(std::move(pts)) {
    if (points_.empty()) throw ArgumentError("ExplicitSet requires at least one point");
    const std::size_t dim = points_.front().dimension();
    for (const auto& p : points_) {
      if (p.dimension() != dim) {
        throw DimensionError("ExplicitSet: mixed point dimensions");
      }
    }
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  }

  std::size_t dimension() const noexcept { return points_.front().dimension(); }
  std::uint64_t size() const noexcept { return points_.size(); }

  /// Sorted lexicographically; this is the enumeration order.
  const std::vector<IntPoint>& points() const noexcept { return points_; }

  bool contains(const IntPoint& p) const {
    if (p.dimension() != dimension()) {
      throw DimensionError("ExplicitSet::contains: point dimension " +
                           std::to_string(p.dimension()) + " vs set dimension " +
                           std::to_string(dimension()));
    }
    return std::binary_search(points_.begin(), points_.end(), p);
  }

  friend bool operator==(const ExplicitSet&, const ExplicitSet&) = default;

private:
  std::vector<IntPoint> points_;
};

using Domain = std::variant<IntervalDomain, BoxDomain, ExplicitSet>;

inline std::size_t dimension(const Domain& d) {
  return std::visit(
      [](const auto& dom) -> std::size_t {
        using T = std::decay_t<decltype(dom)>;
        if constexpr (std::is_same_v<T, IntervalDomain>) {
          return 1;
        } else {
          return dom.dimension();
        }
      },
      d);
}

inline std::uint64_t domain_size(const Domain& d) {
  return std::visit([](const auto& dom) -> std::uint64_t { return dom.size(); }, d);
}

inline bool contains(const Domain& d, const IntPoint& p) {
  return std::visit(
      [&](const auto& dom) -> bool {
        using T = std::decay_t<decltype(dom)>;
        if constexpr (std::is_same_v<T, IntervalDomain>) {
          if (p.dimension() != 1) {
            throw DimensionError("contains: point dimension " +
                                 std::to_string(p.dimension()) +
                                 " vs interval dimension 1");
          }
          return dom.contains(p[0]);
        } else {
          return dom.contains(p);
        }
      },
      d);
}

/// Visits every member exactly once, in lexicographic order.
template <typename Fn>
void for_each_point(const Domain& d, Fn&& fn) {
  std::visit(
      [&](const auto& dom) {
        using T = std::decay_t<decltype(dom)>;
        if constexpr (std::is_same_v<T, IntervalDomain>) {
          for (std::int64_t v = dom.lower(); v <= dom.upper(); ++v) {
            fn(IntPoint::scalar(v));
          }
        } else if constexpr (std::is_same_v<T, BoxDomain>) {
          const auto& axes = dom.axes();
          std::vector<std::int64_t> c(axes.size());
          for (std::size_t i = 0; i < axes.size(); ++i) c[i] = axes[i].lower();
          for (;;) {
            fn(IntPoint(c));
            // odometer: last axis varies fastest
            std::size_t i = axes.size();
            while (i > 0) {
              --i;
              if (c[i] < axes[i].upper()) {
                ++c[i];
                break;
              }
              c[i] = axes[i].lower();
              if (i == 0) return;
            }
          }
        } else {
          for (const auto& p : dom.points()) fn(p);
        }
      },
      d);
}

inline std::vector<IntPoint> points(const Domain& d) {
  std::vector<IntPoint> out;
  out.reserve(domain_size(d));
  for_each_point(d, [&](const IntPoint& p) { out.push_back(p); });
  return out;
}

/// Index of p in enumeration order, or nullopt if p is not a member.
/// O(1) for intervals, O(n) for boxes, O(log m) for explicit sets.
inline std::optional<std::uint64_t> position_of(const Domain& d, const IntPoint& p) {
  return std::visit(
      [&](const auto& dom) -> std::optional<std::uint64_t> {
        using T = std::decay_t<decltype(dom)>;
        if constexpr (std::is_same_v<T, IntervalDomain>) {
          if (p.dimension() != 1 || !dom.contains(p[0])) return std::nullopt;
          return static_cast<std::uint64_t>(p[0] - dom.lower());
        } else if constexpr (std::is_same_v<T, BoxDomain>) {
          if (p.dimension() != dom.dimension()) return std::nullopt;
          std::uint64_t idx = 0;
          for (std::size_t i = 0; i < dom.dimension(); ++i) {
            const auto& ax = dom.axis(i);
            if (!ax.contains(p[i])) return std::nullopt;
            idx = idx * ax.size() + static_cast<std::uint64_t>(p[i] - ax.lower());
          }
          return idx;
        } else {
          if (p.dimension() != dom.dimension()) return std::nullopt;
          const auto& pts = dom.points();
          auto it = std::lower_bound(pts.begin(), pts.end(), p);
          if (it == pts.end() || *it != p) return std::nullopt;
          return static_cast<std::uint64_t>(it - pts.begin());
        }
      },
      d);
}

/// True iff a 1-D explicit set is a contiguous integer range.
inline bool is_interval(const ExplicitSet& s) {
  if (s.dimension() != 1) {
    throw DimensionError("is_interval requires a 1-dimensional set");
  }
  if (s.size() < 2) {
    throw ArgumentError("is_interval requires at least two points");
  }
  const auto& pts = s.points();
  const std::int64_t lo = pts.front()[0];
  const std::int64_t hi = pts.back()[0];
  return static_cast<std::uint64_t>(hi - lo) + 1 == s.size();
}

} // namespace ameso

#endif // AMESO_DOMAIN_HPP
