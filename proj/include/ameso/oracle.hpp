#ifndef AMESO_ORACLE_HPP
#define AMESO_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ameso/domain.hpp"
#include "ameso/errors.hpp"
#include "ameso/objective.hpp"
#include "ameso/point.hpp"

namespace ameso {

struct OracleConfig {
  /// Enumeration cap for set checks and brute-force scans.
  std::uint64_t point_cap = 10'000;
  /// Cap on unordered point pairs examined by pair exhaustion.
  std::uint64_t pair_cap = 100'000'000;
  /// Absolute tolerance for sign classification of real-valued deficiencies.
  double tolerance = 1e-9;
};

/// Result of pair exhaustion: the smallest admissible relaxation constant,
/// its witness pair, and the raw (unclamped) maximum deficiency.
struct AmesoCertificate {
  bool is_ameso_set = false;
  double minimal_C = 0.0;
  double raw_max_deficiency = 0.0;
  std::optional<std::pair<IntPoint, IntPoint>> witness;
  std::uint64_t pairs_checked = 0;
};

struct BruteForceResult {
  std::vector<IntPoint> argmin_set; // every minimizer, lexicographic order
  double min_value = 0.0;
  std::uint64_t evaluations = 0;
};

namespace detail {

/// Flattened snapshot of a finite domain: coordinates in enumeration order
/// plus a position lookup that avoids constructing IntPoints in hot loops.
struct PointTable {
  explicit PointTable(const Domain& d) : domain(&d), dim(ameso::dimension(d)) {
    count = static_cast<std::size_t>(domain_size(d));
    coords.reserve(count * dim);
    for_each_point(d, [&](const IntPoint& p) {
      coords.insert(coords.end(), p.coords().begin(), p.coords().end());
    });
  }

  const std::int64_t* row(std::size_t i) const { return coords.data() + i * dim; }

  IntPoint point(std::size_t i) const {
    return IntPoint(std::vector<std::int64_t>(row(i), row(i) + dim));
  }

  bool position(const std::int64_t* c, std::uint64_t& out) const {
    return std::visit(
        [&](const auto& dom) -> bool {
          using T = std::decay_t<decltype(dom)>;
          if constexpr (std::is_same_v<T, IntervalDomain>) {
            if (!dom.contains(c[0])) return false;
            out = static_cast<std::uint64_t>(c[0] - dom.lower());
            return true;
          } else if constexpr (std::is_same_v<T, BoxDomain>) {
            std::uint64_t idx = 0;
            for (std::size_t i = 0; i < dim; ++i) {
              const auto& ax = dom.axis(i);
              if (!ax.contains(c[i])) return false;
              idx = idx * ax.size() + static_cast<std::uint64_t>(c[i] - ax.lower());
            }
            out = idx;
            return true;
          } else {
            // binary search over the flat sorted rows
            std::size_t lo = 0, hi = count;
            while (lo < hi) {
              const std::size_t mid = lo + (hi - lo) / 2;
              const std::int64_t* r = row(mid);
              int cmp = 0;
              for (std::size_t i = 0; i < dim; ++i) {
                if (r[i] != c[i]) {
                  cmp = r[i] < c[i] ? -1 : 1;
                  break;
                }
              }
              if (cmp < 0) {
                lo = mid + 1;
              } else if (cmp > 0) {
                hi = mid;
              } else {
                out = mid;
                return true;
              }
            }
            return false;
          }
        },
        *domain);
  }

  const Domain* domain;
  std::size_t dim;
  std::size_t count;
  std::vector<std::int64_t> coords;
};

inline void check_point_cap(const Domain& d, const OracleConfig& cfg, const char* op) {
  const std::uint64_t n = domain_size(d);
  if (n > cfg.point_cap) {
    throw ResourceError(std::string(op) + ": domain has " + std::to_string(n) +
                        " points, exceeding the point cap of " +
                        std::to_string(cfg.point_cap));
  }
}

inline void check_pair_cap(std::uint64_t n, const OracleConfig& cfg, const char* op) {
  // unordered pairs including x = y
  const std::uint64_t pairs = n * (n + 1) / 2;
  if (pairs > cfg.pair_cap) {
    throw ResourceError(std::string(op) + ": " + std::to_string(pairs) +
                        " point pairs exceed the pair cap of " +
                        std::to_string(cfg.pair_cap));
  }
}

} // namespace detail

/// First pair whose floor- or ceil-midpoint escapes the set, if any.
inline std::optional<std::pair<IntPoint, IntPoint>> ameso_violation(
    const Domain& d, const OracleConfig& cfg = {}) {
  detail::check_point_cap(d, cfg, "ameso_violation");
  const detail::PointTable tab(d);
  std::vector<std::int64_t> up(tab.dim), down(tab.dim);
  std::uint64_t pos = 0;
  for (std::size_t i = 0; i < tab.count; ++i) {
    const std::int64_t* x = tab.row(i);
    for (std::size_t j = i; j < tab.count; ++j) {
      const std::int64_t* y = tab.row(j);
      for (std::size_t k = 0; k < tab.dim; ++k) {
        up[k] = ceil_avg(x[k], y[k]);
        down[k] = floor_avg(x[k], y[k]);
      }
      if (!tab.position(up.data(), pos) || !tab.position(down.data(), pos)) {
        return std::make_pair(tab.point(i), tab.point(j));
      }
    }
  }
  return std::nullopt;
}

/// True iff every pair's floor- and ceil-midpoints stay inside d.
inline bool is_ameso_set(const Domain& d, const OracleConfig& cfg = {}) {
  return !ameso_violation(d, cfg).has_value();
}

/// Pair exhaustion: evaluates f once per point, then scans all unordered
/// pairs (including x = y) for the maximum deficiency
///   f(ceil((x+y)/2)) + f(floor((x+y)/2)) - f(x) - f(y).
/// Throws DomainError if some midpoint escapes the set.
inline AmesoCertificate minimal_C(const Domain& d, const Objective& f,
                                  const OracleConfig& cfg = {}) {
  detail::check_point_cap(d, cfg, "minimal_C");
  const detail::PointTable tab(d);
  detail::check_pair_cap(tab.count, cfg, "minimal_C");

  std::vector<double> vals(tab.count);
  for (std::size_t i = 0; i < tab.count; ++i) vals[i] = f(tab.point(i));

  AmesoCertificate cert;
  cert.is_ameso_set = true;
  std::vector<std::int64_t> up(tab.dim), down(tab.dim);
  double max_def = 0.0; // the x = y pairs contribute exactly 0
  std::size_t wi = 0, wj = 0;
  bool have_witness = false;
  for (std::size_t i = 0; i < tab.count; ++i) {
    const std::int64_t* x = tab.row(i);
    for (std::size_t j = i; j < tab.count; ++j) {
      const std::int64_t* y = tab.row(j);
      for (std::size_t k = 0; k < tab.dim; ++k) {
        up[k] = ceil_avg(x[k], y[k]);
        down[k] = floor_avg(x[k], y[k]);
      }
      std::uint64_t pu = 0, pd = 0;
      if (!tab.position(up.data(), pu) || !tab.position(down.data(), pd)) {
        std::ostringstream oss;
        oss << "minimal_C: domain is not midpoint-closed; pair " << tab.point(i)
            << ", " << tab.point(j) << " has an escaping midpoint";
        throw DomainError(oss.str());
      }
      const double def = vals[pu] + vals[pd] - vals[i] - vals[j];
      ++cert.pairs_checked;
      if (!have_witness || def > max_def) {
        max_def = def;
        wi = i;
        wj = j;
        have_witness = true;
      }
    }
  }
  cert.raw_max_deficiency = max_def;
  cert.minimal_C = std::max(0.0, max_def);
  if (have_witness) cert.witness = std::make_pair(tab.point(wi), tab.point(wj));
  return cert;
}

/// True iff the pair inequality holds at the given C for every pair,
/// up to cfg.tolerance.
inline bool satisfies_deficiency_bound(const Domain& d, const Objective& f, double C,
                                       const OracleConfig& cfg = {}) {
  return minimal_C(d, f, cfg).raw_max_deficiency <= C + cfg.tolerance;
}

/// The C = 0 case of the pair inequality.
inline bool is_midpoint_convex(const Domain& d, const Objective& f,
                               const OracleConfig& cfg = {}) {
  return minimal_C(d, f, cfg).raw_max_deficiency <= cfg.tolerance;
}

/// Exhaustive scan; evaluates every point exactly once.
inline BruteForceResult brute_force_min(const Domain& d, const Objective& f,
                                        const OracleConfig& cfg = {}) {
  detail::check_point_cap(d, cfg, "brute_force_min");
  BruteForceResult res;
  bool first = true;
  for_each_point(d, [&](const IntPoint& p) {
    const double v = f(p);
    ++res.evaluations;
    if (first || v < res.min_value) {
      res.min_value = v;
      res.argmin_set.clear();
      res.argmin_set.push_back(p);
      first = false;
    } else if (v == res.min_value) {
      res.argmin_set.push_back(p);
    }
  });
  return res;
}

/// g(y) = sum_i weights[i] * fs[i](y_i) from 1-D component objectives.
inline Objective separable_sum(std::vector<Objective> fs, std::vector<double> weights) {
  if (fs.empty() || fs.size() != weights.size()) {
    throw ArgumentError("separable_sum: need equally many component objectives and weights");
  }
  for (double w : weights) {
    if (w < 0.0) throw ArgumentError("separable_sum: weights must be non-negative");
  }
  return Objective([fs = std::move(fs), weights = std::move(weights)](const IntPoint& p) {
    if (p.dimension() != fs.size()) {
      throw DimensionError("separable_sum objective: point dimension " +
                           std::to_string(p.dimension()) + " vs " +
                           std::to_string(fs.size()) + " components");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      acc += weights[i] * fs[i](IntPoint::scalar(p[i]));
    }
    return acc;
  });
}

/// True iff f(x+a) + f(x-a) + C >= 2 f(x) for every x, a with
/// x, x+a, x-a all in d (up to cfg.tolerance).
inline bool plus_minus_check(const Domain& d, const Objective& f, double C,
                             const OracleConfig& cfg = {}) {
  detail::check_point_cap(d, cfg, "plus_minus_check");
  const detail::PointTable tab(d);
  detail::check_pair_cap(tab.count, cfg, "plus_minus_check");

  std::vector<double> vals(tab.count);
  for (std::size_t i = 0; i < tab.count; ++i) vals[i] = f(tab.point(i));

  // Every admissible (x, a) appears as u = x+a, v = x-a with u+v even
  // componentwise and the exact midpoint x inside d.
  std::vector<std::int64_t> mid(tab.dim);
  for (std::size_t i = 0; i < tab.count; ++i) {
    const std::int64_t* u = tab.row(i);
    for (std::size_t j = i; j < tab.count; ++j) {
      const std::int64_t* v = tab.row(j);
      bool even = true;
      for (std::size_t k = 0; k < tab.dim; ++k) {
        if (((u[k] ^ v[k]) & 1) != 0) {
          even = false;
          break;
        }
        mid[k] = floor_avg(u[k], v[k]);
      }
      if (!even) continue;
      std::uint64_t pm = 0;
      if (!tab.position(mid.data(), pm)) continue;
      if (vals[i] + vals[j] + C < 2.0 * vals[pm] - cfg.tolerance) return false;
    }
  }
  return true;
}

} // namespace ameso

#endif // AMESO_ORACLE_HPP
