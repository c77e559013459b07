#ifndef AMESO_MODELS_HPP
#define AMESO_MODELS_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ameso/domain.hpp"
#include "ameso/errors.hpp"
#include "ameso/objective.hpp"

namespace ameso {

/// A finite domain with one stored value per point, in enumeration order.
class TabulatedObjective {
public:
  TabulatedObjective(Domain domain, std::vector<double> values)
      : domain_(std::move(domain)), values_(std::move(values)) {
    if (values_.size() != domain_size(domain_)) {
      throw ArgumentError("TabulatedObjective: " + std::to_string(values_.size()) +
                          " values for a domain of " +
                          std::to_string(domain_size(domain_)) + " points");
    }
  }

  /// Builds from unordered (point, value) pairs; every domain point must be
  /// covered exactly once and no key may fall outside the domain.
  static TabulatedObjective from_pairs(
      Domain domain, const std::vector<std::pair<IntPoint, double>>& pairs) {
    const std::uint64_t n = domain_size(domain);
    std::vector<double> values(n);
    std::vector<bool> seen(n, false);
    for (const auto& [p, v] : pairs) {
      const auto pos = position_of(domain, p);
      if (!pos) {
        std::ostringstream oss;
        oss << "TabulatedObjective: point " << p << " outside the domain";
        throw ArgumentError(oss.str());
      }
      if (seen[*pos]) {
        std::ostringstream oss;
        oss << "TabulatedObjective: duplicate value for point " << p;
        throw ArgumentError(oss.str());
      }
      seen[*pos] = true;
      values[*pos] = v;
    }
    if (pairs.size() != n) {
      throw ArgumentError("TabulatedObjective: " + std::to_string(pairs.size()) +
                          " pairs for a domain of " + std::to_string(n) + " points");
    }
    return TabulatedObjective(std::move(domain), std::move(values));
  }

  const Domain& domain() const noexcept { return domain_; }
  const std::vector<double>& values() const noexcept { return values_; }

  double value_at(const IntPoint& p) const {
    const auto pos = position_of(domain_, p);
    if (!pos) {
      std::ostringstream oss;
      oss << "TabulatedObjective: point " << p << " outside the domain";
      throw ArgumentError(oss.str());
    }
    return values_[*pos];
  }

  /// Wraps the table as an Objective with a fresh evaluation counter.
  Objective objective() const {
    return Objective([table = *this](const IntPoint& p) { return table.value_at(p); });
  }

private:
  Domain domain_;
  std::vector<double> values_;
};

/// x^4/4 - x^3 + x
inline double quartic(std::int64_t x) {
  const double xd = static_cast<double>(x);
  const double x2 = xd * xd;
  return 0.25 * x2 * x2 - x2 * xd + xd;
}

/// The 31-point table behind the built-in problem `example5`.
inline TabulatedObjective example5_table() {
  return TabulatedObjective(IntervalDomain(1, 31),
                            {7, 9, 7, 8,  7,  8,  9, 8, 7, 8, 9, 8, 7, 8, 6, 7,
                             4, 5, 6, 7,  7,  6,  7, 8, 9, 10, 11, 9, 8, 7, 8});
}

/// The smooth 2-D surface behind the built-in problem `example6`:
/// 88 e^{1/x1} + 99 e^{2/x2} + |sin(x1 x2)| / 2, defined for x1, x2 >= 1.
inline double example6_surface(std::int64_t x1, std::int64_t x2) {
  if (x1 <= 0 || x2 <= 0) {
    throw ArgumentError("example6_surface requires positive coordinates");
  }
  return 88.0 * std::exp(1.0 / static_cast<double>(x1)) +
         99.0 * std::exp(2.0 / static_cast<double>(x2)) +
         std::fabs(std::sin(static_cast<double>(x1) * static_cast<double>(x2))) / 2.0;
}

/// Shipping plan: W units, three package options with capacities w and
/// per-package costs c, ordered w1<w2<w3 and c1<c2<c3 with strictly
/// decreasing unit cost c_i/w_i. Any residual after using z1, z2 packages of
/// the first two options goes to option 3. Options 1 and 2 are each limited
/// to half the load (z_i w_i <= W/2), which keeps both axes non-trivial
/// whenever W >= 2 w2.
class KnapsackInstance {
public:
  KnapsackInstance(std::int64_t units, std::array<std::int64_t, 3> capacities,
                   std::array<std::int64_t, 3> costs)
      : units_(units), w_(capacities), c_(costs) {
    if (units_ <= 0) throw ArgumentError("knapsack: W must be positive");
    for (int i = 0; i < 3; ++i) {
      if (w_[i] <= 0 || c_[i] <= 0) {
        throw ArgumentError("knapsack: capacities and costs must be positive");
      }
    }
    if (!(w_[0] < w_[1] && w_[1] < w_[2])) {
      throw ArgumentError("knapsack: capacities must satisfy w1 < w2 < w3");
    }
    if (!(c_[0] < c_[1] && c_[1] < c_[2])) {
      throw ArgumentError("knapsack: costs must satisfy c1 < c2 < c3");
    }
    // unit-cost chain c1/w1 > c2/w2 > c3/w3, compared cross-multiplied
    const auto cross = [](std::int64_t a, std::int64_t b) {
      return static_cast<__int128>(a) * static_cast<__int128>(b);
    };
    if (!(cross(c_[0], w_[1]) > cross(c_[1], w_[0]) &&
          cross(c_[1], w_[2]) > cross(c_[2], w_[1]))) {
      throw ArgumentError("knapsack: unit costs must satisfy c1/w1 > c2/w2 > c3/w3");
    }
    if (units_ < 2 * w_[1]) {
      throw ArgumentError("knapsack: W must be at least 2*w2 = " +
                          std::to_string(2 * w_[1]) +
                          ", otherwise an option has no feasible choice");
    }
  }

  std::int64_t units() const noexcept { return units_; }
  const std::array<std::int64_t, 3>& capacities() const noexcept { return w_; }
  const std::array<std::int64_t, 3>& costs() const noexcept { return c_; }

  friend bool operator==(const KnapsackInstance&, const KnapsackInstance&) = default;

private:
  std::int64_t units_;
  std::array<std::int64_t, 3> w_;
  std::array<std::int64_t, 3> c_;
};

/// Feasible package counts: [0, floor(W/(2 w1))] x [0, floor(W/(2 w2))].
inline BoxDomain knapsack_domain(const KnapsackInstance& inst) {
  const std::int64_t W = inst.units();
  const auto& w = inst.capacities();
  return BoxDomain({IntervalDomain(0, W / (2 * w[0])), IntervalDomain(0, W / (2 * w[1]))});
}

/// c1 z1 + c2 z2 + c3 ceil((W - w1 z1 - w2 z2) / w3), exact integer arithmetic.
inline std::int64_t knapsack_cost(const KnapsackInstance& inst, std::int64_t z1,
                                  std::int64_t z2) {
  const std::int64_t W = inst.units();
  const auto& w = inst.capacities();
  const auto& c = inst.costs();
  if (z1 < 0 || z2 < 0 || 2 * z1 * w[0] > W || 2 * z2 * w[1] > W) {
    throw ArgumentError("knapsack_cost: (" + std::to_string(z1) + "," +
                        std::to_string(z2) + ") violates z_i w_i <= W/2");
  }
  const std::int64_t residual = W - w[0] * z1 - w[1] * z2;
  const std::int64_t packages3 = (residual + w[2] - 1) / w[2]; // residual >= 0
  return c[0] * z1 + c[1] * z2 + c[2] * packages3;
}

inline Objective knapsack_objective(const KnapsackInstance& inst) {
  return Objective([inst](const IntPoint& p) {
    if (p.dimension() != 2) {
      throw DimensionError("knapsack objective expects 2-dimensional points");
    }
    return static_cast<double>(knapsack_cost(inst, p[0], p[1]));
  });
}

/// Floor/ceil arithmetic facts the knapsack certificate rests on:
///   ceil(x1) + ceil(x2) <= ceil(x1+x2) + 1
///   floor(x1) + floor(x2) <= floor((x1+x2)/2) + ceil((x1+x2)/2)
///                         <= ceil(x1) + ceil(x2)
/// and, for integer inputs, the middle term equals x1 + x2 exactly.
inline bool floor_ceil_chain_holds(double x1, double x2) {
  const double s = x1 + x2;
  const double c1 = std::ceil(x1), c2 = std::ceil(x2);
  const double f1 = std::floor(x1), f2 = std::floor(x2);
  const double mid_sum = std::floor(s / 2.0) + std::ceil(s / 2.0);
  if (!(c1 + c2 <= std::ceil(s) + 1.0)) return false;
  if (!(f1 + f2 <= mid_sum && mid_sum <= c1 + c2)) return false;
  if (x1 == f1 && x2 == f2 && mid_sum != s) return false;
  return true;
}

} // namespace ameso

#endif // AMESO_MODELS_HPP
