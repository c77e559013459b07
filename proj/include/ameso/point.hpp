#ifndef AMESO_POINT_HPP
#define AMESO_POINT_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ameso/errors.hpp"

namespace ameso {

/// A point of the n-dimensional integer lattice. The dimension is fixed at
/// construction (n >= 1) and coordinates are immutable afterwards.
class IntPoint {
public:
  explicit IntPoint(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) {
      throw ArgumentError("IntPoint requires at least one coordinate");
    }
  }

  IntPoint(std::initializer_list<std::int64_t> coords)
      : IntPoint(std::vector<std::int64_t>(coords)) {}

  static IntPoint scalar(std::int64_t value) { return IntPoint{value}; }

  std::size_t dimension() const noexcept { return coords_.size(); }

  std::int64_t operator[](std::size_t i) const { return coords_[i]; }

  const std::vector<std::int64_t>& coords() const noexcept { return coords_; }

  friend bool operator==(const IntPoint& a, const IntPoint& b) = default;

  /// Lexicographic order; this is also the enumeration order of domains.
  friend std::strong_ordering operator<=>(const IntPoint& a, const IntPoint& b) {
    return a.coords_ <=> b.coords_;
  }

  friend std::ostream& operator<<(std::ostream& os, const IntPoint& p) {
    os << '(';
    for (std::size_t i = 0; i < p.coords_.size(); ++i) {
      if (i > 0) os << ',';
      os << p.coords_[i];
    }
    return os << ')';
  }

private:
  std::vector<std::int64_t> coords_;
};

inline void require_same_dimension(const IntPoint& x, const IntPoint& y,
                                   const char* op) {
  if (x.dimension() != y.dimension()) {
    throw DimensionError(std::string(op) + ": dimension mismatch (" +
                         std::to_string(x.dimension()) + " vs " +
                         std::to_string(y.dimension()) + ")");
  }
}

/// floor((a+b)/2) with mathematical rounding toward -inf, overflow-free.
inline std::int64_t floor_avg(std::int64_t a, std::int64_t b) noexcept {
  return (a & b) + ((a ^ b) >> 1);
}

/// ceil((a+b)/2) with mathematical rounding toward +inf, overflow-free.
inline std::int64_t ceil_avg(std::int64_t a, std::int64_t b) noexcept {
  return floor_avg(a, b) + ((a ^ b) & 1);
}

/// Componentwise floor((x_i+y_i)/2).
inline IntPoint midpoint_floor(const IntPoint& x, const IntPoint& y) {
  require_same_dimension(x, y, "midpoint_floor");
  std::vector<std::int64_t> c(x.dimension());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = floor_avg(x[i], y[i]);
  return IntPoint(std::move(c));
}

/// Componentwise ceil((x_i+y_i)/2).
inline IntPoint midpoint_ceil(const IntPoint& x, const IntPoint& y) {
  require_same_dimension(x, y, "midpoint_ceil");
  std::vector<std::int64_t> c(x.dimension());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = ceil_avg(x[i], y[i]);
  return IntPoint(std::move(c));
}

} // namespace ameso

#endif // AMESO_POINT_HPP
