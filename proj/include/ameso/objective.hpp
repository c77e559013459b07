#ifndef AMESO_OBJECTIVE_HPP
#define AMESO_OBJECTIVE_HPP

#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <sstream>
#include <utility>
#include <vector>

#include "ameso/errors.hpp"
#include "ameso/point.hpp"

namespace ameso {

/// Evaluation contract IntPoint -> real. The wrapped function must be
/// deterministic and finite-valued; each call bumps the evaluation counter
/// by exactly one. Copies share the counter.
class Objective {
public:
  using Fn = std::function<double(const IntPoint&)>;

  explicit Objective(Fn fn, bool lower_bound_declared = true)
      : fn_(std::move(fn)),
        lower_bound_declared_(lower_bound_declared),
        count_(std::make_shared<std::atomic<std::uint64_t>>(0)) {}

  /// Convenience for 1-D objectives written over plain integers.
  static Objective of_scalar(std::function<double(std::int64_t)> fn,
                             bool lower_bound_declared = true) {
    return Objective(
        [fn = std::move(fn)](const IntPoint& p) {
          if (p.dimension() != 1) {
            throw DimensionError("scalar objective evaluated on a " +
                                 std::to_string(p.dimension()) + "-dimensional point");
          }
          return fn(p[0]);
        },
        lower_bound_declared);
  }

  double operator()(const IntPoint& p) const {
    count_->fetch_add(1, std::memory_order_relaxed);
    const double v = fn_(p);
    if (!std::isfinite(v)) {
      std::ostringstream oss;
      oss << "objective returned non-finite value at " << p;
      throw EvaluationError(oss.str());
    }
    return v;
  }

  std::uint64_t eval_count() const noexcept {
    return count_->load(std::memory_order_relaxed);
  }

  bool lower_bound_declared() const noexcept { return lower_bound_declared_; }

private:
  Fn fn_;
  bool lower_bound_declared_;
  std::shared_ptr<std::atomic<std::uint64_t>> count_;
};

} // namespace ameso

#endif // AMESO_OBJECTIVE_HPP
