#ifndef AMESO_SOLVER1D_HPP
#define AMESO_SOLVER1D_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ameso/domain.hpp"
#include "ameso/errors.hpp"
#include "ameso/objective.hpp"

namespace ameso {

enum class RightStop { none, threshold, exhausted };
enum class LeftPhase { not_entered, skipped_by_step4, threshold, exhausted };

enum class TraceSide { start, right, check, left };
enum class TraceAction { init, visit, improve, threshold, skip, resume };

inline const char* to_string(RightStop s) {
  switch (s) {
    case RightStop::threshold: return "threshold";
    case RightStop::exhausted: return "exhausted";
    default: return "none";
  }
}

inline const char* to_string(LeftPhase p) {
  switch (p) {
    case LeftPhase::skipped_by_step4: return "skipped_by_step4";
    case LeftPhase::threshold: return "threshold";
    case LeftPhase::exhausted: return "exhausted";
    default: return "not_entered";
  }
}

inline const char* to_string(TraceSide s) {
  switch (s) {
    case TraceSide::start: return "start";
    case TraceSide::right: return "right";
    case TraceSide::check: return "check";
    default: return "left";
  }
}

inline const char* to_string(TraceAction a) {
  switch (a) {
    case TraceAction::init: return "init";
    case TraceAction::visit: return "visit";
    case TraceAction::improve: return "improve";
    case TraceAction::threshold: return "threshold";
    case TraceAction::skip: return "skip";
    default: return "continue";
  }
}

struct TraceRow {
  std::uint32_t step = 0;
  TraceSide side = TraceSide::start;
  std::int64_t point = 0;
  double value = 0.0;
  std::int64_t l_star = 0; // incumbent after this row's action
  TraceAction action = TraceAction::init;
};

struct Solve1DConfig {
  double C = 0.0;
  /// Sweep start; defaults to the domain midpoint ceil((lower+upper)/2).
  std::optional<std::int64_t> start;
  /// Guard for threshold comparisons against C (f(l) - f(l*) >= C - eps).
  double value_tolerance = 0.0;
};

struct SolveReport {
  std::int64_t argmin = 0;
  double min_value = 0.0;
  std::vector<std::int64_t> visited; // sorted ascending, always contiguous
  std::uint64_t evaluations = 0;
  RightStop stop_right = RightStop::none;
  LeftPhase left_phase = LeftPhase::not_entered;
  /// The sweep itself never proves that C admits the pair inequality;
  /// callers that verified C against the oracle may clear this.
  bool certificate_unverified = true;
  std::vector<TraceRow> trace;
};

/// Bidirectional sweep from the start point. Ascends to the right until the
/// value gap against the incumbent reaches C (or the end), consults the
/// already-visited points left of the incumbent, and only then descends to
/// the left under the same gap rule. When C is at least the minimal
/// admissible constant of (d, f), the returned minimum is global.
inline SolveReport solve_1d(const IntervalDomain& d, const Objective& f,
                            const Solve1DConfig& cfg) {
  if (cfg.C < 0.0) throw ArgumentError("solve_1d: C must be non-negative");
  if (cfg.value_tolerance < 0.0) {
    throw ArgumentError("solve_1d: value_tolerance must be non-negative");
  }
  const std::int64_t start = cfg.start.value_or(d.midpoint());
  if (!d.contains(start)) {
    throw ArgumentError("solve_1d: start point " + std::to_string(start) +
                        " outside [" + std::to_string(d.lower()) + "," +
                        std::to_string(d.upper()) + "]");
  }

  const double gap = cfg.C - cfg.value_tolerance;
  SolveReport rep;
  std::unordered_map<std::int64_t, double> value_at;
  value_at.reserve(64);
  std::uint32_t step = 0;

  const auto eval = [&](std::int64_t x) {
    const double v = f(IntPoint::scalar(x));
    value_at.emplace(x, v);
    rep.visited.push_back(x);
    return v;
  };

  std::int64_t incumbent = start;
  eval(start);
  rep.trace.push_back({++step, TraceSide::start, start, value_at[start], incumbent,
                       TraceAction::init});

  // ascending side
  for (std::int64_t x = start + 1; x <= d.upper(); ++x) {
    const double v = eval(x);
    const double diff = v - value_at[incumbent];
    TraceAction action = TraceAction::visit;
    if (diff >= gap) {
      rep.stop_right = RightStop::threshold;
      action = TraceAction::threshold;
    } else if (diff < 0.0) {
      incumbent = x;
      action = TraceAction::improve;
    }
    rep.trace.push_back({++step, TraceSide::right, x, v, incumbent, action});
    if (rep.stop_right == RightStop::threshold) break;
  }
  if (rep.stop_right == RightStop::none) rep.stop_right = RightStop::exhausted;

  // revisit the stored values left of the incumbent before sweeping left
  bool settled = false;
  {
    bool found = false;
    std::int64_t peak_point = 0;
    double peak_value = 0.0;
    for (const auto& [x, v] : value_at) {
      if (x >= incumbent) continue;
      if (!found || v > peak_value || (v == peak_value && x > peak_point)) {
        found = true;
        peak_point = x;
        peak_value = v;
      }
    }
    if (found) {
      const bool stop = peak_value - value_at[incumbent] >= gap;
      rep.trace.push_back({++step, TraceSide::check, peak_point, peak_value, incumbent,
                           stop ? TraceAction::skip : TraceAction::resume});
      if (stop) {
        rep.left_phase = LeftPhase::skipped_by_step4;
        settled = true;
      }
    }
  }

  // descending side
  if (!settled) {
    if (start == d.lower()) {
      rep.left_phase = LeftPhase::not_entered;
    } else {
      rep.left_phase = LeftPhase::exhausted;
      for (std::int64_t x = start - 1; x >= d.lower(); --x) {
        const double v = eval(x);
        const double diff = v - value_at[incumbent];
        TraceAction action = TraceAction::visit;
        if (diff >= gap) {
          rep.left_phase = LeftPhase::threshold;
          action = TraceAction::threshold;
        } else if (diff < 0.0) {
          incumbent = x;
          action = TraceAction::improve;
        }
        rep.trace.push_back({++step, TraceSide::left, x, v, incumbent, action});
        if (rep.left_phase == LeftPhase::threshold) break;
      }
    }
  }

  rep.argmin = incumbent;
  rep.min_value = value_at[incumbent];
  rep.evaluations = rep.visited.size();
  std::sort(rep.visited.begin(), rep.visited.end());
  return rep;
}

/// Gap test certifying that [x_s, z] already contains a global minimizer:
/// f(z) - f(x_prime) >= C for some x_prime < z.
inline bool check_stop_right(std::int64_t x_prime, std::int64_t z, const Objective& f,
                             double C, double tolerance = 0.0) {
  if (!(x_prime < z)) {
    throw ArgumentError("check_stop_right requires x_prime < z");
  }
  return f(IntPoint::scalar(z)) - f(IntPoint::scalar(x_prime)) >= C - tolerance;
}

/// Mirror image: certifies that [z, x_t] contains a global minimizer.
inline bool check_stop_left(std::int64_t x_prime, std::int64_t z, const Objective& f,
                            double C, double tolerance = 0.0) {
  if (!(z < x_prime)) {
    throw ArgumentError("check_stop_left requires z < x_prime");
  }
  return f(IntPoint::scalar(z)) - f(IntPoint::scalar(x_prime)) >= C - tolerance;
}

/// Both gaps at once: certifies that [z_s, z_t] contains a global minimizer.
inline bool check_stop_two_sided(std::int64_t x_prime, std::int64_t z_s,
                                 std::int64_t z_t, const Objective& f, double C,
                                 double tolerance = 0.0) {
  if (!(z_s < x_prime && x_prime < z_t)) {
    throw ArgumentError("check_stop_two_sided requires z_s < x_prime < z_t");
  }
  const double pivot = f(IntPoint::scalar(x_prime));
  return f(IntPoint::scalar(z_s)) - pivot >= C - tolerance &&
         f(IntPoint::scalar(z_t)) - pivot >= C - tolerance;
}

} // namespace ameso

#endif // AMESO_SOLVER1D_HPP
