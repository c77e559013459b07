#ifndef AMESO_IO_HPP
#define AMESO_IO_HPP

#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ameso/arp.hpp"
#include "ameso/domain.hpp"
#include "ameso/errors.hpp"
#include "ameso/models.hpp"
#include "ameso/oracle.hpp"
#include "ameso/point.hpp"
#include "ameso/solver1d.hpp"

namespace ameso::io {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// domain literals
//
//   domain   := interval | box | set
//   interval := "interval(" int "," int ")"
//   box      := "box(" range {"," range} ")"      range := "[" int "," int "]"
//   set      := "set{" point {"," point} "}"      point := "(" int {"," int} ")"
//
// Whitespace is allowed between tokens.
// ---------------------------------------------------------------------------

namespace detail {

class LiteralParser {
public:
  explicit LiteralParser(std::string_view text) : text_(text) {}

  Domain parse() {
    skip_ws();
    Domain d = [&]() -> Domain {
      if (try_keyword("interval")) return parse_interval();
      if (try_keyword("box")) return parse_box();
      if (try_keyword("set")) return parse_set();
      fail("expected 'interval', 'box' or 'set'");
    }();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters after domain literal");
    return d;
  }

private:
  [[noreturn]] void fail(const std::string& what) {
    throw ArgumentError("domain literal: " + what + " at offset " +
                        std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                   text_[pos_] == '\n' || text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  bool try_keyword(std::string_view kw) {
    if (text_.substr(pos_, kw.size()) == kw) {
      pos_ += kw.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  bool try_char(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::int64_t parse_int() {
    skip_ws();
    std::int64_t value = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{}) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  Domain parse_interval() {
    expect('(');
    const std::int64_t lo = parse_int();
    expect(',');
    const std::int64_t hi = parse_int();
    expect(')');
    return IntervalDomain(lo, hi);
  }

  IntervalDomain parse_range() {
    expect('[');
    const std::int64_t lo = parse_int();
    expect(',');
    const std::int64_t hi = parse_int();
    expect(']');
    return IntervalDomain(lo, hi);
  }

  Domain parse_box() {
    expect('(');
    std::vector<IntervalDomain> axes;
    axes.push_back(parse_range());
    while (try_char(',')) axes.push_back(parse_range());
    expect(')');
    return BoxDomain(std::move(axes));
  }

  IntPoint parse_point() {
    expect('(');
    std::vector<std::int64_t> c;
    c.push_back(parse_int());
    while (try_char(',')) c.push_back(parse_int());
    expect(')');
    return IntPoint(std::move(c));
  }

  Domain parse_set() {
    expect('{');
    std::vector<IntPoint> pts;
    pts.push_back(parse_point());
    while (try_char(',')) pts.push_back(parse_point());
    expect('}');
    return ExplicitSet(std::move(pts));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

} // namespace detail

inline Domain parse_domain(std::string_view text) {
  return detail::LiteralParser(text).parse();
}

inline std::string format_domain(const Domain& d) {
  std::ostringstream oss;
  std::visit(
      [&](const auto& dom) {
        using T = std::decay_t<decltype(dom)>;
        if constexpr (std::is_same_v<T, IntervalDomain>) {
          oss << "interval(" << dom.lower() << "," << dom.upper() << ")";
        } else if constexpr (std::is_same_v<T, BoxDomain>) {
          oss << "box(";
          for (std::size_t i = 0; i < dom.dimension(); ++i) {
            if (i > 0) oss << ",";
            oss << "[" << dom.axis(i).lower() << "," << dom.axis(i).upper() << "]";
          }
          oss << ")";
        } else {
          oss << "set{";
          bool first = true;
          for (const auto& p : dom.points()) {
            if (!first) oss << ",";
            first = false;
            oss << p;
          }
          oss << "}";
        }
      },
      d);
  return oss.str();
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

inline json point_to_json(const IntPoint& p) {
  return json(p.coords());
}

inline IntPoint point_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw ArgumentError("point JSON must be a non-empty array of integers");
  }
  return IntPoint(j.get<std::vector<std::int64_t>>());
}

inline json certificate_to_json(const AmesoCertificate& cert) {
  json j;
  j["is_ameso_set"] = cert.is_ameso_set;
  j["minimal_C"] = cert.minimal_C;
  j["raw_max_deficiency"] = cert.raw_max_deficiency;
  if (cert.witness) {
    j["witness"] = json::array(
        {point_to_json(cert.witness->first), point_to_json(cert.witness->second)});
  } else {
    j["witness"] = nullptr;
  }
  j["pairs_checked"] = cert.pairs_checked;
  return j;
}

inline json solve_report_to_json(const SolveReport& rep, bool include_trace = false) {
  json j;
  j["argmin"] = rep.argmin;
  j["min_value"] = rep.min_value;
  j["visited"] = rep.visited;
  j["evaluations"] = rep.evaluations;
  j["stop_right"] = to_string(rep.stop_right);
  j["left_phase"] = to_string(rep.left_phase);
  j["certificate_unverified"] = rep.certificate_unverified;
  if (include_trace) {
    json rows = json::array();
    for (const auto& row : rep.trace) {
      rows.push_back({{"step", row.step},
                      {"side", to_string(row.side)},
                      {"point", row.point},
                      {"value", row.value},
                      {"l_star", row.l_star},
                      {"action", to_string(row.action)}});
    }
    j["trace"] = std::move(rows);
  }
  return j;
}

inline json arp_trace_to_json(const ArpTraceNode& node) {
  json j;
  j["axis"] = node.axis;
  if (node.fixed_value) {
    j["fixed_value"] = *node.fixed_value;
  } else {
    j["fixed_value"] = nullptr;
  }
  j["report"] = solve_report_to_json(node.report);
  json kids = json::array();
  for (const auto& child : node.children) kids.push_back(arp_trace_to_json(child));
  j["children"] = std::move(kids);
  return j;
}

inline json arp_report_to_json(const ArpReport& rep) {
  json j;
  j["argmin"] = point_to_json(rep.argmin);
  j["min_value"] = rep.min_value;
  j["total_evaluations"] = rep.total_evaluations;
  j["per_level_visited"] = rep.per_level_visited;
  j["trace"] = arp_trace_to_json(rep.trace);
  return j;
}

// ---------------------------------------------------------------------------
// CSV (RFC 4180: comma separated, CRLF line endings)
// ---------------------------------------------------------------------------

inline std::string trace_csv(const std::vector<TraceRow>& trace) {
  std::ostringstream oss;
  oss << "step,side,point,value,l_star,action\r\n";
  for (const auto& row : trace) {
    oss << row.step << ',' << to_string(row.side) << ',' << row.point << ','
        << detail::format_double(row.value) << ',' << row.l_star << ','
        << to_string(row.action) << "\r\n";
  }
  return oss.str();
}

/// Flat projection of the outermost sweep: one row per evaluated coordinate
/// value, sorted by coordinate, for plotting the conditional minimum curve.
inline std::string arp_profile_csv(const ArpReport& rep) {
  std::vector<std::pair<std::int64_t, double>> rows;
  for (const auto& row : rep.trace.report.trace) {
    if (row.side == TraceSide::check) continue;
    rows.emplace_back(row.point, row.value);
  }
  std::sort(rows.begin(), rows.end());
  std::ostringstream oss;
  oss << "point,value\r\n";
  for (const auto& [point, value] : rows) {
    oss << point << ',' << detail::format_double(value) << "\r\n";
  }
  return oss.str();
}

// ---------------------------------------------------------------------------
// tabulated objective files
// ---------------------------------------------------------------------------

struct TabulatedFile {
  TabulatedObjective table;
  std::optional<double> C; // optional metadata: a known admissible constant
};

inline json tabulated_to_json(const TabulatedObjective& table,
                              std::optional<double> C = std::nullopt) {
  json j;
  j["domain"] = format_domain(table.domain());
  j["values"] = table.values();
  if (C) j["C"] = *C;
  return j;
}

inline TabulatedFile tabulated_from_json(const json& j) {
  if (!j.contains("domain") || !j.contains("values")) {
    throw ArgumentError("tabulated JSON needs \"domain\" and \"values\" fields");
  }
  Domain d = parse_domain(j.at("domain").get<std::string>());
  auto values = j.at("values").get<std::vector<double>>();
  std::optional<double> C;
  if (j.contains("C") && !j.at("C").is_null()) C = j.at("C").get<double>();
  return TabulatedFile{TabulatedObjective(std::move(d), std::move(values)), C};
}

inline std::string tabulated_to_csv(const TabulatedObjective& table) {
  std::ostringstream oss;
  const std::size_t dim = dimension(table.domain());
  for (std::size_t i = 0; i < dim; ++i) oss << 'x' << (i + 1) << ',';
  oss << "value\r\n";
  std::size_t idx = 0;
  for_each_point(table.domain(), [&](const IntPoint& p) {
    for (std::size_t i = 0; i < dim; ++i) oss << p[i] << ',';
    oss << detail::format_double(table.values()[idx++]) << "\r\n";
  });
  return oss.str();
}

inline TabulatedObjective tabulated_from_csv(std::string_view text) {
  std::vector<std::pair<IntPoint, double>> pairs;
  std::size_t dim = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    if (line.empty()) continue;
    if (line_no == 1) {
      // header: x1,...,xn,value
      std::size_t cols = 1;
      for (char ch : line) cols += (ch == ',');
      if (cols < 2) throw ArgumentError("tabulated CSV: malformed header");
      dim = cols - 1;
      continue;
    }
    std::vector<std::int64_t> coords;
    coords.reserve(dim);
    std::size_t field_start = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      const std::size_t comma = line.find(',', field_start);
      if (comma == std::string_view::npos) {
        throw ArgumentError("tabulated CSV: too few fields on line " +
                            std::to_string(line_no));
      }
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(line.data() + field_start, line.data() + comma, v);
      if (ec != std::errc{} || ptr != line.data() + comma) {
        throw ArgumentError("tabulated CSV: bad integer on line " +
                            std::to_string(line_no));
      }
      coords.push_back(v);
      field_start = comma + 1;
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(line.data() + field_start,
                                     line.data() + line.size(), value);
    if (ec != std::errc{} || ptr != line.data() + line.size()) {
      throw ArgumentError("tabulated CSV: bad value on line " + std::to_string(line_no));
    }
    pairs.emplace_back(IntPoint(std::move(coords)), value);
  }
  if (pairs.empty()) throw ArgumentError("tabulated CSV: no data rows");

  // Reconstruct the tightest matching domain: a contiguous 1-D range becomes
  // an interval, a filled cross product becomes a box, anything else an
  // explicit set.
  std::vector<IntPoint> pts;
  pts.reserve(pairs.size());
  for (const auto& [p, v] : pairs) pts.push_back(p);
  ExplicitSet as_set(std::move(pts));
  Domain d = Domain(as_set);
  const std::size_t n = as_set.dimension();
  if (n == 1 && as_set.size() >= 2 && is_interval(as_set)) {
    d = IntervalDomain(as_set.points().front()[0], as_set.points().back()[0]);
  } else if (n >= 2) {
    std::vector<std::int64_t> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) lo[i] = hi[i] = as_set.points().front()[i];
    for (const auto& p : as_set.points()) {
      for (std::size_t i = 0; i < n; ++i) {
        lo[i] = std::min(lo[i], p[i]);
        hi[i] = std::max(hi[i], p[i]);
      }
    }
    bool nontrivial = true;
    std::uint64_t volume = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (lo[i] >= hi[i]) {
        nontrivial = false;
        break;
      }
      volume *= static_cast<std::uint64_t>(hi[i] - lo[i]) + 1;
    }
    if (nontrivial && volume == as_set.size()) {
      std::vector<IntervalDomain> axes;
      for (std::size_t i = 0; i < n; ++i) axes.emplace_back(lo[i], hi[i]);
      d = BoxDomain(std::move(axes));
    }
  }
  return TabulatedObjective::from_pairs(std::move(d), pairs);
}

// ---------------------------------------------------------------------------
// knapsack instance files
// ---------------------------------------------------------------------------

inline json knapsack_to_json(const KnapsackInstance& inst) {
  json j;
  j["W"] = inst.units();
  j["w"] = inst.capacities();
  j["c"] = inst.costs();
  return j;
}

inline KnapsackInstance knapsack_from_json(const json& j) {
  if (!j.contains("W") || !j.contains("w") || !j.contains("c")) {
    throw ArgumentError("knapsack JSON needs \"W\", \"w\" and \"c\" fields");
  }
  const auto w = j.at("w").get<std::vector<std::int64_t>>();
  const auto c = j.at("c").get<std::vector<std::int64_t>>();
  if (w.size() != 3 || c.size() != 3) {
    throw ArgumentError("knapsack JSON: \"w\" and \"c\" must list three options");
  }
  return KnapsackInstance(j.at("W").get<std::int64_t>(), {w[0], w[1], w[2]},
                          {c[0], c[1], c[2]});
}

} // namespace ameso::io

#endif // AMESO_IO_HPP
