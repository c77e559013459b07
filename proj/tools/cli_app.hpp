#ifndef AMESO_TOOLS_CLI_APP_HPP
#define AMESO_TOOLS_CLI_APP_HPP

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ameso/ameso.hpp"

namespace ameso::cli {

// exit codes
//   0 success
//   1 usage / input error
//   2 verify: the domain is not midpoint-closed
//   3 enumeration or pair cap exceeded
//   4 start point outside the domain
//   5 arp: the input domain is not a product box
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNotAmeso = 2;
inline constexpr int kExitCapExceeded = 3;
inline constexpr int kExitBadStart = 4;
inline constexpr int kExitNotBox = 5;

struct LoadedInput {
  Domain domain;
  std::optional<Objective> objective;
  std::optional<double> metadata_C;
  std::optional<KnapsackInstance> knapsack;
};

/// The effective sweep order of a box under an axis-order flag.
inline std::vector<std::size_t> sweep_order(const BoxDomain& d,
                                            const std::vector<std::size_t>& order) {
  return ameso::detail::resolve_axis_order(d, order);
}

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot open file: " + path);
  std::ostringstream oss;
  oss << in.rdbuf();
  return oss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArgumentError("cannot write file: " + path);
  out << content;
}

inline std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string field =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(field, &used));
      if (used != field.size()) throw std::invalid_argument(field);
    } catch (const std::exception&) {
      throw ArgumentError("expected a comma-separated integer list, got '" + text + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

} // namespace detail

inline LoadedInput load_input(const std::string& spec) {
  if (spec == "example3") {
    return LoadedInput{IntervalDomain(-20, 20),
                       Objective::of_scalar([](std::int64_t x) { return quartic(x); }),
                       std::nullopt, std::nullopt};
  }
  if (spec == "example5") {
    const TabulatedObjective table = example5_table();
    return LoadedInput{table.domain(), table.objective(), std::nullopt, std::nullopt};
  }
  if (spec == "example6") {
    return LoadedInput{BoxDomain({IntervalDomain(1, 100), IntervalDomain(1, 100)}),
                       Objective([](const IntPoint& p) {
                         if (p.dimension() != 2) {
                           throw DimensionError("example6 expects 2-dimensional points");
                         }
                         return example6_surface(p[0], p[1]);
                       }),
                       std::nullopt, std::nullopt};
  }

  std::string text;
  std::string ext;
  if (std::filesystem::exists(spec) && std::filesystem::is_regular_file(spec)) {
    text = detail::read_file(spec);
    ext = std::filesystem::path(spec).extension().string();
  } else {
    text = spec; // maybe an inline domain literal
  }

  if (ext == ".json" || (!text.empty() && text.front() == '{')) {
    const auto j = io::json::parse(text);
    if (j.contains("W") && j.contains("w") && j.contains("c")) {
      const KnapsackInstance inst = io::knapsack_from_json(j);
      return LoadedInput{knapsack_domain(inst), knapsack_objective(inst),
                         static_cast<double>(inst.costs()[2]), inst};
    }
    io::TabulatedFile file = io::tabulated_from_json(j);
    return LoadedInput{file.table.domain(), file.table.objective(), file.C,
                       std::nullopt};
  }
  if (ext == ".csv") {
    const TabulatedObjective table = io::tabulated_from_csv(text);
    return LoadedInput{table.domain(), table.objective(), std::nullopt, std::nullopt};
  }
  // plain domain literal, inline or in a file
  return LoadedInput{io::parse_domain(text), std::nullopt, std::nullopt, std::nullopt};
}

namespace detail {

struct CommonOpts {
  std::string input;
  std::optional<double> C;
  std::optional<std::string> start;
  double tolerance = 0.0;
  std::string out_path;
  std::string trace_path;
  std::string format = "json";
  std::uint64_t point_cap = OracleConfig{}.point_cap;
  std::uint64_t pair_cap = OracleConfig{}.pair_cap;
};

struct ResolvedC {
  double value = 0.0;
  bool oracle_verified = false;
  std::string source;
};

/// flag > file metadata > oracle (small domains) > error
inline ResolvedC resolve_C(const CommonOpts& opts, const LoadedInput& input) {
  if (opts.C) return {*opts.C, false, "flag"};
  if (input.metadata_C) return {*input.metadata_C, false, "file"};
  if (!input.objective) {
    throw ArgumentError("no objective available, pass --C explicitly");
  }
  OracleConfig cfg;
  cfg.point_cap = opts.point_cap;
  cfg.pair_cap = opts.pair_cap;
  if (opts.tolerance > 0.0) cfg.tolerance = opts.tolerance;
  const std::uint64_t n = domain_size(input.domain);
  if (n > cfg.point_cap || n * (n + 1) / 2 > cfg.pair_cap) {
    throw ArgumentError("domain too large to infer C from the oracle, pass --C");
  }
  return {minimal_C(input.domain, *input.objective, cfg).minimal_C, true, "oracle"};
}

inline void emit(const CommonOpts& opts, std::ostream& out, const std::string& payload) {
  if (!opts.out_path.empty()) {
    write_file(opts.out_path, payload);
  } else {
    out << payload;
    if (payload.empty() || payload.back() != '\n') out << '\n';
  }
}

inline IntervalDomain to_interval(const Domain& d) {
  if (const auto* iv = std::get_if<IntervalDomain>(&d)) return *iv;
  if (const auto* box = std::get_if<BoxDomain>(&d); box && box->dimension() == 1) {
    return box->axis(0);
  }
  if (const auto* set = std::get_if<ExplicitSet>(&d);
      set && set->dimension() == 1 && set->size() >= 2 && is_interval(*set)) {
    return IntervalDomain(set->points().front()[0], set->points().back()[0]);
  }
  throw ArgumentError("a 1-dimensional interval domain is required");
}

inline int cmd_verify(const CommonOpts& opts, std::ostream& out) {
  const LoadedInput input = load_input(opts.input);
  OracleConfig cfg;
  cfg.point_cap = opts.point_cap;
  cfg.pair_cap = opts.pair_cap;
  if (opts.tolerance > 0.0) cfg.tolerance = opts.tolerance;

  const auto violation = ameso_violation(input.domain, cfg);
  io::json j;
  if (violation) {
    j["is_ameso_set"] = false;
    j["minimal_C"] = nullptr;
    j["raw_max_deficiency"] = nullptr;
    j["witness"] = io::json::array({io::point_to_json(violation->first),
                                    io::point_to_json(violation->second)});
    j["pairs_checked"] = nullptr;
    emit(opts, out, j.dump(2));
    return kExitNotAmeso;
  }
  if (input.objective) {
    const AmesoCertificate cert = minimal_C(input.domain, *input.objective, cfg);
    j = io::certificate_to_json(cert);
    if (opts.C) {
      j["requested_C"] = *opts.C;
      j["holds_at_requested_C"] = cert.raw_max_deficiency <= *opts.C + cfg.tolerance;
    }
  } else {
    j["is_ameso_set"] = true;
    j["minimal_C"] = nullptr;
    j["raw_max_deficiency"] = nullptr;
    j["witness"] = nullptr;
    j["pairs_checked"] = nullptr;
  }
  emit(opts, out, j.dump(2));
  return kExitOk;
}

inline int cmd_solve(const CommonOpts& opts, std::ostream& out, std::ostream& err) {
  const LoadedInput input = load_input(opts.input);
  const IntervalDomain d = to_interval(input.domain);
  if (!input.objective) {
    throw ArgumentError("solve needs an objective; built-ins and table files carry one");
  }
  const ResolvedC C = resolve_C(opts, input);

  Solve1DConfig cfg;
  cfg.C = C.value;
  cfg.value_tolerance = opts.tolerance;
  if (opts.start) {
    const auto starts = parse_int_list(*opts.start);
    if (starts.size() != 1) {
      throw ArgumentError("solve expects a single --start value");
    }
    if (!d.contains(starts[0])) {
      err << "start point " << starts[0] << " outside [" << d.lower() << ","
          << d.upper() << "]\n";
      return kExitBadStart;
    }
    cfg.start = starts[0];
  }

  SolveReport rep = solve_1d(d, *input.objective, cfg);
  rep.certificate_unverified = !C.oracle_verified;
  if (!opts.trace_path.empty()) write_file(opts.trace_path, io::trace_csv(rep.trace));
  if (opts.format == "csv") {
    emit(opts, out, io::trace_csv(rep.trace));
  } else {
    io::json j = io::solve_report_to_json(rep);
    j["C"] = C.value;
    j["C_source"] = C.source;
    emit(opts, out, j.dump(2));
  }
  return kExitOk;
}

inline int cmd_arp(const CommonOpts& opts, std::ostream& out, std::ostream& err,
                   const std::string& axis_order, bool no_memoize) {
  const LoadedInput input = load_input(opts.input);

  const BoxDomain box = std::visit(
      [](const auto& dom) -> BoxDomain {
        using T = std::decay_t<decltype(dom)>;
        if constexpr (std::is_same_v<T, IntervalDomain>) {
          return BoxDomain({dom});
        } else if constexpr (std::is_same_v<T, BoxDomain>) {
          return dom;
        } else {
          throw DomainError("arp needs a product box domain");
        }
      },
      input.domain);
  if (!input.objective) {
    throw ArgumentError("arp needs an objective; built-ins and table files carry one");
  }
  const ResolvedC C = resolve_C(opts, input);

  ArpConfig cfg;
  cfg.C = C.value;
  cfg.value_tolerance = opts.tolerance;
  cfg.memoize = !no_memoize;
  if (!axis_order.empty()) {
    for (const std::int64_t a : parse_int_list(axis_order)) {
      if (a < 0) throw ArgumentError("axis indices must be non-negative");
      cfg.axis_order.push_back(static_cast<std::size_t>(a));
    }
  }
  if (opts.start) {
    // start values pair with sweep levels from the outside in
    const auto order = sweep_order(box, cfg.axis_order);
    const auto starts = parse_int_list(*opts.start);
    if (starts.size() > order.size()) {
      throw ArgumentError("more --start values than axes");
    }
    for (std::size_t i = 0; i < starts.size(); ++i) {
      const std::size_t axis = order[order.size() - 1 - i];
      if (!box.axis(axis).contains(starts[i])) {
        err << "start point " << starts[i] << " outside axis " << axis << "\n";
        return kExitBadStart;
      }
      cfg.start_points[axis] = starts[i];
    }
  }

  const ArpReport rep = solve_arp(box, *input.objective, cfg);
  if (!opts.trace_path.empty()) write_file(opts.trace_path, io::arp_profile_csv(rep));
  if (opts.format == "csv") {
    emit(opts, out, io::arp_profile_csv(rep));
  } else {
    io::json j = io::arp_report_to_json(rep);
    j["C"] = C.value;
    j["C_source"] = C.source;
    j["certificate_unverified"] = !C.oracle_verified;
    emit(opts, out, j.dump(2));
  }
  return kExitOk;
}

inline int cmd_knapsack(const CommonOpts& opts, std::ostream& out, bool check) {
  const LoadedInput input = load_input(opts.input);
  if (!input.knapsack) {
    throw ArgumentError("knapsack expects an instance file {\"W\",\"w\",\"c\"}");
  }
  const KnapsackInstance& inst = *input.knapsack;
  const BoxDomain box = knapsack_domain(inst);
  const ResolvedC C = resolve_C(opts, input); // defaults to c3 via instance metadata

  ArpConfig cfg;
  cfg.C = C.value;
  const ArpReport rep = solve_arp(box, knapsack_objective(inst), cfg);

  io::json j;
  j["instance"] = io::knapsack_to_json(inst);
  j["domain"] = io::format_domain(Domain{box});
  j["C"] = C.value;
  j["C_source"] = C.source == "file" ? "option3_cost" : C.source;
  j["argmin"] = io::point_to_json(rep.argmin);
  j["min_cost"] = rep.min_value;
  j["total_evaluations"] = rep.total_evaluations;
  if (check) {
    const BruteForceResult bf = brute_force_min(Domain{box}, knapsack_objective(inst));
    j["brute_force_min"] = bf.min_value;
    j["agrees_with_brute_force"] = bf.min_value == rep.min_value;
  }
  emit(opts, out, j.dump(2));
  return kExitOk;
}

inline int cmd_bench(const CommonOpts& opts, std::ostream& out, const std::string& suite,
                     std::uint64_t count, std::uint64_t seed) {
  std::ostringstream csv;
  csv << "suite,instance,domain_size,C,solver_evaluations,brute_force_evaluations,"
         "agree\r\n";
  std::mt19937_64 engine(seed);
  const auto uniform = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine);
  };

  const auto row = [&](const std::string& instance, std::uint64_t size, double C,
                       std::uint64_t solver_evals, std::uint64_t brute_evals,
                       bool agree) {
    csv << suite << ',' << instance << ',' << size << ','
        << io::detail::format_double(C) << ',' << solver_evals << ',' << brute_evals
        << ',' << (agree ? 1 : 0) << "\r\n";
  };

  if (suite == "example5") {
    const TabulatedObjective table = example5_table();
    const IntervalDomain d = std::get<IntervalDomain>(table.domain());
    const double C = minimal_C(table.domain(), table.objective()).minimal_C;
    const BruteForceResult bf = brute_force_min(table.domain(), table.objective());
    for (std::int64_t s = d.lower(); s <= d.upper(); ++s) {
      const SolveReport rep = solve_1d(d, table.objective(), Solve1DConfig{C, s, 0.0});
      row(std::to_string(s), d.size(), C, rep.evaluations, bf.evaluations,
          rep.min_value == bf.min_value);
    }
  } else if (suite == "tables") {
    for (std::uint64_t i = 0; i < count; ++i) {
      const std::int64_t size = uniform(2, 100);
      std::vector<double> values(static_cast<std::size_t>(size));
      for (auto& v : values) v = static_cast<double>(uniform(0, 20));
      const TabulatedObjective table(IntervalDomain(1, size), std::move(values));
      const double C = minimal_C(table.domain(), table.objective()).minimal_C;
      const BruteForceResult bf = brute_force_min(table.domain(), table.objective());
      const SolveReport rep = solve_1d(std::get<IntervalDomain>(table.domain()),
                                       table.objective(), Solve1DConfig{C, {}, 0.0});
      row(std::to_string(i), static_cast<std::uint64_t>(size), C, rep.evaluations,
          bf.evaluations, rep.min_value == bf.min_value);
    }
  } else if (suite == "boxes") {
    for (std::uint64_t i = 0; i < count; ++i) {
      const int dim = static_cast<int>(uniform(2, 3));
      std::vector<IntervalDomain> axes;
      for (int a = 0; a < dim; ++a) {
        const std::int64_t lo = uniform(-5, 5);
        axes.emplace_back(lo, lo + uniform(1, 7));
      }
      const BoxDomain box(std::move(axes));
      std::vector<double> values(box.size());
      for (auto& v : values) v = static_cast<double>(uniform(0, 20));
      const TabulatedObjective table(box, std::move(values));
      const double C = minimal_C(table.domain(), table.objective()).minimal_C;
      const BruteForceResult bf = brute_force_min(table.domain(), table.objective());
      const ArpReport rep =
          solve_arp(box, table.objective(), ArpConfig{C, {}, {}, true, 0.0});
      row(std::to_string(i), box.size(), C, rep.total_evaluations, bf.evaluations,
          rep.min_value == bf.min_value);
    }
  } else if (suite == "knapsack") {
    std::uint64_t made = 0;
    while (made < count) {
      const std::int64_t w1 = uniform(1, 8);
      const std::int64_t w2 = w1 + uniform(1, 6);
      const std::int64_t w3 = w2 + uniform(1, 6);
      const std::int64_t c1 = uniform(2, 12);
      const std::int64_t c2 = c1 + uniform(1, 6);
      const std::int64_t c3 = c2 + uniform(1, 6);
      if (!(c1 * w2 > c2 * w1 && c2 * w3 > c3 * w2)) continue;
      const std::int64_t W = uniform(2 * w2, 2 * w2 + 60);
      const KnapsackInstance inst(W, {w1, w2, w3}, {c1, c2, c3});
      const BoxDomain box = knapsack_domain(inst);
      if (box.size() > 2000) continue;
      const Objective f = knapsack_objective(inst);
      const BruteForceResult bf = brute_force_min(Domain{box}, f);
      const ArpReport rep =
          solve_arp(box, f, ArpConfig{static_cast<double>(c3), {}, {}, true, 0.0});
      row("W" + std::to_string(W) + "w" + std::to_string(w1) + "-" +
              std::to_string(w2) + "-" + std::to_string(w3),
          box.size(), static_cast<double>(c3), rep.total_evaluations, bf.evaluations,
          rep.min_value == bf.min_value);
      ++made;
    }
  } else {
    throw ArgumentError("unknown bench suite '" + suite +
                        "' (expected tables, boxes, knapsack or example5)");
  }

  emit(opts, out, csv.str());
  return kExitOk;
}

} // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"discrete minimization over midpoint-closed integer domains"};
  app.require_subcommand(1);

  detail::CommonOpts opts;
  std::string axis_order;
  bool no_memoize = false;
  bool check = false;
  std::string suite = "tables";
  std::uint64_t count = 100;
  std::uint64_t seed = 1;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--tolerance", opts.tolerance, "comparison tolerance");
    cmd->add_option("--out", opts.out_path, "write the report here instead of stdout");
    cmd->add_option("--format", opts.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--point-cap", opts.point_cap, "enumeration cap");
    cmd->add_option("--pair-cap", opts.pair_cap, "pair exhaustion cap");
  };
  const auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", opts.input,
                    "built-in name (example3|example5|example6), file path, or "
                    "domain literal")
        ->required();
    cmd->add_option("--C", opts.C, "admissible relaxation constant");
  };

  CLI::App* verify = app.add_subcommand("verify", "midpoint closure and minimal C");
  add_input(verify);
  add_common(verify);

  CLI::App* solve = app.add_subcommand("solve", "1-D sweep");
  add_input(solve);
  add_common(solve);
  solve->add_option("--start", opts.start, "sweep start point");
  solve->add_option("--trace", opts.trace_path, "write the sweep trace CSV here");

  CLI::App* arp = app.add_subcommand("arp", "recursive box sweep");
  add_input(arp);
  add_common(arp);
  arp->add_option("--start", opts.start, "start values, outermost sweep first");
  arp->add_option("--trace", opts.trace_path, "write the profile CSV here");
  arp->add_option("--axis-order", axis_order, "axis permutation, e.g. 1,0");
  arp->add_flag("--no-memoize", no_memoize, "re-solve conditional values");

  CLI::App* knapsack = app.add_subcommand("knapsack", "shipping plan instance");
  add_input(knapsack);
  add_common(knapsack);
  knapsack->add_flag("--check", check, "compare against exhaustive scan");

  CLI::App* bench = app.add_subcommand("bench", "randomized agreement benchmark");
  add_common(bench);
  bench->add_option("--suite", suite, "tables|boxes|knapsack|example5")
      ->check(CLI::IsMember({"tables", "boxes", "knapsack", "example5"}));
  bench->add_option("--count", count, "number of instances");
  bench->add_option("--seed", seed, "RNG seed");

  std::vector<const char*> argv;
  argv.push_back("ameso");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (verify->parsed()) return detail::cmd_verify(opts, out);
    if (solve->parsed()) return detail::cmd_solve(opts, out, err);
    if (arp->parsed()) return detail::cmd_arp(opts, out, err, axis_order, no_memoize);
    if (knapsack->parsed()) return detail::cmd_knapsack(opts, out, check);
    if (bench->parsed()) return detail::cmd_bench(opts, out, suite, count, seed);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCapExceeded;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return arp->parsed() ? kExitNotBox : kExitError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

} // namespace ameso::cli

#endif // AMESO_TOOLS_CLI_APP_HPP
