#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"

#include "gambler/approx.hpp"
#include "gambler/discrete.hpp"
#include "gambler/policy.hpp"
#include "gambler/simulate.hpp"
#include "gambler/value.hpp"
#include "gambler/verify.hpp"

namespace gambler::cli {

namespace {

using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

struct OutputTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

void write_csv(const OutputTable& table, std::ostream& out) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out << ',';
    out << table.columns[c];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      std::visit(
          [&out](const auto& cell) {
            using T = std::decay_t<decltype(cell)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
            } else if constexpr (std::is_same_v<T, double>) {
              out << format_double(cell);
            } else {
              out << cell;
            }
          },
          row[c]);
    }
    out << '\n';
  }
}

void write_json(const OutputTable& table, std::ostream& out) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json obj;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const std::string& key = table.columns[c];
      std::visit(
          [&obj, &key](const auto& cell) {
            using T = std::decay_t<decltype(cell)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
              obj[key] = nullptr;
            } else {
              obj[key] = cell;
            }
          },
          row[c]);
    }
    rows.push_back(std::move(obj));
  }
  out << rows.dump() << '\n';
}

struct OutputOptions {
  std::string format = "csv";
  std::string path;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output", opts.path, "Write to a file instead of stdout");
}

void emit(const OutputTable& table, const OutputOptions& opts,
          std::ostream& out) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (!opts.path.empty()) {
    file.open(opts.path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file");
    sink = &file;
  }
  if (opts.format == "json")
    write_json(table, *sink);
  else
    write_csv(table, *sink);
}

/// Row-streaming writer for bulk tables (a level-20 lattice has a million
/// rows; buffering them as cells first costs far more than emitting them).
class StreamWriter {
 public:
  StreamWriter(std::vector<std::string> columns, const OutputOptions& opts,
               std::ostream& out)
      : columns_(std::move(columns)), json_(opts.format == "json") {
    sink_ = &out;
    if (!opts.path.empty()) {
      file_.open(opts.path, std::ios::binary);
      if (!file_) throw std::invalid_argument("cannot open output file");
      sink_ = &file_;
    }
    if (json_) {
      *sink_ << '[';
    } else {
      for (std::size_t c = 0; c < columns_.size(); ++c) {
        if (c) *sink_ << ',';
        *sink_ << columns_[c];
      }
      *sink_ << '\n';
    }
  }

  void row(double a, double b) {
    if (json_) {
      if (!first_) *sink_ << ',';
      nlohmann::json obj{{columns_[0], a}, {columns_[1], b}};
      *sink_ << obj.dump();
      first_ = false;
    } else {
      *sink_ << format_double(a) << ',' << format_double(b) << '\n';
    }
  }

  void finish() {
    if (json_) *sink_ << "]\n";
  }

 private:
  std::vector<std::string> columns_;
  bool json_;
  bool first_ = true;
  std::ofstream file_;
  std::ostream* sink_;
};

std::string dyadic_string(const Dyadic& d) {
  std::ostringstream os;
  os << d.numerator() << '/' << (std::uint64_t{1} << d.level());
  return os.str();
}

struct ParamFlags {
  std::string p;
  std::string gamma;

  Params make() const { return Params::from_strings(p, gamma); }
};

void add_param_flags(CLI::App* cmd, ParamFlags& flags) {
  cmd->add_option("--p", flags.p, "Probability of losing a round")->required();
  cmd->add_option("--gamma", flags.gamma, "Discount factor")->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact oracle and experiment harness for the double-or-nothing "
               "betting game"};
  app.require_subcommand(1);

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate v(s)");
  ParamFlags eval_params;
  std::string eval_s;
  double eval_tol = 1e-12;
  OutputOptions eval_out;
  eval_cmd->add_option("--s", eval_s, "State as num/den or decimal")->required();
  add_param_flags(eval_cmd, eval_params);
  eval_cmd->add_option("--tol", eval_tol, "Evaluation tolerance");
  add_output_options(eval_cmd, eval_out);

  // table
  auto* table_cmd = app.add_subcommand("table", "Tabulate v on a dyadic lattice");
  ParamFlags table_params;
  unsigned table_level = 0;
  OutputOptions table_out;
  table_cmd->add_option("--level", table_level, "Lattice level")->required();
  add_param_flags(table_cmd, table_params);
  add_output_options(table_cmd, table_out);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Solve the discrete game");
  ParamFlags solve_params;
  int solve_n = 0;
  std::string solve_method = "vi";
  double solve_tol = 1e-12;
  OutputOptions solve_out;
  solve_cmd->add_option("--n", solve_n, "Target capital")->required();
  add_param_flags(solve_cmd, solve_params);
  solve_cmd->add_option("--method", solve_method, "exact or vi")
      ->check(CLI::IsMember({"exact", "vi"}));
  solve_cmd->add_option("--tol", solve_tol, "Value-iteration tolerance");
  add_output_options(solve_cmd, solve_out);

  // qlearn
  auto* qlearn_cmd = app.add_subcommand("qlearn", "Tabular Q-learning");
  ParamFlags qlearn_params;
  int qlearn_n = 0;
  long qlearn_episodes = 0;
  std::uint64_t qlearn_seed = 0;
  std::string qlearn_trace;
  OutputOptions qlearn_out;
  qlearn_cmd->add_option("--n", qlearn_n, "Target capital")->required();
  add_param_flags(qlearn_cmd, qlearn_params);
  qlearn_cmd->add_option("--episodes", qlearn_episodes, "Episode count")
      ->required();
  qlearn_cmd->add_option("--seed", qlearn_seed, "RNG seed")->required();
  qlearn_cmd->add_option("--trace", qlearn_trace,
                         "Write the per-episode return trace to this file");
  add_output_options(qlearn_cmd, qlearn_out);

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "Monte-Carlo evaluation");
  ParamFlags sim_params;
  std::string sim_s0;
  std::string sim_policy = "bold";
  long sim_episodes = 0;
  std::uint64_t sim_seed = 0;
  long sim_cutoff = 10000;
  OutputOptions sim_out;
  sim_cmd->add_option("--s0", sim_s0, "Start state")->required();
  sim_cmd->add_option("--policy", sim_policy, "bold or alt")
      ->check(CLI::IsMember({"bold", "alt"}));
  add_param_flags(sim_cmd, sim_params);
  sim_cmd->add_option("--episodes", sim_episodes, "Episode count")->required();
  sim_cmd->add_option("--seed", sim_seed, "RNG seed")->required();
  sim_cmd->add_option("--cutoff", sim_cutoff, "Step cutoff per episode");
  add_output_options(sim_cmd, sim_out);

  // approx pc / lip
  auto* approx_cmd = app.add_subcommand("approx", "Approximation error bounds");
  approx_cmd->require_subcommand(1);
  auto* pc_cmd = approx_cmd->add_subcommand(
      "pc", "Best piecewise-constant fit error");
  ParamFlags pc_params;
  unsigned pc_bins = 0;
  std::optional<unsigned> pc_depth;
  bool pc_per_bin = false;
  OutputOptions pc_out;
  pc_cmd->add_option("--bins", pc_bins, "Bin count (power of two >= 4)")
      ->required();
  add_param_flags(pc_cmd, pc_params);
  pc_cmd->add_option("--depth", pc_depth,
                     "Also integrate numerically at this dyadic depth");
  pc_cmd->add_flag("--per-bin", pc_per_bin, "Emit per-bin rows");
  add_output_options(pc_cmd, pc_out);

  auto* lip_cmd = approx_cmd->add_subcommand(
      "lip", "Lipschitz-fit lower bound");
  ParamFlags lip_params;
  double lip_l = 0;
  OutputOptions lip_out;
  lip_cmd->add_option("--lipschitz", lip_l, "Lipschitz constant")->required();
  add_param_flags(lip_cmd, lip_params);
  add_output_options(lip_cmd, lip_out);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite");
  bool verify_deep = false;
  verify_cmd->add_flag("--deep", verify_deep, "Widen grids and sample counts");

  // diff
  auto* diff_cmd = app.add_subcommand("diff", "One-sided differences at a site");
  ParamFlags diff_params;
  std::string diff_s;
  unsigned diff_level = 0;
  OutputOptions diff_out;
  diff_cmd->add_option("--s", diff_s, "Dyadic site")->required();
  diff_cmd->add_option("--level", diff_level, "Lattice level")->required();
  add_param_flags(diff_cmd, diff_params);
  add_output_options(diff_cmd, diff_out);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 1;
  }

  try {
    if (*eval_cmd) {
      const Params params = eval_params.make();
      const Rational s = parse_rational(eval_s);
      const BitExpansion bits = expand_binary(s, 4096);
      const double v = value_expansion(bits, params, eval_tol);
      if (eval_out.format == "json") {
        OutputTable t{{"s", "v"}, {{Cell{eval_s}, Cell{v}}}};
        emit(t, eval_out, out);
      } else if (!eval_out.path.empty()) {
        std::ofstream file(eval_out.path, std::ios::binary);
        file << format_double(v) << '\n';
      } else {
        out << format_double(v) << '\n';
      }
      return 0;
    }

    if (*table_cmd) {
      const Params params = table_params.make();
      if (table_level > 22)
        throw std::invalid_argument("lattice level above 22");
      const std::uint64_t n = std::uint64_t{1} << table_level;
      const double ds = 1.0 / static_cast<double>(n);
      StreamWriter writer({"s", "v"}, table_out, out);
      if (table_level <= 16) {
        // exact evaluation, so every emitted v is correctly rounded
        const std::vector<Rational> exact =
            value_lattice_exact(table_level, params);
        for (std::uint64_t k = 0; k <= n; ++k)
          writer.row(static_cast<double>(k) * ds, to_double(exact[k]));
      } else {
        const std::vector<double> values = value_lattice(table_level, params);
        for (std::uint64_t k = 0; k <= n; ++k)
          writer.row(static_cast<double>(k) * ds, values[k]);
      }
      writer.finish();
      return 0;
    }

    if (*solve_cmd) {
      const Params params = solve_params.make();
      DiscreteSpec spec(solve_n, params);
      const ValueTable exact = exact_table(spec);
      OutputTable t;
      if (solve_method == "exact") {
        t.columns = {"n", "z_exact"};
        for (int n = 0; n <= solve_n; ++n)
          t.rows.push_back({Cell{std::int64_t{n}},
                            Cell{exact.values[static_cast<std::size_t>(n)]}});
      } else {
        const ValueTable vi = value_iteration(spec, 0.0, solve_tol);
        if (!vi.converged)
          err << "warning: value iteration hit the iteration cap\n";
        t.columns = {"n", "z_exact", "z_vi", "abs_err"};
        for (int n = 0; n <= solve_n; ++n) {
          const std::size_t i = static_cast<std::size_t>(n);
          t.rows.push_back({Cell{std::int64_t{n}}, Cell{exact.values[i]},
                            Cell{vi.values[i]},
                            Cell{std::fabs(exact.values[i] - vi.values[i])}});
        }
      }
      emit(t, solve_out, out);
      return 0;
    }

    if (*qlearn_cmd) {
      const Params params = qlearn_params.make();
      DiscreteSpec spec(qlearn_n, params);
      QLearnResult learned =
          q_learning(spec, QLearnConfig::defaults(qlearn_episodes, qlearn_seed));
      const ValueTable exact = exact_table(spec);
      OutputTable t;
      t.columns = {"n", "z_exact", "q_greedy", "abs_err"};
      for (int n = 1; n < qlearn_n; ++n) {
        const std::size_t i = static_cast<std::size_t>(n);
        const double greedy = learned.table.greedy_value(n);
        t.rows.push_back({Cell{std::int64_t{n}}, Cell{exact.values[i]},
                          Cell{greedy},
                          Cell{std::fabs(exact.values[i] - greedy)}});
      }
      emit(t, qlearn_out, out);
      if (!qlearn_trace.empty()) {
        OutputTable trace;
        trace.columns = {"episode", "return"};
        for (std::size_t e = 0; e < learned.returns.size(); ++e)
          trace.rows.push_back(
              {Cell{static_cast<std::int64_t>(e)}, Cell{learned.returns[e]}});
        OutputOptions trace_out{qlearn_out.format, qlearn_trace};
        emit(trace, trace_out, out);
      }
      return 0;
    }

    if (*sim_cmd) {
      const Params params = sim_params.make();
      const Rational s0 = parse_rational(sim_s0);
      const BitExpansion start = expand_binary(s0, 4096);
      const Policy policy =
          sim_policy == "alt" ? Policy::alt() : Policy::bold();
      const McEstimate est =
          mc_value(start, policy, params, sim_episodes, sim_seed, sim_cutoff);
      OutputTable t;
      t.columns = {"mean", "stderr", "episodes", "truncations", "rng"};
      t.rows.push_back({Cell{est.mean}, Cell{est.stderr_},
                        Cell{static_cast<std::int64_t>(est.episodes)},
                        Cell{static_cast<std::int64_t>(est.truncation_count)},
                        Cell{est.rng_name}});
      emit(t, sim_out, out);
      return 0;
    }

    if (*pc_cmd) {
      const Params params = pc_params.make();
      ApproxReport report = pc_error_exact(pc_bins, params);
      if (pc_depth)
        report.brute_error = pc_error_brute(pc_bins, params, *pc_depth);
      OutputTable t;
      if (pc_per_bin) {
        t.columns = {"bin_lo", "bin_hi", "median_value", "bin_error"};
        for (const BinError& bin : report.per_bin)
          t.rows.push_back({Cell{dyadic_string(bin.lo)},
                            Cell{dyadic_string(bin.hi)},
                            Cell{bin.median_value}, Cell{bin.bin_error}});
      } else {
        t.columns = {"exact_error", "brute_error", "paper_leading_bound"};
        Cell brute = report.brute_error ? Cell{*report.brute_error}
                                        : Cell{std::monostate{}};
        t.rows.push_back(
            {Cell{report.exact_error}, brute, Cell{report.paper_leading_bound}});
      }
      emit(t, pc_out, out);
      return 0;
    }

    if (*lip_cmd) {
      const Params params = lip_params.make();
      const LipschitzBound lb = lipschitz_bound(lip_l, params);
      OutputTable t;
      t.columns = {"h", "bound", "ramp_start", "ramp_end", "ramp_low",
                   "ramp_high"};
      t.rows.push_back({Cell{lb.h}, Cell{lb.bound}, Cell{lb.ramp_start},
                        Cell{lb.ramp_end}, Cell{lb.ramp_low},
                        Cell{lb.ramp_high}});
      emit(t, lip_out, out);
      return 0;
    }

    if (*verify_cmd) {
      bool all_pass = true;
      for (const PropertyResult& r : run_properties(verify_deep)) {
        out << (r.pass ? "PASS " : "FAIL ") << r.name;
        if (!r.detail.empty()) out << " - " << r.detail;
        out << '\n';
        all_pass = all_pass && r.pass;
      }
      return all_pass ? 0 : 2;
    }

    if (*diff_cmd) {
      const Params params = diff_params.make();
      const Dyadic site = dyadic_from_rational(parse_rational(diff_s));
      const DiffReport report = backward_diff(site, diff_level, params);
      OutputTable t;
      t.columns = {"site", "level", "forward", "backward", "bound"};
      Cell forward = report.forward ? Cell{*report.forward}
                                    : Cell{std::monostate{}};
      t.rows.push_back({Cell{dyadic_string(report.site)},
                        Cell{static_cast<std::int64_t>(report.level)}, forward,
                        Cell{report.backward}, Cell{report.bound}});
      emit(t, diff_out, out);
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace gambler::cli
