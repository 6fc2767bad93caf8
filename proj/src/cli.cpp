#include "dilemma/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "dilemma/erc.hpp"
#include "dilemma/log.hpp"
#include "dilemma/simulate.hpp"

namespace dilemma::cli {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonConvergence: return kExitNonConvergence;
    default: return kExitInvalidParameters;
  }
}

std::vector<TableRow> table1_rows(double d0, const std::vector<int>& n_values) {
  std::vector<TableRow> rows;
  rows.reserve(n_values.size());
  for (int n : n_values) {
    TableRow row;
    row.n = n;
    try {
      // c plays no part in beta or t; any admissible value will do.
      const GameParams g(n, d0 + 2.0, d0);
      row.solution = solve_t(g);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NonConvergence) throw;
      log::info("n=" + std::to_string(n) + " skipped: " + e.what());
      row.error = e.kind();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<PayoffRow> fig1_rows(const GameParams& g) {
  const double f_c0 = payoff(g, Strategy::C, 0);
  std::vector<PayoffRow> rows;
  bool crossed = false;
  for (int k = 0; k < g.n(); ++k) {
    const double nc = payoff(g, Strategy::NC, k);
    const bool crossing = !crossed && nc > f_c0;
    crossed = crossed || crossing;
    rows.push_back({k, nc, payoff(g, Strategy::C, k), crossing});
  }
  return rows;
}

Json analyze_report(const GameParams& g) {
  Json j;
  j["game"] = to_json(g);
  j["structure"] = to_json(check_structure(g));
  j["institution"] = to_json(solve_t(g));
  return j;
}

namespace {

const std::vector<std::string> kTableColumns = {"n", "k_star", "beta", "t", "p_A", "p_I", "p_F"};

std::vector<double> table_values(const InstitutionSolution& s) {
  return {s.beta, s.t, s.p_agree, s.p_insider, s.p_freerider};
}

std::string status_of(const TableRow& row) {
  return row.error ? "error:" + std::string(to_string(*row.error)) : "ok";
}

}  // namespace

void write_table1(const std::vector<TableRow>& rows, Format format, std::ostream& out) {
  if (format == Format::Json) {
    Json arr = Json::array();
    for (const auto& row : rows) {
      Json j;
      if (row.solution) {
        j = to_json(*row.solution);
      } else {
        j["n"] = row.n;
      }
      j["status"] = status_of(row);
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << '\n';
    return;
  }
  CsvWriter csv(out);
  std::vector<std::string> header = kTableColumns;
  for (std::size_t i = 2; i < kTableColumns.size(); ++i) header.push_back(kTableColumns[i] + "_3dp");
  header.push_back("status");
  csv.row(header);
  for (const auto& row : rows) {
    std::vector<std::string> fields{std::to_string(row.n)};
    if (row.solution) {
      const auto values = table_values(*row.solution);
      fields.push_back(std::to_string(row.solution->k_star));
      for (double v : values) fields.push_back(format_full(v));
      for (double v : values) fields.push_back(format_fixed(v, 3));
    } else {
      fields.resize(header.size() - 1);
    }
    fields.push_back(status_of(row));
    csv.row(fields);
  }
}

void write_fig1(const GameParams& g, const std::vector<PayoffRow>& rows, Format format,
                std::ostream& out) {
  if (format == Format::Json) {
    Json arr = Json::array();
    for (const auto& r : rows) {
      arr.push_back(Json{{"k", r.k},
                         {"payoff_NC", r.payoff_nc},
                         {"payoff_C", r.payoff_c},
                         {"crossing", r.crossing}});
    }
    out << Json{{"game", to_json(g)}, {"rows", arr}}.dump(2) << '\n';
    return;
  }
  CsvWriter csv(out);
  csv.row({"k", "payoff_NC", "payoff_C", "marker"});
  for (const auto& r : rows) {
    csv.row({std::to_string(r.k), format_full(r.payoff_nc), format_full(r.payoff_c),
             r.crossing ? "crossing" : ""});
  }
}

void write_fig2(const std::vector<TableRow>& rows, Format format, std::ostream& out) {
  if (format == Format::Json) {
    Json arr = Json::array();
    for (const auto& row : rows) {
      Json j{{"n", row.n}};
      if (row.solution) {
        j["t"] = row.solution->t;
        j["k_star"] = row.solution->k_star;
        j["regime"] = std::string(to_string(row.solution->regime));
      }
      j["status"] = status_of(row);
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << '\n';
    return;
  }
  CsvWriter csv(out);
  csv.row({"n", "t", "k_star", "regime", "status"});
  for (const auto& row : rows) {
    if (row.solution) {
      csv.row({std::to_string(row.n), format_full(row.solution->t),
               std::to_string(row.solution->k_star),
               std::string(to_string(row.solution->regime)), status_of(row)});
    } else {
      csv.row({std::to_string(row.n), "", "", "", status_of(row)});
    }
  }
}

void write_mc(const SimReport& report, Format format, std::ostream& out) {
  if (format == Format::Json) {
    out << to_json(report).dump(2) << '\n';
    return;
  }
  CsvWriter csv(out);
  csv.row({"quantity", "estimate", "stderr", "trials", "seed", "rng_algorithm"});
  for (const Estimate* e : {&report.p_agree, &report.p_insider, &report.p_freerider}) {
    csv.row({e->quantity, format_full(e->estimate), format_full(e->stderr_),
             std::to_string(report.trials), std::to_string(report.seed), report.rng_algorithm});
  }
}

namespace {

struct Options {
  std::optional<int> n;
  std::optional<double> c;
  std::optional<double> d;
  double d0 = fixtures::kTable1D0;
  std::optional<int> n_min;
  std::optional<int> n_max;
  std::uint64_t seed = 0;
  std::uint64_t trials = 1'000'000;
  int shards = 1;
  std::optional<double> t;
  int rounds = 100;
  std::string population;
  std::string format;
  std::string output;
};

std::vector<int> n_range(int lo, int hi) {
  std::vector<int> v;
  for (int n = lo; n <= hi; ++n) v.push_back(n);
  return v;
}

Format resolve_format(const std::string& flag, Format fallback) {
  if (flag.empty()) return fallback;
  return flag == "json" ? Format::Json : Format::Csv;
}

std::string require_msg(const std::string& cmd, const std::string& flag) {
  return cmd + " requires " + flag;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analysis toolkit for the n-player CAV travel dilemma"};
  app.name(args.empty() ? "dilemma" : args.front());
  app.require_subcommand(1);

  Options o;
  const auto add_game = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "number of players");
    sub->add_option("--c", o.c, "base commute benefit");
    sub->add_option("--d", o.d, "CAV benefit premium");
  };
  const auto add_io = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output", o.output, "output path (default: standard output)");
  };

  auto* analyze = app.add_subcommand("analyze", "derived quantities, structure checks, institution solution");
  add_game(analyze);
  add_io(analyze);

  auto* table1 = app.add_subcommand("table1", "institution table over n at d = d0");
  table1->add_option("--d0", o.d0, "CAV premium for the table");
  table1->add_option("--n-min", o.n_min);
  table1->add_option("--n-max", o.n_max);
  add_io(table1);

  auto* fig1 = app.add_subcommand("fig1", "payoff curves f(NC,k), f(C,k)");
  add_game(fig1);
  add_io(fig1);

  auto* fig2 = app.add_subcommand("fig2", "participation probability t(n)");
  fig2->add_option("--d0", o.d0);
  fig2->add_option("--n-min", o.n_min);
  fig2->add_option("--n-max", o.n_max);
  add_io(fig2);

  auto* mc = app.add_subcommand("mc", "Monte Carlo of the participation stage");
  add_game(mc);
  mc->add_option("--d0", o.d0);
  mc->add_option("--t", o.t, "participation probability (default: solved t)");
  mc->add_option("--seed", o.seed);
  mc->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
  mc->add_option("--shards", o.shards)->check(CLI::PositiveNumber);
  add_io(mc);

  auto* dynamics = app.add_subcommand("dynamics", "best-response dynamics from a random profile");
  add_game(dynamics);
  dynamics->add_option("--seed", o.seed);
  dynamics->add_option("--rounds", o.rounds)->check(CLI::PositiveNumber);
  dynamics->add_option("--population", o.population, "population JSON (default: all selfish)");
  add_io(dynamics);

  try {
    std::vector<std::string> rev(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(rev.begin(), rev.end());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitInvalidParameters;
  }

  const auto fail = [&](const std::string& msg) {
    err << msg << '\n';
    return kExitInvalidParameters;
  };

  try {
    std::ostringstream buffer;
    std::string cmd;

    if (analyze->parsed()) {
      cmd = "analyze";
      if (!o.n || !o.c || !o.d) return fail(require_msg(cmd, "--n, --c and --d"));
      const GameParams g(*o.n, *o.c, *o.d);
      const Format f = resolve_format(o.format, Format::Json);
      const Json report = analyze_report(g);
      if (f == Format::Json) {
        buffer << report.dump(2) << '\n';
      } else {
        CsvWriter csv(buffer);
        csv.row({"section", "field", "value"});
        for (const auto& section : report.items()) {
          for (const auto& field : section.value().items()) {
            const auto& value = field.value();
            std::string text = value.is_number_float() ? format_full(value.get<double>())
                               : value.is_string()     ? value.get<std::string>()
                                                       : value.dump();
            csv.row({section.key(), field.key(), text});
          }
        }
      }
    } else if (table1->parsed()) {
      cmd = "table1";
      std::vector<int> ns(fixtures::kTable1N.begin(), fixtures::kTable1N.end());
      if (o.n_min || o.n_max) ns = n_range(o.n_min.value_or(3), o.n_max.value_or(50));
      write_table1(table1_rows(o.d0, ns), resolve_format(o.format, Format::Csv), buffer);
    } else if (fig1->parsed()) {
      cmd = "fig1";
      const GameParams g(o.n.value_or(fixtures::kFig1N), o.c.value_or(fixtures::kFig1C),
                         o.d.value_or(fixtures::kFig1D));
      write_fig1(g, fig1_rows(g), resolve_format(o.format, Format::Csv), buffer);
    } else if (fig2->parsed()) {
      cmd = "fig2";
      const auto ns = n_range(o.n_min.value_or(3), o.n_max.value_or(100));
      write_fig2(table1_rows(o.d0, ns), resolve_format(o.format, Format::Csv), buffer);
    } else if (mc->parsed()) {
      cmd = "mc";
      if (!o.n) return fail(require_msg(cmd, "--n"));
      const double d = o.d.value_or(o.d0);
      const GameParams g(*o.n, o.c.value_or(d + 2.0), d);
      const double t = o.t ? *o.t : solve_t(g).t;
      log::info("mc: n=" + std::to_string(g.n()) + " t=" + format_full(t) +
                " trials=" + std::to_string(o.trials) + " shards=" + std::to_string(o.shards));
      const auto report = mc_participation(g, t, SimConfig{o.trials, o.seed, o.shards});
      write_mc(report, resolve_format(o.format, Format::Json), buffer);
    } else if (dynamics->parsed()) {
      cmd = "dynamics";
      if (!o.n || !o.c || !o.d) return fail(require_msg(cmd, "--n, --c and --d"));
      const GameParams g(*o.n, *o.c, *o.d);
      Population pop = Population::selfish(g);
      if (!o.population.empty()) {
        std::ifstream in(o.population);
        if (!in) return fail("cannot read population file " + o.population);
        pop = population_from_json(g, Json::parse(in));
      }
      auto rng = make_stream(o.seed, 0);
      const auto initial = random_profile(g.n(), rng);
      const auto trace = best_response_dynamics(g, pop, initial, o.rounds);
      std::set<int> coalition;
      for (std::size_t i = 0; i < trace.final_profile.size(); ++i) {
        if (trace.final_profile[i] == Strategy::NC) coalition.insert(static_cast<int>(i));
      }
      Json j = to_json(trace);
      j["equilibrium"] = trace.fixed_point && is_equilibrium(g, pop, coalition);
      j["seed"] = o.seed;
      if (resolve_format(o.format, Format::Json) == Format::Json) {
        buffer << j.dump(2) << '\n';
      } else {
        CsvWriter csv(buffer);
        csv.row({"round", "nc_count", "switches"});
        for (std::size_t r = 0; r < trace.nc_counts.size(); ++r) {
          csv.row({std::to_string(r), std::to_string(trace.nc_counts[r]),
                   r == 0 ? "" : std::to_string(trace.switches[r - 1])});
        }
      }
    }

    log::debug(cmd + ": " + std::to_string(buffer.str().size()) + " bytes of output");
    if (o.output.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(o.output, std::ios::binary);
      if (!file) {
        err << "cannot open " << o.output << " for writing\n";
        return kExitFailure;
      }
      file << buffer.str();
    }
    return kExitOk;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const nlohmann::json::exception& e) {
    err << "InvalidType: " << e.what() << '\n';
    return kExitInvalidParameters;
  }
}

}  // namespace dilemma::cli
