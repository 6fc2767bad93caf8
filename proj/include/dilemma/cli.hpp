#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "dilemma/error.hpp"
#include "dilemma/fixtures.hpp"
#include "dilemma/institutions.hpp"
#include "dilemma/io.hpp"

namespace dilemma::cli {

enum class Format { Csv, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalidParameters = 2;
inline constexpr int kExitNonConvergence = 3;

/// Exit code for a library error kind.
int exit_code_for(ErrorKind kind);

/// One row of the institution table; `error` is set instead of `solution`
/// when (n, d0) is not a valid game.
struct TableRow {
  int n = 0;
  std::optional<InstitutionSolution> solution;
  std::optional<ErrorKind> error;
};

std::vector<TableRow> table1_rows(double d0, const std::vector<int>& n_values);

struct PayoffRow {
  int k;
  double payoff_nc;
  double payoff_c;
  bool crossing;  // first k with f(NC, k) > f(C, 0), i.e. k = k* - 1
};

std::vector<PayoffRow> fig1_rows(const GameParams& g);

Json analyze_report(const GameParams& g);

void write_table1(const std::vector<TableRow>& rows, Format format, std::ostream& out);
void write_fig1(const GameParams& g, const std::vector<PayoffRow>& rows, Format format,
                std::ostream& out);
void write_fig2(const std::vector<TableRow>& rows, Format format, std::ostream& out);
void write_mc(const SimReport& report, Format format, std::ostream& out);

/// Parses flags and runs one command. `args[0]` is the program name. Data goes
/// to `out` (or --output), diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dilemma::cli
