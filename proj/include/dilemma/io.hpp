#pragma once

#include <json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "dilemma/erc.hpp"
#include "dilemma/game.hpp"
#include "dilemma/institutions.hpp"
#include "dilemma/simulate.hpp"

namespace dilemma {

using Json = nlohmann::ordered_json;

/// Shortest text that round-trips, at most 17 significant digits. Locale free.
std::string format_full(double v);
/// Fixed notation with `decimals` digits after the point. Locale free.
std::string format_fixed(double v, int decimals);

Json to_json(const GameParams& g);
Json to_json(const StructureReport& r);
Json to_json(const InstitutionSolution& s);
Json to_json(const Population& p);
Json to_json(const SimReport& r);
Json to_json(const DynamicsTrace& t);

Population population_from_json(const GameParams& g, const Json& j);

/// Comma separated rows with LF endings. Fields are written verbatim unless
/// they contain a comma, quote or newline.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}
  void row(const std::vector<std::string>& fields);

 private:
  std::ostream& out_;
};

}  // namespace dilemma
