#include "dilemma/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace dilemma {

std::string format_full(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

std::string format_fixed(double v, int decimals) {
  if (!std::isfinite(v)) return format_full(v);
  std::array<char, 512> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed,
                           decimals);
  if (res.ec != std::errc{}) throw std::runtime_error("format_fixed overflow");
  return std::string(buf.data(), res.ptr);
}

Json to_json(const GameParams& g) {
  return Json{{"n", g.n()},     {"c", g.c()},         {"d", g.d()},         {"e", g.e()},
              {"phi", g.phi()}, {"alpha", g.alpha()}, {"k_star", k_star(g)}};
}

Json to_json(const StructureReport& r) {
  return Json{{"dominance", r.dominance},
              {"monotonicity", r.monotonicity},
              {"nonnegativity", r.nonnegativity},
              {"pareto_relation", r.pareto_relation},
              {"desirability", r.desirability},
              {"k_star_sandwich", r.k_star_sandwich}};
}

Json to_json(const InstitutionSolution& s) {
  return Json{{"n", s.n},
              {"k_star", s.k_star},
              {"beta", s.beta},
              {"t", s.t},
              {"p_A", s.p_agree},
              {"p_I", s.p_insider},
              {"p_F", s.p_freerider},
              {"regime", std::string(to_string(s.regime))}};
}

Json to_json(const Population& p) {
  Json types = Json::array();
  for (const auto& t : p.types()) types.push_back(Json{{"a", t.a()}, {"b", t.b()}});
  return Json{{"types", types}};
}

Json to_json(const SimReport& r) {
  Json out = Json::array();
  for (const Estimate* e : {&r.p_agree, &r.p_insider, &r.p_freerider}) {
    out.push_back(Json{{"quantity", e->quantity},
                       {"estimate", e->estimate},
                       {"stderr", e->stderr_},
                       {"trials", r.trials},
                       {"seed", r.seed},
                       {"rng_algorithm", r.rng_algorithm}});
  }
  return out;
}

Json to_json(const DynamicsTrace& t) {
  return Json{{"rounds", t.rounds},
              {"fixed_point", t.fixed_point},
              {"nc_counts", t.nc_counts},
              {"switches", t.switches},
              {"final_nc_count", t.final_profile.nc_count()}};
}

Population population_from_json(const GameParams& g, const Json& j) {
  if (!j.contains("types") || !j.at("types").is_array()) {
    throw Error(ErrorKind::InvalidType, "population JSON needs a \"types\" array");
  }
  std::vector<ErcType> types;
  for (const auto& t : j.at("types")) {
    types.emplace_back(t.at("a").get<double>(), t.at("b").get<double>());
  }
  return Population(g, std::move(types));
}

void CsvWriter::row(const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out_ << ',';
    const auto& f = fields[i];
    if (f.find_first_of(",\"\n\r") == std::string::npos) {
      out_ << f;
      continue;
    }
    out_ << '"';
    for (char ch : f) {
      if (ch == '"') out_ << '"';
      out_ << ch;
    }
    out_ << '"';
  }
  out_ << '\n';
}

}  // namespace dilemma
