#include "dilemma/log.hpp"

#include <cstdlib>
#include <string>

namespace dilemma::log {

Level level_from_env() {
  const char* raw = std::getenv("DILEMMA_LOG");
  if (raw == nullptr) return Level::Error;
  const std::string v(raw);
  if (v == "debug") return Level::Debug;
  if (v == "info") return Level::Info;
  return Level::Error;
}

Level& threshold() {
  static Level level = level_from_env();
  return level;
}

}  // namespace dilemma::log
