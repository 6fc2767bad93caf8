#pragma once

#include <iostream>
#include <string_view>

namespace dilemma::log {

enum class Level { Error = 0, Info = 1, Debug = 2 };

/// Level from DILEMMA_LOG (error, info or debug); error when unset or unknown.
Level level_from_env();

/// Current threshold; read from the environment on first use.
Level& threshold();

inline void write(Level lvl, std::string_view tag, std::string_view msg) {
  if (static_cast<int>(lvl) <= static_cast<int>(threshold())) {
    std::cerr << "[dilemma " << tag << "] " << msg << '\n';
  }
}

inline void error(std::string_view msg) { write(Level::Error, "error", msg); }
inline void info(std::string_view msg) { write(Level::Info, "info", msg); }
inline void debug(std::string_view msg) { write(Level::Debug, "debug", msg); }

}  // namespace dilemma::log
