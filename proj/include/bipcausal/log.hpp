#pragma once

#include <string>

namespace bipcausal::log {

enum class Level { Error = 0, Warn = 1, Info = 2, Debug = 3 };

/// Active verbosity, read once from the BIPCAUSAL_LOG environment
/// variable (error|warn|info|debug). Defaults to warn.
Level level();

void emit(Level lvl, const std::string& msg);

inline void error(const std::string& msg) { emit(Level::Error, msg); }
inline void warn(const std::string& msg) { emit(Level::Warn, msg); }
inline void info(const std::string& msg) { emit(Level::Info, msg); }
inline void debug(const std::string& msg) { emit(Level::Debug, msg); }

} // namespace bipcausal::log
