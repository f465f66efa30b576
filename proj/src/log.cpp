#include "bipcausal/log.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>

namespace bipcausal::log {

namespace {

Level parse_env() {
    const char* v = std::getenv("BIPCAUSAL_LOG");
    if (!v) return Level::Warn;
    const std::string s(v);
    if (s == "error") return Level::Error;
    if (s == "warn") return Level::Warn;
    if (s == "info") return Level::Info;
    if (s == "debug") return Level::Debug;
    return Level::Warn;
}

const char* tag(Level l) {
    switch (l) {
        case Level::Error: return "error";
        case Level::Warn: return "warn";
        case Level::Info: return "info";
        case Level::Debug: return "debug";
    }
    return "?";
}

std::mutex g_mutex;

} // namespace

Level level() {
    static const Level l = parse_env();
    return l;
}

void emit(Level lvl, const std::string& msg) {
    if (static_cast<int>(lvl) > static_cast<int>(level())) return;
    std::lock_guard<std::mutex> lock(g_mutex);
    std::cerr << "[" << tag(lvl) << "] " << msg << "\n";
}

} // namespace bipcausal::log
