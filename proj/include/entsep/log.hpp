#pragma once

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

namespace entsep {

enum class LogLevel { Error = 0, Warn = 1, Info = 2, Debug = 3 };

// Level comes from the ENTSEP_LOG environment variable (error|warn|info|debug).
inline LogLevel log_level() {
  static const LogLevel level = [] {
    const char* env = std::getenv("ENTSEP_LOG");
    if (env == nullptr) return LogLevel::Warn;
    if (std::strcmp(env, "error") == 0) return LogLevel::Error;
    if (std::strcmp(env, "info") == 0) return LogLevel::Info;
    if (std::strcmp(env, "debug") == 0) return LogLevel::Debug;
    return LogLevel::Warn;
  }();
  return level;
}

template <typename... Args>
void log_at(LogLevel level, const char* fmt, Args... args) {
  if (level > log_level()) return;
  const char* tag = level == LogLevel::Error  ? "error"
                    : level == LogLevel::Warn ? "warn"
                    : level == LogLevel::Info ? "info"
                                              : "debug";
  std::fprintf(stderr, "[entsep:%s] ", tag);
  std::fprintf(stderr, fmt, args...);
  std::fprintf(stderr, "\n");
}

#define ENTSEP_LOG_INFO(...) ::entsep::log_at(::entsep::LogLevel::Info, __VA_ARGS__)
#define ENTSEP_LOG_WARN(...) ::entsep::log_at(::entsep::LogLevel::Warn, __VA_ARGS__)
#define ENTSEP_LOG_DEBUG(...) ::entsep::log_at(::entsep::LogLevel::Debug, __VA_ARGS__)

}  // namespace entsep
