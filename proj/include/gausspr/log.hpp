#pragma once

#include <cstdlib>
#include <iostream>
#include <string>

namespace gausspr {

inline bool log_enabled() {
  const char* v = std::getenv("GAUSSPR_LOG");
  return v != nullptr && *v != '\0' && std::string(v) != "0";
}

inline void log_warn(const std::string& msg) {
  if (log_enabled()) std::cerr << "[gausspr] " << msg << "\n";
}

}  // namespace gausspr
