#include "catsim/diagnostics.hpp"

#include <iostream>
#include <mutex>
#include <utility>

namespace catsim {

namespace {

std::mutex& sink_mutex() {
  static std::mutex m;
  return m;
}

WarningSink& sink_slot() {
  static WarningSink sink = [](const std::string& msg) {
    std::cerr << "catsim warning: " << msg << '\n';
  };
  return sink;
}

} // namespace

void warn(const std::string& message) {
  std::lock_guard lock(sink_mutex());
  if (auto& sink = sink_slot())
    sink(message);
}

WarningSink set_warning_sink(WarningSink sink) {
  std::lock_guard lock(sink_mutex());
  return std::exchange(sink_slot(), std::move(sink));
}

} // namespace catsim
