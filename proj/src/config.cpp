#include "qschubert/config.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace qschubert {

namespace {

std::size_t initial_budget() {
  if (const char* env = std::getenv("QSCHUBERT_BUDGET")) {
    try {
      const auto v = std::stoull(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 20000;
}

std::atomic<std::size_t>& budget() {
  static std::atomic<std::size_t> b{initial_budget()};
  return b;
}

}  // namespace

std::size_t component_budget() { return budget().load(); }

void set_component_budget(std::size_t words) { budget().store(words > 0 ? words : initial_budget()); }

}  // namespace qschubert
