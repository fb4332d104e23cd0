#include "trimoduli/parallel.hpp"

#include "trimoduli/error.hpp"

#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

namespace trimoduli {

auto worker_count() -> std::size_t {
  if (const char *env = std::getenv("TRIMODULI_THREADS"); env != nullptr && *env != '\0') {
    const std::string_view text(env);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0)
      throw GuardError("TRIMODULI_THREADS must be a positive integer, got '" + std::string(text) + "'");
    return value;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

} // namespace trimoduli
