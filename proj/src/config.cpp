#include "regset/config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>

namespace regset {

Limits Limits::from_env() {
  Limits limits;
  const char* raw = std::getenv("REGSET_MAX_ORDER");
  if (raw == nullptr) return limits;
  std::size_t value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end || value == 0) return limits;
  limits.enumeration_cap = value;
  limits.closure_cap = std::max(limits.closure_cap, value);
  return limits;
}

}  // namespace regset
