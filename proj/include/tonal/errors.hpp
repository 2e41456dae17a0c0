#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tonal {

// Malformed textual input; offset is the byte position of the offending
// character within the parsed line.
struct parse_error : std::runtime_error {
  size_t offset;
  parse_error(const std::string& what, size_t off)
      : std::runtime_error(what + " (byte " + std::to_string(off) + ")"),
        offset(off) {}
};

// A search would exceed its configured node/coloring budget.
struct budget_error : std::runtime_error {
  uint64_t estimate;
  uint64_t budget;
  budget_error(const std::string& what, uint64_t est, uint64_t bud)
      : std::runtime_error(what + ": estimated " + std::to_string(est) +
                           " exceeds budget " + std::to_string(bud)),
        estimate(est), budget(bud) {}
};

}  // namespace tonal
