#pragma once

#include <cstdint>
#include <limits>
#include <string>

namespace oscsum {

/// One row of an asymptotics scan: a nonnegative value measured at size N,
/// optionally next to the value the theory predicts for that N.
struct ScanRecord {
  std::uint64_t N = 0;
  double value = 0.0;
  std::string label;
  double predicted = std::numeric_limits<double>::quiet_NaN();
};

}  // namespace oscsum
