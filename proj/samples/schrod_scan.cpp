// Operator-norm scan of the oscillatory integral operator at (2 -> 2).
#include <cstdio>
#include <vector>

#include "oscsum/oscsum.hpp"

int main() {
  using namespace oscsum;
  const std::vector<std::size_t> ns = {16, 32, 64, 128, 256, 512};
  const Exponent two(2.0);
  const schrod::NormScan scan = schrod::norm_scan(two, two, 1.0, ns);
  for (const ScanRecord& r : scan.rows)
    std::printf("N=%5llu  C_N=%.8f  (%s)\n",
                static_cast<unsigned long long>(r.N), r.value,
                r.label.c_str());
  std::printf("slope %.4f, predicted %.4f, resolution check %.2e\n",
              scan.fit.slope, scan.predicted_slope, scan.validation_change);
}
