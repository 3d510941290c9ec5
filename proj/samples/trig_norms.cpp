// Extremizer ratios of the N-term trigonometric sum at one point of each
// region, next to the closed-form upper bound.
#include <cstdio>

#include "oscsum/oscsum.hpp"

int main() {
  using namespace oscsum;
  using K = trigsum::ExtremizerFamily::Kind;
  const struct {
    const char* region;
    ExponentPair pt;
    K family;
  } cases[] = {{"A", {0.75, 0.75}, K::Delta},
               {"B", {0.0, 0.25}, K::Ones},
               {"C", {0.0, 0.5}, K::Chirp}};

  std::printf("%-6s %-8s %6s %14s %14s\n", "region", "family", "N", "ratio",
              "upper");
  for (const auto& c : cases)
    for (std::size_t n : {16, 64, 256, 1024}) {
      const double v =
          trigsum::cn_lower_bound(n, c.pt, c.family, CircleGrid::for_length(n));
      std::printf("%-6s %-8s %6zu %14.8f %14.8f\n", c.region,
                  trigsum::family_name(c.family), n, v,
                  trigsum::cn_upper_bound(n, c.pt));
    }

  std::printf("\ngamma(4) = %.12f\n", trigsum::gamma_q(4.0));
  std::printf("||D_8||_4^4 = %llu\n",
              static_cast<unsigned long long>(trigsum::dirichlet_norm_even(8, 2)));
}
