#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>

#include "oscsum/core/errors.hpp"
#include "oscsum/core/exponent.hpp"

namespace oscsum::normest {

struct InterpolatedBound {
  double bound = 0.0;
  ExponentPair pt;
};

/// C0^{1-theta} C1^theta at the point (1-theta) pt0 + theta pt1.
inline InterpolatedBound riesz_thorin_combine(double c0, const ExponentPair& pt0,
                                              double c1, const ExponentPair& pt1,
                                              double theta) {
  if (!(theta >= 0.0 && theta <= 1.0))
    throw PreconditionError("riesz_thorin_combine: theta must lie in [0,1]");
  if (!(c0 >= 0.0) || !(c1 >= 0.0))
    throw PreconditionError("riesz_thorin_combine: bounds must be >= 0");
  double bound;
  if (theta == 0.0)
    bound = c0;
  else if (theta == 1.0)
    bound = c1;
  else
    bound = std::pow(c0, 1.0 - theta) * std::pow(c1, theta);
  const ExponentPair pt((1.0 - theta) * pt0.inv_p + theta * pt1.inv_p,
                        (1.0 - theta) * pt0.inv_q + theta * pt1.inv_q);
  return {bound, pt};
}

/// Transfers a bound C at `from` to `to` for the N-term operator, using
/// the two inclusions of the normalized and the counting measure:
///   larger 1/q at the same 1/p keeps C;
///   smaller 1/p at the same 1/q costs N^{1/p_from - 1/p_to}.
/// A move doing both composes the two. Any other move gives nullopt.
inline std::optional<double> holder_transfer(double c, const ExponentPair& from,
                                             const ExponentPair& to,
                                             std::size_t n) {
  constexpr double eps = 1e-12;
  if (to.inv_q < from.inv_q - eps) return std::nullopt;
  if (to.inv_p > from.inv_p + eps) return std::nullopt;
  const double shift = std::max(0.0, from.inv_p - to.inv_p);
  if (shift <= eps) return c;
  return std::pow(static_cast<double>(n), shift) * c;
}

}  // namespace oscsum::normest
