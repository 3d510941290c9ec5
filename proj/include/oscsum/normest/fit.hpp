#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "oscsum/core/errors.hpp"
#include "oscsum/core/scan.hpp"

namespace oscsum::normest {

struct ExponentFit {
  double slope = 0.0;
  double intercept = 0.0;
  // Largest |log value - (intercept + slope * x)| over the rows.
  double residual = 0.0;
};

/// Least-squares line through (log(N + offset), log value).
///
/// offset = 0 fits against log N; offset = 1 fits against log(1 + N).
inline ExponentFit fit_exponent(std::span<const ScanRecord> rows,
                                double offset = 0.0) {
  if (rows.size() < 3)
    throw PreconditionError("fit_exponent: needs at least 3 rows");
  std::vector<double> xs, ys;
  xs.reserve(rows.size());
  ys.reserve(rows.size());
  for (const ScanRecord& r : rows) {
    if (!(r.value > 0.0) || !std::isfinite(r.value))
      throw DomainError("fit_exponent: values must be positive and finite");
    const double x = static_cast<double>(r.N) + offset;
    if (!(x > 0.0)) throw DomainError("fit_exponent: abscissa must be > 0");
    xs.push_back(std::log(x));
    ys.push_back(std::log(r.value));
  }
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (xs[i] == xs[j])
        throw PreconditionError("fit_exponent: N values must be distinct");

  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  ExponentFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  for (std::size_t i = 0; i < xs.size(); ++i)
    fit.residual = std::max(
        fit.residual, std::abs(ys[i] - (fit.intercept + fit.slope * xs[i])));
  return fit;
}

}  // namespace oscsum::normest
