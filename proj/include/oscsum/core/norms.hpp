#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <span>
#include <vector>

#include "oscsum/core/errors.hpp"
#include "oscsum/core/exponent.hpp"

namespace oscsum {

using Complex = std::complex<double>;

/// Coefficients a_0..a_{N-1} of a trigonometric sum; N >= 1.
class CoefficientVector {
 public:
  explicit CoefficientVector(std::vector<Complex> entries)
      : entries_(std::move(entries)) {
    if (entries_.empty())
      throw PreconditionError("CoefficientVector needs N >= 1");
    for (const Complex& z : entries_)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw PreconditionError("CoefficientVector entries must be finite");
  }

  std::size_t size() const noexcept { return entries_.size(); }
  std::span<const Complex> entries() const noexcept { return entries_; }
  const Complex& operator[](std::size_t n) const { return entries_[n]; }

  CoefficientVector scaled(Complex c) const {
    std::vector<Complex> out(entries_);
    for (Complex& z : out) z *= c;
    return CoefficientVector(std::move(out));
  }

 private:
  std::vector<Complex> entries_;
};

namespace detail {

// (sum w_k |x_k|^p)^{1/p} with the largest modulus factored out, so that
// large p does not overflow or underflow.
template <class Weight>
double weighted_power_norm(std::span<const Complex> x, double p,
                           Weight&& weight) {
  double peak = 0.0;
  for (const Complex& z : x) peak = std::max(peak, std::abs(z));
  if (peak == 0.0) return 0.0;
  double acc = 0.0;
  if (p == 2.0) {
    for (std::size_t k = 0; k < x.size(); ++k) {
      const double r = std::abs(x[k]) / peak;
      acc += weight(k) * r * r;
    }
    return peak * std::sqrt(acc);
  }
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double r = std::abs(x[k]) / peak;
    if (r > 0.0) acc += weight(k) * std::pow(r, p);
  }
  return peak * std::pow(acc, 1.0 / p);
}

inline double max_modulus(std::span<const Complex> x) {
  double peak = 0.0;
  for (const Complex& z : x) peak = std::max(peak, std::abs(z));
  return peak;
}

}  // namespace detail

/// Counting-measure norm (sum |a_n|^p)^{1/p}; max |a_n| for p = inf.
inline double lp_norm(std::span<const Complex> a, const Exponent& p) {
  if (p.is_infinite()) return detail::max_modulus(a);
  return detail::weighted_power_norm(a, p.value(),
                                     [](std::size_t) { return 1.0; });
}

inline double lp_norm(const CoefficientVector& a, const Exponent& p) {
  return lp_norm(a.entries(), p);
}

/// Anything carrying quadrature weights aligned with sample positions.
template <class G>
concept WeightedGrid = requires(const G& g) {
  { g.weights() } -> std::convertible_to<std::span<const double>>;
  { g.size() } -> std::convertible_to<std::size_t>;
};

/// Weighted norm (sum w_m |f_m|^q)^{1/q} over a quadrature rule; the sample
/// maximum for q = inf.
inline double lq_norm(std::span<const Complex> samples,
                      std::span<const double> weights, const Exponent& q) {
  if (samples.size() != weights.size())
    throw PreconditionError("lq_norm: samples and weights differ in length");
  if (q.is_infinite()) return detail::max_modulus(samples);
  return detail::weighted_power_norm(
      samples, q.value(), [&](std::size_t k) { return weights[k]; });
}

template <WeightedGrid G>
double lq_norm(std::span<const Complex> samples, const G& grid,
               const Exponent& q) {
  return lq_norm(samples, grid.weights(), q);
}

}  // namespace oscsum
