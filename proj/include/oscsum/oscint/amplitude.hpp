#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "oscsum/core/errors.hpp"
#include "oscsum/oscint/phase.hpp"

namespace oscsum::oscint {

namespace amp {

struct One {};
/// (1 + t + s)^{-gamma}
struct ReciprocalPower {
  double gamma = 0.0;
  double t = 0.0;
};
/// C^infinity, 1 on [a, b], 0 outside (a - pad, b + pad).
struct SmoothBump {
  double a = 0.0;
  double b = 1.0;
  double pad = 0.5;
};
/// sum_k c_k x^k
struct Polynomial {
  std::vector<double> coeffs;
};

}  // namespace amp

namespace detail {

// Value and first two derivatives.
using Jet = std::array<double, 3>;

// The transition S(u) = P / (P + Q), P = e^{-1/u}, Q = e^{-1/(1-u)}, which
// rises from 0 at u <= 0 to 1 at u >= 1.
inline Jet smooth_step(double u) {
  // Past these cutoffs e^{-1/u} is below 1e-217 and its derivatives vanish
  // to double precision; evaluating them would form 0 * inf.
  if (u <= 2e-3) return {0.0, 0.0, 0.0};
  if (u >= 1.0 - 2e-3) return {1.0, 0.0, 0.0};
  const double v = 1.0 - u;
  const double p = std::exp(-1.0 / u);
  const double q = std::exp(-1.0 / v);
  const double p1 = p / (u * u);
  const double p2 = p * (1.0 / (u * u * u * u) - 2.0 / (u * u * u));
  const double q1 = -q / (v * v);
  const double q2 = q * (1.0 / (v * v * v * v) - 2.0 / (v * v * v));
  const double d = p + q;
  const double d1 = p1 + q1;
  const double d2 = p2 + q2;
  const double num1 = p1 * d - p * d1;
  const double s = p / d;
  const double s1 = num1 / (d * d);
  const double s2 = (p2 * d - p * d2) / (d * d) - 2.0 * d1 * num1 / (d * d * d);
  return {s, s1, s2};
}

inline Jet factor_jet(const amp::One&, double) { return {1.0, 0.0, 0.0}; }

inline Jet factor_jet(const amp::ReciprocalPower& f, double x) {
  const double base = 1.0 + f.t + x;
  const double g = f.gamma;
  if (g == 0.0) return {1.0, 0.0, 0.0};
  const double v = std::pow(base, -g);
  return {v, -g * v / base, g * (g + 1.0) * v / (base * base)};
}

inline Jet factor_jet(const amp::SmoothBump& f, double x) {
  if (x >= f.a && x <= f.b) return {1.0, 0.0, 0.0};
  if (x < f.a) {
    const Jet s = smooth_step((x - (f.a - f.pad)) / f.pad);
    return {s[0], s[1] / f.pad, s[2] / (f.pad * f.pad)};
  }
  const Jet s = smooth_step(((f.b + f.pad) - x) / f.pad);
  return {s[0], -s[1] / f.pad, s[2] / (f.pad * f.pad)};
}

inline Jet factor_jet(const amp::Polynomial& f, double x) {
  return {detail::polynomial_derivative(f.coeffs, x, 0),
          detail::polynomial_derivative(f.coeffs, x, 1),
          detail::polynomial_derivative(f.coeffs, x, 2)};
}

}  // namespace detail

/// A real amplitude: a constant times a product of factors from closed
/// families, differentiable to order 2 by the Leibniz rule.
class AmplitudeSpec {
 public:
  using Factor = std::variant<amp::One, amp::ReciprocalPower, amp::SmoothBump,
                              amp::Polynomial>;

  AmplitudeSpec() = default;
  template <class F>
    requires std::is_constructible_v<Factor, F>
  AmplitudeSpec(F f) {  // NOLINT: implicit by design
    add(Factor(std::move(f)));
  }
  AmplitudeSpec(std::initializer_list<Factor> fs) {
    for (const Factor& f : fs) add(f);
  }

  static AmplitudeSpec one() { return AmplitudeSpec(); }

  AmplitudeSpec& times(Factor f) {
    add(std::move(f));
    return *this;
  }

  AmplitudeSpec scaled(double c) const {
    AmplitudeSpec out(*this);
    out.scale_ *= c;
    return out;
  }

  double scale() const noexcept { return scale_; }
  const std::vector<Factor>& factors() const noexcept { return factors_; }

  double value(double x) const { return jet(x)[0]; }

  /// d^k chi / dx^k, 0 <= k <= 2.
  double derivative(double x, int k) const {
    if (k < 0 || k > 2)
      throw PreconditionError("AmplitudeSpec: derivative order outside 0..2");
    return jet(x)[k];
  }

  detail::Jet jet(double x) const {
    detail::Jet acc{scale_, 0.0, 0.0};
    for (const Factor& f : factors_) {
      const detail::Jet g =
          std::visit([&](const auto& h) { return detail::factor_jet(h, x); }, f);
      acc = {acc[0] * g[0], acc[1] * g[0] + acc[0] * g[1],
             acc[2] * g[0] + 2.0 * acc[1] * g[1] + acc[0] * g[2]};
    }
    return acc;
  }

  /// Closed support as an interval, if some factor is compactly supported.
  std::optional<std::pair<double, double>> support() const {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    bool compact = false;
    for (const Factor& f : factors_)
      if (const auto* b = std::get_if<amp::SmoothBump>(&f)) {
        lo = std::max(lo, b->a - b->pad);
        hi = std::min(hi, b->b + b->pad);
        compact = true;
      }
    if (!compact) return std::nullopt;
    return std::make_pair(lo, hi);
  }

 private:
  void add(Factor f) {
    if (const auto* b = std::get_if<amp::SmoothBump>(&f))
      if (!(b->b >= b->a) || !(b->pad > 0.0))
        throw PreconditionError("SmoothBump: needs b >= a and pad > 0");
    if (std::holds_alternative<amp::One>(f)) return;
    factors_.push_back(std::move(f));
  }

  double scale_ = 1.0;
  std::vector<Factor> factors_;
};

}  // namespace oscsum::oscint
