#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "oscsum/core/errors.hpp"

namespace oscsum::oscint {

namespace phase {

/// c s
struct Linear {
  double c = 1.0;
};
/// k (s - s0)^2
struct Quadratic {
  double k = 1.0;
  double s0 = 0.0;
};
/// -x^2 / len + x t
struct ChirpLine {
  double len = 1.0;
  double t = 0.0;
};
/// 1 / (1 + t + s)
struct Reciprocal {
  double t = 0.0;
};
/// s^2 + 1 / (1 + t + s)
struct QuadPlusReciprocal {
  double t = 0.0;
};
/// t -> 1/(1 + t + s) - 1/(1 + t + sigma), a function of t.
struct ReciprocalDiff {
  double s = 0.0;
  double sigma = 0.0;
};
/// sum_k c_k x^k
struct Polynomial {
  std::vector<double> coeffs;
};

}  // namespace phase

namespace detail {

// d^k/dx^k (c + x)^{-1} = (-1)^k k! (c + x)^{-k-1}.
inline double reciprocal_derivative(double base, int k) {
  double fact = 1.0;
  for (int j = 2; j <= k; ++j) fact *= j;
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return sign * fact / std::pow(base, k + 1);
}

inline double polynomial_derivative(const std::vector<double>& c, double x,
                                    int k) {
  double acc = 0.0;
  for (std::size_t j = c.size(); j-- > static_cast<std::size_t>(k);) {
    double falling = 1.0;
    for (int r = 0; r < k; ++r) falling *= static_cast<double>(j - r);
    acc = acc * x + falling * c[j];
  }
  return acc;
}

}  // namespace detail

/// A real phase from a closed family, with exact derivatives of order 0..5.
class PhaseSpec {
 public:
  using Variant =
      std::variant<phase::Linear, phase::Quadratic, phase::ChirpLine,
                   phase::Reciprocal, phase::QuadPlusReciprocal,
                   phase::ReciprocalDiff, phase::Polynomial>;

  static constexpr int max_order = 5;

  template <class F>
    requires std::is_constructible_v<Variant, F>
  PhaseSpec(F f) : v_(std::move(f)) {  // NOLINT: implicit by design
    if (const auto* c = std::get_if<phase::ChirpLine>(&v_); c && !(c->len > 0))
      throw PreconditionError("ChirpLine: length must be positive");
  }

  static PhaseSpec zero() { return PhaseSpec(phase::Linear{0.0}); }

  const Variant& kind() const noexcept { return v_; }

  double value(double x) const { return derivative(x, 0); }

  /// d^k phi / dx^k at x, 0 <= k <= 5.
  double derivative(double x, int k) const {
    if (k < 0 || k > max_order)
      throw PreconditionError("PhaseSpec: derivative order outside 0..5");
    return std::visit([&](const auto& f) { return eval(f, x, k); }, v_);
  }

  /// A lower bound for phi'' on [a, b] known in closed form, if the family
  /// has one.
  std::optional<double> second_derivative_lower_bound(double a,
                                                      double b) const {
    return std::visit(
        [&](const auto& f) -> std::optional<double> { return lower2(f, a, b); },
        v_);
  }

  std::string name() const {
    return std::visit([](const auto& f) { return label(f); }, v_);
  }

 private:
  static double eval(const phase::Linear& f, double x, int k) {
    return k == 0 ? f.c * x : (k == 1 ? f.c : 0.0);
  }
  static double eval(const phase::Quadratic& f, double x, int k) {
    const double d = x - f.s0;
    switch (k) {
      case 0: return f.k * d * d;
      case 1: return 2.0 * f.k * d;
      case 2: return 2.0 * f.k;
      default: return 0.0;
    }
  }
  static double eval(const phase::ChirpLine& f, double x, int k) {
    switch (k) {
      case 0: return -x * x / f.len + x * f.t;
      case 1: return -2.0 * x / f.len + f.t;
      case 2: return -2.0 / f.len;
      default: return 0.0;
    }
  }
  static double eval(const phase::Reciprocal& f, double x, int k) {
    return detail::reciprocal_derivative(1.0 + f.t + x, k);
  }
  static double eval(const phase::QuadPlusReciprocal& f, double x, int k) {
    const double r = detail::reciprocal_derivative(1.0 + f.t + x, k);
    switch (k) {
      case 0: return x * x + r;
      case 1: return 2.0 * x + r;
      case 2: return 2.0 + r;
      default: return r;
    }
  }
  static double eval(const phase::ReciprocalDiff& f, double x, int k) {
    return detail::reciprocal_derivative(1.0 + x + f.s, k) -
           detail::reciprocal_derivative(1.0 + x + f.sigma, k);
  }
  static double eval(const phase::Polynomial& f, double x, int k) {
    return detail::polynomial_derivative(f.coeffs, x, k);
  }

  static std::optional<double> lower2(const phase::Linear&, double, double) {
    return 0.0;
  }
  static std::optional<double> lower2(const phase::Quadratic& f, double,
                                      double) {
    return 2.0 * f.k;
  }
  static std::optional<double> lower2(const phase::ChirpLine& f, double,
                                      double) {
    return -2.0 / f.len;
  }
  // 2 (1 + t + s)^{-3} decreases in s while 1 + t + s > 0.
  static std::optional<double> lower2(const phase::Reciprocal& f, double a,
                                      double b) {
    if (!(1.0 + f.t + a > 0.0)) return std::nullopt;
    return 2.0 / std::pow(1.0 + f.t + b, 3);
  }
  static std::optional<double> lower2(const phase::QuadPlusReciprocal& f,
                                      double a, double b) {
    if (!(1.0 + f.t + a > 0.0)) return std::nullopt;
    return 2.0 + 2.0 / std::pow(1.0 + f.t + b, 3);
  }
  static std::optional<double> lower2(const phase::ReciprocalDiff&, double,
                                      double) {
    return std::nullopt;
  }
  static std::optional<double> lower2(const phase::Polynomial&, double,
                                      double) {
    return std::nullopt;
  }

  static std::string label(const phase::Linear&) { return "linear"; }
  static std::string label(const phase::Quadratic&) { return "quadratic"; }
  static std::string label(const phase::ChirpLine&) { return "chirp-line"; }
  static std::string label(const phase::Reciprocal&) { return "reciprocal"; }
  static std::string label(const phase::QuadPlusReciprocal&) {
    return "quad-plus-reciprocal";
  }
  static std::string label(const phase::ReciprocalDiff&) {
    return "reciprocal-diff";
  }
  static std::string label(const phase::Polynomial&) { return "polynomial"; }

  Variant v_;
};

}  // namespace oscsum::oscint
