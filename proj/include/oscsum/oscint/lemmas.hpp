#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include "oscsum/core/errors.hpp"
#include "oscsum/oscint/amplitude.hpp"
#include "oscsum/oscint/integrate.hpp"
#include "oscsum/oscint/phase.hpp"

namespace oscsum::oscint {

/// I(N, t) = int_0^1 e^{-iN (y - t)^2} dy for 0 < t < 1.
inline Complex fresnel_I(double n, double t, const OscOptions& opt = {}) {
  if (!(t > 0.0 && t < 1.0))
    throw DomainError("fresnel_I: t must lie in (0, 1)");
  if (!(n > 0.0)) throw DomainError("fresnel_I: N must be positive");
  return osc_integral(phase::Quadratic{-1.0, t}, AmplitudeSpec::one(), 0.0,
                      1.0, n, opt);
}

/// sqrt(pi/N) e^{-i pi/4}, the whole-line value.
inline Complex fresnel_limit(double n) {
  return std::sqrt(std::numbers::pi / n) *
         std::polar(1.0, -0.25 * std::numbers::pi);
}

/// (1/t + 1/(1-t)) / N.
inline double fresnel_bound(double n, double t) {
  return (1.0 / t + 1.0 / (1.0 - t)) / n;
}

/// The unique zero of phi' on [a, b] when phi'' >= 1 there.
///
/// phi'' >= 1 is accepted from the family's closed-form bound when it has
/// one and otherwise checked on 257 samples. Newton steps that leave the
/// current bracket are replaced by bisection.
inline double find_critical_point(const PhaseSpec& phi, double a, double b) {
  if (!(a < b)) throw PreconditionError("find_critical_point: needs a < b");
  const auto bound = phi.second_derivative_lower_bound(a, b);
  if (!bound || *bound < 1.0) {
    constexpr int samples = 257;
    for (int k = 0; k < samples; ++k) {
      const double x = a + (b - a) * k / (samples - 1.0);
      if (phi.derivative(x, 2) < 1.0)
        throw PreconditionError("find_critical_point: phi'' < 1 on interval");
    }
  }
  double lo = a, hi = b;
  const double dlo = phi.derivative(lo, 1);
  const double dhi = phi.derivative(hi, 1);
  if (dlo == 0.0) return lo;
  if (dhi == 0.0) return hi;
  if (!(dlo < 0.0 && dhi > 0.0))
    throw NoCriticalPoint("find_critical_point: phi' has no sign change");
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double d = phi.derivative(x, 1);
    if (std::abs(d) < 1e-12) return x;
    if (d < 0.0)
      lo = x;
    else
      hi = x;
    const double step = x - d / phi.derivative(x, 2);
    x = (step > lo && step < hi) ? step : 0.5 * (lo + hi);
    if (hi - lo < 1e-300) break;
  }
  if (std::abs(phi.derivative(x, 1)) < 1e-12) return x;
  throw ConvergenceError("find_critical_point: no convergence", lo, hi);
}

struct StationaryPhaseResult {
  double s_star = 0.0;
  Complex J_star = 0.0;
  Complex approx = 0.0;
  Complex exact = 0.0;
  double defect = 0.0;
};

/// Leading stationary-phase term next to a quadrature reference value.
inline StationaryPhaseResult stationary_phase(const PhaseSpec& phi,
                                              const AmplitudeSpec& chi,
                                              double a, double b, double n,
                                              const OscOptions& opt = {}) {
  if (!(n > 0.0)) throw PreconditionError("stationary_phase: N must be > 0");
  StationaryPhaseResult r;
  r.s_star = find_critical_point(phi, a, b);
  const double pi = std::numbers::pi;
  r.J_star = std::polar(1.0, 0.25 * pi) * chi.value(r.s_star) *
             std::sqrt(2.0 * pi / phi.derivative(r.s_star, 2));
  r.approx = r.J_star * std::polar(1.0, n * phi.value(r.s_star)) / std::sqrt(n);
  r.exact = osc_integral(phi, chi, a, b, n, opt);
  r.defect = std::abs(r.exact - r.approx);
  return r;
}

struct DecayCheck {
  // max over the grid of |I(lambda)| (1 + delta |lambda|)^K.
  double c_fit = 0.0;
  std::vector<Complex> values;
};

/// Non-stationary decay: I(lambda) = int e^{i lambda psi} chi over the
/// compact support of chi, on every grid point.
inline DecayCheck nonstationary_decay_check(const PhaseSpec& psi,
                                            const AmplitudeSpec& chi, int k,
                                            double delta,
                                            std::span<const double> lambdas,
                                            const OscOptions& opt = {}) {
  if (k < 1) throw PreconditionError("nonstationary_decay_check: K >= 1");
  if (!(delta > 0.0))
    throw PreconditionError("nonstationary_decay_check: delta > 0");
  const auto sup = chi.support();
  if (!sup)
    throw PreconditionError(
        "nonstationary_decay_check: amplitude must be compactly supported");
  const auto [a, b] = *sup;
  constexpr int samples = 2049;
  for (int j = 0; j < samples; ++j) {
    const double x = a + (b - a) * j / (samples - 1.0);
    if (std::abs(psi.derivative(x, 1)) < delta)
      throw PreconditionError("nonstationary_decay_check: |psi'| < delta");
  }
  DecayCheck out;
  out.values.reserve(lambdas.size());
  for (double lam : lambdas) {
    const Complex v = osc_integral(psi, chi, a, b, lam, opt);
    out.values.push_back(v);
    out.c_fit = std::max(out.c_fit,
                         std::abs(v) * std::pow(1.0 + delta * std::abs(lam), k));
  }
  return out;
}

/// 1 + 2 pi M / (3 (2 pi - M)), for 0 <= M < 2 pi.
inline double zygmund_constant(double m) {
  const double two_pi = 2.0 * std::numbers::pi;
  if (!(m >= 0.0 && m < two_pi))
    throw PreconditionError("zygmund_constant: needs 0 <= M < 2 pi");
  return 1.0 + two_pi * m / (3.0 * (two_pi - m));
}

struct ZygmundResult {
  Complex S = 0.0;
  Complex I = 0.0;
  double diff = 0.0;
  double M = 0.0;
  double bound = 0.0;
};

/// Sum over 1 <= n <= N of e^{i Phi(n)} against the integral over [0, N].
///
/// M defaults to sup |Phi'| on [0, N] (closed form for ChirpLine, 4097
/// samples otherwise); a supplied M must dominate it. Phi' must be
/// monotone and M < 2 pi.
inline ZygmundResult zygmund_compare(const PhaseSpec& phi, std::size_t n,
                                     std::optional<double> m = std::nullopt,
                                     const OscOptions& opt = {}) {
  if (n == 0) throw PreconditionError("zygmund_compare: N >= 1");
  const double len = static_cast<double>(n);
  double sup = 0.0;
  if (const auto* c = std::get_if<phase::ChirpLine>(&phi.kind())) {
    sup = std::max(std::abs(c->t), std::abs(c->t - 2.0 * len / c->len));
  } else {
    constexpr int samples = 4097;
    int sign = 0;
    for (int j = 0; j < samples; ++j) {
      const double x = len * j / (samples - 1.0);
      sup = std::max(sup, std::abs(phi.derivative(x, 1)));
      const double d2 = phi.derivative(x, 2);
      const int s = d2 > 0.0 ? 1 : (d2 < 0.0 ? -1 : 0);
      if (s != 0 && sign != 0 && s != sign)
        throw PreconditionError("zygmund_compare: Phi' is not monotone");
      if (s != 0) sign = s;
    }
  }
  const double mm = m.value_or(sup);
  if (mm < sup * (1.0 - 1e-12))
    throw PreconditionError("zygmund_compare: M below sup |Phi'|");
  ZygmundResult r;
  r.M = mm;
  r.bound = zygmund_constant(mm);
  for (std::size_t k = 1; k <= n; ++k)
    r.S += std::polar(1.0, phi.value(static_cast<double>(k)));
  r.I = osc_integral(phi, AmplitudeSpec::one(), 0.0, len, 1.0, opt);
  r.diff = std::abs(r.S - r.I);
  return r;
}

}  // namespace oscsum::oscint
