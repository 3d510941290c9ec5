#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>

#include "oscsum/core/errors.hpp"
#include "oscsum/core/grids.hpp"
#include "oscsum/oscint/amplitude.hpp"
#include "oscsum/oscint/phase.hpp"

namespace oscsum::oscint {

using Complex = std::complex<double>;

struct OscOptions {
  double tol = 1e-10;
  // Panels per wavelength of e^{iN phi}.
  double panels_per_wavelength = 4.0;
  std::size_t min_panels = 16;
  std::size_t max_panels = std::size_t{1} << 21;
};

/// Total variation of phi on [a, b] from 1025 equispaced samples.
inline double phase_variation(const PhaseSpec& phi, double a, double b) {
  constexpr int samples = 1025;
  double tv = 0.0;
  double prev = phi.value(a);
  for (int k = 1; k < samples; ++k) {
    const double x = a + (b - a) * k / (samples - 1.0);
    const double cur = phi.value(x);
    tv += std::abs(cur - prev);
    prev = cur;
  }
  return tv;
}

namespace detail {

template <class Phase, class Amp>
Complex composite_gauss(Phase&& phi, Amp&& chi, double a, double b, double n,
                        std::size_t panels) {
  const GaussRule& g = gauss_legendre_16();
  const double h = (b - a) / static_cast<double>(panels);
  Complex acc = 0.0;
  for (std::size_t p = 0; p < panels; ++p) {
    const double mid = a + (static_cast<double>(p) + 0.5) * h;
    Complex panel = 0.0;
    for (std::size_t k = 0; k < g.nodes.size(); ++k) {
      const double x = mid + 0.5 * h * g.nodes[k];
      const double c = chi(x);
      if (c != 0.0) panel += g.weights[k] * c * std::polar(1.0, n * phi(x));
    }
    acc += panel;
  }
  return 0.5 * h * acc;
}

}  // namespace detail

/// int_a^b e^{iN phi(s)} chi(s) ds for real N of either sign.
///
/// Composite 16-point Gauss-Legendre starting from
/// max(min_panels, ceil(panels_per_wavelength |N| TV(phi) / 2pi)) panels and
/// doubling until two levels differ by at most tol. The interval is first
/// clipped to the support of chi.
inline Complex osc_integral(const PhaseSpec& phi, const AmplitudeSpec& chi,
                            double a, double b, double n,
                            const OscOptions& opt = {}) {
  if (!(a < b)) throw PreconditionError("osc_integral: needs a < b");
  if (!std::isfinite(n)) throw PreconditionError("osc_integral: N not finite");
  if (const auto sup = chi.support()) {
    a = std::max(a, sup->first);
    b = std::min(b, sup->second);
    if (!(a < b)) return 0.0;
  }
  const double tv = phase_variation(phi, a, b);
  const double waves = std::abs(n) * tv / (2.0 * std::numbers::pi);
  std::size_t panels = std::max<std::size_t>(
      opt.min_panels,
      static_cast<std::size_t>(std::ceil(opt.panels_per_wavelength * waves)));
  panels = std::min(panels, opt.max_panels / 2);

  auto f = [&](double x) { return phi.value(x); };
  auto c = [&](double x) { return chi.value(x); };
  Complex prev = detail::composite_gauss(f, c, a, b, n, panels);
  for (;;) {
    panels *= 2;
    const Complex cur = detail::composite_gauss(f, c, a, b, n, panels);
    if (std::abs(cur - prev) <= opt.tol) return cur;
    if (panels >= opt.max_panels)
      throw ConvergenceError("osc_integral: resolution cap reached", prev, cur);
    prev = cur;
  }
}

}  // namespace oscsum::oscint
