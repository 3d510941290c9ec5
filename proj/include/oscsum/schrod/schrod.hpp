#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "oscsum/core/errors.hpp"
#include "oscsum/core/exponent.hpp"
#include "oscsum/core/grids.hpp"
#include "oscsum/core/norms.hpp"
#include "oscsum/core/scan.hpp"
#include "oscsum/normest/fit.hpp"
#include "oscsum/normest/operator.hpp"
#include "oscsum/normest/opnorm.hpp"
#include "oscsum/oscint/integrate.hpp"

namespace oscsum::schrod {

/// T_N f(t) = int_0^1 e^{iN/(1+t+s)} f(s) (1+t+s)^{-gamma} ds on [0, 1].
struct SchrodOperatorSpec {
  double N = 0.0;
  double gamma = 1.0;

  SchrodOperatorSpec() = default;
  SchrodOperatorSpec(double n, double g) : N(n), gamma(g) {
    if (!(n >= 0.0) || !(g >= 0.0) || !std::isfinite(n) || !std::isfinite(g))
      throw PreconditionError("SchrodOperatorSpec: needs N >= 0, gamma >= 0");
  }

  Complex kernel(double x) const {  // x = t + s
    const double base = 1.0 + x;
    const double mod = gamma == 0.0 ? 1.0 : std::pow(base, -gamma);
    return std::polar(mod, N / base);
  }
};

/// Smallest node count that resolves the kernel: max(256, 2N/pi).
inline std::size_t resolution_floor(double n) {
  return std::max<std::size_t>(
      256, static_cast<std::size_t>(std::ceil(2.0 * n / std::numbers::pi)));
}

/// Dense discretization on a quadrature grid used for both t and s:
/// A_ij = K(t_i + s_j) w_j.
inline normest::DiscreteOperator build_operator(const SchrodOperatorSpec& spec,
                                                const UnitIntervalGrid& grid) {
  const std::size_t m = grid.size();
  if (m < resolution_floor(spec.N))
    throw PreconditionError("build_operator: grid below resolution floor of " +
                            std::to_string(resolution_floor(spec.N)) +
                            " nodes");
  const auto x = grid.nodes();
  const auto w = grid.weights();
  std::vector<Complex> mat(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      mat[i * m + j] = spec.kernel(x[i] + x[j]) * w[j];
  std::vector<double> wv(w.begin(), w.end());
  return normest::DiscreteOperator(m, m, std::move(mat), wv, wv);
}

/// The same map on the M-node midpoint grid as a Hankel operator, since
/// t_i + s_j = (i + j + 1)/M there. Memory and work are O(M log M).
inline normest::HankelOperator build_hankel_operator(
    const SchrodOperatorSpec& spec, std::size_t m) {
  if (m < resolution_floor(spec.N))
    throw PreconditionError("build_hankel_operator: grid below resolution "
                            "floor of " +
                            std::to_string(resolution_floor(spec.N)) +
                            " nodes");
  const double h = 1.0 / static_cast<double>(m);
  std::vector<Complex> kernel(2 * m - 1);
  for (std::size_t k = 0; k < kernel.size(); ++k)
    kernel[k] = spec.kernel(static_cast<double>(k + 1) * h);
  std::vector<double> w(m, h);
  return normest::HankelOperator(m, m, std::move(kernel), w, w, w);
}

/// Grid policy for scans: max(512, 4N) midpoint nodes.
inline std::size_t scan_nodes(double n) {
  return std::max<std::size_t>(
      512, static_cast<std::size_t>(std::ceil(4.0 * n)));
}

/// K_N(s, sigma) = int e^{iN phi(t)} chi(t) (1+t+s)^{-gamma}
/// (1+t+sigma)^{-gamma} dt with phi(t) = 1/(1+t+s) - 1/(1+t+sigma) and
/// chi = 1 on [0, 1], 0 outside (-1/2, 3/2).
inline Complex kernel_KN(double s, double sigma, double n, double gamma = 1.0,
                         const oscint::OscOptions& opt = {}) {
  if (!(s >= 0.0 && s <= 1.0 && sigma >= 0.0 && sigma <= 1.0))
    throw PreconditionError("kernel_KN: s and sigma must lie in [0, 1]");
  using namespace oscint;
  const AmplitudeSpec chi{amp::SmoothBump{0.0, 1.0, 0.5},
                          amp::ReciprocalPower{gamma, s},
                          amp::ReciprocalPower{gamma, sigma}};
  return osc_integral(phase::ReciprocalDiff{s, sigma}, chi, -0.5, 1.5, n, opt);
}

enum class Example { Concentrated, PhaseMatched, Chirp };

inline const char* example_name(Example e) {
  switch (e) {
    case Example::Concentrated: return "concentrated";
    case Example::PhaseMatched: return "phase-matched";
    case Example::Chirp: return "chirp";
  }
  return "?";
}

/// Samples of the example input on the given nodes:
/// Concentrated is the indicator of [0, eta/N], PhaseMatched is
/// e^{-iN/(1+s)}, Chirp is e^{iNs^2}.
inline std::vector<Complex> example_input(Example which, double n, double eta,
                                          std::span<const double> nodes) {
  std::vector<Complex> f(nodes.size());
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const double s = nodes[j];
    switch (which) {
      case Example::Concentrated:
        f[j] = s <= eta / n ? 1.0 : 0.0;
        break;
      case Example::PhaseMatched:
        f[j] = std::polar(1.0, -n / (1.0 + s));
        break;
      case Example::Chirp:
        f[j] = std::polar(1.0, n * s * s);
        break;
    }
  }
  return f;
}

/// T_N f on the grid nodes by direct O(M^2) summation of the quadrature
/// rule (any grid), or by FFT on a midpoint grid.
inline std::vector<Complex> apply_on_grid(const SchrodOperatorSpec& spec,
                                          const UnitIntervalGrid& grid,
                                          std::span<const Complex> f) {
  const std::size_t m = grid.size();
  std::vector<Complex> y(m);
  if (grid.kind() == UnitIntervalGrid::Kind::Midpoint) {
    build_hankel_operator(spec, m).apply(f, y);
    return y;
  }
  const auto x = grid.nodes();
  const auto w = grid.weights();
  for (std::size_t i = 0; i < m; ++i) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < m; ++j)
      acc += spec.kernel(x[i] + x[j]) * (w[j] * f[j]);
    y[i] = acc;
  }
  return y;
}

/// ||T_N f||_{L^q} / ||f||_{L^p} for one of the three example inputs,
/// with the output norm taken on `grid`.
///
/// The concentrated input lives on [0, eta/N], below the grid spacing, so
/// its image is integrated exactly in s at every output node and its norm
/// is (eta/N)^{1/p}. The other two inputs are unimodular (norm 1) and are
/// applied through the grid's quadrature rule.
inline double lower_bound_example(const SchrodOperatorSpec& spec, Example which,
                                  double eta, const Exponent& p,
                                  const Exponent& q,
                                  const UnitIntervalGrid& grid) {
  if (!(spec.N >= 1.0))
    throw PreconditionError("lower_bound_example: needs N >= 1");
  if (!(eta > 0.0)) throw PreconditionError("lower_bound_example: eta > 0");
  if (grid.size() < resolution_floor(spec.N))
    throw PreconditionError("lower_bound_example: grid below resolution floor");
  const auto t = grid.nodes();
  std::vector<Complex> y(grid.size());
  double input_norm = 1.0;
  if (which == Example::Concentrated) {
    using namespace oscint;
    const double width = std::min(1.0, eta / spec.N);
    for (std::size_t i = 0; i < t.size(); ++i)
      y[i] = osc_integral(phase::Reciprocal{t[i]},
                          amp::ReciprocalPower{spec.gamma, t[i]}, 0.0, width,
                          spec.N);
    input_norm = p.is_infinite() ? 1.0 : std::pow(width, 1.0 / p.value());
  } else {
    const std::vector<Complex> f = example_input(which, spec.N, eta, t);
    y = apply_on_grid(spec, grid, f);
  }
  return lq_norm(y, grid, q) / input_norm;
}

/// -min{1 - 1/p, 1/q, 1/2}.
inline double predicted_slope(const Exponent& p, const Exponent& q) {
  return -std::min({1.0 - p.reciprocal(), q.reciprocal(), 0.5});
}

struct ScanOptions {
  int restarts = 2;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  int max_iterations = 500;
  double eta = 0.1;
  // Repeat the largest N at twice the resolution.
  bool validate = true;
};

struct NormScan {
  std::vector<ScanRecord> rows;
  normest::ExponentFit fit;
  double predicted_slope = 0.0;
  // |C(2M) - C(M)| / C(M) at the largest N; NaN if not run.
  double validation_change = std::numeric_limits<double>::quiet_NaN();
};

/// Operator-norm estimate of T_N on the scan grid, seeded with the three
/// example inputs (the concentrated one as the first grid cell).
inline normest::NormEstimate estimate_norm(const SchrodOperatorSpec& spec,
                                           const Exponent& p,
                                           const Exponent& q,
                                           std::size_t nodes,
                                           const ScanOptions& opt) {
  const normest::HankelOperator a = build_hankel_operator(spec, nodes);
  const UnitIntervalGrid grid = UnitIntervalGrid::midpoint(nodes);
  std::vector<std::vector<Complex>> seeds;
  std::vector<Complex> cell(nodes, 0.0);
  cell[0] = 1.0;
  seeds.push_back(std::move(cell));
  seeds.push_back(
      example_input(Example::PhaseMatched, spec.N, opt.eta, grid.nodes()));
  seeds.push_back(example_input(Example::Chirp, spec.N, opt.eta, grid.nodes()));
  normest::OpnormOptions o;
  o.restarts = opt.restarts;
  o.tol = opt.tol;
  o.max_iterations = opt.max_iterations;
  o.rng_seed = opt.seed;
  return normest::opnorm_lower(a, p, q, seeds, o);
}

/// C_N(p -> q) estimates over Ns, with the slope fitted against log(1 + N).
inline NormScan norm_scan(const Exponent& p, const Exponent& q,
                                  double gamma, std::span<const std::size_t> ns,
                                  const ScanOptions& opt = {}) {
  if (ns.size() < 3)
    throw PreconditionError("norm_scan: needs at least 3 values of N");
  NormScan out;
  out.predicted_slope = predicted_slope(p, q);
  std::vector<std::size_t> sorted(ns.begin(), ns.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t n : sorted) {
    const SchrodOperatorSpec spec(static_cast<double>(n), gamma);
    const normest::NormEstimate e =
        estimate_norm(spec, p, q, scan_nodes(spec.N), opt);
    out.rows.push_back(
        {n, e.lower, "opnorm:" + e.origin,
         std::pow(1.0 + static_cast<double>(n), out.predicted_slope)});
  }
  out.fit = normest::fit_exponent(out.rows, 1.0);
  if (opt.validate) {
    const double n = static_cast<double>(sorted.back());
    const SchrodOperatorSpec spec(n, gamma);
    const double fine =
        estimate_norm(spec, p, q, 2 * scan_nodes(n), opt).lower;
    const double coarse = out.rows.back().value;
    out.validation_change = std::abs(fine - coarse) / coarse;
  }
  return out;
}

struct StrichartzQuery {
  double inv_r = 0.0;
  double inv_rt = 0.0;
  int n = 3;
};

struct StrichartzVerdict {
  bool in_cone = false;
  bool in_strip = false;
  // The strip plus the two endpoints (1/2, 1/2 - 1/n), (1/2 - 1/n, 1/2).
  bool in_hull = false;
  // Minimal (1/q, 1/q~) from the Young / HLS condition, when it applies.
  std::optional<std::pair<double, double>> minimal_q_pair;
  // False when r or r~ is infinite: then 1/q must exceed the returned
  // value strictly, so the pair is a limit rather than admissible.
  bool q_attained = false;
};

/// Exponent-region predicates in the (1/r, 1/r~) square, with a 1e-12
/// tolerance on every comparison.
inline StrichartzVerdict strichartz_region(const StrichartzQuery& query) {
  if (query.n < 3) throw DomainError("strichartz_region: needs n >= 3");
  constexpr double eps = 1e-12;
  const double x = query.inv_r;
  const double y = query.inv_rt;
  const double n = static_cast<double>(query.n);
  const double k = (n - 2.0) / n;
  auto le = [&](double a, double b) { return a <= b + eps; };
  auto lt = [&](double a, double b) { return a < b - eps; };

  StrichartzVerdict v;
  const bool in_square = le(0.0, x) && le(x, 1.0) && le(0.0, y) && le(y, 1.0);
  v.in_cone =
      in_square && le(k * x, y) && le(y, 0.5) && le(k * y, x) && le(x, 0.5);
  v.in_strip = le(0.0, x) && le(x, 0.5) && le(0.0, y) && le(y, 0.5) &&
                   lt(std::abs(x - y), 1.0 / n);
  const bool endpoint =
      (std::abs(x - 0.5) <= eps && std::abs(y - (0.5 - 1.0 / n)) <= eps) ||
      (std::abs(y - 0.5) <= eps && std::abs(x - (0.5 - 1.0 / n)) <= eps);
  v.in_hull = v.in_strip || endpoint;

  if (in_square) {
    const double sum = x + y;
    const bool infinite = std::abs(x) <= eps || std::abs(y) <= eps;
    const bool ok = infinite ? lt(sum, 1.0 / n) : le(sum, 1.0 / n);
    if (ok) {
      const double val = std::clamp(0.5 * n * sum, 0.0, 1.0);
      v.minimal_q_pair = std::make_pair(val, val);
      v.q_attained = !infinite;
    }
  }
  return v;
}

}  // namespace oscsum::schrod
