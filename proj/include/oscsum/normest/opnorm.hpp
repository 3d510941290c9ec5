#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "oscsum/core/errors.hpp"
#include "oscsum/core/exponent.hpp"
#include "oscsum/core/norms.hpp"
#include "oscsum/normest/operator.hpp"

namespace oscsum::normest {

struct NormEstimate {
  double lower = 0.0;
  std::vector<Complex> input_witness;
  int iterations = 0;
  bool converged = false;
  // "seed:<k>", "restart:<k>", "exact" or "zero".
  std::string origin;
};

struct OpnormOptions {
  int restarts = 4;
  double tol = 1e-8;
  int max_iterations = 500;
  std::uint64_t rng_seed = 0;
};

/// ||x||_{p,w} = (sum w_j |x_j|^p)^{1/p}, max |x_j| over w_j > 0 for p = inf.
inline double weighted_norm(std::span<const Complex> x,
                            std::span<const double> w, const Exponent& p) {
  if (p.is_infinite()) {
    double peak = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (w[j] > 0.0) peak = std::max(peak, std::abs(x[j]));
    return peak;
  }
  return lq_norm(x, w, p);
}

/// ||A x||_{q,out} / ||x||_{p,in}, evaluated from scratch.
template <LinearOperator Op>
double rayleigh_ratio(const Op& a, std::span<const Complex> x,
                      const Exponent& p, const Exponent& q) {
  const double den = weighted_norm(x, a.in_weights(), p);
  if (den == 0.0) return 0.0;
  std::vector<Complex> y(a.rows());
  a.apply(x, y);
  return weighted_norm(y, a.out_weights(), q) / den;
}

namespace detail {

inline Complex unit_phase(Complex z) {
  const double r = std::abs(z);
  return r > 0.0 ? z / r : Complex(1.0);
}

// Exact 1 -> q and p -> inf norms with the attaining input.
template <LinearOperator Op>
NormEstimate exact_boundary(const Op& a, const Exponent& p, const Exponent& q) {
  const auto win = a.in_weights();
  const auto wout = a.out_weights();
  NormEstimate best;
  best.origin = "exact";
  best.converged = true;
  best.input_witness.assign(a.cols(), 0.0);
  if (p.is_one()) {
    // Extreme points of the weighted l^1 ball are scaled unit vectors.
    std::vector<Complex> col(a.rows());
    std::size_t arg = 0;
    double value = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!(win[j] > 0.0)) continue;
      double v = 0.0;
      if (q.is_infinite()) {
        for (std::size_t i = 0; i < a.rows(); ++i)
          if (wout[i] > 0.0) v = std::max(v, a.modulus(i, j));
      } else {
        for (std::size_t i = 0; i < a.rows(); ++i) col[i] = a.entry(i, j);
        v = weighted_norm(col, wout, q);
      }
      v /= win[j];
      if (v > value) {
        value = v;
        arg = j;
      }
    }
    best.lower = value;
    best.input_witness[arg] = 1.0;
    return best;
  }
  // q = inf: row i contributes sup_x |sum_j A_ij x_j| / ||x||_{p,w}, the
  // dual norm of (A_ij / w_j) in l^{p'}(w).
  // Only moduli enter, so the entries themselves are needed for one row.
  const Exponent pd = p.dual();
  std::size_t arg = 0;
  double value = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (!(wout[i] > 0.0)) continue;
    double v = 0.0;
    if (pd.is_one()) {
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (win[j] > 0.0) v += a.modulus(i, j);
    } else if (pd.is_infinite()) {
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (win[j] > 0.0) v = std::max(v, a.modulus(i, j) / win[j]);
    } else {
      const double e = pd.value();
      if (e == 2.0) {
        for (std::size_t j = 0; j < a.cols(); ++j)
          if (win[j] > 0.0) v += a.modulus(i, j) * a.modulus(i, j) / win[j];
        v = std::sqrt(v);
      } else {
        for (std::size_t j = 0; j < a.cols(); ++j)
          if (win[j] > 0.0) v += win[j] * std::pow(a.modulus(i, j) / win[j], e);
        v = std::pow(v, 1.0 / e);
      }
    }
    if (v > value) {
      value = v;
      arg = i;
    }
  }
  // Witness: x_j = conj-phase(A_ij) |A_ij / w_j|^{p'-1}.
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (!(win[j] > 0.0)) continue;
    const Complex r = a.entry(arg, j) / win[j];
    const Complex ph = unit_phase(std::conj(r));
    const double mag =
        p.is_infinite() ? 1.0 : std::pow(std::abs(r), pd.value() - 1.0);
    best.input_witness[j] = ph * mag;
  }
  best.lower = value;
  return best;
}

}  // namespace detail

/// Exact ||A||_{1->q} (largest weighted column norm) or ||A||_{p->inf}
/// (largest dual row norm).
template <LinearOperator Op>
double opnorm_exact_boundary(const Op& a, const Exponent& p,
                             const Exponent& q) {
  if (!p.is_one() && !q.is_infinite())
    throw PreconditionError(
        "opnorm_exact_boundary: needs p = 1 or q = inf");
  if (!a.all_finite())
    throw PreconditionError("opnorm_exact_boundary: non-finite entries");
  return detail::exact_boundary(a, p, q).lower;
}

/// Same as opnorm_exact_boundary, also returning an attaining input.
template <LinearOperator Op>
NormEstimate opnorm_exact_boundary_witness(const Op& a, const Exponent& p,
                                           const Exponent& q) {
  if (!p.is_one() && !q.is_infinite())
    throw PreconditionError(
        "opnorm_exact_boundary: needs p = 1 or q = inf");
  if (!a.all_finite())
    throw PreconditionError("opnorm_exact_boundary: non-finite entries");
  NormEstimate e = detail::exact_boundary(a, p, q);
  const double r = rayleigh_ratio(a, e.input_witness, p, q);
  if (r > 0.0) e.lower = r;
  return e;
}

namespace detail {

// One step of the dual-map iteration. Returns false when the iterate dies.
template <LinearOperator Op>
bool boyd_step(const Op& a, std::vector<Complex>& x, const Exponent& p,
               const Exponent& q, std::vector<Complex>& y,
               std::vector<Complex>& z) {
  const auto win = a.in_weights();
  const auto wout = a.out_weights();
  a.apply(x, y);
  const double ny = weighted_norm(y, wout, q);
  if (ny == 0.0) return false;
  // Gradient of ||y||_{q,w}: w |y|^{q-2} y / ||y||^{q-1}.
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double r = std::abs(y[i]) / ny;
    if (r == 0.0) {
      y[i] = 0.0;
      continue;
    }
    const Complex ph = y[i] / std::abs(y[i]);
    y[i] = q.is_one() ? wout[i] * ph : wout[i] * std::pow(r, q.value() - 1.0) * ph;
  }
  a.apply_adjoint(y, z);
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (!(win[j] > 0.0)) {
      x[j] = 0.0;
      continue;
    }
    const Complex g = z[j] / win[j];
    if (p.is_infinite()) {
      x[j] = unit_phase(g);
    } else {
      const double pd = p.dual().value();
      const double r = std::abs(g);
      x[j] = r > 0.0 ? (g / r) * std::pow(r, pd - 1.0) : Complex(0.0);
    }
  }
  const double nx = weighted_norm(x, win, p);
  if (nx == 0.0) return false;
  for (Complex& v : x) v /= nx;
  return true;
}

inline std::vector<Complex> gaussian_vector(std::size_t n, std::uint64_t seed,
                                            std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 gen(seq);
  std::normal_distribution<double> nd(0.0, 1.0);
  std::vector<Complex> v(n);
  for (Complex& c : v) {
    const double re = nd(gen);
    const double im = nd(gen);
    c = Complex(re, im);
  }
  return v;
}

}  // namespace detail

/// Certified lower bound on ||A||_{p->q} by the dual-map fixed-point
/// iteration, run from every seed and then from `restarts` complex Gaussian
/// vectors. A later start replaces the incumbent only if it improves the
/// ratio by more than a relative 1e-12, so ties keep the earliest start.
///
/// p = 1 or q = inf is answered exactly by opnorm_exact_boundary.
template <LinearOperator Op>
NormEstimate opnorm_lower(const Op& a, const Exponent& p, const Exponent& q,
                          std::span<const std::vector<Complex>> seeds = {},
                          const OpnormOptions& opt = {}) {
  if (!a.all_finite())
    throw PreconditionError("opnorm_lower: non-finite entries");
  if (p.is_one() || q.is_infinite())
    return opnorm_exact_boundary_witness(a, p, q);

  const auto win = a.in_weights();
  NormEstimate best;
  best.origin = "zero";
  best.converged = true;
  best.input_witness.assign(a.cols(), 0.0);

  std::vector<Complex> y(a.rows()), z(a.cols());
  auto run = [&](std::vector<Complex> x, const std::string& origin) {
    if (x.size() != a.cols())
      throw PreconditionError("opnorm_lower: seed length mismatch");
    const double nx = weighted_norm(x, win, p);
    if (nx == 0.0) return;
    for (Complex& v : x) v /= nx;
    double ratio = rayleigh_ratio(a, x, p, q);
    int it = 0;
    bool conv = false;
    std::vector<Complex> trial = x;
    while (it < opt.max_iterations) {
      ++it;
      if (!detail::boyd_step(a, trial, p, q, y, z)) break;
      const double r = rayleigh_ratio(a, trial, p, q);
      const double gain = r - ratio;
      if (r > ratio) {
        ratio = r;
        x = trial;
      }
      if (gain <= opt.tol * std::max(ratio, 1e-300)) {
        conv = true;
        break;
      }
    }
    if (ratio > best.lower * (1.0 + 1e-12)) {
      best.lower = ratio;
      best.input_witness = std::move(x);
      best.iterations = it;
      best.converged = conv;
      best.origin = origin;
    }
  };

  for (std::size_t k = 0; k < seeds.size(); ++k)
    run(seeds[k], "seed:" + std::to_string(k));
  for (int k = 0; k < opt.restarts; ++k)
    run(detail::gaussian_vector(a.cols(), opt.rng_seed,
                                static_cast<std::uint64_t>(k)),
        "restart:" + std::to_string(k));
  return best;
}

}  // namespace oscsum::normest
