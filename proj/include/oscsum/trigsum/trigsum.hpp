#pragma once

#include <algorithm>
#include <climits>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "oscsum/core/errors.hpp"
#include "oscsum/core/exponent.hpp"
#include "oscsum/core/fft.hpp"
#include "oscsum/core/grids.hpp"
#include "oscsum/core/norms.hpp"
#include "oscsum/core/scan.hpp"
#include "oscsum/normest/operator.hpp"

namespace oscsum::trigsum {

/// f(t) = sum_{n<N} a_n e^{int}, by Horner's rule in z = e^{it}.
inline Complex trig_eval(const CoefficientVector& a, double t) {
  const Complex z = std::polar(1.0, t);
  Complex acc = 0.0;
  for (std::size_t n = a.size(); n-- > 0;) acc = acc * z + a[n];
  return acc;
}

/// The map a -> (f(t_m))_m onto the nodes of a CircleGrid.
class TrigOperator {
 public:
  explicit TrigOperator(std::size_t n) : n_(n) {
    if (n == 0) throw PreconditionError("TrigOperator needs N >= 1");
  }

  std::size_t length() const noexcept { return n_; }

  /// Samples at t_m = -pi + 2 pi m / M via one inverse FFT. Coefficients
  /// with n >= M are folded onto n mod M, so any M works.
  std::vector<Complex> samples(const CoefficientVector& a,
                               const CircleGrid& grid) const {
    if (a.size() != n_)
      throw PreconditionError("TrigOperator: coefficient length mismatch");
    const std::size_t m = grid.size();
    std::vector<Complex> b(m, 0.0), out(m);
    for (std::size_t k = 0; k < n_; ++k)
      b[k % m] += (k % 2 == 0) ? a[k] : -a[k];
    FftPlan(m, FftPlan::Direction::Backward).execute(b, out);
    return out;
  }

  /// Dense matrix e^{i n t_m} with the grid's weights on the output side
  /// and unit weights on the input side.
  normest::DiscreteOperator discretize(const CircleGrid& grid) const {
    const std::size_t m = grid.size();
    std::vector<Complex> mat(m * n_);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < n_; ++k)
        mat[i * n_ + k] =
            std::polar(1.0, static_cast<double>(k) * grid.nodes()[i]);
    return normest::DiscreteOperator(
        m, n_, std::move(mat), std::vector<double>(n_, 1.0),
        std::vector<double>(grid.weights().begin(), grid.weights().end()));
  }

 private:
  std::size_t n_;
};

inline normest::DiscreteOperator trig_operator(std::size_t n,
                                               const CircleGrid& grid) {
  return TrigOperator(n).discretize(grid);
}

/// D_N(t) = sin(Nt/2)/sin(t/2). The argument is reduced to u = t - 2 pi k
/// in extended precision, D_N(t) = (-1)^{k(N-1)} D_N(u), and near u = 0 the
/// cosine sum sum_n cos((n - (N-1)/2) u) is used; it is the same function.
inline double dirichlet(std::size_t n, double t) {
  if (n == 0) throw PreconditionError("dirichlet needs N >= 1");
  constexpr long double two_pi = 6.283185307179586476925286766559L;
  const long double k = std::nearbyint(static_cast<long double>(t) / two_pi);
  const double u = static_cast<double>(static_cast<long double>(t) - k * two_pi);
  const bool flip =
      std::fmod(std::abs(static_cast<double>(k)), 2.0) == 1.0 && n % 2 == 0;
  double d;
  const double den = std::sin(0.5 * u);
  if (std::abs(den) < 1e-8) {
    const double centre = 0.5 * (static_cast<double>(n) - 1.0);
    d = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      d += std::cos((static_cast<double>(j) - centre) * u);
  } else {
    d = std::sin(0.5 * static_cast<double>(n) * u) / den;
  }
  return flip ? -d : d;
}

namespace detail {

// Integral of |sin x / x|^q over [k pi, (k+1) pi]. Each half panel is
// mapped by x = end -+ (pi/2) u^2, which smooths the |x - k pi|^q zero.
inline double sinc_power_panel(double q, std::size_t k, const GaussRule& g) {
  const double pi = std::numbers::pi;
  const double left = static_cast<double>(k) * pi;
  const double right = left + pi;
  double acc = 0.0;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const double u = 0.5 * (g.nodes[i] + 1.0);
    const double w = 0.5 * g.weights[i] * pi * u;
    const double off = 0.5 * pi * u * u;
    for (double x : {left + off, right - off}) {
      const double s = x == 0.0 ? 1.0 : std::abs(std::sin(x) / x);
      if (s > 0.0) acc += w * std::pow(s, q);
    }
  }
  return acc;
}

}  // namespace detail

/// gamma(q) = ((1/pi) int_R |sin x / x|^q dx)^{1/q} for q > 1.
///
/// The tail past X = K pi is replaced by its period average
/// c0 X^{1-q}/(q-1), c0 = mean of |sin|^q; the remainder is at most
/// q (pi^2/8) X^{-q-1}, and K doubles until that is below tol/4 in gamma.
inline double gamma_q(double q, double tol = 1e-10) {
  if (!(q > 1.0) || !std::isfinite(q))
    throw DomainError("gamma_q: q must exceed 1");
  if (!(tol > 0.0)) throw PreconditionError("gamma_q: tol must be positive");
  const double pi = std::numbers::pi;
  static const GaussRule g = gauss_legendre(32);
  const double c0 =
      std::tgamma(0.5 * (q + 1.0)) / (std::sqrt(pi) * std::tgamma(0.5 * q + 1.0));

  double body = 0.0;
  std::size_t done = 0;
  std::size_t k_total = 8;
  constexpr std::size_t k_cap = std::size_t{1} << 26;
  for (;;) {
    for (; done < k_total; ++done) body += detail::sinc_power_panel(q, done, g);
    const double x = static_cast<double>(k_total) * pi;
    const double tail = c0 * std::pow(x, 1.0 - q) / (q - 1.0);
    const double s = (2.0 / pi) * (body + tail);
    const double remainder = (2.0 / pi) * q * (pi * pi / 8.0) *
                             std::pow(x, -q - 1.0);
    const double gamma = std::pow(s, 1.0 / q);
    if (gamma / (q * s) * remainder < 0.25 * tol) return gamma;
    if (k_total >= k_cap)
      throw ConvergenceError("gamma_q: tail did not reach tolerance", gamma,
                             gamma);
    k_total *= 2;
  }
}

/// ||D_N||_{L^{2m}}^{2m} as an exact integer: the number of 2m-tuples in
/// [0,N) whose first m entries and last m entries have equal sums. It is
/// the sum of squared coefficients of (1 + z + ... + z^{N-1})^m.
///
/// With 64-bit words the count fits while roughly 2m log2 N < 64 (for
/// example N = 64 with m <= 5, N = 4096 with m = 2); beyond that an
/// OverflowError reports the width needed.
template <class UInt = std::uint64_t>
UInt dirichlet_norm_even(std::size_t n, std::size_t m) {
  if (n == 0 || m == 0)
    throw PreconditionError("dirichlet_norm_even needs N >= 1 and m >= 1");
  const int width = static_cast<int>(sizeof(UInt) * CHAR_BIT);

  auto required_bits = [&]() {
    std::vector<long double> c{1.0L};
    for (std::size_t r = 0; r < m; ++r) {
      std::vector<long double> next(c.size() + n - 1, 0.0L);
      long double window = 0.0L;
      for (std::size_t k = 0; k < next.size(); ++k) {
        if (k < c.size()) window += c[k];
        if (k >= n) window -= c[k - n];
        next[k] = window;
      }
      c.swap(next);
    }
    long double total = 0.0L;
    for (long double v : c) total += v * v;
    return static_cast<int>(std::floor(std::log2(total))) + 1;
  };
  auto overflow = [&]() -> UInt {
    throw OverflowError("dirichlet_norm_even: count exceeds " +
                            std::to_string(width) + " bits",
                        required_bits());
  };

  std::vector<UInt> c{UInt{1}};
  for (std::size_t r = 0; r < m; ++r) {
    std::vector<UInt> next(c.size() + n - 1, UInt{0});
    UInt window = 0;
    for (std::size_t k = 0; k < next.size(); ++k) {
      if (k < c.size() && __builtin_add_overflow(window, c[k], &window))
        return overflow();
      if (k >= n) window -= c[k - n];
      next[k] = window;
    }
    c.swap(next);
  }
  UInt total = 0;
  for (UInt v : c) {
    UInt sq;
    if (__builtin_mul_overflow(v, v, &sq) ||
        __builtin_add_overflow(total, sq, &total))
      return overflow();
  }
  return total;
}

/// ||D_N||_{L^q} on a CircleGrid, sampling the closed form.
inline double dirichlet_norm(std::size_t n, const Exponent& q,
                             const CircleGrid& grid) {
  std::vector<Complex> f(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    f[i] = dirichlet(n, grid.nodes()[i]);
  return lq_norm(f, grid, q);
}

/// Rows (N, ||D_N||_{L^q} / N^{1-1/q}) with predicted = gamma(q). Each N
/// uses CircleGrid::for_length(N).
inline std::vector<ScanRecord> gamma_convergence_scan(
    double q, std::span<const std::size_t> ns, double tol = 1e-10) {
  const double limit = gamma_q(q, tol);
  const Exponent qe(q);
  std::vector<ScanRecord> rows;
  rows.reserve(ns.size());
  for (std::size_t n : ns) {
    if (n == 0) throw PreconditionError("gamma_convergence_scan: N >= 1");
    const double norm = dirichlet_norm(n, qe, CircleGrid::for_length(n));
    rows.push_back({n,
                    norm / std::pow(static_cast<double>(n), 1.0 - 1.0 / q),
                    "dirichlet", limit});
  }
  return rows;
}

struct ExtremizerFamily {
  enum class Kind { Delta, Ones, Chirp };
  Kind kind = Kind::Ones;
  std::size_t N = 1;
};

inline const char* family_name(ExtremizerFamily::Kind k) {
  switch (k) {
    case ExtremizerFamily::Kind::Delta: return "delta";
    case ExtremizerFamily::Kind::Ones: return "ones";
    case ExtremizerFamily::Kind::Chirp: return "chirp";
  }
  return "?";
}

inline CoefficientVector extremizer(const ExtremizerFamily& fam) {
  if (fam.N == 0) throw PreconditionError("extremizer needs N >= 1");
  std::vector<Complex> a(fam.N, 0.0);
  switch (fam.kind) {
    case ExtremizerFamily::Kind::Delta:
      a[0] = 1.0;
      break;
    case ExtremizerFamily::Kind::Ones:
      std::fill(a.begin(), a.end(), Complex(1.0));
      break;
    case ExtremizerFamily::Kind::Chirp: {
      const double len = static_cast<double>(fam.N);
      for (std::size_t k = 0; k < fam.N; ++k) {
        const double kk = static_cast<double>(k);
        // Reduce n^2 modulo 2 pi N before dividing, so the phase stays small.
        const double r = std::fmod(kk * kk, 2.0 * std::numbers::pi * len);
        a[k] = std::polar(1.0, -r / len);
      }
      break;
    }
  }
  return CoefficientVector(std::move(a));
}

/// max_t (|f(t) - sqrt(pi) e^{i(Nt^2 - pi)/4} sqrt(N)| - 4/(t(2-t))) for the
/// chirp family, evaluated by direct summation.
inline double chirp_profile_check(std::size_t n, std::span<const double> ts) {
  for (double t : ts)
    if (!(t > 0.0 && t < 2.0))
      throw DomainError("chirp_profile_check: t must lie in (0, 2)");
  const CoefficientVector a = extremizer({ExtremizerFamily::Kind::Chirp, n});
  const double nn = static_cast<double>(n);
  const double pi = std::numbers::pi;
  double worst = -std::numeric_limits<double>::infinity();
  for (double t : ts) {
    const Complex main =
        std::sqrt(pi * nn) * std::polar(1.0, 0.25 * (nn * t * t - pi));
    const double d = std::abs(trig_eval(a, t) - main) - 4.0 / (t * (2.0 - t));
    worst = std::max(worst, d);
  }
  return worst;
}

/// max{1, N^{1-1/q-1/p}, N^{1/2-1/p}}.
inline double cn_upper_bound(std::size_t n, const ExponentPair& pt) {
  const double nn = static_cast<double>(n);
  return std::max({1.0, std::pow(nn, 1.0 - pt.inv_q - pt.inv_p),
                   std::pow(nn, 0.5 - pt.inv_p)});
}

/// ||T_N a||_{L^q} / ||a||_{l^p} for the family, at each point.
inline std::vector<double> cn_lower_bounds(std::size_t n,
                                           std::span<const ExponentPair> pts,
                                           ExtremizerFamily::Kind kind,
                                           const CircleGrid& grid) {
  const CoefficientVector a = extremizer({kind, n});
  const std::vector<Complex> f = TrigOperator(n).samples(a, grid);
  std::vector<double> out;
  out.reserve(pts.size());
  for (const ExponentPair& pt : pts)
    out.push_back(lq_norm(f, grid, pt.q()) / lp_norm(a, pt.p()));
  return out;
}

inline double cn_lower_bound(std::size_t n, const ExponentPair& pt,
                             ExtremizerFamily::Kind kind,
                             const CircleGrid& grid) {
  return cn_lower_bounds(n, std::span<const ExponentPair>(&pt, 1), kind,
                         grid)[0];
}

}  // namespace oscsum::trigsum
