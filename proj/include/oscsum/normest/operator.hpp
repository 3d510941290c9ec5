#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <span>
#include <vector>

#include "oscsum/core/errors.hpp"
#include "oscsum/core/fft.hpp"
#include "oscsum/core/norms.hpp"

namespace oscsum::normest {

/// A discretized linear map between weighted L^p spaces.
///
/// `in_weights` define the input norm (sum w_j |x_j|^p)^{1/p} and
/// `out_weights` the output norm; both must be nonnegative. Any quadrature
/// weights the discretization needs inside the map itself belong to the
/// matrix entries, so y = A x is the discretized image.
template <class Op>
concept LinearOperator =
    requires(const Op& a, std::span<const Complex> x, std::span<Complex> y,
             std::size_t i) {
      { a.rows() } -> std::convertible_to<std::size_t>;
      { a.cols() } -> std::convertible_to<std::size_t>;
      { a.in_weights() } -> std::convertible_to<std::span<const double>>;
      { a.out_weights() } -> std::convertible_to<std::span<const double>>;
      { a.entry(i, i) } -> std::convertible_to<Complex>;
      { a.modulus(i, i) } -> std::convertible_to<double>;
      { a.all_finite() } -> std::convertible_to<bool>;
      a.apply(x, y);
      a.apply_adjoint(x, y);
    };

namespace detail {

inline void check_weights(std::span<const double> w, const char* which) {
  for (double v : w)
    if (!(v >= 0.0) || !std::isfinite(v))
      throw PreconditionError(std::string("DiscreteOperator: ") + which +
                              " weights must be finite and nonnegative");
}

}  // namespace detail

/// Dense row-major complex matrix with input/output quadrature weights.
class DiscreteOperator {
 public:
  DiscreteOperator(std::size_t rows, std::size_t cols,
                   std::vector<Complex> matrix, std::vector<double> in_weights,
                   std::vector<double> out_weights)
      : rows_(rows),
        cols_(cols),
        matrix_(std::move(matrix)),
        in_w_(std::move(in_weights)),
        out_w_(std::move(out_weights)) {
    if (rows_ == 0 || cols_ == 0)
      throw PreconditionError("DiscreteOperator: empty dimensions");
    if (matrix_.size() != rows_ * cols_ || in_w_.size() != cols_ ||
        out_w_.size() != rows_)
      throw PreconditionError("DiscreteOperator: inconsistent dimensions");
    detail::check_weights(in_w_, "input");
    detail::check_weights(out_w_, "output");
  }

  /// Unit weights on both sides (plain l^p -> l^q).
  static DiscreteOperator unweighted(std::size_t rows, std::size_t cols,
                                     std::vector<Complex> matrix) {
    return DiscreteOperator(rows, cols, std::move(matrix),
                            std::vector<double>(cols, 1.0),
                            std::vector<double>(rows, 1.0));
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::span<const double> in_weights() const noexcept { return in_w_; }
  std::span<const double> out_weights() const noexcept { return out_w_; }
  std::span<const Complex> matrix() const noexcept { return matrix_; }

  Complex entry(std::size_t i, std::size_t j) const {
    return matrix_[i * cols_ + j];
  }
  double modulus(std::size_t i, std::size_t j) const {
    return std::abs(matrix_[i * cols_ + j]);
  }

  bool all_finite() const {
    for (const Complex& z : matrix_)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
  }

  void apply(std::span<const Complex> x, std::span<Complex> y) const {
    for (std::size_t i = 0; i < rows_; ++i) {
      const Complex* row = matrix_.data() + i * cols_;
      Complex acc = 0.0;
      for (std::size_t j = 0; j < cols_; ++j) acc += row[j] * x[j];
      y[i] = acc;
    }
  }

  void apply_adjoint(std::span<const Complex> y, std::span<Complex> x) const {
    for (std::size_t j = 0; j < cols_; ++j) x[j] = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Complex* row = matrix_.data() + i * cols_;
      const Complex yi = y[i];
      for (std::size_t j = 0; j < cols_; ++j) x[j] += std::conj(row[j]) * yi;
    }
  }

  DiscreteOperator scaled(double c) const {
    std::vector<Complex> m(matrix_);
    for (Complex& z : m) z *= c;
    return DiscreteOperator(rows_, cols_, std::move(m), in_w_, out_w_);
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> matrix_;
  std::vector<double> in_w_;
  std::vector<double> out_w_;
};

/// Weighted Hankel map A_ij = h[i + j] * c_j, applied in O(L log L) by FFT.
///
/// `kernel` has rows + cols - 1 entries; `column_scale` holds the c_j (for an
/// integral operator, the input quadrature weights).
class HankelOperator {
 public:
  HankelOperator(std::size_t rows, std::size_t cols,
                 std::vector<Complex> kernel, std::vector<double> column_scale,
                 std::vector<double> in_weights,
                 std::vector<double> out_weights)
      : rows_(rows),
        cols_(cols),
        kernel_(std::move(kernel)),
        scale_(std::move(column_scale)),
        in_w_(std::move(in_weights)),
        out_w_(std::move(out_weights)) {
    if (rows_ == 0 || cols_ == 0)
      throw PreconditionError("HankelOperator: empty dimensions");
    if (kernel_.size() != rows_ + cols_ - 1 || scale_.size() != cols_ ||
        in_w_.size() != cols_ || out_w_.size() != rows_)
      throw PreconditionError("HankelOperator: inconsistent dimensions");
    detail::check_weights(in_w_, "input");
    detail::check_weights(out_w_, "output");
    kernel_abs_.resize(kernel_.size());
    for (std::size_t k = 0; k < kernel_.size(); ++k)
      kernel_abs_[k] = std::abs(kernel_[k]);

    len_ = next_pow2(rows_ + cols_ - 1);
    forward_ = std::make_shared<FftPlan>(len_, FftPlan::Direction::Forward);
    backward_ = std::make_shared<FftPlan>(len_, FftPlan::Direction::Backward);
    std::vector<Complex> padded(len_, 0.0);
    std::copy(kernel_.begin(), kernel_.end(), padded.begin());
    kernel_hat_.resize(len_);
    forward_->execute(padded, kernel_hat_);
    for (std::size_t k = 0; k < kernel_.size(); ++k)
      padded[k] = std::conj(kernel_[k]);
    conj_kernel_hat_.resize(len_);
    forward_->execute(padded, conj_kernel_hat_);
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::span<const double> in_weights() const noexcept { return in_w_; }
  std::span<const double> out_weights() const noexcept { return out_w_; }
  std::span<const Complex> kernel() const noexcept { return kernel_; }

  Complex entry(std::size_t i, std::size_t j) const {
    return kernel_[i + j] * scale_[j];
  }
  double modulus(std::size_t i, std::size_t j) const {
    return kernel_abs_[i + j] * std::abs(scale_[j]);
  }

  bool all_finite() const {
    for (const Complex& z : kernel_)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    for (double c : scale_)
      if (!std::isfinite(c)) return false;
    return true;
  }

  /// y_i = sum_j h[i+j] c_j x_j.
  void apply(std::span<const Complex> x, std::span<Complex> y) const {
    std::vector<Complex> u(len_, 0.0);
    for (std::size_t j = 0; j < cols_; ++j) u[cols_ - 1 - j] = scale_[j] * x[j];
    convolve(u, kernel_hat_);
    for (std::size_t i = 0; i < rows_; ++i) y[i] = u[i + cols_ - 1];
  }

  /// x_j = c_j sum_i conj(h[i+j]) y_i.
  void apply_adjoint(std::span<const Complex> y, std::span<Complex> x) const {
    std::vector<Complex> u(len_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) u[rows_ - 1 - i] = y[i];
    convolve(u, conj_kernel_hat_);
    for (std::size_t j = 0; j < cols_; ++j)
      x[j] = scale_[j] * u[j + rows_ - 1];
  }

  HankelOperator scaled(double c) const {
    std::vector<Complex> k(kernel_);
    for (Complex& z : k) z *= c;
    return HankelOperator(rows_, cols_, std::move(k), scale_, in_w_, out_w_);
  }

 private:
  // u <- ifft(fft(u) * hat) / len, a circular convolution long enough that
  // the entries read back are free of wraparound.
  void convolve(std::vector<Complex>& u, const std::vector<Complex>& hat) const {
    std::vector<Complex> freq(len_);
    forward_->execute(u, freq);
    for (std::size_t k = 0; k < len_; ++k) freq[k] *= hat[k];
    backward_->execute(freq, u);
    const double inv = 1.0 / static_cast<double>(len_);
    for (Complex& z : u) z *= inv;
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> kernel_;
  std::vector<double> kernel_abs_;
  std::vector<double> scale_;
  std::vector<double> in_w_;
  std::vector<double> out_w_;
  std::size_t len_ = 0;
  std::shared_ptr<FftPlan> forward_;
  std::shared_ptr<FftPlan> backward_;
  std::vector<Complex> kernel_hat_;
  std::vector<Complex> conj_kernel_hat_;
};

static_assert(LinearOperator<DiscreteOperator>);
static_assert(LinearOperator<HankelOperator>);

}  // namespace oscsum::normest
