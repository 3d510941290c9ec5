#pragma once

#include <fftw3.h>

#include <complex>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <vector>

namespace oscsum {

/// In-place-or-not complex DFT of fixed length backed by FFTW.
///
/// Plans are made with FFTW_ESTIMATE, so the chosen algorithm (and hence the
/// exact floating-point result) does not depend on timing measurements.
/// FFTW_UNALIGNED lets execute() run on any std::vector storage.
class FftPlan {
 public:
  enum class Direction { Forward, Backward };

  FftPlan(std::size_t n, Direction dir) : n_(n) {
    if (n == 0) throw std::invalid_argument("FftPlan: zero length");
    std::vector<std::complex<double>> in(n), out(n);
    const int sign = dir == Direction::Forward ? FFTW_FORWARD : FFTW_BACKWARD;
    fftw_plan raw = nullptr;
    {
      std::lock_guard<std::mutex> lock(planner_mutex());
      raw = fftw_plan_dft_1d(static_cast<int>(n), as_fftw(in.data()),
                             as_fftw(out.data()), sign,
                             FFTW_ESTIMATE | FFTW_UNALIGNED);
    }
    if (!raw) throw std::runtime_error("FftPlan: fftw planning failed");
    plan_ = std::shared_ptr<fftw_plan_s>(raw, PlanDeleter{});
  }

  std::size_t size() const noexcept { return n_; }

  /// Unnormalized transform: out_k = sum_j in_j exp(-+ 2 pi i j k / n).
  void execute(std::span<const std::complex<double>> in,
               std::span<std::complex<double>> out) const {
    if (in.size() != n_ || out.size() != n_)
      throw std::invalid_argument("FftPlan: length mismatch");
    // fftw_execute_dft never writes to its input array.
    fftw_execute_dft(plan_.get(),
                     as_fftw(const_cast<std::complex<double>*>(in.data())),
                     as_fftw(out.data()));
  }

 private:
  struct PlanDeleter {
    void operator()(fftw_plan_s* p) const {
      std::lock_guard<std::mutex> lock(planner_mutex());
      fftw_destroy_plan(p);
    }
  };

  // The FFTW planner is not re-entrant; execution is.
  static std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
  }

  static fftw_complex* as_fftw(std::complex<double>* p) {
    return reinterpret_cast<fftw_complex*>(p);
  }

  std::size_t n_;
  std::shared_ptr<fftw_plan_s> plan_;
};

/// Smallest power of two >= n.
inline std::size_t next_pow2(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

}  // namespace oscsum
