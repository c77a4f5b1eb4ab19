#include "fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace scaleqm::detail {

namespace {

// Planner calls are not thread-safe; execution of distinct plans is.
// FFTW_UNALIGNED keeps the chosen codelets, and so the rounding, independent
// of where the buffer happens to land in memory.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

class Plan {
 public:
  explicit Plan(fftw_plan p) : plan_(p) {
    if (!plan_) throw std::runtime_error("FFTW failed to create a plan");
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;
  ~Plan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan_);
  }
  void execute() const { fftw_execute(plan_); }

 private:
  fftw_plan plan_;
};

int fftw_sign(FftSign sign) { return sign == FftSign::negative ? FFTW_FORWARD : FFTW_BACKWARD; }

fftw_complex* as_fftw(std::span<Complex> data) { return reinterpret_cast<fftw_complex*>(data.data()); }

}  // namespace

void fft_1d(std::span<Complex> data, FftSign sign) {
  fftw_plan raw;
  {
    std::lock_guard lock(planner_mutex());
    raw = fftw_plan_dft_1d(static_cast<int>(data.size()), as_fftw(data), as_fftw(data), fftw_sign(sign),
                           FFTW_ESTIMATE | FFTW_UNALIGNED);
  }
  Plan plan(raw);
  plan.execute();
}

void fft_2d(std::span<Complex> data, std::size_t rows, std::size_t cols, FftSign sign) {
  if (data.size() != rows * cols) throw std::invalid_argument("fft_2d: shape does not match data");
  fftw_plan raw;
  {
    std::lock_guard lock(planner_mutex());
    raw = fftw_plan_dft_2d(static_cast<int>(rows), static_cast<int>(cols), as_fftw(data), as_fftw(data),
                           fftw_sign(sign), FFTW_ESTIMATE | FFTW_UNALIGNED);
  }
  Plan plan(raw);
  plan.execute();
}

}  // namespace scaleqm::detail
