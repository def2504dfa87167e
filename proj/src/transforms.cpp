#include "mgslab/transforms.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "mgslab/error.hpp"

namespace mgslab {

// Plans are created once per grid and never destroyed. The FFTW planner is
// not thread-safe, so creation is serialized; execution through the
// new-array interface is. FFTW_ESTIMATE keeps the chosen algorithm, and
// therefore the roundoff, identical from run to run.
struct FftEngine::Plans {
  fftw_plan forward = nullptr;
  fftw_plan inverse = nullptr;
};

namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

} // namespace

FftEngine::FftEngine(const Grid& grid)
    : grid_(grid), plans_(nullptr), scratch_(grid.spectral_size()) {
  std::lock_guard lock(planner_mutex());
  static std::map<std::tuple<int, int, int>, std::unique_ptr<Plans>> cache;
  auto key = std::make_tuple(grid.n1(), grid.n2(), grid.n3());
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto plans = std::make_unique<Plans>();
    double* rbuf = fftw_alloc_real(grid.physical_size());
    fftw_complex* cbuf = fftw_alloc_complex(grid.spectral_size());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    plans->forward = fftw_plan_dft_r2c_3d(grid.n1(), grid.n2(), grid.n3(), rbuf, cbuf, flags);
    plans->inverse = fftw_plan_dft_c2r_3d(grid.n1(), grid.n2(), grid.n3(), cbuf, rbuf,
                                          flags | FFTW_DESTROY_INPUT);
    fftw_free(rbuf);
    fftw_free(cbuf);
    if (!plans->forward || !plans->inverse) throw Error("FFTW plan creation failed");
    it = cache.emplace(key, std::move(plans)).first;
  }
  plans_ = it->second.get();
}

FftEngine::~FftEngine() = default;

void FftEngine::inverse(std::span<const Complex> in, std::span<double> out) {
  if (in.size() != grid_.spectral_size() || out.size() != grid_.physical_size()) {
    throw InvalidArgument("FftEngine::inverse: buffer size mismatch");
  }
  // c2r destroys its input.
  std::copy(in.begin(), in.end(), scratch_.begin());
  fftw_execute_dft_c2r(plans_->inverse, reinterpret_cast<fftw_complex*>(scratch_.data()),
                       out.data());
}

void FftEngine::forward(std::span<const double> in, std::span<Complex> out) {
  if (in.size() != grid_.physical_size() || out.size() != grid_.spectral_size()) {
    throw InvalidArgument("FftEngine::forward: buffer size mismatch");
  }
  // r2c preserves its input by default, the cast only satisfies the C API.
  fftw_execute_dft_r2c(plans_->forward, const_cast<double*>(in.data()),
                       reinterpret_cast<fftw_complex*>(out.data()));
  const double scale = 1.0 / static_cast<double>(grid_.physical_size());
  for (auto& c : out) c *= scale;
}

PhysicalField to_physical(const SpectralField& f) {
  FftEngine fft(f.grid());
  PhysicalField out(f.grid());
  fft.inverse(f.data(), out.values);
  return out;
}

SpectralField to_spectral(std::span<const double> values, const Grid& grid) {
  FftEngine fft(grid);
  SpectralField out(grid);
  fft.forward(values, out.data());
  out.enforce_hermitian();
  return out;
}

SpectralField to_spectral(const PhysicalField& values) {
  return to_spectral(values.values, values.grid);
}

} // namespace mgslab
