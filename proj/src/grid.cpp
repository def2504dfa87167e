#include "mgslab/grid.hpp"

#include <string>

#include "mgslab/error.hpp"

namespace mgslab {

Grid::Grid(int n1, int n2, int n3) : n_{n1, n2, n3} {
  for (int axis = 0; axis < 3; ++axis) {
    const int n = n_[static_cast<std::size_t>(axis)];
    if (n < 4 || n % 2 != 0) {
      throw InvalidArgument("grid size n" + std::to_string(axis + 1) + " = " + std::to_string(n) +
                            " must be even and >= 4");
    }
  }
}

bool Grid::retains(const Wavevector& k) const noexcept {
  auto in = [](std::int64_t kk, int n) { return kk > -n / 2 && kk <= n / 2; };
  return in(k.k1, n_[0]) && in(k.k2, n_[1]) && in(k.k3, n_[2]);
}

} // namespace mgslab
