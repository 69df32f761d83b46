#include "atoral/fourier.hpp"

#include <fftw3.h>

#include <mutex>

namespace atoral {

namespace {
// The FFTW planner is not thread-safe; execution is.
std::mutex planner_mutex;

std::size_t mod(std::int64_t a, std::size_t n) {
  const auto m = static_cast<std::int64_t>(n);
  return static_cast<std::size_t>(((a % m) + m) % m);
}
}  // namespace

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::int64_t centered(std::size_t k, std::size_t n) {
  const auto kk = static_cast<std::int64_t>(k), nn = static_cast<std::int64_t>(n);
  return kk < nn / 2 ? kk : kk - nn;
}

std::vector<std::size_t> TorusGrid::unflatten(std::size_t index) const {
  std::vector<std::size_t> k(dim);
  for (std::size_t j = dim; j-- > 0;) {
    k[j] = index % n;
    index /= n;
  }
  return k;
}

void dft_in_place(TorusGrid& grid, int sign) {
  std::vector<int> dims(grid.dim, static_cast<int>(grid.n));
  auto* data = reinterpret_cast<fftw_complex*>(grid.values.data());
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex);
    plan = fftw_plan_dft(static_cast<int>(grid.dim), dims.data(), data, data,
                         sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(planner_mutex);
    fftw_destroy_plan(plan);
  }
}

TorusGrid evaluate_on_grid(const IntLaurentPoly& f, std::size_t n) {
  if (!is_power_of_two(n)) throw Error("grid size must be a power of two");
  TorusGrid g;
  g.dim = f.dim();
  g.n = n;
  std::size_t total = 1;
  for (std::size_t j = 0; j < g.dim; ++j) total *= n;
  g.values.assign(total, {0.0, 0.0});
  for (const auto& [e, c] : f) {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < g.dim; ++j) idx = idx * n + mod(e[j], n);
    g.values[idx] += c.get_d();
  }
  dft_in_place(g, +1);
  return g;
}

TorusGrid fourier_coefficients(TorusGrid samples) {
  dft_in_place(samples, -1);
  const double scale = 1.0 / static_cast<double>(samples.total());
  for (auto& v : samples.values) v *= scale;
  return samples;
}

}  // namespace atoral
