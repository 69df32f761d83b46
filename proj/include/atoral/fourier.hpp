#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "atoral/laurent_poly.hpp"

namespace atoral {

/// Values of a function on the uniform grid (Z/N)^d / N of the d-torus,
/// stored row-major: the index of (k_1, ..., k_d) is sum_j k_j N^{d-j}.
struct TorusGrid {
  std::size_t dim = 0;
  std::size_t n = 0;  ///< points per axis, a power of two
  std::vector<std::complex<double>> values;

  std::size_t total() const { return values.size(); }
  /// Grid coordinates of a flat index.
  std::vector<std::size_t> unflatten(std::size_t index) const;
};

bool is_power_of_two(std::size_t n);

/// f(e^{2 pi i k/N}) for every grid point, via one inverse FFT of the
/// coefficient array folded mod N (folding is exact on the grid).
TorusGrid evaluate_on_grid(const IntLaurentPoly& f, std::size_t n);

/// In-place d-dimensional DFT: out_k = sum_j in_j e^{sign 2 pi i <j,k>/N}.
void dft_in_place(TorusGrid& grid, int sign);

/// Fourier coefficients c_k = N^{-d} sum_t g(t) e^{-2 pi i <k,t>}, returned
/// on the same grid layout (index k mod N).
TorusGrid fourier_coefficients(TorusGrid samples);

/// Representative of k mod N in [-N/2, N/2).
std::int64_t centered(std::size_t k, std::size_t n);

}  // namespace atoral
