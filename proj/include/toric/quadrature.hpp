#pragma once

#include <array>

namespace toric {

// 8-point Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree 15.
inline constexpr std::array<double, 8> kGaussNodes8{
    -0.9602898564975362, -0.7966664774136267, -0.525532409916329, -0.18343464249564978,
    0.18343464249564978, 0.525532409916329,  0.7966664774136267,  0.9602898564975362};
inline constexpr std::array<double, 8> kGaussWeights8{
    0.10122853629037669, 0.22238103445337434, 0.31370664587788705, 0.36268378337836177,
    0.36268378337836177, 0.31370664587788705, 0.22238103445337434, 0.10122853629037669};

/// Composite 8-point Gauss-Legendre over [lo, hi] split into `panels` pieces.
template <class F>
double gauss_legendre(F&& f, double lo, double hi, int panels = 1) {
  double total = 0.0;
  const double width = (hi - lo) / panels;
  for (int k = 0; k < panels; ++k) {
    const double mid = lo + (k + 0.5) * width;
    const double half = 0.5 * width;
    double panel = 0.0;
    for (std::size_t i = 0; i < kGaussNodes8.size(); ++i) panel += kGaussWeights8[i] * f(mid + half * kGaussNodes8[i]);
    total += half * panel;
  }
  return total;
}

}  // namespace toric
