#pragma once

#include <vector>

#include "polytoep/quadrature.hpp"

namespace polytoep {

// In-place discrete Fourier transform, unnormalized:
//   x[k] <- sum_j x[j] exp(sign * 2 pi i j k / n)
// sign = -1 is the analysis direction; sign = +1 undoes it up to a factor n.
// Radix-2 for power-of-two lengths, chirp convolution otherwise.
void fft(std::vector<cplx>& x, int sign);

}  // namespace polytoep
