#include "polytoep/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace polytoep {

namespace {

bool is_pow2(size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Iterative radix-2 with a precomputed twiddle table. Twiddles come from
// std::polar per index, not repeated multiplication, so no phase drift.
void fft_pow2(std::vector<cplx>& a, int sign) {
  const size_t n = a.size();
  if (n < 2) return;

  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  std::vector<cplx> tw(n / 2);
  const double base = static_cast<double>(sign) * 2.0 * std::numbers::pi /
                      static_cast<double>(n);
  for (size_t j = 0; j < n / 2; ++j) {
    tw[j] = std::polar(1.0, base * static_cast<double>(j));
  }

  for (size_t len = 2; len <= n; len <<= 1) {
    const size_t stride = n / len;
    for (size_t i = 0; i < n; i += len) {
      for (size_t j = 0; j < len / 2; ++j) {
        const cplx w = tw[j * stride];
        const cplx u = a[i + j];
        const cplx v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
      }
    }
  }
}

// Arbitrary length via the quadratic-chirp factorization
//   exp(s 2 pi i jk/n) = e_j e_k conj-chirp(k - j),  e_j = exp(s pi i j^2/n).
// The shifted-difference sequence is a convolution, done at a power-of-two
// length. Chirp angles are reduced mod 2n in integers first; j^2 for large j
// would otherwise lose the low bits that the angle actually depends on.
void fft_bluestein(std::vector<cplx>& x, int sign) {
  const size_t n = x.size();
  size_t m = 1;
  while (m < 2 * n - 1) m <<= 1;

  const double base = static_cast<double>(sign) * std::numbers::pi /
                      static_cast<double>(n);
  std::vector<cplx> chirp(n);
  for (size_t j = 0; j < n; ++j) {
    const unsigned long long r = (static_cast<unsigned long long>(j) * j) %
                                 (2ULL * n);
    chirp[j] = std::polar(1.0, base * static_cast<double>(r));
  }

  std::vector<cplx> a(m, cplx(0.0, 0.0));
  std::vector<cplx> b(m, cplx(0.0, 0.0));
  for (size_t j = 0; j < n; ++j) {
    a[j] = x[j] * chirp[j];
    b[j] = std::conj(chirp[j]);
    if (j != 0) b[m - j] = std::conj(chirp[j]);
  }

  fft_pow2(a, -1);
  fft_pow2(b, -1);
  for (size_t j = 0; j < m; ++j) a[j] *= b[j];
  fft_pow2(a, +1);

  const double inv_m = 1.0 / static_cast<double>(m);
  for (size_t k = 0; k < n; ++k) {
    x[k] = a[k] * inv_m * chirp[k];
  }
}

}  // namespace

void fft(std::vector<cplx>& x, int sign) {
  if (sign != -1 && sign != 1) {
    throw std::invalid_argument("fft sign must be -1 or +1");
  }
  if (x.size() < 2) return;
  if (is_pow2(x.size())) {
    fft_pow2(x, sign);
  } else {
    fft_bluestein(x, sign);
  }
}

}  // namespace polytoep
