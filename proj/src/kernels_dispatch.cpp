#include <cstdlib>
#include <cstring>

#include "polytoep/kernels.hpp"

namespace polytoep::kernels {

#if defined(POLYTOEP_HAVE_AVX2)
const Ops& avx2_ops();
#endif
#if defined(POLYTOEP_HAVE_NEON)
const Ops& neon_ops();
#endif

namespace {

const Ops* select() {
  const char* want = std::getenv("POLYTOEP_SIMD");
  if (want != nullptr && std::strcmp(want, "scalar") == 0) return &scalar_ops();
#if defined(POLYTOEP_HAVE_AVX2)
  const bool cpu_ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  if (want != nullptr && std::strcmp(want, "avx2") == 0) {
    return cpu_ok ? &avx2_ops() : &scalar_ops();
  }
  if (want == nullptr && cpu_ok) return &avx2_ops();
#endif
#if defined(POLYTOEP_HAVE_NEON)
  if (want == nullptr || std::strcmp(want, "neon") == 0) return &neon_ops();
#endif
  return &scalar_ops();
}

}  // namespace

const Ops& ops() {
  static const Ops* chosen = select();
  return *chosen;
}

const char* active_variant() { return ops().name; }

}  // namespace polytoep::kernels
