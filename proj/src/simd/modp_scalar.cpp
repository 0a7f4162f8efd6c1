#include <atomic>

#include "kreweras/simd/modp.hpp"

namespace kreweras::simd {

void axpy_mod_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t n, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = static_cast<std::uint32_t>((dst[i] + std::uint64_t{c} * src[i]) % p);
}

void scale_mod_scalar(std::uint32_t* dst, std::uint32_t c, std::size_t n, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = static_cast<std::uint32_t>((std::uint64_t{c} * dst[i]) % p);
}

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
  static const bool has = __builtin_cpu_supports("avx2");
  return has;
#else
  return false;
#endif
}

namespace {
std::atomic<bool> g_force_scalar{false};
}

void set_force_scalar(bool on) { g_force_scalar.store(on); }

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t n, std::uint32_t p) {
  if (c == 0) return;
  if (!g_force_scalar.load(std::memory_order_relaxed) && avx2_available()) {
    axpy_mod_avx2(dst, src, c, n, p);
  } else {
    axpy_mod_scalar(dst, src, c, n, p);
  }
}

void scale_mod(std::uint32_t* dst, std::uint32_t c, std::size_t n, std::uint32_t p) {
  if (!g_force_scalar.load(std::memory_order_relaxed) && avx2_available()) {
    scale_mod_avx2(dst, c, n, p);
  } else {
    scale_mod_scalar(dst, c, n, p);
  }
}

}  // namespace kreweras::simd
