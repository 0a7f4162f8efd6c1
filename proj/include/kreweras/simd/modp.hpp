#pragma once

#include <cstddef>
#include <cstdint>

namespace kreweras::simd {

// Row kernels for elimination over F_p with p < 2^16. All inputs are
// reduced residues in [0, p).

/// Barrett constant floor(2^32 / p).
inline std::uint32_t barrett_m(std::uint32_t p) { return static_cast<std::uint32_t>((std::uint64_t{1} << 32) / p); }

/// dst[i] = (dst[i] + c * src[i]) mod p
void axpy_mod_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t n, std::uint32_t p);
void axpy_mod_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t n, std::uint32_t p);
/// dst[i] = (c * dst[i]) mod p
void scale_mod_scalar(std::uint32_t* dst, std::uint32_t c, std::size_t n, std::uint32_t p);
void scale_mod_avx2(std::uint32_t* dst, std::uint32_t c, std::size_t n, std::uint32_t p);

bool avx2_available();

/// Dispatched entry points (AVX2 when the CPU has it, scalar otherwise).
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t n, std::uint32_t p);
void scale_mod(std::uint32_t* dst, std::uint32_t c, std::size_t n, std::uint32_t p);

/// Force the scalar path in the dispatcher (for benchmarking and tests).
void set_force_scalar(bool on);

}  // namespace kreweras::simd
