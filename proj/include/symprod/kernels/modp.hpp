#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Dense mod-p vector kernels used by polynomial arithmetic over F_p.
// All inputs are reduced residues in [0, p) and p < 2^26, so that
// s*x + y < 2^53 and fits a double exactly.
namespace symprod::kernels {

inline constexpr std::uint32_t max_modulus = 1u << 26;

/// dst[i] = (dst[i] + s * src[i]) mod p
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t s, std::uint32_t p);
/// v[i] = (s * v[i]) mod p
void scale_mod(std::uint32_t* v, std::size_t n, std::uint32_t s, std::uint32_t p);

namespace scalar {
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t s, std::uint32_t p);
void scale_mod(std::uint32_t* v, std::size_t n, std::uint32_t s, std::uint32_t p);
}  // namespace scalar

namespace avx2 {
/// Present only when built with SYMPROD_HAVE_AVX2; callers go through dispatch.
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t s, std::uint32_t p);
void scale_mod(std::uint32_t* v, std::size_t n, std::uint32_t s, std::uint32_t p);
}  // namespace avx2

/// True when the AVX2 variant is compiled in and the CPU supports it.
bool avx2_available() noexcept;
/// Name of the variant the dispatcher uses: "avx2" or "scalar".
std::string_view active_variant() noexcept;
/// Force the scalar path (tests and benchmarking). Not thread-safe against
/// concurrent kernel calls.
void force_scalar(bool on) noexcept;

}  // namespace symprod::kernels
