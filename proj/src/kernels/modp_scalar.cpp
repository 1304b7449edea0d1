#include "symprod/kernels/modp.hpp"

namespace symprod::kernels::scalar {

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t s, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = static_cast<std::uint32_t>((dst[i] + std::uint64_t(s) * src[i]) % p);
}

void scale_mod(std::uint32_t* v, std::size_t n, std::uint32_t s, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<std::uint32_t>(std::uint64_t(s) * v[i] % p);
}

}  // namespace symprod::kernels::scalar
