#include "biord/simd/kernels.hpp"

namespace biord::simd {

namespace {

void axpy_scalar(std::int64_t* dst, const std::int64_t* src, std::size_t n,
                 std::int64_t scale) {
  const auto s = static_cast<std::uint64_t>(scale);
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = static_cast<std::int64_t>(static_cast<std::uint64_t>(dst[i]) +
                                       s * static_cast<std::uint64_t>(src[i]));
}

std::size_t first_nonzero_scalar(const std::int64_t* data, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (data[i] != 0) return i;
  return n;
}

constexpr Kernels kScalar{"scalar", &axpy_scalar, &first_nonzero_scalar};

}  // namespace

const Kernels& scalar_kernels() { return kScalar; }

}  // namespace biord::simd
