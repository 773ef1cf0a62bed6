#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

// Inner loops of the dense Magnus expansion. Every variant must agree bit for
// bit with the scalar reference; arithmetic wraps modulo 2^64 in all of them.

namespace biord::simd {

struct Kernels {
  std::string_view name;
  // dst[i] += scale * src[i] for i < n. dst and src must not overlap.
  void (*axpy_i64)(std::int64_t* dst, const std::int64_t* src, std::size_t n,
                   std::int64_t scale);
  // Index of the first nonzero entry, or n when all are zero.
  std::size_t (*first_nonzero_i64)(const std::int64_t* data, std::size_t n);
};

const Kernels& scalar_kernels();

// nullptr when the build or the running CPU lacks AVX2.
const Kernels* avx2_kernels();

// Every variant usable on this machine, scalar first.
std::span<const Kernels* const> available_kernels();

// Best supported variant. BIORD_SIMD=scalar in the environment forces the
// scalar reference.
const Kernels& active_kernels();

}  // namespace biord::simd
