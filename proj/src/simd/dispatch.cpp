#include <cstdlib>
#include <string_view>
#include <vector>

#include "biord/simd/kernels.hpp"

namespace biord::simd {

std::span<const Kernels* const> available_kernels() {
  static const std::vector<const Kernels*> all = [] {
    std::vector<const Kernels*> v{&scalar_kernels()};
    if (const Kernels* k = avx2_kernels()) v.push_back(k);
    return v;
  }();
  return all;
}

const Kernels& active_kernels() {
  static const Kernels& chosen = []() -> const Kernels& {
    const char* env = std::getenv("BIORD_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") return scalar_kernels();
    return *available_kernels().back();
  }();
  return chosen;
}

}  // namespace biord::simd
