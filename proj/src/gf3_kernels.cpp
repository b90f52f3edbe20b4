#include "b3/gf3_kernels.hpp"

#include <cstdlib>
#include <string_view>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define B3_HAVE_X86 1
#else
#define B3_HAVE_X86 0
#endif

namespace b3::gf3 {

namespace {

// Sums of two canonical bytes stay below 6, so one conditional subtract of 3
// renormalizes; same for differences shifted up by 3.

void scalar_acc_add(std::uint8_t* dst, const std::uint8_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint8_t t = static_cast<std::uint8_t>(dst[i] + src[i]);
    dst[i] = t >= 3 ? static_cast<std::uint8_t>(t - 3) : t;
  }
}

void scalar_acc_sub(std::uint8_t* dst, const std::uint8_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    int t = dst[i] - src[i];
    dst[i] = static_cast<std::uint8_t>(t < 0 ? t + 3 : t);
  }
}

void scalar_negate(std::uint8_t* v, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = v[i] == 0 ? 0 : static_cast<std::uint8_t>(3 - v[i]);
  }
}

#if B3_HAVE_X86

__attribute__((target("avx2"))) void avx2_acc_add(std::uint8_t* dst, const std::uint8_t* src,
                                                  std::size_t n) {
  const __m256i three = _mm256_set1_epi8(3);
  const __m256i two = _mm256_set1_epi8(2);
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i t = _mm256_add_epi8(d, s);
    __m256i over = _mm256_cmpgt_epi8(t, two);
    t = _mm256_sub_epi8(t, _mm256_and_si256(over, three));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), t);
  }
  scalar_acc_add(dst + i, src + i, n - i);
}

__attribute__((target("avx2"))) void avx2_acc_sub(std::uint8_t* dst, const std::uint8_t* src,
                                                  std::size_t n) {
  const __m256i three = _mm256_set1_epi8(3);
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i t = _mm256_sub_epi8(d, s);
    __m256i under = _mm256_cmpgt_epi8(zero, t);
    t = _mm256_add_epi8(t, _mm256_and_si256(under, three));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), t);
  }
  scalar_acc_sub(dst + i, src + i, n - i);
}

__attribute__((target("avx2"))) void avx2_negate(std::uint8_t* v, std::size_t n) {
  const __m256i three = _mm256_set1_epi8(3);
  const __m256i two = _mm256_set1_epi8(2);
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    __m256i t = _mm256_sub_epi8(three, d);  // 0..2 -> 3..1
    __m256i over = _mm256_cmpgt_epi8(t, two);
    t = _mm256_sub_epi8(t, _mm256_and_si256(over, three));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(v + i), t);
  }
  scalar_negate(v + i, n - i);
}

#endif  // B3_HAVE_X86

const KernelTable kScalar{"scalar", scalar_acc_add, scalar_acc_sub, scalar_negate};

#if B3_HAVE_X86
const KernelTable kAvx2{"avx2", avx2_acc_add, avx2_acc_sub, avx2_negate};
#endif

const KernelTable& pick_active() {
  const char* env = std::getenv("B3_KERNEL");
  std::string_view want = env ? std::string_view(env) : std::string_view();
  if (want == "scalar") return kScalar;
  if (const KernelTable* simd = avx2_kernels()) return *simd;
  return kScalar;
}

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

const KernelTable* avx2_kernels() {
#if B3_HAVE_X86
  if (__builtin_cpu_supports("avx2")) return &kAvx2;
#endif
  return nullptr;
}

const KernelTable& active_kernels() {
  static const KernelTable& table = pick_active();
  return table;
}

}  // namespace b3::gf3
