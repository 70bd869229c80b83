// Built with -mavx2; only entered after avx2::available() said yes.

#include "wsh/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define WSH_HAVE_AVX2 1
#endif

namespace wsh::kernels::avx2 {

#ifdef WSH_HAVE_AVX2

bool available() {
    static const bool ok = __builtin_cpu_supports("avx2");
    return ok;
}

namespace {

// Shoup multiplication by a fixed c: with pre = floor(c * 2^32 / p) and
// q = floor(x * pre / 2^32), x * c - q * p lies in [0, 2p). The subtraction
// is done in wrapping 32-bit lanes, which is exact because 2p < 2^32.
struct ShoupConstant {
    __m256i c;
    __m256i pre;
    __m256i p;

    ShoupConstant(std::uint32_t cv, std::uint32_t pv)
        : c(_mm256_set1_epi32(static_cast<int>(cv))),
          pre(_mm256_set1_epi32(static_cast<int>(static_cast<std::uint32_t>((std::uint64_t{cv} << 32) / pv)))),
          p(_mm256_set1_epi32(static_cast<int>(pv))) {}

    __m256i mul(__m256i x) const {
        const __m256i even = _mm256_mul_epu32(x, pre);
        const __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), pre);
        const __m256i q = _mm256_blend_epi32(_mm256_srli_epi64(even, 32), odd, 0b10101010);
        const __m256i r = _mm256_sub_epi32(_mm256_mullo_epi32(x, c), _mm256_mullo_epi32(q, p));
        return reduce_once(r);
    }

    // [0, 2p) -> [0, p): if r < p then r - p wraps above r.
    __m256i reduce_once(__m256i r) const { return _mm256_min_epu32(r, _mm256_sub_epi32(r, p)); }
};

}  // namespace

void mul_add_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c, std::uint32_t p) {
    const std::size_t n = dst.size() < src.size() ? dst.size() : src.size();
    const ShoupConstant k(c, p);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i));
        const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + i));
        const __m256i s = k.reduce_once(_mm256_add_epi32(d, k.mul(x)));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i), s);
    }
    scalar::mul_add_mod(dst.subspan(i, n - i), src.subspan(i, n - i), c, p);
}

void scale_mod(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p) {
    const ShoupConstant k(c, p);
    std::size_t i = 0;
    for (; i + 8 <= dst.size(); i += 8) {
        auto* ptr = reinterpret_cast<__m256i*>(dst.data() + i);
        _mm256_storeu_si256(ptr, k.mul(_mm256_loadu_si256(ptr)));
    }
    scalar::scale_mod(dst.subspan(i), c, p);
}

#else

bool available() { return false; }

void mul_add_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c, std::uint32_t p) {
    scalar::mul_add_mod(dst, src, c, p);
}

void scale_mod(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p) { scalar::scale_mod(dst, c, p); }

#endif

}  // namespace wsh::kernels::avx2
