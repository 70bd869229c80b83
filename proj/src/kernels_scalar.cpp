#include <algorithm>
#include <atomic>

#include "wsh/kernels.hpp"

namespace wsh::kernels {

std::string_view to_string(Isa isa) {
    switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    }
    return "unknown";
}

namespace scalar {

void mul_add_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c, std::uint32_t p) {
    const std::size_t n = std::min(dst.size(), src.size());
    const std::uint64_t cc = c;
    for (std::size_t i = 0; i < n; ++i)
        dst[i] = static_cast<std::uint32_t>((dst[i] + cc * src[i]) % p);
}

void scale_mod(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p) {
    const std::uint64_t cc = c;
    for (auto& x : dst) x = static_cast<std::uint32_t>((cc * x) % p);
}

}  // namespace scalar

namespace {

std::atomic<int> override_isa{-1};

}  // namespace

Isa detected_isa() {
    static const Isa isa = avx2::available() ? Isa::Avx2 : Isa::Scalar;
    return isa;
}

Isa active_isa() {
    const int forced = override_isa.load(std::memory_order_relaxed);
    if (forced < 0) return detected_isa();
    auto isa = static_cast<Isa>(forced);
    if (isa == Isa::Avx2 && !avx2::available()) return Isa::Scalar;
    return isa;
}

void set_isa_override(std::optional<Isa> isa) {
    override_isa.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

void mul_add_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c, std::uint32_t p) {
    if (c == 0) return;
    if (active_isa() == Isa::Avx2) return avx2::mul_add_mod(dst, src, c, p);
    scalar::mul_add_mod(dst, src, c, p);
}

void scale_mod(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p) {
    if (c == 1) return;
    if (active_isa() == Isa::Avx2) return avx2::scale_mod(dst, c, p);
    scalar::scale_mod(dst, c, p);
}

}  // namespace wsh::kernels
