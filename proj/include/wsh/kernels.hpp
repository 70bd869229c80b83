#pragma once

// Dense modular kernels for GF(p) rows and truncated series.
//
// Every kernel has a portable scalar reference and an AVX2 variant; the
// variant is picked once at runtime from CPUID. All kernels require
// 2 <= p < 2^31 and inputs already reduced into [0, p).

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace wsh::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

/// Best instruction set supported by this CPU and compiled in.
Isa detected_isa();
/// Instruction set the dispatching entry points currently use.
Isa active_isa();
/// Forces an instruction set (tests, benchmarks); nullopt restores detection.
/// Requesting an unsupported ISA falls back to Scalar.
void set_isa_override(std::optional<Isa> isa);

/// dst[i] = (dst[i] + c * src[i]) mod p
void mul_add_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c, std::uint32_t p);
/// dst[i] = (c * dst[i]) mod p
void scale_mod(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p);

namespace scalar {
void mul_add_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c, std::uint32_t p);
void scale_mod(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p);
}  // namespace scalar

namespace avx2 {
bool available();
void mul_add_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c, std::uint32_t p);
void scale_mod(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p);
}  // namespace avx2

}  // namespace wsh::kernels
