#include <catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "wsh/kernels.hpp"

using namespace wsh;

namespace {

std::vector<std::uint32_t> residues(std::mt19937_64& rng, std::size_t n, std::uint32_t p) {
    std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
    std::vector<std::uint32_t> v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

std::uint32_t reference_mul_add(std::uint32_t d, std::uint32_t s, std::uint32_t c, std::uint32_t p) {
    return static_cast<std::uint32_t>((std::uint64_t{d} + std::uint64_t{c} * s % p) % p);
}

const std::uint32_t kPrimes[] = {2, 3, 5, 7, 65521, 1000000007, 2147483629, 2147483647};

}  // namespace

TEST_CASE("scalar kernels match 64-bit reference", "[kernels]") {
    std::mt19937_64 rng(1);
    for (std::uint32_t p : kPrimes) {
        auto dst = residues(rng, 257, p);
        const auto src = residues(rng, 257, p);
        const std::uint32_t c = residues(rng, 1, p)[0];
        auto expect = dst;
        for (std::size_t i = 0; i < dst.size(); ++i) expect[i] = reference_mul_add(dst[i], src[i], c, p);
        kernels::scalar::mul_add_mod(dst, src, c, p);
        CHECK(dst == expect);

        for (std::size_t i = 0; i < dst.size(); ++i)
            expect[i] = static_cast<std::uint32_t>(std::uint64_t{c} * dst[i] % p);
        kernels::scalar::scale_mod(dst, c, p);
        CHECK(dst == expect);
    }
}

TEST_CASE("AVX2 kernels equal scalar kernels", "[kernels][simd]") {
    if (!kernels::avx2::available()) SKIP("AVX2 not available on this CPU");
    std::mt19937_64 rng(2);
    for (std::uint32_t p : kPrimes) {
        for (std::size_t len = 0; len <= 67; ++len) {
            for (std::uint32_t c : {0u, 1u, p - 1, residues(rng, 1, p)[0]}) {
                auto a = residues(rng, len, p);
                auto b = a;
                const auto src = residues(rng, len, p);
                kernels::scalar::mul_add_mod(a, src, c, p);
                kernels::avx2::mul_add_mod(b, src, c, p);
                INFO("p=" << p << " len=" << len << " c=" << c);
                REQUIRE(a == b);
                kernels::scalar::scale_mod(a, c, p);
                kernels::avx2::scale_mod(b, c, p);
                REQUIRE(a == b);
            }
        }
    }
}

TEST_CASE("AVX2 kernels on extreme residues", "[kernels][simd]") {
    if (!kernels::avx2::available()) SKIP("AVX2 not available on this CPU");
    const std::uint32_t p = 2147483647;
    std::vector<std::uint32_t> a(40, p - 1), b(40, p - 1);
    const std::vector<std::uint32_t> src(40, p - 1);
    kernels::scalar::mul_add_mod(a, src, p - 1, p);
    kernels::avx2::mul_add_mod(b, src, p - 1, p);
    CHECK(a == b);
    CHECK(a[0] == 0);  // (-1) + (-1)(-1) = 0
}

TEST_CASE("dispatch honours the override", "[kernels]") {
    const auto detected = kernels::detected_isa();
    kernels::set_isa_override(kernels::Isa::Scalar);
    CHECK(kernels::active_isa() == kernels::Isa::Scalar);

    std::vector<std::uint32_t> d{1, 2, 3}, s{4, 5, 6};
    kernels::mul_add_mod(d, s, 2, 7);
    CHECK(d == std::vector<std::uint32_t>{2, 5, 1});

    kernels::set_isa_override(std::nullopt);
    CHECK(kernels::active_isa() == detected);
    CHECK(kernels::to_string(kernels::Isa::Avx2) == "avx2");
}
