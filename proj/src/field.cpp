#include "wsh/field.hpp"

#include <cassert>
#include <charconv>

#include "wsh/error.hpp"

namespace wsh {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
        throw Error(ErrorCode::InvalidField, "gf:" + std::to_string(p) + " is not a prime field below 2^31");
    return {Kind::PrimeField, static_cast<std::uint32_t>(p)};
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "rational" || text == "rationals" || text == "Q") return rationals();
    if (text.starts_with("gf:")) {
        auto digits = text.substr(3);
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) return prime(p);
    }
    throw Error(ErrorCode::InvalidField, "unknown field '" + std::string(text) + "' (expected rational or gf:<p>)");
}

std::string FieldSpec::to_string() const {
    return kind == Kind::Rationals ? "rational" : "gf:" + std::to_string(p);
}

std::string FieldSpec::ring_name() const {
    return kind == Kind::Rationals ? "Q[[pi]]" : "GF(" + std::to_string(p) + ")[[pi]]";
}

std::string FieldScalar::to_string() const {
    if (auto* q = std::get_if<mpq_class>(&value)) return q->get_str();
    return std::to_string(std::get<std::uint32_t>(value));
}

FieldScalar FieldScalar::parse(std::string_view text, const FieldSpec& field) {
    const std::string s(text);
    if (field.kind == FieldSpec::Kind::Rationals) {
        mpq_class q;
        if (s.empty() || q.set_str(s, 10) != 0 || sgn(q.get_den()) == 0)
            throw Error(ErrorCode::ParseError, "bad rational '" + s + "'");
        q.canonicalize();
        return {q};
    }
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty() || v >= field.p)
        throw Error(ErrorCode::ParseError, "bad residue '" + s + "' for " + field.to_string());
    return {static_cast<std::uint32_t>(v)};
}

Rationals::value_type Rationals::inv(const value_type& a) const {
    assert(!is_zero(a));
    return value_type(1) / a;
}

void Rationals::mul_add(std::span<value_type> dst, std::span<const value_type> src, const value_type& c) const {
    const std::size_t n = std::min(dst.size(), src.size());
    mpq_class t;
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(src[i]) == 0) continue;
        t = c * src[i];
        dst[i] += t;
    }
}

void Rationals::scale(std::span<value_type> dst, const value_type& c) const {
    for (auto& x : dst)
        if (sgn(x) != 0) x *= c;
}

Rationals::value_type Rationals::from_scalar(const FieldScalar& s) const {
    if (auto* q = std::get_if<mpq_class>(&s.value)) return *q;
    return value_type(static_cast<unsigned long>(std::get<std::uint32_t>(s.value)));
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) { assert(is_prime(p) && p < (1u << 31)); }

PrimeField::value_type PrimeField::inv(value_type a) const {
    assert(a != 0);
    // Fermat: a^(p-2)
    std::uint64_t result = 1;
    std::uint64_t base = a;
    std::uint32_t e = p_ - 2;
    while (e) {
        if (e & 1) result = (result * base) % p_;
        base = (base * base) % p_;
        e >>= 1;
    }
    return static_cast<value_type>(result);
}

PrimeField::value_type PrimeField::from_scalar(const FieldScalar& s) const {
    if (auto* r = std::get_if<std::uint32_t>(&s.value)) return *r % p_;
    const mpq_class& q = std::get<mpq_class>(s.value);
    mpz_class num = q.get_num() % p_;
    mpz_class den = q.get_den() % p_;
    if (num < 0) num += p_;
    assert(den != 0);
    return mul(static_cast<value_type>(num.get_ui()), inv(static_cast<value_type>(den.get_ui())));
}

}  // namespace wsh
