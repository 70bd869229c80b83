#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "wsh/kernels.hpp"

namespace wsh {

/// Residue field of the coefficient ring F[[pi]]: the rationals or GF(p).
struct FieldSpec {
    enum class Kind { Rationals, PrimeField };

    Kind kind = Kind::Rationals;
    std::uint32_t p = 0;

    static FieldSpec rationals() { return {}; }
    /// Throws InvalidField unless p is a prime below 2^31.
    static FieldSpec prime(std::uint64_t p);
    /// "rational" or "gf:<p>".
    static FieldSpec parse(std::string_view text);

    /// Inverse of parse().
    std::string to_string() const;
    /// Human-readable coefficient ring, e.g. "Q[[pi]]" or "GF(3)[[pi]]".
    std::string ring_name() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

/// Field element detached from its field, used where results leave the
/// templated core (reports, generators). GF(p) elements are stored as their
/// representative in [0, p).
struct FieldScalar {
    std::variant<mpq_class, std::uint32_t> value;

    std::string to_string() const;
    /// Parses the to_string() form for the given field.
    static FieldScalar parse(std::string_view text, const FieldSpec& field);

    friend bool operator==(const FieldScalar& a, const FieldScalar& b) { return a.value == b.value; }
};

/**
 * Field policies. The linear algebra is written against this interface:
 *
 *   value_type, zero(), one(), from_int(), is_zero(), is_unit_sign()
 *   add(), sub(), mul(), neg(), inv()
 *   mul_add(dst, src, c)   dst += c * src over spans
 *   scale(dst, c)          dst *= c
 *
 * inv() of zero is a logic error and asserts.
 */
class Rationals {
public:
    using value_type = mpq_class;

    FieldSpec spec() const { return FieldSpec::rationals(); }

    value_type zero() const { return value_type(0); }
    value_type one() const { return value_type(1); }
    value_type from_int(long v) const { return value_type(v); }

    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    /// +1 or -1, the preferred pivots.
    bool is_unit_sign(const value_type& a) const {
        return a.get_den() == 1 && (a.get_num() == 1 || a.get_num() == -1);
    }

    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type inv(const value_type& a) const;

    void mul_add(std::span<value_type> dst, std::span<const value_type> src, const value_type& c) const;
    void scale(std::span<value_type> dst, const value_type& c) const;

    std::string to_string(const value_type& a) const { return a.get_str(); }
    FieldScalar to_scalar(const value_type& a) const { return {a}; }
    value_type from_scalar(const FieldScalar& s) const;
};

class PrimeField {
public:
    using value_type = std::uint32_t;

    PrimeField() = default;
    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const { return p_; }
    FieldSpec spec() const { return {FieldSpec::Kind::PrimeField, p_}; }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long v) const {
        const long r = v % static_cast<long>(p_);
        return static_cast<value_type>(r < 0 ? r + static_cast<long>(p_) : r);
    }

    bool is_zero(value_type a) const { return a == 0; }
    bool is_unit_sign(value_type a) const { return a == 1 || a == p_ - 1; }

    value_type add(value_type a, value_type b) const {
        const std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (p_ - b); }
    value_type mul(value_type a, value_type b) const {
        return static_cast<value_type>((std::uint64_t{a} * b) % p_);
    }
    value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
    value_type inv(value_type a) const;

    void mul_add(std::span<value_type> dst, std::span<const value_type> src, value_type c) const {
        kernels::mul_add_mod(dst, src, c, p_);
    }
    void scale(std::span<value_type> dst, value_type c) const { kernels::scale_mod(dst, c, p_); }

    std::string to_string(value_type a) const { return std::to_string(a); }
    FieldScalar to_scalar(value_type a) const { return {a}; }
    value_type from_scalar(const FieldScalar& s) const;

private:
    std::uint32_t p_ = 2;
};

template <class F>
concept Field = requires(const F& f, const typename F::value_type& a) {
    { f.zero() } -> std::same_as<typename F::value_type>;
    { f.is_zero(a) } -> std::same_as<bool>;
    { f.inv(a) } -> std::same_as<typename F::value_type>;
    { f.spec() } -> std::same_as<FieldSpec>;
};

/// Calls `fn` with the field policy matching `spec`.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
    if (spec.kind == FieldSpec::Kind::PrimeField) return fn(PrimeField(spec.p));
    return fn(Rationals{});
}

}  // namespace wsh
