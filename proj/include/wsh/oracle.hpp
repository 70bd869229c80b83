#pragma once

// Reference computation of weighted homology by Smith normalization over the
// truncated ring F[[pi]]/(pi^N). Slow by construction; used to verify the
// residue-field engine, never as the default path.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "wsh/complex.hpp"
#include "wsh/field.hpp"
#include "wsh/homology.hpp"

namespace wsh {

/// Element of F[[pi]]/(pi^N). Coefficient i multiplies pi^i.
template <Field F>
class TruncatedSeries {
public:
    using value_type = typename F::value_type;

    TruncatedSeries() = default;
    TruncatedSeries(F field, std::size_t precision);

    /// c * pi^exponent; zero when exponent >= precision.
    static TruncatedSeries monomial(F field, std::size_t precision, value_type c, std::size_t exponent);

    const F& field() const noexcept { return field_; }
    std::size_t precision() const noexcept { return coeffs_.size(); }
    const value_type& operator[](std::size_t i) const { return coeffs_[i]; }
    void set(std::size_t i, value_type v);

    bool is_zero() const noexcept { return length_ == 0; }
    /// Index of the first nonzero coefficient; nullopt for zero.
    std::optional<std::size_t> valuation() const;

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator-() const;
    /// this += c * o
    void add_product(const TruncatedSeries& c, const TruncatedSeries& o);

    /// Division by pi^v for v <= valuation(); the vacated top coefficients are zero.
    TruncatedSeries shifted_down(std::size_t v) const;
    /// Inverse mod pi^N of a unit (nonzero constant term).
    TruncatedSeries unit_inverse() const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    void refresh_length();

    F field_{};
    std::vector<value_type> coeffs_;
    std::size_t length_ = 0;  // one past the last nonzero coefficient
};

/// Dense matrix of series sharing one precision.
template <Field F>
class SeriesMatrix {
public:
    SeriesMatrix() = default;
    SeriesMatrix(F field, std::size_t rows, std::size_t cols, std::size_t precision);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t precision() const noexcept { return precision_; }
    const F& field() const noexcept { return field_; }

    TruncatedSeries<F>& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const TruncatedSeries<F>& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    SeriesMatrix operator*(const SeriesMatrix& o) const;

private:
    F field_{};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t precision_ = 0;
    std::vector<TruncatedSeries<F>> data_;
};

/// 1 + sum of all weights: every invariant-factor valuation (at most the
/// largest weight) and every determinantal-divisor valuation (at most the
/// weight sum) stays below it. Conservative, not tight.
std::size_t choose_precision(const WeightedComplex& complex);

/// Weighted boundary d^v_n as a series matrix. n = 0 yields a 0 x count(0)
/// matrix and n = dim + 1 a count(dim) x 0 matrix. Throws PrecisionExhausted
/// if some exponent cannot be represented below `precision`.
template <Field F>
SeriesMatrix<F> weighted_boundary(const WeightedComplex& complex, int n, const F& field, std::size_t precision);

/// Valuations of the nonzero invariant factors, ascending. Minimal-valuation
/// pivots (ties: smallest row, then column); pivot units inverted mod pi^N.
template <Field F>
std::vector<Weight> snf_valuations(SeriesMatrix<F> m);

/// Whether x lies in the column span of `a` over F[[pi]]/(pi^N).
template <Field F>
bool in_column_span(SeriesMatrix<F> a, std::vector<TruncatedSeries<F>> x);

/// a * x
template <Field F>
std::vector<TruncatedSeries<F>> apply(const SeriesMatrix<F>& a, std::span<const TruncatedSeries<F>> x);

/// Dense coefficient vector of a weighted chain on `count` simplices.
template <Field F>
std::vector<TruncatedSeries<F>> to_series_vector(const WeightedChain<F>& chain, std::size_t count, const F& field,
                                                 std::size_t precision);

/// Weighted homology by restricting d^v_{n+1} to a kernel basis of d^v_n
/// obtained from Smith normalization, then reading invariant factors.
/// `precision` defaults to choose_precision(). The pairing is left empty.
template <Field F>
HomologyModule homology_via_snf(const WeightedComplex& complex, int n, const F& field,
                                std::optional<std::size_t> precision = std::nullopt);

HomologyModule homology_via_snf(const WeightedComplex& complex, int n, const FieldSpec& field,
                                std::optional<std::size_t> precision = std::nullopt);

#define WSH_DECLARE_ORACLE(F)                                                                                         \
    extern template class TruncatedSeries<F>;                                                                          \
    extern template class SeriesMatrix<F>;                                                                             \
    extern template SeriesMatrix<F> weighted_boundary(const WeightedComplex&, int, const F&, std::size_t);             \
    extern template std::vector<Weight> snf_valuations(SeriesMatrix<F>);                                               \
    extern template bool in_column_span(SeriesMatrix<F>, std::vector<TruncatedSeries<F>>);                            \
    extern template std::vector<TruncatedSeries<F>> apply(const SeriesMatrix<F>&, std::span<const TruncatedSeries<F>>); \
    extern template std::vector<TruncatedSeries<F>> to_series_vector(const WeightedChain<F>&, std::size_t, const F&,   \
                                                                     std::size_t);                                     \
    extern template HomologyModule homology_via_snf(const WeightedComplex&, int, const F&, std::optional<std::size_t>);

WSH_DECLARE_ORACLE(Rationals)
WSH_DECLARE_ORACLE(PrimeField)

#undef WSH_DECLARE_ORACLE

}  // namespace wsh
