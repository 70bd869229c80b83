#include "wsh/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "wsh/error.hpp"

namespace wsh {

// -- TruncatedSeries ----------------------------------------------------------

template <Field F>
TruncatedSeries<F>::TruncatedSeries(F field, std::size_t precision)
    : field_(std::move(field)), coeffs_(precision, field_.zero()) {}

template <Field F>
TruncatedSeries<F> TruncatedSeries<F>::monomial(F field, std::size_t precision, value_type c, std::size_t exponent) {
    TruncatedSeries s(std::move(field), precision);
    if (exponent < precision) s.set(exponent, std::move(c));
    return s;
}

template <Field F>
void TruncatedSeries<F>::set(std::size_t i, value_type v) {
    coeffs_[i] = std::move(v);
    refresh_length();
}

template <Field F>
void TruncatedSeries<F>::refresh_length() {
    length_ = coeffs_.size();
    while (length_ > 0 && field_.is_zero(coeffs_[length_ - 1])) --length_;
}

template <Field F>
std::optional<std::size_t> TruncatedSeries<F>::valuation() const {
    for (std::size_t i = 0; i < length_; ++i)
        if (!field_.is_zero(coeffs_[i])) return i;
    return std::nullopt;
}

template <Field F>
TruncatedSeries<F> TruncatedSeries<F>::operator+(const TruncatedSeries& o) const {
    TruncatedSeries out = *this;
    const std::size_t n = std::max(length_, o.length_);
    for (std::size_t i = 0; i < n; ++i) out.coeffs_[i] = field_.add(coeffs_[i], o.coeffs_[i]);
    out.refresh_length();
    return out;
}

template <Field F>
TruncatedSeries<F> TruncatedSeries<F>::operator-(const TruncatedSeries& o) const {
    return *this + (-o);
}

template <Field F>
TruncatedSeries<F> TruncatedSeries<F>::operator-() const {
    TruncatedSeries out = *this;
    for (std::size_t i = 0; i < length_; ++i) out.coeffs_[i] = field_.neg(coeffs_[i]);
    return out;
}

template <Field F>
void TruncatedSeries<F>::add_product(const TruncatedSeries& c, const TruncatedSeries& o) {
    assert(c.precision() == precision() && o.precision() == precision());
    const std::size_t n = precision();
    for (std::size_t i = 0; i < c.length_ && i < n; ++i) {
        if (field_.is_zero(c.coeffs_[i])) continue;
        const std::size_t len = std::min(o.length_, n - i);
        if (len == 0) continue;
        field_.mul_add(std::span(coeffs_).subspan(i, len), std::span<const value_type>(o.coeffs_).first(len),
                       c.coeffs_[i]);
    }
    refresh_length();
}

template <Field F>
TruncatedSeries<F> TruncatedSeries<F>::operator*(const TruncatedSeries& o) const {
    TruncatedSeries out(field_, precision());
    out.add_product(*this, o);
    return out;
}

template <Field F>
TruncatedSeries<F> TruncatedSeries<F>::shifted_down(std::size_t v) const {
    assert(!valuation() || *valuation() >= v);
    TruncatedSeries out(field_, precision());
    for (std::size_t i = v; i < length_; ++i) out.coeffs_[i - v] = coeffs_[i];
    out.refresh_length();
    return out;
}

template <Field F>
TruncatedSeries<F> TruncatedSeries<F>::unit_inverse() const {
    assert(length_ > 0 && !field_.is_zero(coeffs_[0]));
    const std::size_t n = precision();
    TruncatedSeries out(field_, n);
    const value_type inv0 = field_.inv(coeffs_[0]);
    out.coeffs_[0] = inv0;
    // b_k = -inv0 * sum_{i=1..k} a_i b_{k-i}
    for (std::size_t k = 1; k < n; ++k) {
        value_type acc = field_.zero();
        for (std::size_t i = 1; i <= k && i < length_; ++i) {
            if (field_.is_zero(coeffs_[i])) continue;
            acc = field_.add(acc, field_.mul(coeffs_[i], out.coeffs_[k - i]));
        }
        out.coeffs_[k] = field_.neg(field_.mul(inv0, acc));
    }
    out.refresh_length();
    return out;
}

// -- SeriesMatrix -------------------------------------------------------------

template <Field F>
SeriesMatrix<F>::SeriesMatrix(F field, std::size_t rows, std::size_t cols, std::size_t precision)
    : field_(field), rows_(rows), cols_(cols), precision_(precision),
      data_(rows * cols, TruncatedSeries<F>(field, precision)) {}

template <Field F>
bool SeriesMatrix<F>::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const auto& s) { return s.is_zero(); });
}

template <Field F>
SeriesMatrix<F> SeriesMatrix<F>::operator*(const SeriesMatrix& o) const {
    assert(cols_ == o.rows_ && precision_ == o.precision_);
    SeriesMatrix out(field_, rows_, o.cols_, precision_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const auto& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (!o(k, j).is_zero()) out(i, j).add_product(a, o(k, j));
        }
    return out;
}

// -- free functions -----------------------------------------------------------

std::size_t choose_precision(const WeightedComplex& complex) {
    std::size_t total = 1;
    for (int n = 0; n <= complex.dim(); ++n)
        for (Weight w : complex.weights(n)) total += w;
    return total;
}

template <Field F>
SeriesMatrix<F> weighted_boundary(const WeightedComplex& complex, int n, const F& field, std::size_t precision) {
    if (precision == 0) throw Error(ErrorCode::PrecisionExhausted, "series precision must be at least 1");
    if (n < 0 || n > complex.dim() + 1)
        throw Error(ErrorCode::DimensionOutOfRange, "no boundary map in dimension " + std::to_string(n));
    SeriesMatrix<F> m(field, n == 0 ? 0 : complex.count(n - 1), complex.count(n), precision);
    if (n == 0 || n > complex.dim()) return m;
    const auto em = boundary_exponent_matrix(complex, n);
    for (std::size_t j = 0; j < em.cols; ++j)
        for (const auto& e : em.columns[j]) {
            if (e.exponent >= precision)
                throw Error(ErrorCode::PrecisionExhausted, "boundary exponent " + std::to_string(e.exponent) +
                                                               " not representable at precision " +
                                                               std::to_string(precision));
            m(e.row, j) = TruncatedSeries<F>::monomial(field, precision, field.from_int(e.sign), e.exponent);
        }
    return m;
}

namespace {

struct Pivot {
    std::size_t row;
    std::size_t col;
    std::size_t valuation;
};

template <Field F>
std::optional<Pivot> min_valuation_entry(const SeriesMatrix<F>& m, const std::vector<bool>& row_active,
                                         const std::vector<bool>& col_active) {
    std::optional<Pivot> best;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!row_active[i]) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!col_active[j]) continue;
            auto v = m(i, j).valuation();
            if (v && (!best || *v < best->valuation)) best = Pivot{i, j, *v};
        }
    }
    return best;
}

// Clears column p.col below and above the pivot with row operations on the
// active columns; `extra` receives the same row operations.
template <Field F>
void clear_column(SeriesMatrix<F>& m, const Pivot& p, const std::vector<bool>& row_active,
                  const std::vector<bool>& col_active, const TruncatedSeries<F>& unit_inv,
                  std::vector<TruncatedSeries<F>>* extra) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r == p.row || !row_active[r] || m(r, p.col).is_zero()) continue;
        const auto factor = -(m(r, p.col).shifted_down(p.valuation) * unit_inv);
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (col_active[c] && !m(p.row, c).is_zero()) m(r, c).add_product(factor, m(p.row, c));
        if (extra && !(*extra)[p.row].is_zero()) (*extra)[r].add_product(factor, (*extra)[p.row]);
    }
}

}  // namespace

template <Field F>
std::vector<Weight> snf_valuations(SeriesMatrix<F> m) {
    if (m.precision() == 0) throw Error(ErrorCode::PrecisionExhausted, "series precision must be at least 1");
    std::vector<bool> row_active(m.rows(), true), col_active(m.cols(), true);
    std::vector<Weight> out;
    while (auto p = min_valuation_entry(m, row_active, col_active)) {
        const auto unit_inv = m(p->row, p->col).shifted_down(p->valuation).unit_inverse();
        clear_column(m, *p, row_active, col_active, unit_inv, static_cast<std::vector<TruncatedSeries<F>>*>(nullptr));
        // The pivot column is now zero elsewhere, so clearing the pivot row
        // by column operations would not touch the remaining submatrix.
        row_active[p->row] = false;
        col_active[p->col] = false;
        out.push_back(static_cast<Weight>(p->valuation));
    }
    std::sort(out.begin(), out.end());
    return out;
}

template <Field F>
bool in_column_span(SeriesMatrix<F> a, std::vector<TruncatedSeries<F>> x) {
    assert(x.size() == a.rows());
    std::vector<bool> row_active(a.rows(), true), col_active(a.cols(), true);
    while (auto p = min_valuation_entry(a, row_active, col_active)) {
        const auto unit_inv = a(p->row, p->col).shifted_down(p->valuation).unit_inverse();
        clear_column(a, *p, row_active, col_active, unit_inv, &x);
        row_active[p->row] = false;
        col_active[p->col] = false;
        auto xv = x[p->row].valuation();
        if (xv && *xv < p->valuation) return false;
    }
    for (std::size_t r = 0; r < a.rows(); ++r)
        if (row_active[r] && !x[r].is_zero()) return false;
    return true;
}

template <Field F>
std::vector<TruncatedSeries<F>> apply(const SeriesMatrix<F>& a, std::span<const TruncatedSeries<F>> x) {
    assert(x.size() == a.cols());
    std::vector<TruncatedSeries<F>> out(a.rows(), TruncatedSeries<F>(a.field(), a.precision()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero() && !x[j].is_zero()) out[i].add_product(a(i, j), x[j]);
    return out;
}

template <Field F>
std::vector<TruncatedSeries<F>> to_series_vector(const WeightedChain<F>& chain, std::size_t count, const F& field,
                                                 std::size_t precision) {
    std::vector<TruncatedSeries<F>> out(count, TruncatedSeries<F>(field, precision));
    for (const auto& e : chain)
        for (const auto& t : e.polynomial)
            if (t.exponent < precision) out[e.simplex].set(t.exponent, t.coefficient);
    return out;
}

template <Field F>
HomologyModule homology_via_snf(const WeightedComplex& complex, int n, const F& field,
                                std::optional<std::size_t> precision) {
    if (n < 0 || n > complex.dim())
        throw Error(ErrorCode::DimensionOutOfRange,
                    "dimension " + std::to_string(n) + " outside [0, " + std::to_string(complex.dim()) + "]");
    const std::size_t N = precision.value_or(choose_precision(complex));
    auto a = weighted_boundary(complex, n, field, N);      // C_n -> C_{n-1}
    auto b = weighted_boundary(complex, n + 1, field, N);  // C_{n+1} -> C_n

    // Full Smith normalization of a. Column operations change coordinates on
    // C_n; b is kept expressed in the new coordinates (row ops by the inverse).
    std::vector<bool> row_active(a.rows(), true), col_active(a.cols(), true);
    while (auto p = min_valuation_entry(a, row_active, col_active)) {
        const auto unit_inv = a(p->row, p->col).shifted_down(p->valuation).unit_inverse();
        clear_column(a, *p, row_active, col_active, unit_inv, static_cast<std::vector<TruncatedSeries<F>>*>(nullptr));
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (c == p->col || !col_active[c] || a(p->row, c).is_zero()) continue;
            // col_c -= g * col_pivot  <=>  b: row_pivot += g * row_c
            const auto g = a(p->row, c).shifted_down(p->valuation) * unit_inv;
            a(p->row, c) = TruncatedSeries<F>(field, N);
            for (std::size_t k = 0; k < b.cols(); ++k)
                if (!b(c, k).is_zero()) b(p->col, k).add_product(g, b(c, k));
        }
        row_active[p->row] = false;
        col_active[p->col] = false;
    }

    // Remaining active columns span ker d^v_n; restrict b to those coordinates.
    std::vector<std::size_t> kernel;
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (col_active[c]) kernel.push_back(c);
    SeriesMatrix<F> restricted(field, kernel.size(), b.cols(), N);
    for (std::size_t i = 0; i < kernel.size(); ++i)
        for (std::size_t k = 0; k < b.cols(); ++k) restricted(i, k) = b(kernel[i], k);

    const auto vals = snf_valuations(std::move(restricted));
    HomologyModule h;
    h.n = n;
    h.field = field.spec();
    h.free_rank = kernel.size() - vals.size();
    for (Weight v : vals)
        if (v > 0) h.torsion.push_back(v);
    h.pairing.n = n;
    return h;
}

HomologyModule homology_via_snf(const WeightedComplex& complex, int n, const FieldSpec& field,
                                std::optional<std::size_t> precision) {
    return with_field(field, [&](const auto& f) { return homology_via_snf(complex, n, f, precision); });
}

#define WSH_INSTANTIATE_ORACLE(F)                                                                                     \
    template class TruncatedSeries<F>;                                                                                 \
    template class SeriesMatrix<F>;                                                                                    \
    template SeriesMatrix<F> weighted_boundary(const WeightedComplex&, int, const F&, std::size_t);                    \
    template std::vector<Weight> snf_valuations(SeriesMatrix<F>);                                                      \
    template bool in_column_span(SeriesMatrix<F>, std::vector<TruncatedSeries<F>>);                                   \
    template std::vector<TruncatedSeries<F>> apply(const SeriesMatrix<F>&, std::span<const TruncatedSeries<F>>);       \
    template std::vector<TruncatedSeries<F>> to_series_vector(const WeightedChain<F>&, std::size_t, const F&,          \
                                                              std::size_t);                                            \
    template HomologyModule homology_via_snf(const WeightedComplex&, int, const F&, std::optional<std::size_t>);

WSH_INSTANTIATE_ORACLE(Rationals)
WSH_INSTANTIATE_ORACLE(PrimeField)

}  // namespace wsh
