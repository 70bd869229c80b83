#pragma once

// Exact linear algebra over a residue field: dense matrices with Gaussian
// elimination, and an incremental sparse echelon basis used to decide
// membership in a column span.

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wsh/field.hpp"

namespace wsh {

template <Field F>
using Vector = std::vector<typename F::value_type>;

/// Dense row-major matrix over F.
template <Field F>
class Matrix {
public:
    using value_type = typename F::value_type;

    Matrix() = default;
    Matrix(F field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

    static Matrix from_ints(F field, std::initializer_list<std::initializer_list<long>> rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r ? rows.begin()->size() : 0;
        Matrix m(field, r, c);
        std::size_t i = 0;
        for (const auto& row : rows) {
            assert(row.size() == c);
            std::size_t j = 0;
            for (long v : row) m(i, j++) = field.from_int(v);
            ++i;
        }
        return m;
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    static Matrix from_columns(F field, std::size_t rows, std::span<const Vector<F>> columns) {
        Matrix m(field, rows, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            assert(columns[j].size() == rows);
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
        }
        return m;
    }

    const F& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<value_type> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const value_type> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    Vector<F> column(std::size_t j) const {
        Vector<F> out;
        out.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
        return out;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [&](const value_type& v) { return field_.is_zero(v); });
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        assert(a.cols_ == b.rows_);
        Matrix out(a.field_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                if (!a.field_.is_zero(a(i, k))) a.field_.mul_add(out.row(i), b.row(k), a(i, k));
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    F field_{};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<value_type> data_;
};

/// Elementary row operation, replayable with apply_row_ops().
template <Field F>
struct RowOp {
    enum class Kind { Swap, Scale, AddMultiple };
    Kind kind;
    std::size_t target;
    std::size_t source;  // Swap partner or AddMultiple source; unused for Scale
    typename F::value_type factor;  // row[target] *= factor, or row[target] += factor * row[source]
};

template <Field F>
struct RowReduction {
    Matrix<F> reduced;
    std::vector<RowOp<F>> ops;
    std::vector<std::size_t> pivot_columns;
};

namespace detail {

// First row in [from, rows) with a nonzero entry in column j, preferring
// entries equal to +-1.
template <Field F>
std::optional<std::size_t> choose_pivot_row(const Matrix<F>& m, std::size_t j, std::size_t from) {
    const F& f = m.field();
    std::optional<std::size_t> first;
    for (std::size_t i = from; i < m.rows(); ++i) {
        if (f.is_zero(m(i, j))) continue;
        if (f.is_unit_sign(m(i, j))) return i;
        if (!first) first = i;
    }
    return first;
}

}  // namespace detail

template <Field F>
void apply_row_ops(std::span<const RowOp<F>> ops, Matrix<F>& m) {
    const F& f = m.field();
    for (const auto& op : ops) {
        switch (op.kind) {
        case RowOp<F>::Kind::Swap: m.swap_rows(op.target, op.source); break;
        case RowOp<F>::Kind::Scale: f.scale(m.row(op.target), op.factor); break;
        case RowOp<F>::Kind::AddMultiple: {
            Vector<F> src(m.row(op.source).begin(), m.row(op.source).end());
            f.mul_add(m.row(op.target), src, op.factor);
            break;
        }
        }
    }
}

/// Reduced row-echelon form with every operation recorded.
template <Field F>
RowReduction<F> row_reduce_with_ops(Matrix<F> m) {
    const F f = m.field();
    RowReduction<F> out;
    std::size_t r = 0;
    for (std::size_t j = 0; j < m.cols() && r < m.rows(); ++j) {
        auto pivot = detail::choose_pivot_row(m, j, r);
        if (!pivot) continue;
        if (*pivot != r) {
            m.swap_rows(*pivot, r);
            out.ops.push_back({RowOp<F>::Kind::Swap, r, *pivot, f.one()});
        }
        if (m(r, j) != f.one()) {
            auto s = f.inv(m(r, j));
            f.scale(m.row(r), s);
            out.ops.push_back({RowOp<F>::Kind::Scale, r, r, s});
        }
        const Vector<F> pivot_row(m.row(r).begin(), m.row(r).end());
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || f.is_zero(m(i, j))) continue;
            auto c = f.neg(m(i, j));
            f.mul_add(m.row(i), pivot_row, c);
            out.ops.push_back({RowOp<F>::Kind::AddMultiple, i, r, c});
        }
        out.pivot_columns.push_back(j);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

/// Rank by forward elimination.
template <Field F>
std::size_t rank(Matrix<F> m) {
    const F f = m.field();
    std::size_t r = 0;
    for (std::size_t j = 0; j < m.cols() && r < m.rows(); ++j) {
        auto pivot = detail::choose_pivot_row(m, j, r);
        if (!pivot) continue;
        m.swap_rows(*pivot, r);
        const auto inv = f.inv(m(r, j));
        const Vector<F> pivot_row(m.row(r).begin(), m.row(r).end());
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (f.is_zero(m(i, j))) continue;
            f.mul_add(m.row(i), pivot_row, f.neg(f.mul(m(i, j), inv)));
        }
        ++r;
    }
    return r;
}

/// Columns form a basis of ker M; cols(M) - rank(M) of them.
template <Field F>
Matrix<F> kernel_basis(const Matrix<F>& m) {
    const F& f = m.field();
    auto rr = row_reduce_with_ops(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : rr.pivot_columns) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);

    Matrix<F> basis(f, m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        basis(free_cols[k], k) = f.one();
        for (std::size_t r = 0; r < rr.pivot_columns.size(); ++r)
            basis(rr.pivot_columns[r], k) = f.neg(rr.reduced(r, free_cols[k]));
    }
    return basis;
}

// -- sparse -----------------------------------------------------------------

template <Field F>
struct SparseEntry {
    std::size_t index;
    typename F::value_type value;

    friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Sorted by index, no stored zeros.
template <Field F>
using SparseVector = std::vector<SparseEntry<F>>;

/// a + c * b
template <Field F>
SparseVector<F> sparse_axpy(const F& f, const SparseVector<F>& a, const typename F::value_type& c,
                            const SparseVector<F>& b) {
    SparseVector<F> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].index < b[j].index)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].index < a[i].index) {
            auto v = f.mul(c, b[j].value);
            if (!f.is_zero(v)) out.push_back({b[j].index, std::move(v)});
            ++j;
        } else {
            auto v = f.add(a[i].value, f.mul(c, b[j].value));
            if (!f.is_zero(v)) out.push_back({a[i].index, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

/**
 * Incrementally built echelon basis of a span of sparse vectors.
 *
 * Each accepted vector is reduced against the basis so that stored vectors
 * have distinct leading indices; alongside it we keep its expression in
 * terms of the caller's generator ids. A vector that reduces to zero is
 * reported as a combination of the generators instead of being stored.
 */
template <Field F>
class EchelonSpan {
public:
    explicit EchelonSpan(F field) : field_(std::move(field)) {}

    /// Returns nullopt and stores `v` under `id` when it is independent of
    /// the basis; otherwise returns coefficients c with v = sum_g c[g] * gen_g.
    std::optional<SparseVector<F>> insert_or_express(SparseVector<F> v, std::size_t id) {
        auto combo = reduce(v);
        if (v.empty()) return combo;
        // stored = v_original - sum(combo), so its generator expression is e_id - combo
        SparseVector<F> expr;
        expr.reserve(combo.size() + 1);
        bool placed = false;
        for (auto& e : combo) {
            if (!placed && id < e.index) {
                expr.push_back({id, field_.one()});
                placed = true;
            }
            expr.push_back({e.index, field_.neg(e.value)});
        }
        if (!placed) expr.push_back({id, field_.one()});
        leading_.emplace(v.front().index, rows_.size());
        rows_.push_back({std::move(v), std::move(expr)});
        return std::nullopt;
    }

    /// Coefficients over generator ids if `v` lies in the span.
    std::optional<SparseVector<F>> express(SparseVector<F> v) const {
        auto combo = reduce(v);
        if (!v.empty()) return std::nullopt;
        return combo;
    }

    std::size_t rank() const noexcept { return rows_.size(); }

private:
    struct Row {
        SparseVector<F> vector;
        SparseVector<F> expression;
    };

    // Leaves the residue in v; returns the generator combination removed.
    SparseVector<F> reduce(SparseVector<F>& v) const {
        SparseVector<F> combo;
        while (!v.empty()) {
            auto it = leading_.find(v.front().index);
            if (it == leading_.end()) break;
            const Row& row = rows_[it->second];
            auto c = field_.mul(v.front().value, field_.inv(row.vector.front().value));
            v = sparse_axpy(field_, v, field_.neg(c), row.vector);
            combo = sparse_axpy(field_, combo, c, row.expression);
        }
        return combo;
    }

    F field_;
    std::vector<Row> rows_;
    std::unordered_map<std::size_t, std::size_t> leading_;
};

/// Exact coefficients c with columns * c = target, or nullopt when target is
/// outside the column span. Dependent columns receive coefficient zero.
template <Field F>
std::optional<Vector<F>> solve_in_span(const Matrix<F>& columns, const Vector<F>& target) {
    const F& f = columns.field();
    assert(target.size() == columns.rows());
    auto to_sparse = [&](auto&& dense) {
        SparseVector<F> s;
        for (std::size_t i = 0; i < dense.size(); ++i)
            if (!f.is_zero(dense[i])) s.push_back({i, dense[i]});
        return s;
    };
    EchelonSpan<F> span(f);
    for (std::size_t j = 0; j < columns.cols(); ++j) span.insert_or_express(to_sparse(columns.column(j)), j);
    auto combo = span.express(to_sparse(target));
    if (!combo) return std::nullopt;
    Vector<F> out(columns.cols(), f.zero());
    for (auto& e : *combo) out[e.index] = e.value;
    return out;
}

}  // namespace wsh
