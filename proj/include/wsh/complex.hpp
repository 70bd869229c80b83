#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace wsh {

using VertexId = std::uint32_t;
/// Exponent of the uniformizer attached to a simplex, v(sigma) = pi^weight.
using Weight = std::uint32_t;

/**
 * An oriented simplex in canonical form: strictly increasing vertex ids.
 *
 * The orientation of every simplex is the one induced by this order, so the
 * i-th face (vertex i removed) enters the boundary with sign (-1)^i.
 */
class Simplex {
public:
    Simplex() = default;
    /// Sorts the ids; throws InvalidSimplex on an empty list or a repeated id.
    explicit Simplex(std::vector<VertexId> vertices);
    Simplex(std::initializer_list<VertexId> vertices) : Simplex(std::vector<VertexId>(vertices)) {}

    int dim() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
    std::span<const VertexId> vertices() const noexcept { return vertices_; }

    /// The face opposite the i-th vertex.
    Simplex face(std::size_t i) const;
    bool is_face_of(const Simplex& other) const;

    friend auto operator<=>(const Simplex&, const Simplex&) = default;
    friend bool operator==(const Simplex&, const Simplex&) = default;

private:
    struct Sorted {};
    Simplex(Sorted, std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {}

    std::vector<VertexId> vertices_;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept;
};

struct SignedFace {
    Simplex face;
    int sign;
};

/// Faces of `s` in canonical order with signs (-1)^i. Empty for vertices:
/// the degree-0 boundary is zero (unreduced homology).
std::vector<SignedFace> signed_faces(const Simplex& s);

using LabeledSimplex = std::vector<std::string>;

struct WeightedSimplex {
    LabeledSimplex vertices;
    Weight weight = 0;
};

/// Vertex label order: labels that are plain non-negative integers compare
/// numerically and precede all other labels, which compare as strings.
bool label_less(std::string_view a, std::string_view b);

/**
 * Face-closed simplicial complex with a monotone weight function
 * (weight(face) >= weight(coface)). Immutable once built.
 *
 * Vertex labels are interned to dense ids in `label_less` order, and the
 * n-simplices of each dimension are stored in ascending lexicographic order.
 * Indices into `simplices(n)` are the row/column indices of every boundary
 * matrix built from the complex.
 */
class WeightedComplex {
public:
    int dim() const noexcept { return static_cast<int>(per_dim_.size()) - 1; }
    std::size_t size() const noexcept;
    std::size_t count(int n) const;

    std::span<const Simplex> simplices(int n) const;
    std::span<const Weight> weights(int n) const;
    Weight weight(int n, std::size_t index) const { return weights_[static_cast<std::size_t>(n)][index]; }

    /// Index of `s` within simplices(s.dim()), if present.
    std::optional<std::size_t> index_of(const Simplex& s) const;
    std::optional<Weight> weight_of(const Simplex& s) const;

    std::span<const std::string> labels() const noexcept { return labels_; }
    std::optional<VertexId> vertex_id(std::string_view label) const;
    LabeledSimplex labels_of(const Simplex& s) const;
    /// Resolves labels to a canonical simplex; throws InvalidSimplex for unknown labels.
    Simplex simplex(const LabeledSimplex& labels) const;
    /// "{a,b,c}"
    std::string format(const Simplex& s) const;

    /// Same complex with every weight replaced by `f(dim, index, weight)`.
    /// The result is re-validated.
    WeightedComplex reweighted(const std::function<Weight(int, std::size_t, Weight)>& f) const;

    /// Every simplex as (labels, weight), ordered by dimension then index.
    std::vector<WeightedSimplex> records() const;

    friend bool operator==(const WeightedComplex&, const WeightedComplex&);

private:
    friend struct ComplexBuilder;

    std::vector<std::string> labels_;
    std::vector<std::vector<Simplex>> per_dim_;
    std::vector<std::vector<Weight>> weights_;
    std::unordered_map<Simplex, std::size_t, SimplexHash> index_;
};

/// Validates and builds a complex from an explicit simplex list. Throws
/// DuplicateSimplex, MissingFace or MonotonicityViolation.
WeightedComplex build_complex(std::span<const WeightedSimplex> pairs);

/// Closure of the given maximal simplices, all carrying `uniform_weight`.
WeightedComplex from_maximal(std::span<const LabeledSimplex> maximal, Weight uniform_weight);

/// Adds every missing face with the smallest weight keeping the complex
/// monotone: the maximum weight over its listed cofaces.
WeightedComplex complete_faces(std::span<const WeightedSimplex> pairs);

namespace detail {
// `origins[i]` is reported as the line of record i in validation errors.
WeightedComplex build_complex(std::span<const WeightedSimplex> pairs, std::span<const std::size_t> origins);
WeightedComplex complete_faces(std::span<const WeightedSimplex> pairs, std::span<const std::size_t> origins);
WeightedComplex from_maximal(std::span<const LabeledSimplex> maximal, Weight uniform_weight,
                             std::span<const std::size_t> origins);
}  // namespace detail

struct ExponentEntry {
    std::size_t row;
    int sign;
    Weight exponent;  // weight(face) - weight(simplex)
};

/// Sparse weighted boundary matrix d^v_n: rows are (n-1)-simplices, columns
/// n-simplices, entry sign * pi^exponent. Reading every exponent as 0 gives
/// the classical boundary matrix.
struct ExponentMatrix {
    int n = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<ExponentEntry>> columns;  // each sorted by row
};

/// Requires 1 <= n <= dim(X); throws DimensionOutOfRange otherwise.
ExponentMatrix boundary_exponent_matrix(const WeightedComplex& complex, int n);

}  // namespace wsh
