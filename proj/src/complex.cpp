#include "wsh/complex.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>

#include "wsh/error.hpp"

namespace wsh {

// -- Simplex ----------------------------------------------------------------

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw Error(ErrorCode::InvalidSimplex, "simplex has no vertices");
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw Error(ErrorCode::InvalidSimplex, "simplex repeats a vertex");
}

Simplex Simplex::face(std::size_t i) const {
    std::vector<VertexId> rest;
    rest.reserve(vertices_.size() - 1);
    for (std::size_t k = 0; k < vertices_.size(); ++k)
        if (k != i) rest.push_back(vertices_[k]);
    return Simplex(Sorted{}, std::move(rest));
}

bool Simplex::is_face_of(const Simplex& other) const {
    return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end());
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (VertexId v : s.vertices()) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

std::vector<SignedFace> signed_faces(const Simplex& s) {
    std::vector<SignedFace> out;
    if (s.dim() <= 0) return out;
    out.reserve(s.vertices().size());
    for (std::size_t i = 0; i < s.vertices().size(); ++i)
        out.push_back({s.face(i), (i % 2 == 0) ? 1 : -1});
    return out;
}

namespace {

std::optional<unsigned long long> as_number(std::string_view s) {
    if (s.empty() || s.size() > 18) return std::nullopt;
    unsigned long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

std::string join_labels(const LabeledSimplex& labels) {
    std::string out = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += ',';
        out += labels[i];
    }
    return out + "}";
}

std::optional<std::size_t> origin(std::span<const std::size_t> origins, std::size_t i) {
    if (i < origins.size()) return origins[i];
    return std::nullopt;
}

}  // namespace

bool label_less(std::string_view a, std::string_view b) {
    auto na = as_number(a);
    auto nb = as_number(b);
    if (na && nb) return *na != *nb ? *na < *nb : a < b;
    if (na != nb) return na.has_value();
    return a < b;
}

// -- WeightedComplex --------------------------------------------------------

std::size_t WeightedComplex::size() const noexcept {
    std::size_t total = 0;
    for (const auto& d : per_dim_) total += d.size();
    return total;
}

std::size_t WeightedComplex::count(int n) const {
    if (n < 0 || n > dim()) return 0;
    return per_dim_[static_cast<std::size_t>(n)].size();
}

std::span<const Simplex> WeightedComplex::simplices(int n) const {
    if (n < 0 || n > dim()) return {};
    return per_dim_[static_cast<std::size_t>(n)];
}

std::span<const Weight> WeightedComplex::weights(int n) const {
    if (n < 0 || n > dim()) return {};
    return weights_[static_cast<std::size_t>(n)];
}

std::optional<std::size_t> WeightedComplex::index_of(const Simplex& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<Weight> WeightedComplex::weight_of(const Simplex& s) const {
    auto idx = index_of(s);
    if (!idx) return std::nullopt;
    return weights_[static_cast<std::size_t>(s.dim())][*idx];
}

std::optional<VertexId> WeightedComplex::vertex_id(std::string_view label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label,
                               [](const std::string& a, std::string_view b) { return label_less(a, b); });
    if (it == labels_.end() || *it != label) return std::nullopt;
    return static_cast<VertexId>(it - labels_.begin());
}

LabeledSimplex WeightedComplex::labels_of(const Simplex& s) const {
    LabeledSimplex out;
    out.reserve(s.vertices().size());
    for (VertexId v : s.vertices()) out.push_back(labels_[v]);
    return out;
}

Simplex WeightedComplex::simplex(const LabeledSimplex& labels) const {
    std::vector<VertexId> ids;
    ids.reserve(labels.size());
    for (const auto& l : labels) {
        auto id = vertex_id(l);
        if (!id) throw Error(ErrorCode::InvalidSimplex, "unknown vertex label '" + l + "'");
        ids.push_back(*id);
    }
    return Simplex(std::move(ids));
}

std::string WeightedComplex::format(const Simplex& s) const { return join_labels(labels_of(s)); }

std::vector<WeightedSimplex> WeightedComplex::records() const {
    std::vector<WeightedSimplex> out;
    out.reserve(size());
    for (int n = 0; n <= dim(); ++n) {
        auto ss = simplices(n);
        for (std::size_t i = 0; i < ss.size(); ++i) out.push_back({labels_of(ss[i]), weight(n, i)});
    }
    return out;
}

WeightedComplex WeightedComplex::reweighted(const std::function<Weight(int, std::size_t, Weight)>& f) const {
    auto recs = records();
    std::size_t k = 0;
    for (int n = 0; n <= dim(); ++n)
        for (std::size_t i = 0; i < count(n); ++i, ++k) recs[k].weight = f(n, i, recs[k].weight);
    return build_complex(recs);
}

bool operator==(const WeightedComplex& a, const WeightedComplex& b) {
    return a.labels_ == b.labels_ && a.per_dim_ == b.per_dim_ && a.weights_ == b.weights_;
}

// -- construction -----------------------------------------------------------

struct ComplexBuilder {
    std::vector<std::string> labels;

    explicit ComplexBuilder(std::vector<std::string> all_labels) {
        std::sort(all_labels.begin(), all_labels.end(), [](const auto& a, const auto& b) { return label_less(a, b); });
        all_labels.erase(std::unique(all_labels.begin(), all_labels.end()), all_labels.end());
        labels = std::move(all_labels);
    }

    template <class Records>
    static ComplexBuilder over(const Records& records) {
        std::vector<std::string> all;
        for (const auto& r : records)
            for (const auto& l : r) all.push_back(l);
        return ComplexBuilder(std::move(all));
    }

    Simplex resolve(const LabeledSimplex& vertices, std::optional<std::size_t> line) const {
        if (vertices.empty()) throw Error(ErrorCode::InvalidSimplex, "simplex has no vertices", line);
        std::vector<VertexId> ids;
        ids.reserve(vertices.size());
        for (const auto& l : vertices) {
            auto it = std::lower_bound(labels.begin(), labels.end(), l,
                                       [](const std::string& a, const std::string& b) { return label_less(a, b); });
            ids.push_back(static_cast<VertexId>(it - labels.begin()));
        }
        std::sort(ids.begin(), ids.end());
        if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
            throw Error(ErrorCode::InvalidSimplex, "simplex " + join_labels(vertices) + " repeats a vertex", line);
        return Simplex(std::move(ids));
    }

    std::string name(const Simplex& s) const {
        LabeledSimplex ls;
        for (VertexId v : s.vertices()) ls.push_back(labels[v]);
        return join_labels(ls);
    }

    // Assumes the map is already face-closed and monotone.
    WeightedComplex finish(const std::map<Simplex, Weight>& simplices) const {
        WeightedComplex c;
        c.labels_ = labels;
        int top = -1;
        for (const auto& [s, w] : simplices) top = std::max(top, s.dim());
        c.per_dim_.resize(static_cast<std::size_t>(top + 1));
        c.weights_.resize(static_cast<std::size_t>(top + 1));
        // std::map iterates in lexicographic vertex order
        for (const auto& [s, w] : simplices) {
            auto d = static_cast<std::size_t>(s.dim());
            c.index_.emplace(s, c.per_dim_[d].size());
            c.per_dim_[d].push_back(s);
            c.weights_[d].push_back(w);
        }
        return c;
    }
};

namespace {

std::vector<LabeledSimplex> vertex_lists(std::span<const WeightedSimplex> pairs) {
    std::vector<LabeledSimplex> out;
    out.reserve(pairs.size());
    for (const auto& p : pairs) out.push_back(p.vertices);
    return out;
}

// All nonempty proper faces of s.
std::vector<Simplex> proper_faces(const Simplex& s) {
    std::vector<Simplex> out;
    auto v = s.vertices();
    const std::size_t k = v.size();
    if (k > 30) throw Error(ErrorCode::InvalidSimplex, "simplex dimension too large");
    const std::uint64_t full = (std::uint64_t{1} << k) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
        std::vector<VertexId> ids;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::uint64_t{1} << i)) ids.push_back(v[i]);
        out.emplace_back(std::move(ids));
    }
    return out;
}

}  // namespace

namespace detail {

WeightedComplex build_complex(std::span<const WeightedSimplex> pairs, std::span<const std::size_t> origins) {
    if (pairs.empty()) throw Error(ErrorCode::EmptyInput, "complex has no simplices");
    auto builder = ComplexBuilder::over(vertex_lists(pairs));

    std::map<Simplex, Weight> simplices;
    std::unordered_map<Simplex, std::size_t, SimplexHash> record_of;
    std::vector<Simplex> resolved;
    resolved.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        Simplex s = builder.resolve(pairs[i].vertices, origin(origins, i));
        auto [it, inserted] = record_of.emplace(s, i);
        if (!inserted) {
            std::string msg = "duplicate simplex " + builder.name(s);
            if (auto first = origin(origins, it->second)) msg += " (first listed at line " + std::to_string(*first) + ")";
            throw Error(ErrorCode::DuplicateSimplex, msg, origin(origins, i));
        }
        simplices.emplace(s, pairs[i].weight);
        resolved.push_back(std::move(s));
    }

    // Immediate faces suffice: closure and monotonicity are transitive.
    // Faces are visited in lexicographic order so the first violation reported
    // is deterministic and names the smallest face.
    for (std::size_t i = 0; i < resolved.size(); ++i) {
        const Simplex& s = resolved[i];
        const Weight w = pairs[i].weight;
        const auto faces = signed_faces(s);
        for (auto f = faces.rbegin(); f != faces.rend(); ++f) {
            const Simplex& face = f->face;
            auto it = record_of.find(face);
            if (it == record_of.end())
                throw Error(ErrorCode::MissingFace,
                            "face " + builder.name(face) + " of " + builder.name(s) + " is not listed",
                            origin(origins, i));
            const Weight fw = pairs[it->second].weight;
            if (fw < w) {
                auto a = origin(origins, i);
                auto b = origin(origins, it->second);
                std::optional<std::size_t> line = (a && b) ? std::optional<std::size_t>(std::max(*a, *b)) : std::nullopt;
                throw Error(ErrorCode::MonotonicityViolation,
                            "weight of face " + builder.name(face) + " (" + std::to_string(fw) +
                                ") is smaller than weight of " + builder.name(s) + " (" + std::to_string(w) + ")",
                            line);
            }
        }
    }
    return builder.finish(simplices);
}

WeightedComplex from_maximal(std::span<const LabeledSimplex> maximal, Weight uniform_weight,
                             std::span<const std::size_t> origins) {
    if (maximal.empty()) throw Error(ErrorCode::EmptyInput, "no maximal simplices given");
    auto builder = ComplexBuilder::over(std::vector<LabeledSimplex>(maximal.begin(), maximal.end()));
    std::map<Simplex, Weight> simplices;
    for (std::size_t i = 0; i < maximal.size(); ++i) {
        Simplex s = builder.resolve(maximal[i], origin(origins, i));
        for (auto& f : proper_faces(s)) simplices.emplace(std::move(f), uniform_weight);
        simplices.emplace(std::move(s), uniform_weight);
    }
    return builder.finish(simplices);
}

WeightedComplex complete_faces(std::span<const WeightedSimplex> pairs, std::span<const std::size_t> origins) {
    if (pairs.empty()) throw Error(ErrorCode::EmptyInput, "complex has no simplices");
    auto builder = ComplexBuilder::over(vertex_lists(pairs));

    std::unordered_map<Simplex, std::size_t, SimplexHash> record_of;
    std::vector<Simplex> resolved;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        Simplex s = builder.resolve(pairs[i].vertices, origin(origins, i));
        auto [it, inserted] = record_of.emplace(s, i);
        if (!inserted) throw Error(ErrorCode::DuplicateSimplex, "duplicate simplex " + builder.name(s), origin(origins, i));
        resolved.push_back(std::move(s));
    }

    std::map<Simplex, Weight> simplices;
    for (std::size_t i = 0; i < resolved.size(); ++i) simplices.emplace(resolved[i], pairs[i].weight);

    for (std::size_t i = 0; i < resolved.size(); ++i) {
        const Weight w = pairs[i].weight;
        for (auto& f : proper_faces(resolved[i])) {
            auto listed = record_of.find(f);
            if (listed != record_of.end()) {
                const Weight fw = pairs[listed->second].weight;
                if (fw < w) {
                    auto a = origin(origins, i);
                    auto b = origin(origins, listed->second);
                    std::optional<std::size_t> line =
                        (a && b) ? std::optional<std::size_t>(std::max(*a, *b)) : std::nullopt;
                    throw Error(ErrorCode::MonotonicityViolation,
                                "weight of face " + builder.name(f) + " (" + std::to_string(fw) +
                                    ") is smaller than weight of " + builder.name(resolved[i]) + " (" +
                                    std::to_string(w) + ")",
                                line);
                }
                continue;
            }
            auto [it, inserted] = simplices.emplace(std::move(f), w);
            if (!inserted) it->second = std::max(it->second, w);
        }
    }
    return builder.finish(simplices);
}

}  // namespace detail

WeightedComplex build_complex(std::span<const WeightedSimplex> pairs) { return detail::build_complex(pairs, {}); }

WeightedComplex from_maximal(std::span<const LabeledSimplex> maximal, Weight uniform_weight) {
    return detail::from_maximal(maximal, uniform_weight, {});
}

WeightedComplex complete_faces(std::span<const WeightedSimplex> pairs) { return detail::complete_faces(pairs, {}); }

ExponentMatrix boundary_exponent_matrix(const WeightedComplex& complex, int n) {
    if (n < 1 || n > complex.dim())
        throw Error(ErrorCode::DimensionOutOfRange,
                    "boundary dimension " + std::to_string(n) + " outside [1, " + std::to_string(complex.dim()) + "]");
    ExponentMatrix m;
    m.n = n;
    m.rows = complex.count(n - 1);
    m.cols = complex.count(n);
    m.columns.resize(m.cols);
    auto cols = complex.simplices(n);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const Weight w = complex.weight(n, j);
        auto& col = m.columns[j];
        for (const auto& [face, sign] : signed_faces(cols[j])) {
            const std::size_t row = *complex.index_of(face);
            col.push_back({row, sign, complex.weight(n - 1, row) - w});
        }
        std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.row < b.row; });
    }
    return m;
}

}  // namespace wsh
