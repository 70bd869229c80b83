#include "wsh/homology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "wsh/error.hpp"

namespace wsh {

namespace {

void check_dimension(const WeightedComplex& complex, int n) {
    if (n < 0 || n > complex.dim())
        throw Error(ErrorCode::DimensionOutOfRange,
                    "dimension " + std::to_string(n) + " outside [0, " + std::to_string(complex.dim()) + "]");
}

template <Field F>
Chain<F> simplex_boundary(const WeightedComplex& complex, int n, const F& field, std::size_t index) {
    Chain<F> out;
    if (n == 0) return out;
    for (const auto& [face, sign] : signed_faces(complex.simplices(n)[index]))
        out.push_back({*complex.index_of(face), field.from_int(sign)});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
    return out;
}

// Simplex indices of dimension n sorted by weight (descending or ascending),
// ties broken by ascending lexicographic order, i.e. by index.
std::vector<std::size_t> by_weight(const WeightedComplex& complex, int n, std::vector<std::size_t> indices,
                                   bool descending) {
    auto w = complex.weights(n);
    std::stable_sort(indices.begin(), indices.end(), [&](std::size_t a, std::size_t b) {
        return descending ? w[a] > w[b] : w[a] < w[b];
    });
    return indices;
}

template <Field F>
Polynomial<F> poly_axpy(const F& field, const Polynomial<F>& a, const typename F::value_type& c, Weight shift,
                        const Polynomial<F>& b) {
    Polynomial<F> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        const bool take_a = j == b.size() || (i < a.size() && a[i].exponent < b[j].exponent + shift);
        const bool take_b = i == a.size() || (j < b.size() && b[j].exponent + shift < a[i].exponent);
        if (take_a) {
            out.push_back(a[i++]);
        } else if (take_b) {
            auto v = field.mul(c, b[j].coefficient);
            if (!field.is_zero(v)) out.push_back({b[j].exponent + shift, std::move(v)});
            ++j;
        } else {
            auto v = field.add(a[i].coefficient, field.mul(c, b[j].coefficient));
            if (!field.is_zero(v)) out.push_back({a[i].exponent, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

template <Field F>
struct Reduction {
    PhiPairing pairing;
    std::vector<std::size_t> columns;          // kappa indices, increasing weight
    std::vector<std::size_t> pair_column;      // column of each pair
    std::vector<Vector<F>> pivot_rows;         // row j_k as it stood when paired
};

// Column-by-column reduction of the projection matrix Q: rows are the
// independent (n+1)-simplices by decreasing weight, columns the distinguished
// n-simplices by increasing weight. Because kappa occurs only in its own
// cycle, Q[j][i] is simply the coefficient of kappa_i in d(mu_j).
template <Field F>
Reduction<F> reduce_projection(const WeightedComplex& complex, int n, const F& field, const BetaBasis<F>& lower,
                               const BetaBasis<F>& upper, bool keep_rows) {
    if (lower.n != n || upper.n != n + 1)
        throw Error(ErrorCode::MismatchedDimensions, "beta bases for dimensions " + std::to_string(lower.n) + " and " +
                                                         std::to_string(upper.n) + " cannot pair dimension " +
                                                         std::to_string(n));
    Reduction<F> red;
    red.pairing.n = n;
    red.columns = by_weight(complex, n, lower.distinguished, false);
    const std::size_t q = red.columns.size();
    const std::size_t p = upper.complement.size();

    std::unordered_map<std::size_t, std::size_t> column_of;
    for (std::size_t i = 0; i < q; ++i) column_of.emplace(red.columns[i], i);

    Matrix<F> Q(field, p, q);
    for (std::size_t j = 0; j < p; ++j) {
        const Simplex& mu = complex.simplices(n + 1)[upper.complement[j]];
        for (const auto& [face, sign] : signed_faces(mu)) {
            auto it = column_of.find(*complex.index_of(face));
            if (it != column_of.end()) Q(j, it->second) = field.from_int(sign);
        }
    }

    auto wn = complex.weights(n);
    auto wn1 = complex.weights(n + 1);
    std::vector<bool> paired(p, false);
    Vector<F> pivot;
    for (std::size_t k = 0; k < q; ++k) {
        std::optional<std::size_t> jk;
        for (std::size_t j = 0; j < p; ++j) {
            if (!paired[j] && !field.is_zero(Q(j, k))) {
                jk = j;
                break;
            }
        }
        const std::size_t kappa = red.columns[k];
        if (!jk) {
            red.pairing.unpaired.push_back(kappa);
            continue;
        }
        const std::size_t mu = upper.complement[*jk];
        if (wn[kappa] < wn1[mu])
            throw std::logic_error("negative pairing exponent for " + complex.format(complex.simplices(n)[kappa]));
        red.pairing.pairs.push_back({kappa, mu, wn[kappa] - wn1[mu]});
        if (keep_rows) {
            red.pair_column.push_back(k);
            red.pivot_rows.emplace_back(Q.row(*jk).begin(), Q.row(*jk).end());
        }

        // Entries left of column k are zero in every unpaired row.
        pivot.assign(Q.row(*jk).begin() + static_cast<std::ptrdiff_t>(k), Q.row(*jk).end());
        const auto inv = field.inv(Q(*jk, k));
        for (std::size_t j = *jk + 1; j < p; ++j) {
            if (field.is_zero(Q(j, k))) continue;
            const auto c = field.neg(field.mul(Q(j, k), inv));
            field.mul_add(Q.row(j).subspan(k), pivot, c);
        }
        for (std::size_t l = k + 1; l < q; ++l) Q(*jk, l) = field.zero();
        paired[*jk] = true;
    }
    return red;
}

template <Field F>
std::vector<GeneratorTerm> to_terms(const WeightedChain<F>& chain, const F& field) {
    std::vector<GeneratorTerm> out;
    for (const auto& e : chain)
        for (const auto& t : e.polynomial) out.push_back({e.simplex, t.exponent, field.to_scalar(t.coefficient)});
    return out;
}

template <Field F>
HomologyModule assemble(const WeightedComplex& complex, int n, const F& field, const BetaBasis<F>& lower,
                        const BetaBasis<F>& upper, bool with_generators) {
    auto red = reduce_projection(complex, n, field, lower, upper, with_generators);

    HomologyModule h;
    h.n = n;
    h.field = field.spec();
    h.free_rank = red.pairing.unpaired.size();
    for (const auto& pr : red.pairing.pairs)
        if (pr.m > 0) h.torsion.push_back(pr.m);
    std::sort(h.torsion.begin(), h.torsion.end());

    if (with_generators) {
        std::unordered_map<std::size_t, std::size_t> cycle_of;
        for (std::size_t i = 0; i < lower.distinguished.size(); ++i) cycle_of.emplace(lower.distinguished[i], i);
        auto lifted = [&](std::size_t kappa) { return hat_cycle(lower.cycles[cycle_of.at(kappa)], complex, n, field); };
        auto wn = complex.weights(n);

        std::vector<Generator> gens;
        for (std::size_t kappa : red.pairing.unpaired) gens.push_back({std::nullopt, to_terms(lifted(kappa), field)});

        std::vector<Generator> torsion_gens;
        for (std::size_t t = 0; t < red.pairing.pairs.size(); ++t) {
            const auto& pr = red.pairing.pairs[t];
            if (pr.m == 0) continue;
            const std::size_t k = red.pair_column[t];
            const auto& b = red.pivot_rows[t];
            // phi_hat = sum_{l >= k} b_l pi^(w(kappa_l) - w(kappa_k)) beta_hat_l
            WeightedChain<F> phi;
            for (std::size_t l = k; l < b.size(); ++l) {
                if (field.is_zero(b[l])) continue;
                const std::size_t kl = red.columns[l];
                phi = weighted_axpy(field, phi, b[l], wn[kl] - wn[pr.kappa], lifted(kl));
            }
            torsion_gens.push_back({pr.m, to_terms(phi, field)});
        }
        std::stable_sort(torsion_gens.begin(), torsion_gens.end(),
                         [](const Generator& a, const Generator& b) { return *a.torsion < *b.torsion; });
        gens.insert(gens.end(), torsion_gens.begin(), torsion_gens.end());
        h.generators = std::move(gens);
    }
    h.pairing = std::move(red.pairing);
    return h;
}

}  // namespace

template <Field F>
WeightedChain<F> weighted_axpy(const F& field, const WeightedChain<F>& a, const typename F::value_type& c, Weight shift,
                               const WeightedChain<F>& b) {
    WeightedChain<F> out;
    out.reserve(a.size() + b.size());
    const Polynomial<F> none;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].simplex < b[j].simplex)) {
            out.push_back(a[i++]);
            continue;
        }
        const bool both = i < a.size() && a[i].simplex == b[j].simplex;
        auto poly = poly_axpy(field, both ? a[i].polynomial : none, c, shift, b[j].polynomial);
        if (!poly.empty()) out.push_back({b[j].simplex, std::move(poly)});
        if (both) ++i;
        ++j;
    }
    return out;
}

template <Field F>
Chain<F> boundary(const WeightedComplex& complex, int n, const F& field, const Chain<F>& c) {
    Chain<F> out;
    for (const auto& e : c) out = sparse_axpy(field, out, e.value, simplex_boundary(complex, n, field, e.index));
    return out;
}

template <Field F>
BetaBasis<F> beta_basis(const WeightedComplex& complex, int n, const F& field) {
    check_dimension(complex, n);
    std::vector<std::size_t> all(complex.count(n));
    std::iota(all.begin(), all.end(), std::size_t{0});

    BetaBasis<F> basis;
    basis.n = n;
    EchelonSpan<F> span(field);
    for (std::size_t idx : by_weight(complex, n, std::move(all), true)) {
        auto combo = span.insert_or_express(simplex_boundary(complex, n, field, idx), idx);
        if (!combo) {
            basis.complement.push_back(idx);
            continue;
        }
        // d(sigma) = sum c_j d(mu_j)  =>  beta = sigma - sum c_j mu_j
        basis.distinguished.push_back(idx);
        basis.cycles.push_back(sparse_axpy(field, Chain<F>{{idx, field.one()}}, field.neg(field.one()), *combo));
    }
    return basis;
}

template <Field F>
WeightedChain<F> hat_cycle(const Chain<F>& c, const WeightedComplex& complex, int n, const F& field) {
    (void)field;
    if (c.empty()) throw Error(ErrorCode::ZeroChain, "cannot lift the zero chain");
    auto w = complex.weights(n);
    Weight lowest = w[c.front().index];
    for (const auto& e : c) lowest = std::min(lowest, w[e.index]);
    WeightedChain<F> out;
    out.reserve(c.size());
    for (const auto& e : c) out.push_back({e.index, {{w[e.index] - lowest, e.value}}});
    return out;
}

template <Field F>
PhiPairing phi_pairing(const WeightedComplex& complex, int n, const F& field, const BetaBasis<F>& lower,
                       const BetaBasis<F>& upper) {
    return reduce_projection(complex, n, field, lower, upper, false).pairing;
}

template <Field F>
HomologyModule homology(const WeightedComplex& complex, int n, const F& field, bool with_generators) {
    check_dimension(complex, n);
    auto lower = beta_basis(complex, n, field);
    auto upper = n < complex.dim() ? beta_basis(complex, n + 1, field) : BetaBasis<F>{n + 1, {}, {}, {}};
    return assemble(complex, n, field, lower, upper, with_generators);
}

template <Field F>
WeightedChain<F> to_weighted_chain(const Generator& g, const F& field) {
    WeightedChain<F> out;
    for (const auto& t : g.terms) {
        WeightedChain<F> single{{t.simplex, {{t.exponent, field.from_scalar(t.coefficient)}}}};
        out = weighted_axpy(field, out, field.one(), 0, single);
    }
    return out;
}

HomologyModule homology(const WeightedComplex& complex, int n, const FieldSpec& field, bool with_generators) {
    return with_field(field, [&](const auto& f) { return homology(complex, n, f, with_generators); });
}

std::vector<HomologyModule> homology_all(const WeightedComplex& complex, const FieldSpec& field,
                                         bool with_generators) {
    return with_field(field, [&](const auto& f) {
        using Fd = std::decay_t<decltype(f)>;
        std::vector<BetaBasis<Fd>> bases;
        for (int n = 0; n <= complex.dim(); ++n) bases.push_back(beta_basis(complex, n, f));
        bases.push_back(BetaBasis<Fd>{complex.dim() + 1, {}, {}, {}});
        std::vector<HomologyModule> out;
        for (int n = 0; n <= complex.dim(); ++n) {
            const auto i = static_cast<std::size_t>(n);
            out.push_back(assemble(complex, n, f, bases[i], bases[i + 1], with_generators));
        }
        return out;
    });
}

#define WSH_INSTANTIATE_HOMOLOGY(F)                                                                                   \
    template WeightedChain<F> weighted_axpy(const F&, const WeightedChain<F>&, const F::value_type&, Weight,           \
                                            const WeightedChain<F>&);                                                  \
    template BetaBasis<F> beta_basis(const WeightedComplex&, int, const F&);                                           \
    template WeightedChain<F> hat_cycle(const Chain<F>&, const WeightedComplex&, int, const F&);                       \
    template PhiPairing phi_pairing(const WeightedComplex&, int, const F&, const BetaBasis<F>&, const BetaBasis<F>&);  \
    template HomologyModule homology(const WeightedComplex&, int, const F&, bool);                                     \
    template Chain<F> boundary(const WeightedComplex&, int, const F&, const Chain<F>&);                                \
    template WeightedChain<F> to_weighted_chain(const Generator&, const F&);

WSH_INSTANTIATE_HOMOLOGY(Rationals)
WSH_INSTANTIATE_HOMOLOGY(PrimeField)

}  // namespace wsh
