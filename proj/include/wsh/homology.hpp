#pragma once

// Weighted homology over F[[pi]] computed entirely over the residue field F.
//
// For each dimension n the n-simplices are split into a set M whose
// boundaries are independent and a set K of distinguished simplices, each
// owning one cycle beta_kappa of the classical kernel. Lifting those cycles
// (hat_cycle) gives a basis of the weighted cycles, and a greedy reduction
// of the projection of the (n+1)-boundaries onto that basis pairs every
// independent (n+1)-simplex mu with one distinguished kappa. The pair
// contributes the summand R/(pi^(w(kappa) - w(mu))); unpaired kappas give
// the free part.

#include <cstddef>
#include <optional>
#include <vector>

#include "wsh/complex.hpp"
#include "wsh/field.hpp"
#include "wsh/linalg.hpp"

namespace wsh {

/// Chain over F on the n-simplices, keyed by index into simplices(n).
template <Field F>
using Chain = SparseVector<F>;

template <Field F>
struct Term {
    Weight exponent;
    typename F::value_type coefficient;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Polynomial in pi: strictly increasing exponents, no zero coefficients.
template <Field F>
using Polynomial = std::vector<Term<F>>;

template <Field F>
struct WeightedChainEntry {
    std::size_t simplex;
    Polynomial<F> polynomial;

    friend bool operator==(const WeightedChainEntry&, const WeightedChainEntry&) = default;
};

/// Chain over F[[pi]], sorted by simplex index, no empty polynomials.
template <Field F>
using WeightedChain = std::vector<WeightedChainEntry<F>>;

/// a + c * pi^shift * b
template <Field F>
WeightedChain<F> weighted_axpy(const F& field, const WeightedChain<F>& a, const typename F::value_type& c, Weight shift,
                               const WeightedChain<F>& b);

template <Field F>
struct BetaBasis {
    int n = 0;
    /// K in processing order (decreasing weight, ties lexicographic).
    std::vector<std::size_t> distinguished;
    /// M in processing order.
    std::vector<std::size_t> complement;
    /// cycles[i] is beta for distinguished[i]: coefficient 1 on it, rest on M.
    std::vector<Chain<F>> cycles;
};

struct PhiPair {
    std::size_t kappa;  // index into simplices(n)
    std::size_t mu;     // index into simplices(n + 1)
    Weight m;           // weight(kappa) - weight(mu)

    friend bool operator==(const PhiPair&, const PhiPair&) = default;
};

struct PhiPairing {
    int n = 0;
    std::vector<PhiPair> pairs;
    /// Distinguished n-simplices left without a partner, increasing weight.
    std::vector<std::size_t> unpaired;
};

struct GeneratorTerm {
    std::size_t simplex;
    Weight exponent;
    FieldScalar coefficient;

    friend bool operator==(const GeneratorTerm&, const GeneratorTerm&) = default;
};

struct Generator {
    /// Exponent m of the summand R/(pi^m) it generates; nullopt for free summands.
    std::optional<Weight> torsion;
    std::vector<GeneratorTerm> terms;

    friend bool operator==(const Generator&, const Generator&) = default;
};

/// H_n ~= R^free_rank (+) R/(pi^m_1) (+) ... with m_k >= 1 listed ascending.
struct HomologyModule {
    int n = 0;
    FieldSpec field;
    std::size_t free_rank = 0;
    std::vector<Weight> torsion;
    PhiPairing pairing;
    std::optional<std::vector<Generator>> generators;
};

/// Splits the n-simplices into K and M and builds one cycle per kappa.
/// Requires 0 <= n <= dim(X).
template <Field F>
BetaBasis<F> beta_basis(const WeightedComplex& complex, int n, const F& field);

/// Lift of a cycle over F: every coefficient is multiplied by
/// pi^(w(sigma) - min weight over the support). Throws ZeroChain on c = 0.
template <Field F>
WeightedChain<F> hat_cycle(const Chain<F>& c, const WeightedComplex& complex, int n, const F& field);

/// Greedy pairing of `upper`'s independent (n+1)-simplices with `lower`'s
/// distinguished n-simplices. `upper` may be empty when n = dim(X).
template <Field F>
PhiPairing phi_pairing(const WeightedComplex& complex, int n, const F& field, const BetaBasis<F>& lower,
                       const BetaBasis<F>& upper);

template <Field F>
HomologyModule homology(const WeightedComplex& complex, int n, const F& field, bool with_generators = false);

HomologyModule homology(const WeightedComplex& complex, int n, const FieldSpec& field, bool with_generators = false);

/// Every dimension 0..dim(X); the beta basis of each dimension is computed once.
std::vector<HomologyModule> homology_all(const WeightedComplex& complex, const FieldSpec& field,
                                         bool with_generators = false);

/// Classical boundary of an n-chain over F, as an (n-1)-chain.
template <Field F>
Chain<F> boundary(const WeightedComplex& complex, int n, const F& field, const Chain<F>& c);

/// Converts a generator's terms back to a weighted chain over `field`.
template <Field F>
WeightedChain<F> to_weighted_chain(const Generator& g, const F& field);

#define WSH_DECLARE_HOMOLOGY(F)                                                                                       \
    extern template WeightedChain<F> weighted_axpy(const F&, const WeightedChain<F>&, const F::value_type&, Weight,    \
                                                   const WeightedChain<F>&);                                           \
    extern template BetaBasis<F> beta_basis(const WeightedComplex&, int, const F&);                                    \
    extern template WeightedChain<F> hat_cycle(const Chain<F>&, const WeightedComplex&, int, const F&);                \
    extern template PhiPairing phi_pairing(const WeightedComplex&, int, const F&, const BetaBasis<F>&,                 \
                                           const BetaBasis<F>&);                                                       \
    extern template HomologyModule homology(const WeightedComplex&, int, const F&, bool);                              \
    extern template Chain<F> boundary(const WeightedComplex&, int, const F&, const Chain<F>&);                         \
    extern template WeightedChain<F> to_weighted_chain(const Generator&, const F&);

WSH_DECLARE_HOMOLOGY(Rationals)
WSH_DECLARE_HOMOLOGY(PrimeField)

#undef WSH_DECLARE_HOMOLOGY

}  // namespace wsh
