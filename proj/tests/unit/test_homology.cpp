#include <catch_amalgamated.hpp>

#include <random>

#include "support/checks.hpp"
#include "support/complexes.hpp"
#include "wsh/error.hpp"
#include "wsh/homology.hpp"
#include "wsh/io.hpp"

using namespace wsh;
using namespace wsh::testing;

namespace {

const Rationals Q;

std::size_t idx(const WeightedComplex& x, const LabeledSimplex& s) { return *x.index_of(x.simplex(s)); }

WeightedComplex hollow_triangle_with_edges(Weight ab, Weight ac, Weight bc) {
    const Weight top = std::max({ab, ac, bc});
    std::vector<WeightedSimplex> pairs = {
        {{"a"}, top}, {{"b"}, top}, {{"c"}, top}, {{"a", "b"}, ab}, {{"a", "c"}, ac}, {{"b", "c"}, bc},
    };
    return build_complex(pairs);
}

}  // namespace

TEST_CASE("beta basis of the hollow triangle", "[homology]") {
    const auto x = hollow_triangle(0);
    const auto b = beta_basis(x, 1, Q);
    CHECK(b.complement == std::vector<std::size_t>{idx(x, {"a", "b"}), idx(x, {"a", "c"})});
    REQUIRE(b.distinguished == std::vector<std::size_t>{idx(x, {"b", "c"})});
    const Chain<Rationals> expected{{idx(x, {"a", "b"}), 1}, {idx(x, {"a", "c"}), -1}, {idx(x, {"b", "c"}), 1}};
    CHECK(b.cycles[0] == expected);
}

TEST_CASE("beta basis in degree zero is every vertex", "[homology]") {
    const auto x = tetrahedron_boundary();
    const auto b = beta_basis(x, 0, Q);
    CHECK(b.complement.empty());
    REQUIRE(b.distinguished.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(b.cycles[i] == Chain<Rationals>{{b.distinguished[i], 1}});
}

TEST_CASE("beta basis of the tetrahedron boundary edges", "[homology]") {
    const auto x = tetrahedron_boundary();
    const auto b = beta_basis(x, 1, Q);
    CHECK(b.distinguished.size() == 3);
    CHECK(b.complement.size() == 3);
    // Heaviest edge is processed first and always joins M.
    CHECK(b.complement.front() == idx(x, {"A", "B"}));
    CHECK_THROWS_AS(beta_basis(x, 3, Q), Error);
}

TEST_CASE("hat_cycle lifts by weight differences", "[homology]") {
    const auto x = hollow_triangle_with_edges(3, 2, 1);
    const Chain<Rationals> c{{idx(x, {"a", "b"}), 1}, {idx(x, {"a", "c"}), -1}, {idx(x, {"b", "c"}), 1}};
    const WeightedChain<Rationals> expected{
        {idx(x, {"a", "b"}), {{2, 1}}},
        {idx(x, {"a", "c"}), {{1, -1}}},
        {idx(x, {"b", "c"}), {{0, 1}}},
    };
    CHECK(hat_cycle(c, x, 1, Q) == expected);

    const auto flat = hollow_triangle(1);
    const auto beta = beta_basis(flat, 1, Q).cycles[0];
    const auto lifted = hat_cycle(beta, flat, 1, Q);
    REQUIRE(lifted.size() == beta.size());
    for (std::size_t i = 0; i < beta.size(); ++i) {
        CHECK(lifted[i].simplex == beta[i].index);
        CHECK(lifted[i].polynomial == Polynomial<Rationals>{{0, beta[i].value}});
    }

    try {
        hat_cycle(Chain<Rationals>{}, x, 1, Q);
        FAIL("zero chain accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroChain);
    }
}

TEST_CASE("weighted_axpy merges polynomials", "[homology]") {
    // a = (1 + pi^2) s0 + 2 pi s3,  b = pi s0 + s3
    const WeightedChain<Rationals> a{{0, {{0, 1}, {2, 1}}}, {3, {{1, 2}}}};
    const WeightedChain<Rationals> b{{0, {{1, 1}}}, {3, {{0, 1}}}};
    // a - pi b = s0 + pi s3
    const WeightedChain<Rationals> expected{{0, {{0, 1}}}, {3, {{1, 1}}}};
    CHECK(weighted_axpy(Q, a, mpq_class(-1), 1, b) == expected);
    // a - a = 0 leaves no entries behind
    CHECK(weighted_axpy(Q, a, mpq_class(-1), 0, a).empty());
}

TEST_CASE("phi pairing of a weighted filled triangle", "[homology]") {
    const auto x = filled_triangle(1, 1, 0);
    const auto lower = beta_basis(x, 1, Q);
    const auto upper = beta_basis(x, 2, Q);
    const auto p = phi_pairing(x, 1, Q, lower, upper);
    CHECK(p.pairs == std::vector<PhiPair>{{idx(x, {"b", "c"}), idx(x, {"a", "b", "c"}), 1}});
    CHECK(p.unpaired.empty());

    const auto h = homology(x, 1, Q);
    CHECK(h.free_rank == 0);
    CHECK(h.torsion == std::vector<Weight>{1});

    try {
        phi_pairing(x, 1, Q, upper, upper);
        FAIL("mismatched bases accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::MismatchedDimensions);
    }
}

TEST_CASE("phi pairing of the tetrahedron boundary", "[homology]") {
    const auto x = tetrahedron_boundary();
    const auto p = phi_pairing(x, 1, Q, beta_basis(x, 1, Q), beta_basis(x, 2, Q));
    REQUIRE(p.pairs.size() == 3);
    for (const auto& pr : p.pairs) {
        CHECK(pr.m == 1);
        CHECK(pr.kappa != idx(x, {"A", "B"}));
    }
    CHECK(p.unpaired.empty());
}

TEST_CASE("phi pairing without cofaces leaves K unpaired", "[homology]") {
    const auto x = hollow_triangle(2);
    const auto lower = beta_basis(x, 1, Q);
    const BetaBasis<Rationals> none{2, {}, {}, {}};
    const auto p = phi_pairing(x, 1, Q, lower, none);
    CHECK(p.pairs.empty());
    CHECK(p.unpaired == lower.distinguished);
}

TEST_CASE("homology of the tetrahedron boundary", "[homology]") {
    const auto x = tetrahedron_boundary();
    for (const auto& field : {FieldSpec::rationals(), FieldSpec::prime(2)}) {
        const auto h1 = homology(x, 1, field);
        CHECK(h1.free_rank == 0);
        CHECK(h1.torsion == std::vector<Weight>{1, 1, 1});
        const auto h2 = homology(x, 2, field);
        CHECK(h2.free_rank == 1);
        CHECK(h2.torsion.empty());
    }
    const auto all = homology_all(x, FieldSpec::rationals());
    REQUIRE(all.size() == 3);
    CHECK(all[1].torsion == std::vector<Weight>{1, 1, 1});
    CHECK(all[2].free_rank == 1);
    CHECK(all[0].free_rank == 1);
    CHECK_THROWS_AS(homology(x, 3, FieldSpec::rationals()), Error);
    CHECK_THROWS_AS(homology(x, -1, FieldSpec::rationals()), Error);
}

TEST_CASE("trivial weights reduce to classical homology", "[homology]") {
    const auto contractible = filled_triangle(0, 0, 0);
    CHECK(homology(contractible, 1, Q).free_rank == 0);
    CHECK(homology(contractible, 1, Q).torsion.empty());

    const auto point = from_maximal(std::vector<LabeledSimplex>{{"v"}}, 0);
    const auto h = homology_all(point, FieldSpec::rationals());
    REQUIRE(h.size() == 1);
    CHECK(h[0].free_rank == 1);
    CHECK(h[0].torsion.empty());

    auto ranks = [](const WeightedComplex& x, const FieldSpec& f) {
        std::vector<std::size_t> out;
        for (const auto& m : homology_all(x, f)) {
            CHECK(m.torsion.empty());
            out.push_back(m.free_rank);
        }
        return out;
    };
    CHECK(ranks(torus(), FieldSpec::rationals()) == std::vector<std::size_t>{1, 2, 1});
    CHECK(ranks(torus(), FieldSpec::prime(2)) == std::vector<std::size_t>{1, 2, 1});
    CHECK(ranks(projective_plane(), FieldSpec::rationals()) == std::vector<std::size_t>{1, 0, 0});
    CHECK(ranks(projective_plane(), FieldSpec::prime(2)) == std::vector<std::size_t>{1, 1, 1});
    CHECK(ranks(projective_plane(), FieldSpec::prime(3)) == std::vector<std::size_t>{1, 0, 0});
    // Constant non-zero weights behave the same.
    CHECK(ranks(torus(4), FieldSpec::rationals()) == std::vector<std::size_t>{1, 2, 1});
}

TEST_CASE("glued triangles carry torsion in degrees 0 and 1", "[homology]") {
    const auto all = homology_all(glued_triangles(), FieldSpec::rationals());
    REQUIRE(all.size() == 3);
    CHECK_FALSE(all[0].torsion.empty());
    CHECK_FALSE(all[1].torsion.empty());
    CHECK(all[2].free_rank == 0);
}

TEST_CASE("generators of a weighted filled triangle", "[homology]") {
    const auto x = filled_triangle(1, 1, 0);
    const auto h = homology(x, 1, Q, true);
    REQUIRE(h.generators);
    REQUIRE(h.generators->size() == 1);
    const auto& g = (*h.generators)[0];
    CHECK(g.torsion == Weight{1});
    const auto chain = to_weighted_chain(g, Q);
    const WeightedChain<Rationals> expected{
        {idx(x, {"a", "b"}), {{0, 1}}},
        {idx(x, {"a", "c"}), {{0, -1}}},
        {idx(x, {"b", "c"}), {{0, 1}}},
    };
    CHECK(chain == expected);

    CHECK_FALSE(homology(x, 1, Q).generators);
}

TEST_CASE("generators are free first, then torsion ascending", "[homology]") {
    const auto all = homology_all(glued_triangles(), FieldSpec::rationals(), true);
    for (const auto& h : all) {
        REQUIRE(h.generators);
        std::size_t i = 0;
        for (; i < h.free_rank; ++i) CHECK_FALSE((*h.generators)[i].torsion);
        for (std::size_t k = 0; k < h.torsion.size(); ++k, ++i) CHECK((*h.generators)[i].torsion == h.torsion[k]);
    }
}

TEST_CASE("structural invariants on random complexes", "[homology][property]") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 120; ++trial) {
        const auto x = random_complex(rng);
        const auto field = random_field(rng);
        const auto failures = structural_invariants(x, field, rng);
        INFO(serialize_complex(x));
        INFO(field.to_string() << ": " << (failures.empty() ? std::string() : failures.front()));
        REQUIRE(failures.empty());
    }
}
