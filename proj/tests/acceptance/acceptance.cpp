// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// asserted criterion fails. Criterion 6 is a measurement and only fails if
// the two computations disagree.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support/checks.hpp"
#include "support/complexes.hpp"
#include "wsh/homology.hpp"
#include "wsh/io.hpp"
#include "wsh/kernels.hpp"
#include "wsh/oracle.hpp"

using namespace wsh;
using namespace wsh::testing;

namespace {

const std::filesystem::path kFixtures = WSH_FIXTURE_DIR;
const std::filesystem::path kGolden = WSH_GOLDEN_DIR;
constexpr std::uint64_t kCorpusSeed = 500500;
constexpr int kCorpusSize = 500;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> failures;

    void fail(std::string why) {
        pass = false;
        failures.push_back(std::move(why));
    }
};

std::string torsion_text(const std::vector<Weight>& t) {
    std::string s = "{";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + "}";
}

std::string ms(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f ms", s * 1e3);
    return buf;
}

std::vector<std::pair<WeightedComplex, FieldSpec>> corpus() {
    std::mt19937_64 rng(kCorpusSeed);
    std::vector<std::pair<WeightedComplex, FieldSpec>> out;
    for (int i = 0; i < kCorpusSize; ++i) {
        auto x = random_complex(rng);
        out.emplace_back(std::move(x), random_field(rng));
    }
    return out;
}

Outcome hollow_tetrahedron() {
    Outcome o;
    const auto x = read_complex_file(kFixtures / "tetrahedron_boundary.cplx");
    std::ostringstream detail;
    for (const auto& field : {FieldSpec::rationals(), FieldSpec::prime(2)}) {
        const auto t0 = Clock::now();
        const auto h = homology_all(x, field);
        const double t = seconds_since(t0);
        if (h.size() != 3 || h[1].free_rank != 0 || h[1].torsion != std::vector<Weight>{1, 1, 1})
            o.fail(field.to_string() + ": H_1 = " + render_module(h[1].free_rank, h[1].torsion));
        if (t >= 0.1) o.fail(field.to_string() + ": took " + ms(t));
        detail << (detail.tellp() ? "; " : "") << field.to_string() << " H_1 = "
               << render_module(h[1].free_rank, h[1].torsion) << " in " << ms(t);
    }
    o.detail = detail.str();
    return o;
}

Outcome glued_triangles_golden() {
    Outcome o;
    const auto x = read_complex_file(kFixtures / "glued_triangles.cplx");
    const auto field = FieldSpec::rationals();
    const auto h = homology_all(x, field, true);
    if (h[0].torsion.empty()) o.fail("no torsion in H_0");
    if (h[1].torsion.empty()) o.fail("no torsion in H_1");
    for (const auto& m : h) {
        const auto ref = homology_via_snf(x, m.n, field);
        if (ref.free_rank != m.free_rank || ref.torsion != m.torsion)
            o.fail("oracle disagrees on H_" + std::to_string(m.n));
    }
    std::ifstream in(kGolden / "glued_triangles.json");
    if (!in) {
        o.fail("golden file missing");
    } else if (nlohmann::json::parse(in) != to_json(make_report(x, field, h))) {
        o.fail("report differs from golden file");
    }
    o.detail = "H_0 torsion " + torsion_text(h[0].torsion) + ", H_1 torsion " + torsion_text(h[1].torsion);
    return o;
}

Outcome classical_surfaces() {
    Outcome o;
    struct Case {
        const char* file;
        FieldSpec field;
        std::vector<std::size_t> betti;
    };
    const Case cases[] = {
        {"torus.cplx", FieldSpec::rationals(), {1, 2, 1}},
        {"torus.cplx", FieldSpec::prime(2), {1, 2, 1}},
        {"rp2.cplx", FieldSpec::rationals(), {1, 0, 0}},
        {"rp2.cplx", FieldSpec::prime(2), {1, 1, 1}},
    };
    std::ostringstream detail;
    for (const auto& c : cases) {
        const auto t0 = Clock::now();
        const auto x = read_complex_file(kFixtures / c.file);
        const auto h = homology_all(x, c.field);
        const double t = seconds_since(t0);
        std::vector<std::size_t> ranks;
        for (const auto& m : h) {
            ranks.push_back(m.free_rank);
            if (!m.torsion.empty()) o.fail(std::string(c.file) + ": torsion in H_" + std::to_string(m.n));
            const auto ref = homology_via_snf(x, m.n, c.field);
            if (ref.free_rank != m.free_rank || !ref.torsion.empty())
                o.fail(std::string(c.file) + ": oracle disagrees on H_" + std::to_string(m.n));
        }
        if (ranks != c.betti) o.fail(std::string(c.file) + " over " + c.field.to_string() + ": wrong ranks");
        if (t >= 1.0) o.fail(std::string(c.file) + ": took " + ms(t));
        detail << (detail.tellp() ? "; " : "") << c.file << "/" << c.field.to_string() << " " << ms(t);
    }
    o.detail = detail.str();
    return o;
}

Outcome oracle_equivalence(const std::vector<std::pair<WeightedComplex, FieldSpec>>& items) {
    Outcome o;
    std::size_t dims = 0, with_torsion = 0, simplices = 0, largest = 0;
    for (std::size_t i = 0; i < items.size(); ++i) {
        const auto& [x, field] = items[i];
        dims += static_cast<std::size_t>(x.dim() + 1);
        simplices += x.size();
        largest = std::max(largest, x.size());
        for (const auto& h : homology_all(x, field)) with_torsion += !h.torsion.empty();
        for (auto& f : oracle_agreement(x, field)) o.fail("complex " + std::to_string(i) + ": " + f);
    }
    o.detail = std::to_string(items.size()) + " complexes, " + std::to_string(dims) + " dimensions, " +
               std::to_string(with_torsion) + " with torsion, " + std::to_string(simplices) + " simplices (max " +
               std::to_string(largest) + ")";
    return o;
}

Outcome structural_suite(const std::vector<std::pair<WeightedComplex, FieldSpec>>& items) {
    Outcome o;
    std::mt19937_64 rng(kCorpusSeed + 1);
    for (std::size_t i = 0; i < items.size(); ++i) {
        const auto& [x, field] = items[i];
        for (auto& f : structural_invariants(x, field, rng)) o.fail("complex " + std::to_string(i) + ": " + f);
    }
    o.detail = std::to_string(items.size()) + " complexes";
    return o;
}

WeightedComplex contrast_instance() {
    std::mt19937_64 rng(6);
    RandomComplexOptions opts;
    opts.max_simplices = 50;
    opts.max_weight = 10;
    opts.max_vertices = 9;
    opts.max_dim = 3;
    for (;;) {
        auto x = random_complex(rng, opts);
        Weight top = 0;
        for (int n = 0; n <= x.dim(); ++n)
            for (Weight w : x.weights(n)) top = std::max(top, w);
        if (x.size() == 50 && top == 10) return x;
    }
}

Outcome intractability_contrast() {
    Outcome o;
    const auto x = contrast_instance();
    const auto field = FieldSpec::rationals();

    auto t0 = Clock::now();
    const auto fast = homology_all(x, field);
    const double t_fast = seconds_since(t0);

    t0 = Clock::now();
    std::vector<HomologyModule> slow;
    for (int n = 0; n <= x.dim(); ++n) slow.push_back(homology_via_snf(x, n, field));
    const double t_slow = seconds_since(t0);

    for (std::size_t n = 0; n < fast.size(); ++n)
        if (fast[n].free_rank != slow[n].free_rank || fast[n].torsion != slow[n].torsion)
            o.fail("oracle disagrees on H_" + std::to_string(n));
    if (t_fast >= 1.0) o.fail("fast path took " + ms(t_fast));

    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu simplices, precision %zu: engine %s, oracle %s, ratio %.0fx (%s 10x)", x.size(),
                  choose_precision(x), ms(t_fast).c_str(), ms(t_slow).c_str(), t_slow / t_fast,
                  t_slow >= 10 * t_fast ? ">=" : "below");
    o.detail = buf;
    return o;
}

}  // namespace

int main() {
    std::printf("kernel isa: %s\n", std::string(kernels::to_string(kernels::active_isa())).c_str());
    const auto items = corpus();

    struct Criterion {
        int id;
        const char* title;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "hollow tetrahedron H_1 = (R/(pi))^3 over Q and GF(2), < 0.1 s", hollow_tetrahedron},
        {2, "glued triangles: torsion in degrees 0 and 1, golden report", glued_triangles_golden},
        {3, "torus and RP^2 with zero weights: classical Betti numbers, < 1 s", classical_surfaces},
        {4, "engine equals Smith-normal-form oracle on 500 random complexes", [&] { return oracle_equivalence(items); }},
        {5, "structural invariants on the same corpus", [&] { return structural_suite(items); }},
        {6, "fast path vs oracle wall time (recorded)", intractability_contrast},
    };

    bool all = true;
    for (const auto& c : criteria) {
        const auto t0 = Clock::now();
        const Outcome o = c.run();
        all = all && o.pass;
        std::printf("%s %d %s [%s] (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(),
                    seconds_since(t0));
        for (std::size_t i = 0; i < o.failures.size() && i < 10; ++i) std::printf("    %s\n", o.failures[i].c_str());
        if (o.failures.size() > 10) std::printf("    ... %zu more\n", o.failures.size() - 10);
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
