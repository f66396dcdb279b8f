#include <catch2/catch_amalgamated.hpp>

#include "oracle.hpp"
#include "qcoh/builtins.hpp"

#include <random>

using namespace qcoh;

namespace {

// small deterministic pseudo-random elements of the invariant ring
Element randomElement(const ContextPtr& ctx, const std::vector<Monomial>& pool, std::mt19937& rng) {
    Element x = Element::zero(ctx);
    size_t terms = 1 + rng() % 5;
    for (size_t t = 0; t < terms; ++t) {
        const Monomial& m = pool[rng() % pool.size()];
        long long c = (long long)(rng() % 19) - 9;
        if (c == 0) c = 1;
        x = x + Element::term(ctx, m, c);
    }
    return x;
}

} // namespace

TEST_CASE("dense row reduction reproduces engine normal forms") {
    for (const char* kind : {"classical", "quantum"}) {
        INFO(kind);
        GenusData d = builtin_data(3, kind);
        ReductionEngine eng(d.pres.ctx, d.pres.relations);
        auto pool = oracle::monomials_up_to(d.pres.ctx, 16);
        REQUIRE(pool.size() == 41);
        for (const auto& m : pool) {
            Element x = Element::term(d.pres.ctx, m, 1);
            REQUIRE(eng.reduce(x) == oracle::dense_nf(d.pres.relations, 16, x));
        }
    }
}

TEST_CASE("the deformed ring really differs from the undeformed one") {
    GenusData cl = builtin_data(3, "classical");
    GenusData qu = builtin_data(3, "quantum");
    ReductionEngine ec(cl.pres.ctx, cl.pres.relations);
    ReductionEngine eq(qu.pres.ctx, qu.pres.relations);
    int differing = 0;
    int inhomogeneous = 0;
    for (const auto& m : oracle::monomials_up_to(cl.pres.ctx, 16)) {
        Element nc = ec.reduce(Element::term(cl.pres.ctx, m, 1));
        Element nq = eq.reduce(Element::term(qu.pres.ctx, m, 1));
        if (!(transfer_by_name(nc, qu.pres.ctx) == nq)) ++differing;
        if (!nq.isZero() && !nq.homogeneousDegree().has_value()) ++inhomogeneous;
    }
    REQUIRE(differing > 0);
    REQUIRE(inhomogeneous > 0); // deformation terms drop degree by multiples of four
}

TEST_CASE("graded quotient dimensions match the standard basis and pair symmetrically") {
    for (const char* kind : {"classical", "quantum"}) {
        INFO(kind);
        GenusData d = builtin_data(3, kind);
        ReductionEngine eng(d.pres.ctx, d.pres.relations);

        // the deformation is filtered, not graded, so compare against the
        // classical leading terms: standard monomial degrees are shared
        std::vector<int> fromEngine(13, 0);
        for (const auto& m : eng.standardBasis()) ++fromEngine[m.degree(*d.pres.ctx)];

        std::vector<int> dims = oracle::graded_quotient_dims(d.pres.ctx, d.pres.relations, 12);
        REQUIRE(dims == fromEngine);
        REQUIRE(eng.dimension() == 10);

        int total = 0;
        for (int v : dims) total += v;
        REQUIRE(total == 10);
        REQUIRE(dims[0] == 1);
        for (int deg = 0; deg <= 12; ++deg) {
            if (deg % 2) REQUIRE(dims[deg] == 0);
            REQUIRE(dims[deg] == dims[12 - deg]); // top class pairs the slices
        }
    }
}

TEST_CASE("normal forms are idempotent, linear and multiplicative") {
    for (const char* kind : {"classical", "quantum"}) {
        INFO(kind);
        GenusData d = builtin_data(3, kind);
        ReductionEngine eng(d.pres.ctx, d.pres.relations);
        auto pool = oracle::monomials_up_to(d.pres.ctx, 12);
        std::mt19937 rng(2026);
        for (int trial = 0; trial < 60; ++trial) {
            Element x = randomElement(d.pres.ctx, pool, rng);
            Element y = randomElement(d.pres.ctx, pool, rng);
            Element nx = eng.reduce(x);
            CHECK(eng.reduce(nx) == nx);
            CHECK(eng.reduce(x + y) == eng.reduce(eng.reduce(x) + eng.reduce(y)));
            CHECK(eng.reduce(x * y) == eng.reduce(eng.reduce(x) * eng.reduce(y)));
        }
    }
}

TEST_CASE("adding relation multiples never changes a normal form") {
    GenusData d = builtin_data(3, "quantum");
    ReductionEngine eng(d.pres.ctx, d.pres.relations);
    auto pool = oracle::monomials_up_to(d.pres.ctx, 8);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Element x = randomElement(d.pres.ctx, pool, rng);
        const Element& r = d.pres.relations[rng() % d.pres.relations.size()];
        Element q = Element::term(d.pres.ctx, pool[rng() % pool.size()], (long long)(rng() % 7) - 3);
        CHECK(eng.reduce(x + q * r) == eng.reduce(x));
    }
}

TEST_CASE("a unit in the ideal is rejected at construction") {
    GenusData d = builtin_data(3, "classical");
    std::vector<Element> bad = d.pres.relations;
    bad.push_back(Element::constant(d.pres.ctx, 1) - Element::generator(d.pres.ctx, "alpha"));
    bad.push_back(Element::generator(d.pres.ctx, "alpha"));
    REQUIRE_THROWS_WITH(ReductionEngine(d.pres.ctx, bad),
                        Catch::Matchers::ContainsSubstring("1 reduces to 0"));
}
