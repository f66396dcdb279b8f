#include <catch2/catch_amalgamated.hpp>

#include "qcoh/degree_two.hpp"

using namespace qcoh;

namespace {

struct Fix {
    RSpace r;
    Element R(const std::string& s) const { return parse_element(s, r.context()); }
    Element P(const std::string& s) const { return parse_element(s, r.fiberContext()); }
};

} // namespace

TEST_CASE_METHOD(Fix, "ruled threefold ring") {
    REQUIRE(r.engine().finiteDimensional());
    REQUIRE(r.engine().dimension() == 8);
    // the top slice is one-dimensional
    int topCount = 0;
    for (const auto& m : r.engine().standardBasis())
        if (m.degree(*r.context()) == 6) ++topCount;
    REQUIRE(topCount == 1);

    REQUIRE(r.reduce(R("h^2*f")).isZero());
    REQUIRE(r.reduce(R("k^2*f")) == R("-2*f*h*k"));
    REQUIRE(r.reduce(R("k^3")) == R("-8*f*h*k"));
    REQUIRE(r.reduce(R("h^3")).isZero());
}

TEST_CASE_METHOD(Fix, "mu classes") {
    REQUIRE(r.alphaR() == R("2*f - 4*h - 2*k"));
    REQUIRE(r.betaR() == R("-(8*h + k)*f"));
    // the squared form reduces to the literal top form
    REQUIRE(r.gammaR() == R("-12*f*h*k"));
    REQUIRE(r.reduce(R("-6*(2*h + k)^2*f")) == R("-12*f*h*k"));
}

TEST_CASE_METHOD(Fix, "top pairing") {
    REQUIRE(r.pair_R(R("f*h*k")) == 1);
    REQUIRE(r.pair_R(r.gammaR()) == -12);
    REQUIRE(r.pair_R(r.alphaR().pow(3)) == -128);
    REQUIRE(r.pair_R(R("f")) == 0);
    REQUIRE(r.pair_R(R("f*h")) == 0);
    REQUIRE(r.pair_R(R("1")) == 0);
}

TEST_CASE_METHOD(Fix, "slant against the fibre") {
    REQUIRE(r.slant_fiber(r.betaR()) == P("-fbar"));
    REQUIRE(r.slant_fiber(r.gammaR()) == P("-12*fbar*h"));
    REQUIRE(r.slant_fiber(R("f*h")).isZero());
    REQUIRE(r.pair_fiber(P("fbar*h")) == 1);
    REQUIRE(r.pair_fiber(P("h^2")) == 1); // h^2 = fbar*h in the base ring
}

TEST_CASE_METHOD(Fix, "degree two point invariants") {
    REQUIRE(r.psi2A_alpha_gamma_pt() == -24);
    REQUIRE(r.psi2A_beta_beta_pt() == 0);
}
