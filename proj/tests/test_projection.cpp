#include <catch2/catch_amalgamated.hpp>

#include "qcoh/projection.hpp"

using namespace qcoh;

namespace {

struct Fix {
    GenusData d = builtin_data(3, "classical");
    ProjectionSpace ps{d.moduleCtx, d.invCtx, 3};
    Element M(const std::string& s) const { return parse_element(s, d.moduleCtx); }
    Element I(const std::string& s) const { return parse_element(s, d.invCtx); }
};

} // namespace

TEST_CASE_METHOD(Fix, "invariant projection on known classes") {
    REQUIRE(ps.project_invariant(M("alpha^2*beta")) == I("alpha^2*beta"));
    REQUIRE(ps.project_invariant(M("gamma")) == I("gamma"));
    REQUIRE(ps.project_invariant(M("gamma^2")) == I("gamma^2"));
    REQUIRE(ps.project_invariant(M("gamma^3")) == I("gamma^3"));
    REQUIRE(ps.project_invariant(M("psi1*psi4")) == I("-1/6*gamma"));
    REQUIRE(ps.project_invariant(M("psi1*psi2")).isZero());
    REQUIRE(ps.project_invariant(M("psi1")).isZero());
    REQUIRE(ps.project_invariant(M("alpha*beta*psi1*psi2")).isZero());
    REQUIRE(ps.project_invariant(M("alpha*psi1*psi4")) == I("-1/6*alpha*gamma"));
}

TEST_CASE_METHOD(Fix, "projection kills every stored non-trivial prefactor") {
    for (const auto& piece : d.pres.pieces)
        for (const auto& w : piece.prefactors) REQUIRE(ps.project_invariant(w).isZero());
}

TEST_CASE_METHOD(Fix, "projection is linear and idempotent on invariants") {
    Element x = M("psi1*psi4 + 3*alpha*psi2*psi5 - gamma");
    Element y = M("beta*psi3*psi6 + psi1*psi2");
    REQUIRE(ps.project_invariant(x + y) ==
            ps.project_invariant(x) + ps.project_invariant(y));
    Element p = ps.project_invariant(x);
    REQUIRE(ps.project_invariant(transfer_by_name(p, d.moduleCtx)) == p);
}

TEST_CASE_METHOD(Fix, "decomposition coordinates on generators") {
    auto dec = ps.decompose(M("psi1"));
    REQUIRE(dec.invariant.isZero());
    REQUIRE(dec.oddCoeff[0] == I("1"));
    for (int i = 1; i < 6; ++i) REQUIRE(dec.oddCoeff[i].isZero());
    REQUIRE(dec.determined());

    dec = ps.decompose(M("psi1*gamma"));
    REQUIRE(dec.oddCoeff[0] == I("gamma"));
    REQUIRE(dec.invariant.isZero());
    REQUIRE(dec.determined());

    dec = ps.decompose(M("psi1*psi4"));
    REQUIRE(dec.invariant == I("-1/6*gamma"));
    REQUIRE(dec.primCoeff[12] == I("1/3"));
    REQUIRE(dec.primCoeff[13] == I("1/3"));
    for (int j = 0; j < 12; ++j) REQUIRE(dec.primCoeff[j].isZero());

    dec = ps.decompose(M("psi1*psi2*gamma"));
    REQUIRE(dec.primCoeff[0] == I("gamma"));
    REQUIRE(dec.invariant.isZero());
    REQUIRE(dec.determined());
}

TEST_CASE_METHOD(Fix, "stored prefactors decompose to unit coordinates") {
    for (size_t j = 0; j < d.pres.pieces[1].prefactors.size(); ++j) {
        auto dec = ps.decompose(d.pres.pieces[1].prefactors[j]);
        REQUIRE(dec.invariant.isZero());
        REQUIRE(dec.determined());
        for (size_t l = 0; l < 14; ++l)
            REQUIRE(dec.primCoeff[l] == (l == j ? I("1") : Element::zero(d.invCtx)));
    }
}

TEST_CASE_METHOD(Fix, "the primitive degree 3 summand is flagged, not stored") {
    auto dec = ps.decompose(M("psi1*psi2*psi3"));
    REQUIRE_FALSE(dec.determined());
    REQUIRE(dec.leftover == M("psi1*psi2*psi3"));
    REQUIRE(dec.invariant.isZero());
    for (auto& e : dec.oddCoeff) REQUIRE(e.isZero());

    // mixed: a determined piece plus a leftover piece
    dec = ps.decompose(M("psi1*psi2*psi3 + gamma*psi1"));
    REQUIRE_FALSE(dec.determined());
    REQUIRE(dec.oddCoeff[0] == I("gamma"));
}

TEST_CASE_METHOD(Fix, "decomposition reassembles exactly") {
    for (const std::string s :
         {"psi1*psi4*alpha", "gamma*psi2", "psi1*psi2*psi3", "alpha*beta*gamma",
          "psi1*psi2*psi4*psi5", "psi1*psi2*psi3*psi4*psi5",
          "psi1*psi2*psi3*psi4*psi5*psi6", "gamma^2*psi1*psi4 - 3*psi2*psi6",
          "alpha*psi1*psi4*psi2*psi5 + beta*psi3", "gamma^2 + psi1*psi5*psi2*psi4",
          "psi4*psi5*psi6", "(psi1+psi4)*(psi2+psi5)*(psi3+psi6)"}) {
        Element x = M(s);
        auto dec = ps.decompose(x);
        REQUIRE(ps.reassemble(dec, d) == ps.expand_gamma(x));
    }
}

TEST_CASE_METHOD(Fix, "decomposition agrees with the plain invariant projection") {
    for (const std::string s :
         {"psi1*psi4*alpha", "gamma^2*psi1*psi4", "psi1*psi2*psi4*psi5",
          "alpha*beta*gamma + psi2*psi5*beta", "psi1*psi2*psi3*psi4*psi5*psi6"}) {
        Element x = M(s);
        REQUIRE(ps.decompose(x).invariant == ps.project_invariant(x));
    }
}

TEST_CASE("genus 2 projection") {
    GenusData d = builtin_data(2, "floer");
    ProjectionSpace ps(d.moduleCtx, d.invCtx, 2);
    auto M = [&](const std::string& s) { return parse_element(s, d.moduleCtx); };
    auto I = [&](const std::string& s) { return parse_element(s, d.invCtx); };
    REQUIRE(ps.project_invariant(M("psi1*psi3")) == I("-1/4*gamma"));
    REQUIRE(ps.project_invariant(M("psi1*psi2")).isZero());
    REQUIRE(ps.project_invariant(M("gamma")) == I("gamma"));
    REQUIRE(ps.project_invariant(M("gamma*alpha - beta")) == I("gamma*alpha - beta"));
    REQUIRE_THROWS_AS(ps.decompose(M("psi1")), std::logic_error);
}

TEST_CASE_METHOD(Fix, "full word pairing data") {
    // the cube of the pairing word carries the full odd word with coefficient -6
    REQUIRE(ps.T(ps.omega().pow(3)) == -6);
    Element g3 = ps.expand_gamma(M("gamma^3"));
    REQUIRE(ps.T(g3) == 48);
}
