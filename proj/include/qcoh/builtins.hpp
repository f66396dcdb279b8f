#pragma once

#include "qcoh/parse.hpp"
#include "qcoh/presentation.hpp"

#include <bit>
#include <initializer_list>
#include <utility>

namespace qcoh {

// One ring attached to a curve genus: the ambient module context (even
// classes alpha, beta, gamma and odd classes psi1..psi2g), the expansion of
// gamma as an odd word, the presentation, and the stored pairing fixtures.
struct GenusData {
    int genus = 0;
    ContextPtr moduleCtx;
    ContextPtr invCtx;
    Element gammaWord;
    Presentation pres;
    std::vector<std::pair<Element, Rational>> fixtures;

    bool operator==(const GenusData& o) const {
        return genus == o.genus && gammaWord == o.gammaWord && pres == o.pres &&
               fixtures == o.fixtures && moduleCtx->sameShape(*o.moduleCtx);
    }
};

inline ContextPtr invariant_context() {
    return std::make_shared<Context>(std::vector<GeneratorSpec>{
        {"alpha", 2, Parity::Even}, {"beta", 4, Parity::Even}, {"gamma", 6, Parity::Even}});
}

inline ContextPtr module_context(int genus) {
    std::vector<GeneratorSpec> g{
        {"alpha", 2, Parity::Even}, {"beta", 4, Parity::Even}, {"gamma", 6, Parity::Even}};
    for (int i = 1; i <= 2 * genus; ++i) g.push_back({"psi" + std::to_string(i), 3, Parity::Odd});
    return std::make_shared<Context>(g);
}

inline Element gamma_word(const ContextPtr& moduleCtx, int genus) {
    Element e(moduleCtx);
    for (int i = 1; i <= genus; ++i) {
        Element w = Element::generator(moduleCtx, "psi" + std::to_string(i)) *
                    Element::generator(moduleCtx, "psi" + std::to_string(genus + i));
        e += w * Rational(-2);
    }
    return e;
}

// exactly g terms, each -2 * psi_i * psi_{g+i}
inline void validate_gamma_word(const Element& g, int genus) {
    const Context& ctx = *g.context();
    if ((int)g.termCount() != genus)
        throw std::invalid_argument("gamma class must have exactly " + std::to_string(genus) +
                                    " terms");
    std::vector<bool> seen(genus, false);
    for (const auto& [m, c] : g.terms()) {
        if (c != Rational(-2))
            throw std::invalid_argument("gamma class terms must have coefficient -2");
        bool evenPart = false;
        for (auto e : m.even) evenPart |= e != 0;
        if (evenPart || std::popcount(m.odd) != 2)
            throw std::invalid_argument("gamma class terms must be products of two odd classes");
        int lo = std::countr_zero(m.odd);
        int hi = std::countr_zero(m.odd & ~(1u << lo));
        if (hi - lo != genus || lo >= genus || seen[lo])
            throw std::invalid_argument("gamma pairing indices must be (i, g+i)");
        seen[lo] = true;
    }
    (void)ctx;
}

namespace detail {

inline std::vector<Element> parseAll(const ContextPtr& c, std::initializer_list<const char*> xs) {
    std::vector<Element> v;
    for (auto s : xs) v.push_back(parse_element(s, c));
    return v;
}

inline std::vector<Monomial> parseMonomials(const ContextPtr& c,
                                            std::initializer_list<const char*> xs) {
    std::vector<Monomial> v;
    for (auto s : xs) {
        Element e = parse_element(s, c);
        if (e.termCount() != 1 || e.leadingCoefficient() != 1)
            throw std::invalid_argument("basis entries must be plain monomials");
        v.push_back(e.leadingMonomial());
    }
    return v;
}

// alpha^a beta^b gamma^c with a+b+c < g, ascending total exponent
inline std::vector<Monomial> invariantBasis(const ContextPtr& inv, int genus) {
    std::vector<Monomial> v;
    for (int t = 0; t < genus; ++t)
        for (int a = t; a >= 0; --a)
            for (int b = t - a; b >= 0; --b) {
                int c = t - a - b;
                Monomial m = Monomial::one(*inv);
                m.even[0] = (uint16_t)a;
                m.even[1] = (uint16_t)b;
                m.even[2] = (uint16_t)c;
                v.push_back(m);
            }
    return v;
}

inline std::vector<Element> primitivePairWords(const ContextPtr& mod, int genus) {
    std::vector<Element> v;
    auto psi = [&](int i) { return Element::generator(mod, "psi" + std::to_string(i)); };
    for (int i = 1; i <= 2 * genus; ++i)
        for (int j = i + 1; j <= 2 * genus; ++j)
            if (j != i + genus) v.push_back(psi(i) * psi(j));
    for (int i = 2; i <= genus; ++i) v.push_back(psi(1) * psi(1 + genus) - psi(i) * psi(i + genus));
    return v;
}

} // namespace detail

inline std::vector<std::pair<Element, Rational>> fixturesFor3(const ContextPtr& mod) {
    std::vector<std::pair<const char*, int>> raw{
        {"alpha^6", 224},          {"alpha^4*beta", -64}, {"alpha^2*beta^2", 32},
        {"beta^3", 0},             {"alpha^3*gamma", 24}, {"alpha*beta*gamma", -24},
        {"gamma^2", 24},           {"psi1*psi4*alpha^3", -4},
        {"psi1*psi4*alpha*beta", 4}, {"psi1*psi4*gamma", -4}};
    std::vector<std::pair<Element, Rational>> v;
    for (auto& [s, val] : raw) v.emplace_back(parse_element(s, mod), val);
    return v;
}

// Built-in ring data: (3, classical), (3, quantum), (2, floer).
inline GenusData builtin_data(int genus, const std::string& kind) {
    GenusData d;
    d.genus = genus;
    d.invCtx = invariant_context();
    d.moduleCtx = module_context(genus);
    d.gammaWord = gamma_word(d.moduleCtx, genus);
    d.pres.kind = kind;
    d.pres.ctx = d.invCtx;
    const ContextPtr& I = d.invCtx;

    if (genus == 3 && (kind == "classical" || kind == "quantum")) {
        bool q = kind == "quantum";
        d.pres.relations =
            q ? detail::parseAll(I, {"alpha^3 + 5*alpha*beta + 4*gamma - 24*alpha",
                                     "alpha^2*beta + beta^2 + 4/3*gamma*alpha + 8*alpha^2 + 16*beta + 64",
                                     "gamma*alpha^2 + gamma*beta + 8*gamma"})
              : detail::parseAll(I, {"alpha^3 + 5*alpha*beta + 4*gamma",
                                     "alpha^2*beta + beta^2 + 4/3*gamma*alpha",
                                     "gamma*alpha^2 + gamma*beta"});
        d.pres.basis = detail::invariantBasis(I, genus);

        Piece odd;
        odd.label = "odd";
        for (int i = 1; i <= 6; ++i)
            odd.prefactors.push_back(Element::generator(d.moduleCtx, "psi" + std::to_string(i)));
        odd.relations = q ? detail::parseAll(I, {"alpha^2 + beta + 8",
                                                 "alpha*beta + gamma - 8*alpha", "gamma*alpha"})
                          : detail::parseAll(I, {"alpha^2 + beta", "alpha*beta + gamma",
                                                 "gamma*alpha"});
        odd.basis = detail::parseMonomials(I, {"1", "alpha", "beta", "gamma"});

        Piece prim;
        prim.label = "primitive";
        prim.prefactors = detail::primitivePairWords(d.moduleCtx, genus);
        prim.relations = q ? detail::parseAll(I, {"alpha", "beta + 8", "gamma"})
                           : detail::parseAll(I, {"alpha", "beta", "gamma"});
        prim.basis = detail::parseMonomials(I, {"1"});

        d.pres.pieces = {odd, prim};
        d.fixtures = fixturesFor3(d.moduleCtx);
        return d;
    }
    if (genus == 2 && kind == "floer") {
        d.pres.basis = detail::parseMonomials(I, {"1", "alpha", "beta", "gamma"});
        Piece a, b, c;
        a.label = "plus";
        a.relations = detail::parseAll(I, {"alpha - 4", "beta + 8", "gamma"});
        b.label = "double";
        b.relations = detail::parseAll(I, {"alpha^2", "beta - 8", "gamma + 16*alpha"});
        c.label = "minus";
        c.relations = detail::parseAll(I, {"alpha + 4", "beta + 8", "gamma"});
        d.pres.pieces = {a, b, c};
        return d;
    }
    throw std::invalid_argument("genus " + std::to_string(genus) + " ring '" + kind +
                                "' not stored; supply a presentation file");
}

inline std::vector<std::pair<Element, Rational>> fixtures(int genus) {
    if (genus != 3) throw std::invalid_argument("pairing fixtures are stored for genus 3 only");
    return fixturesFor3(module_context(3));
}

} // namespace qcoh
