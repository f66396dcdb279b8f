#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcoh/evaluation.hpp"

namespace qcoh {

// Taylor table of a generating function: values[(a,b,c)] is the coefficient of
// s^a lambda^b r^c, stored for every a+b+c <= order (zeros included so that
// emitted tables have a fixed, predictable row set).
struct SeriesTable {
    int genus = 0;
    int order = 0;
    std::map<std::array<int, 3>, Rational> values;

    Rational at(int a, int b, int c) const {
        auto it = values.find({a, b, c});
        return it == values.end() ? Rational(0) : it->second;
    }
};

namespace detail {

inline std::array<int, 3> invariantExponents(const Monomial& m) {
    return {int(m.even[0]), int(m.even[1]), int(m.even[2])};
}

template <typename F>
SeriesTable tabulate(int genus, int N, F&& coefficient) {
    SeriesTable t;
    t.genus = genus;
    t.order = N;
    for (int a = 0; a <= N; ++a)
        for (int b = 0; a + b <= N; ++b)
            for (int c = 0; a + b + c <= N; ++c)
                t.values[{a, b, c}] = coefficient(a, b, c);
    return t;
}

} // namespace detail

// Coefficients of D(exp(s*alpha + lambda*beta + r*gamma)) up to total order N.
inline SeriesTable series_table(const Evaluator& ev, int genus, int N) {
    const ContextPtr& inv = ev.data(genus, genus == 2 ? "floer" : "classical").invCtx;
    return detail::tabulate(genus, N, [&](int a, int b, int c) {
        Element mono = Element::generator(inv, 0).pow(a) * Element::generator(inv, 1).pow(b) *
                       Element::generator(inv, 2).pow(c);
        return ev.donaldson(mono, genus) / Rational(factorial(a) * factorial(b) * factorial(c));
    });
}

// Same table for the quantum word evaluator at genus 3.
inline SeriesTable psi_table(const Evaluator& ev, int N) {
    const ContextPtr& inv = ev.data(3, "classical").invCtx;
    return detail::tabulate(3, N, [&](int a, int b, int c) {
        Element mono = Element::generator(inv, 0).pow(a) * Element::generator(inv, 1).pow(b) *
                       Element::generator(inv, 2).pow(c);
        return ev.tilde_psi(mono) / Rational(factorial(a) * factorial(b) * factorial(c));
    });
}

// A closed form is a finite sum of  coeff * trig(freq*s) * s^p lambda^q r^t * e^{expm*lambda}.
enum class Trig { one, sinh, cosh, cos };

struct ClosedTerm {
    Rational coeff;
    Trig trig = Trig::one;
    int freq = 0;
    int p = 0, q = 0, t = 0;
    int expm = 0;
};

struct ClosedForm {
    int genus = 0;
    std::vector<ClosedTerm> terms;
};

inline ClosedForm closed_form(int genus) {
    ClosedForm f;
    f.genus = genus;
    if (genus == 2) {
        f.terms = {
            {rat(-1, 16), Trig::sinh, 4, 0, 0, 0, -8},
            {rat(-4), Trig::one, 0, 0, 0, 1, 8},
            {rat(1, 4), Trig::one, 0, 1, 0, 0, 8},
        };
        return f;
    }
    if (genus == 3) {
        f.terms = {
            {rat(1, 2048), Trig::cos, 8, 0, 0, 0, 8},
            {rat(3, 128), Trig::cosh, 4, 0, 0, 0, -8},
            {rat(-1, 32), Trig::sinh, 4, 1, 0, 0, -8},
            {rat(1, 8), Trig::cosh, 4, 0, 1, 0, -8},
            {rat(-3, 8), Trig::sinh, 4, 0, 0, 1, -8},
            {rat(-49, 2048), Trig::one, 0, 0, 0, 0, 8},
            {rat(1, 4), Trig::one, 0, 0, 1, 0, 8},
            {rat(-12), Trig::one, 0, 0, 0, 2, 8},
            {rat(3, 2), Trig::one, 0, 1, 0, 1, 8},
            {rat(-3, 64), Trig::one, 0, 2, 0, 0, 8},
            {rat(-1), Trig::one, 0, 0, 2, 0, 8},
        };
        return f;
    }
    throw std::invalid_argument("closed form stored for genus 2 and 3 only");
}

namespace detail {

inline Rational trigCoeff(Trig t, int k, int n) {
    if (n < 0) return 0;
    switch (t) {
    case Trig::one:
        return n == 0 ? Rational(1) : Rational(0);
    case Trig::sinh:
        if (n % 2 == 0) return 0;
        break;
    case Trig::cosh:
    case Trig::cos:
        if (n % 2 != 0) return 0;
        break;
    }
    Rational v = pow_rat(k, n) / Rational(factorial(n));
    if (t == Trig::cos && (n / 2) % 2 != 0) v = -v;
    return v;
}

inline Rational expCoeff(int m, int n) {
    if (n < 0) return 0;
    return pow_rat(m, n) / Rational(factorial(n));
}

} // namespace detail

inline SeriesTable taylor(const ClosedForm& cf, int N) {
    return detail::tabulate(cf.genus, N, [&](int a, int b, int c) {
        Rational v = 0;
        for (const auto& term : cf.terms) {
            if (term.t != c) continue;
            v += term.coeff * detail::trigCoeff(term.trig, term.freq, a - term.p) *
                 detail::expCoeff(term.expm, b - term.q);
        }
        return v;
    });
}

struct SeriesMismatch {
    std::array<int, 3> key;
    Rational lhs, rhs;
};

struct CompareReport {
    int order = 0;
    std::vector<SeriesMismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};

inline CompareReport compare_series(const Evaluator& ev, int genus, int N) {
    SeriesTable lhs = series_table(ev, genus, N);
    SeriesTable rhs = taylor(closed_form(genus), N);
    CompareReport rep;
    rep.order = N;
    for (const auto& [key, v] : lhs.values)
        if (v != rhs.at(key[0], key[1], key[2])) rep.mismatches.push_back({key, v, rhs.at(key[0], key[1], key[2])});
    return rep;
}

// Largest total order of a monomial of R; differentiating by R shrinks the
// reliable part of a truncated table by this much.
inline int relation_weight(const Element& R) {
    int w = 0;
    for (const auto& [m, c] : R.terms()) {
        auto e = detail::invariantExponents(m);
        w = std::max(w, e[0] + e[1] + e[2]);
    }
    return w;
}

// Apply R(d/ds, d/dlambda, d/dr) to a truncated table.
inline SeriesTable apply_relation(const SeriesTable& table, const Element& R) {
    int w = relation_weight(R);
    return detail::tabulate(table.genus, table.order - w, [&](int a, int b, int c) {
        Rational v = 0;
        for (const auto& [m, coeff] : R.terms()) {
            auto [p, q, t] = detail::invariantExponents(m);
            Rational fac = Rational(factorial(a + p) * factorial(b + q) * factorial(c + t)) /
                           Rational(factorial(a) * factorial(b) * factorial(c));
            v += coeff * fac * table.at(a + p, b + q, c + t);
        }
        return v;
    });
}

struct PdeReport {
    int checkedOrder = 0;
    std::vector<std::array<int, 3>> nonzero;
    bool ok() const { return nonzero.empty(); }
};

// Ideal membership first (floer ring at genus 2, quantum ring at genus 3),
// then annihilation of the matching generating-function table.
inline PdeReport pde_check(const Evaluator& ev, int genus, const Element& R, int N) {
    const CompiledPresentation& ring = ev.ring(genus, genus == 2 ? "floer" : "quantum");
    Element nf = ring.normal_form(R);
    if (!nf.isZero())
        throw std::invalid_argument("relation rejected with its nonzero normal form: " +
                                    format_element(nf));
    SeriesTable table = genus == 2 ? series_table(ev, 2, N) : psi_table(ev, N);
    SeriesTable applied = apply_relation(table, R);
    PdeReport rep;
    rep.checkedOrder = applied.order;
    for (const auto& [key, v] : applied.values)
        if (v != 0) rep.nonzero.push_back(key);
    return rep;
}

// Rational form of R(i*alpha, -beta, -i*gamma): defined when every monomial of
// R has the same parity of a-c, up to one overall factor of i that is dropped.
inline Element twist_relation(const Element& R) {
    Element out = Element::zero(R.context());
    int parity = -1;
    for (const auto& [m, coeff] : R.terms()) {
        auto [a, b, c] = detail::invariantExponents(m);
        int d = a - c;
        int par = ((d % 2) + 2) % 2;
        if (parity == -1) parity = par;
        if (par != parity)
            throw std::invalid_argument("twist is not rational: mixed parity of a-c");
        int k = (par == 0 ? d / 2 : (d - 1) / 2) + b;
        Rational sign = (k % 2 == 0) ? 1 : -1;
        out += Element::term(R.context(), m, coeff * sign);
    }
    return out;
}

struct PsiSeriesReport {
    int order = 0;
    std::vector<SeriesMismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};

// Coefficientwise form of the exponential identity linking the two genus-3
// tables: psi_{abc} = (-1)^{(a-c)/2 + b} * d_{abc}, both sides zero when a-c is odd.
inline PsiSeriesReport psi_series_relation(const Evaluator& ev, int N) {
    SeriesTable d = series_table(ev, 3, N);
    SeriesTable psi = psi_table(ev, N);
    PsiSeriesReport rep;
    rep.order = N;
    for (const auto& [key, dv] : d.values) {
        auto [a, b, c] = key;
        Rational pv = psi.at(a, b, c);
        if ((a - c) % 2 != 0) {
            if (pv != 0 || dv != 0) rep.mismatches.push_back({key, pv, dv});
            continue;
        }
        int k = (a - c) / 2 + b;
        Rational rhs = (k % 2 == 0) ? dv : -dv;
        if (pv != rhs) rep.mismatches.push_back({key, pv, rhs});
    }
    return rep;
}

} // namespace qcoh
