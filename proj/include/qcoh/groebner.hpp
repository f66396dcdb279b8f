#pragma once

#include "qcoh/element.hpp"
#include "qcoh/linalg.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qcoh {

// Full reduction of x by gens under the context's weighted-deg-lex order.
// Works for module elements too: a divisor match only needs the even exponents
// to fit and the odd bits to be contained, and multiplying a relation by the
// quotient monomial keeps the leading term aligned (quotient odd bits are
// disjoint from the divisor's by construction).
inline Element gb_reduce(const Element& x, const std::vector<Element>& gens) {
    const ContextPtr& ctx = x.context();
    Element rem(ctx);
    Element work = x;
    while (!work.isZero()) {
        const Monomial m = work.leadingMonomial();
        const Rational c = work.leadingCoefficient();
        bool hit = false;
        for (const auto& g : gens) {
            if (g.isZero()) continue;
            const Monomial& lm = g.leadingMonomial();
            if (!lm.divides(m)) continue;
            Element u = Element::term(ctx, lm.quotientOf(m), 1) * g;
            work -= (c / u.coefficient(m)) * u;
            hit = true;
            break;
        }
        if (!hit) {
            rem.addTerm(m, c);
            work.addTerm(m, -c);
        }
    }
    return rem;
}

namespace detail {

inline Monomial monoLcm(const Monomial& a, const Monomial& b) {
    Monomial l = a;
    l.odd = a.odd | b.odd;
    for (size_t s = 0; s < l.even.size(); ++s) l.even[s] = std::max(a.even[s], b.even[s]);
    return l;
}

inline Element sPolynomial(const Element& f, const Element& g) {
    const ContextPtr& ctx = f.context();
    Monomial l = monoLcm(f.leadingMonomial(), g.leadingMonomial());
    Element uf = Element::term(ctx, f.leadingMonomial().quotientOf(l), 1) * f;
    Element ug = Element::term(ctx, g.leadingMonomial().quotientOf(l), 1) * g;
    return uf * (1 / uf.coefficient(l)) - ug * (1 / ug.coefficient(l));
}

} // namespace detail

// Buchberger with full reduction and a final inter-reduction; the result is
// the unique monic reduced basis. Handles inhomogeneous ideals (termination by
// Dickson's lemma; positive generator degrees make the order a well-order).
// Odd generators appearing in leading terms get the square-zero closure pairs
// (e * g reduces to zero or joins the basis).
inline std::vector<Element> groebner_basis(std::vector<Element> gens) {
    std::vector<Element> basis;
    for (auto& g : gens)
        if (!g.isZero()) basis.push_back(g);
    if (basis.empty()) return basis;
    ContextPtr ctx = basis[0].context(); // by value: admit() may reallocate the vector

    std::deque<std::pair<int, int>> pairs;       // S-pairs
    std::deque<std::pair<int, int>> oddClosure;  // (basis idx, odd slot)
    auto enqueueFor = [&](int i) {
        for (int j = 0; j < i; ++j) pairs.emplace_back(j, i);
        uint32_t w = basis[i].leadingMonomial().odd;
        while (w) {
            int s = std::countr_zero(w);
            oddClosure.emplace_back(i, s);
            w &= w - 1;
        }
    };
    for (int i = 0; i < (int)basis.size(); ++i) enqueueFor(i);

    auto admit = [&](Element h) {
        h = gb_reduce(h, basis);
        if (h.isZero()) return;
        h *= 1 / h.leadingCoefficient();
        basis.push_back(h);
        enqueueFor((int)basis.size() - 1);
    };

    while (!pairs.empty() || !oddClosure.empty()) {
        if (!pairs.empty()) {
            auto [i, j] = pairs.front();
            pairs.pop_front();
            const Monomial &mi = basis[i].leadingMonomial(), &mj = basis[j].leadingMonomial();
            if (mi.odd == 0 && mj.odd == 0) {
                // Buchberger's coprimality criterion (commutative leading terms)
                bool coprime = true;
                for (size_t s = 0; s < mi.even.size() && coprime; ++s)
                    if (mi.even[s] && mj.even[s]) coprime = false;
                if (coprime) continue;
            }
            admit(detail::sPolynomial(basis[i], basis[j]));
        } else {
            auto [i, s] = oddClosure.front();
            oddClosure.pop_front();
            Monomial e = Monomial::one(*ctx);
            e.odd = 1u << s;
            admit(Element::term(ctx, e, 1) * basis[i]);
        }
    }

    // inter-reduce to the reduced basis
    for (;;) {
        bool changed = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            std::vector<Element> others;
            for (size_t j = 0; j < basis.size(); ++j)
                if (j != i && !basis[j].isZero()) others.push_back(basis[j]);
            Element r = gb_reduce(basis[i], others);
            if (r != basis[i]) {
                changed = true;
                basis[i] = r;
            }
        }
        std::vector<Element> keep;
        for (auto& g : basis)
            if (!g.isZero()) keep.push_back(g * (1 / g.leadingCoefficient()));
        basis = keep;
        if (!changed) break;
    }
    std::sort(basis.begin(), basis.end(), [&](const Element& a, const Element& b) {
        return monoGreater(*ctx, b.leadingMonomial(), a.leadingMonomial());
    });
    return basis;
}

// Reduction apparatus for one presentation slice: a Groebner basis, the
// standard monomial basis of the quotient (when finite dimensional), and an
// optional declared basis with its change-of-basis solve.
class ReductionEngine {
public:
    ReductionEngine(ContextPtr ctx, std::vector<Element> relations,
                    std::vector<Monomial> declaredBasis = {})
        : ctx_(std::move(ctx)), declared_(std::move(declaredBasis)) {
        gb_ = groebner_basis(std::move(relations));
        for (const auto& g : gb_) {
            if (!g.isZero() && g.leadingMonomial().isOne())
                throw std::invalid_argument("inconsistent presentation: 1 reduces to 0");
        }
        buildBasis();
    }

    const ContextPtr& context() const { return ctx_; }
    const std::vector<Element>& basisOfIdeal() const { return gb_; }
    bool finiteDimensional() const { return finite_; }

    int dimension() const {
        requireFinite();
        return (int)standard_.size();
    }
    const std::vector<Monomial>& standardBasis() const {
        requireFinite();
        return standard_;
    }
    const std::vector<Monomial>& declaredBasis() const {
        requireFinite();
        return declared_;
    }

    // canonical representative on the standard monomials
    Element reduce(const Element& x) const { return gb_reduce(x, gb_); }

    // coordinates of reduce(x) in the standard basis
    Vec coordinates(const Element& x) const {
        requireFinite();
        Element r = reduce(x);
        Vec v(standard_.size(), 0);
        for (const auto& [m, c] : r.terms()) {
            bool found = false;
            for (size_t i = 0; i < standard_.size(); ++i) {
                if (standard_[i] == m) {
                    v[i] = c;
                    found = true;
                    break;
                }
            }
            if (!found) throw std::logic_error("reduced form off the standard basis");
        }
        return v;
    }

    // normal form re-expressed in the declared basis
    Element normal_form(const Element& x) const {
        requireFinite();
        Vec v = coordinates(x);
        Vec d = matVec(toDeclared_, v);
        Element r(ctx_);
        for (size_t i = 0; i < declared_.size(); ++i) r.addTerm(declared_[i], d[i]);
        return r;
    }

    Vec declaredCoordinates(const Element& x) const {
        requireFinite();
        return matVec(toDeclared_, coordinates(x));
    }

private:
    void requireFinite() const {
        if (!finite_)
            throw std::logic_error("quotient is not finite dimensional over the even generators");
    }

    void buildBasis() {
        // finite iff every even generator has a pure-power leading term
        std::vector<int> caps(ctx_->evenCount(), -1);
        for (const auto& g : gb_) {
            const Monomial& lm = g.leadingMonomial();
            if (lm.odd) continue;
            int slot = -1, nz = 0;
            for (size_t s = 0; s < lm.even.size(); ++s) {
                if (lm.even[s]) {
                    ++nz;
                    slot = (int)s;
                }
            }
            if (nz == 1 && (caps[slot] < 0 || lm.even[slot] < caps[slot])) caps[slot] = lm.even[slot];
        }
        finite_ = true;
        for (int c : caps)
            if (c < 0 && ctx_->evenCount() > 0) finite_ = false;
        if (ctx_->evenCount() == 0) finite_ = true;
        if (!finite_) {
            if (!declared_.empty())
                throw std::invalid_argument("declared basis on an infinite-dimensional quotient");
            return;
        }

        // enumerate monomials below the caps, keep the ones no leading term divides
        std::vector<Monomial> all;
        Monomial cur = Monomial::one(*ctx_);
        enumerate(0, caps, cur, all);
        for (const auto& m : all) {
            bool divisible = false;
            for (const auto& g : gb_) {
                if (g.leadingMonomial().divides(m)) {
                    divisible = true;
                    break;
                }
            }
            if (!divisible) standard_.push_back(m);
        }
        std::sort(standard_.begin(), standard_.end(),
                  [&](const Monomial& a, const Monomial& b) { return monoGreater(*ctx_, b, a); });

        if (declared_.empty()) {
            declared_ = standard_;
            toDeclared_.assign(standard_.size(), Vec(standard_.size(), 0));
            for (size_t i = 0; i < standard_.size(); ++i) toDeclared_[i][i] = 1;
            return;
        }
        if (declared_.size() != standard_.size())
            throw std::invalid_argument(
                "declared basis size " + std::to_string(declared_.size()) +
                " does not match quotient dimension " + std::to_string(standard_.size()));
        // columns = standard coordinates of declared monomials
        Mat b(standard_.size(), Vec(declared_.size(), 0));
        for (size_t j = 0; j < declared_.size(); ++j) {
            Vec col = coordinates(Element::term(ctx_, declared_[j], 1));
            for (size_t i = 0; i < col.size(); ++i) b[i][j] = col[i];
        }
        auto inv = invert(b);
        if (!inv)
            throw std::invalid_argument("declared basis is not a basis of the quotient (rank " +
                                        std::to_string(rank(b)) + " of " +
                                        std::to_string(standard_.size()) + ")");
        toDeclared_ = *inv;
    }

    void enumerate(int slot, const std::vector<int>& caps, Monomial& cur,
                   std::vector<Monomial>& out) const {
        if (slot == ctx_->evenCount()) {
            for (uint32_t odd = 0; odd < (1u << ctx_->oddCount()); ++odd) {
                Monomial m = cur;
                m.odd = odd;
                out.push_back(m);
            }
            return;
        }
        for (int e = 0; e < caps[slot]; ++e) {
            cur.even[slot] = (uint16_t)e;
            enumerate(slot + 1, caps, cur, out);
        }
        cur.even[slot] = 0;
    }

    ContextPtr ctx_;
    std::vector<Element> gb_;
    std::vector<Monomial> standard_;
    std::vector<Monomial> declared_;
    Mat toDeclared_;
    bool finite_ = false;
};

} // namespace qcoh
