#pragma once

#include <array>
#include <bit>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qcoh/builtins.hpp"
#include "qcoh/groebner.hpp"

namespace qcoh {

// Cohomology of the rank-three projective bundle over the Jacobian, with the
// invariant classes kept in two even variables: omega (nilpotent) and the
// hyperplane class h.  omega is interchangeable with phi1*phi4 + phi2*phi5 +
// phi3*phi6; expand_omega performs that rewrite.  Since the odd factor has
// top degree 6, omega^3 annihilates every odd generator, and omega^4 = 0.
class NSpace {
public:
    NSpace() {
        std::vector<GeneratorSpec> gens{{"omega", 2, Parity::Even}, {"h", 2, Parity::Even}};
        for (int i = 1; i <= 6; ++i)
            gens.push_back({"phi" + std::to_string(i), 1, Parity::Odd});
        ctx_ = std::make_shared<Context>(std::move(gens));
        module3_ = module_context(3);
        inv3_ = invariant_context();

        Element omega = Element::generator(ctx_, "omega");
        Element h = Element::generator(ctx_, "h");
        std::vector<Element> rels{
            h.pow(3) + omega * h.pow(2) * Rational(4) + omega.pow(2) * h * Rational(8) +
                omega.pow(3) * rat(32, 3),
            omega.pow(4),
        };
        for (int i = 1; i <= 6; ++i)
            rels.push_back(omega.pow(3) * Element::generator(ctx_, "phi" + std::to_string(i)));
        engine_.emplace(ctx_, rels);

        omegaWord_ = Element::zero(ctx_);
        for (int i = 1; i <= 3; ++i)
            omegaWord_ += Element::generator(ctx_, "phi" + std::to_string(i)) *
                          Element::generator(ctx_, "phi" + std::to_string(i + 3));

        images_.assign(module3_->size(), Element::zero(ctx_));
        images_[module3_->find("alpha")] = omega * Rational(4) + h;
        images_[module3_->find("beta")] = h.pow(2);
        images_[module3_->find("gamma")] = omega * h.pow(2) * Rational(-2);
        for (int i = 1; i <= 6; ++i)
            images_[module3_->find("psi" + std::to_string(i))] =
                h * Element::generator(ctx_, "phi" + std::to_string(i)) * Rational(-1);
    }

    const ContextPtr& context() const { return ctx_; }
    const ReductionEngine& engine() const { return *engine_; }
    Element reduce(const Element& x) const { return engine_->reduce(x); }

    // ring map alpha -> 4*omega + h, beta -> h^2, gamma -> -2*omega*h^2,
    // psi_i -> -h*phi_i, reduced afterwards
    Element restrict_to_N(const Element& x) const {
        Element xm = coerce(x);
        Element out = Element::zero(ctx_);
        for (const auto& [m, c] : xm.terms()) {
            Element t = Element::constant(ctx_, c);
            for (int s = 0; s < module3_->evenCount(); ++s)
                t = t * images_[module3_->evenGen(s)].pow(m.even[s]);
            for (int s = 0; s < module3_->oddCount(); ++s)
                if (m.odd & (1u << s)) t = t * images_[module3_->oddGen(s)];
            out += t;
        }
        return engine_->reduce(out);
    }

    Element expand_omega(const Element& x) const {
        Element out = Element::zero(ctx_);
        for (const auto& [m, c] : x.terms()) {
            Monomial stripped = m;
            int a = stripped.even[0];
            stripped.even[0] = 0;
            out += Element::term(ctx_, stripped, c) * omegaWord_.pow(a);
        }
        return out;
    }

    struct JPairing {
        Rational value;
        bool nonTop = false; // some component was not of top odd degree
    };

    // coefficient of the oriented word phi1 phi4 phi2 phi5 phi3 phi6 after
    // omega expansion; that word carries orientation +1
    JPairing pair_J_full(const Element& x) const {
        JPairing out;
        Element acc = Element::zero(ctx_);
        for (const auto& [m, c] : x.terms()) {
            int len = std::popcount(m.odd);
            if (m.even[1] != 0 || len + 2 * m.even[0] != 6) {
                out.nonTop = true;
                continue;
            }
            Monomial stripped = m;
            stripped.even[0] = 0;
            acc += Element::term(ctx_, stripped, c) * omegaWord_.pow(m.even[0]);
        }
        Monomial full = Monomial::one(*ctx_);
        full.odd = (1u << 6) - 1;
        // the sorted word phi1..phi6 is an odd permutation of the oriented one
        out.value = -acc.coefficient(full);
        return out;
    }

    Rational pair_J(const Element& x) const { return pair_J_full(x).value; }

    // three-point invariant of the line class in the fibre: per monomial
    // triple, zero unless the total degree is 16 and the total h-exponent b is
    // at least 5; otherwise the J-pairing of the odd parts against
    // omega^{a} * (-8)^{b-5}/(b-5)! * omega^{b-5}
    Rational psi_N_degree1(const Element& z1, const Element& z2, const Element& z3) const {
        std::array<Element, 3> z{engine_->reduce(z1), engine_->reduce(z2), engine_->reduce(z3)};
        Element omega = Element::generator(ctx_, "omega");
        Rational total = 0;
        for (const auto& [m1, c1] : z[0].terms())
            for (const auto& [m2, c2] : z[1].terms())
                for (const auto& [m3, c3] : z[2].terms()) {
                    int deg = m1.degree(*ctx_) + m2.degree(*ctx_) + m3.degree(*ctx_);
                    int b = m1.even[1] + m2.even[1] + m3.even[1];
                    if (deg != 16 || b < 5) continue;
                    int a = m1.even[0] + m2.even[0] + m3.even[0];
                    Element w = Element::term(ctx_, oddPart(m1), c1) *
                                Element::term(ctx_, oddPart(m2), c2) *
                                Element::term(ctx_, oddPart(m3), c3);
                    if (w.isZero()) continue;
                    Rational factor = pow_rat(-8, b - 5) / Rational(factorial(b - 5));
                    total += factor * pair_J(w * omega.pow(a + b - 5));
                }
        return total;
    }

    // degree-one three-point invariant on the moduli space itself, computed
    // through the restrictions
    Rational gw_degree1(const Element& x, const Element& y, const Element& z) const {
        return psi_N_degree1(restrict_to_N(x), restrict_to_N(y), restrict_to_N(z));
    }

private:
    static Monomial oddPart(const Monomial& m) {
        Monomial o = m;
        for (auto& e : o.even) e = 0;
        return o;
    }

    Element coerce(const Element& x) const {
        if (x.context()->sameShape(*module3_)) return transfer_by_name(x, module3_);
        if (x.context()->sameShape(*inv3_)) return transfer_by_name(x, module3_);
        throw std::invalid_argument("restriction expects a genus 3 class");
    }

    ContextPtr ctx_, module3_, inv3_;
    std::optional<ReductionEngine> engine_;
    std::vector<Element> images_;
    Element omegaWord_;
};

} // namespace qcoh
