#pragma once

#include <optional>
#include <vector>

#include "qcoh/groebner.hpp"
#include "qcoh/parse.hpp"

namespace qcoh {

// The ruled threefold R fibred over P(E): three even degree-2 classes with
// f^2 = 0, h^2 = f h, k^2 = (5f - 2h) k + 8 f h, top pairing <f h k> = 1.
// slant_fiber extracts the k-linear part into the base P(E) ring
// C[fbar, h] / (fbar^2, h^2 - fbar h) with top pairing <fbar h> = 1.
class RSpace {
public:
    RSpace() {
        ctx_ = std::make_shared<Context>(std::vector<GeneratorSpec>{
            {"f", 2, Parity::Even}, {"h", 2, Parity::Even}, {"k", 2, Parity::Even}});
        fiberCtx_ = std::make_shared<Context>(
            std::vector<GeneratorSpec>{{"fbar", 2, Parity::Even}, {"h", 2, Parity::Even}});
        engine_.emplace(ctx_, std::vector<Element>{
                                  parse_element("f^2", ctx_),
                                  parse_element("h^2 - f*h", ctx_),
                                  parse_element("k^2 - 5*f*k + 2*h*k - 8*f*h", ctx_),
                              });
        fiberEngine_.emplace(fiberCtx_, std::vector<Element>{
                                            parse_element("fbar^2", fiberCtx_),
                                            parse_element("h^2 - fbar*h", fiberCtx_),
                                        });
    }

    const ContextPtr& context() const { return ctx_; }
    const ContextPtr& fiberContext() const { return fiberCtx_; }
    const ReductionEngine& engine() const { return *engine_; }
    Element reduce(const Element& x) const { return engine_->reduce(x); }

    // mu-classes of the three moduli generators, with the determinant class
    // substituted by f and the canonical class by 4f
    Element alphaR() const { return parse_element("2*f - 4*h - 2*k", ctx_); }
    Element betaR() const { return parse_element("-8*f*h - f*k", ctx_); }
    Element gammaR() const {
        return engine_->reduce(parse_element("-6*(2*h + k)^2*f", ctx_));
    }

    Rational pair_R(const Element& x) const {
        return engine_->reduce(x).coefficient(parse_element("f*h*k", ctx_).leadingMonomial());
    }

    Element slant_fiber(const Element& x) const {
        Element red = engine_->reduce(x);
        Element out = Element::zero(fiberCtx_);
        int fSlot = ctx_->evenSlot(ctx_->find("f"));
        int hSlot = ctx_->evenSlot(ctx_->find("h"));
        int kSlot = ctx_->evenSlot(ctx_->find("k"));
        for (const auto& [m, c] : red.terms()) {
            if (m.even[kSlot] != 1) continue;
            Element t = Element::constant(fiberCtx_, c) *
                        Element::generator(fiberCtx_, "fbar").pow(m.even[fSlot]) *
                        Element::generator(fiberCtx_, "h").pow(m.even[hSlot]);
            out += t;
        }
        return fiberEngine_->reduce(out);
    }

    Rational pair_fiber(const Element& x) const {
        return fiberEngine_->reduce(x).coefficient(
            parse_element("fbar*h", fiberCtx_).leadingMonomial());
    }

    // degree-2 three-point invariant with a point class: alpha evaluates to 2
    // on twice the generating fibre class
    Rational psi2A_alpha_gamma_pt() const { return pair_R(gammaR()) * 2; }

    Rational psi2A_beta_beta_pt() const {
        Element s = slant_fiber(betaR());
        return pair_fiber(s * s);
    }

private:
    ContextPtr ctx_, fiberCtx_;
    std::optional<ReductionEngine> engine_, fiberEngine_;
};

} // namespace qcoh
