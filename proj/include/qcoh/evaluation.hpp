#pragma once

#include "qcoh/projection.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qcoh {

// Scalar evaluation with its diagnostic trail.
struct EvalResult {
    Rational value;
    int instantonDegree = -1; // from deg z = 6g-6+4d when defined
    Element normalForm;       // declared-basis normal form of the projected class
    Rational gammaTopCoeff;   // coefficient of gamma^{g-1} in normalForm
};

// Evaluation front end over the built-in rings: invariant projection,
// top-pairing functionals, multi-point invariants on generators, and the
// Donaldson series for both stored genera.
class Evaluator {
public:
    Evaluator()
        : d3_(builtin_data(3, "classical")), q3_(builtin_data(3, "quantum")),
          f2_(builtin_data(2, "floer")), proj3_(d3_.moduleCtx, d3_.invCtx, 3),
          proj2_(f2_.moduleCtx, f2_.invCtx, 2), cl3_(d3_.pres), qu3_(q3_.pres),
          fl2_(f2_.pres) {}

    const GenusData& data(int genus, const std::string& kind) const {
        if (genus == 3 && kind == "classical") return d3_;
        if (genus == 3 && kind == "quantum") return q3_;
        if (genus == 2 && kind == "floer") return f2_;
        throw std::invalid_argument("genus " + std::to_string(genus) + " ring '" + kind +
                                    "' not stored; supply a presentation file");
    }
    const CompiledPresentation& ring(int genus, const std::string& kind) const {
        if (genus == 3 && kind == "classical") return cl3_;
        if (genus == 3 && kind == "quantum") return qu3_;
        if (genus == 2 && kind == "floer") return fl2_;
        throw std::invalid_argument("genus " + std::to_string(genus) + " ring '" + kind +
                                    "' not stored; supply a presentation file");
    }
    const ProjectionSpace& proj(int genus) const {
        if (genus == 3) return proj3_;
        if (genus == 2) return proj2_;
        throw std::invalid_argument("genus must be 2 or 3");
    }

    // component of x in the trivial isotypic summand
    Element project_invariant(const Element& x, int genus) const {
        return proj(genus).project_invariant(asModule(x, genus));
    }

    // c_{0,0,g-1} of the declared-basis normal form, scaled by +-2^{g-1} g!
    EvalResult pairing_value(const Element& z, int genus, const std::string& kind) const {
        if (kind != "quantum" && kind != "floer")
            throw std::invalid_argument("pairing normalization is stored for the quantum and "
                                        "floer rings");
        const CompiledPresentation& r = ring(genus, kind);
        EvalResult out;
        out.normalForm = r.normal_form(asInvariant(z, genus));
        Monomial top = Monomial::one(*r.presentation().ctx);
        top.even[2] = (uint16_t)(genus - 1);
        out.gammaTopCoeff = out.normalForm.coefficient(top);
        Rational norm = Rational(factorial(genus)) * pow_rat(2, genus - 1);
        out.value = out.gammaTopCoeff * (kind == "floer" ? -norm : norm);
        auto deg = z.homogeneousDegree();
        if (deg && (*deg - (6 * genus - 6)) % 4 == 0 && *deg >= 6 * genus - 6)
            out.instantonDegree = (*deg - (6 * genus - 6)) / 4;
        return out;
    }

    // quantum evaluation of a product word (genus 3)
    EvalResult tilde_psi_full(const Element& word) const {
        Element p = proj3_.project_invariant(asModule(word, 3));
        return pairing_value(p, 3, "quantum");
    }
    Rational tilde_psi(const Element& word) const { return tilde_psi_full(word).value; }

    // multi-point invariant on generator classes at fixed instanton degree d
    Rational gw_multipoint(const std::vector<Element>& classes, int d, int genus = 3) const {
        if (genus != 3) throw std::invalid_argument("multi-point invariants stored for genus 3");
        Element prod = Element::constant(d3_.moduleCtx, 1);
        int total = 0;
        for (const auto& c : classes) {
            Element cm = asModule(c, 3);
            auto deg = cm.homogeneousDegree();
            if (!deg) throw std::invalid_argument("inhomogeneous class in invariant input");
            total += *deg;
            prod = prod * cm;
        }
        if (total != 6 * genus - 6 + 4 * d) return 0;
        return tilde_psi(prod);
    }

    // top pairing in the classical ring of the product of two module classes
    Rational classical_pairing(const Element& x, const Element& y, int genus = 3) const {
        if (genus != 3) throw std::invalid_argument("classical pairing stored for genus 3");
        Element p = proj3_.project_invariant(asModule(x, 3) * asModule(y, 3));
        Element nf = cl3_.normal_form(p);
        Monomial top = Monomial::one(*d3_.invCtx);
        top.even[2] = 2;
        return nf.coefficient(top) * 24;
    }

    // Donaldson series coefficient functional
    Rational donaldson(const Element& z, int genus) const {
        if (genus == 2) {
            Element p = proj2_.project_invariant(asModule(z, 2));
            return pairing_value(p, 2, "floer").value;
        }
        if (genus != 3) throw std::invalid_argument("genus must be 2 or 3");
        Element zi = proj3_.project_invariant(asModule(z, 3));
        Rational out = 0;
        auto degs = zi.degreesPresent();
        for (int deg : degs) {
            int shift = deg - 12;
            if (shift < 0 || shift % 4) continue;
            int d = shift / 4;
            Rational v = tilde_psi(transfer_by_name(zi.homogeneousPart(deg), d3_.moduleCtx));
            out += ((3 * d + 1) % 2 == 0 ? v : -v);
        }
        return out;
    }

    // (D_g(gamma z), 2g D_{g-1}(z)), the genus recursion's two sides
    std::pair<Rational, Rational> genus_step_check(const Element& z, int genus = 3) const {
        if (genus != 3)
            throw std::invalid_argument("the stored rings support the genus step only at 3");
        Element z3 = asInvariant(z, 3);
        Element lhsArg = z3 * Element::generator(d3_.invCtx, "gamma");
        Element z2 = transfer_by_name(z3, f2_.invCtx);
        return {donaldson(lhsArg, 3), Rational(2 * genus) * donaldson(z2, 2)};
    }

private:
    // accept either the module context or the invariant context of the genus
    Element asModule(const Element& x, int genus) const {
        const GenusData& d = genus == 3 ? d3_ : f2_;
        if (x.context()->sameShape(*d.moduleCtx)) return x;
        if (x.context()->sameShape(*d.invCtx)) return transfer_by_name(x, d.moduleCtx);
        throw std::invalid_argument("element context does not match genus " +
                                    std::to_string(genus));
    }
    Element asInvariant(const Element& x, int genus) const {
        const GenusData& d = genus == 3 ? d3_ : f2_;
        if (x.context()->sameShape(*d.invCtx)) return x;
        if (x.context()->sameShape(*d.moduleCtx)) {
            for (const auto& [m, c] : x.terms())
                if (m.odd)
                    throw std::invalid_argument("invariant polynomial input carries odd classes");
            return transfer_by_name(x, d.invCtx);
        }
        throw std::invalid_argument("element context does not match genus " +
                                    std::to_string(genus));
    }

    GenusData d3_, q3_, f2_;
    ProjectionSpace proj3_, proj2_;
    CompiledPresentation cl3_, qu3_, fl2_;
};

} // namespace qcoh
