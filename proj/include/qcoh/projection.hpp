#pragma once

#include "qcoh/builtins.hpp"
#include "qcoh/linalg.hpp"

#include <array>
#include <bit>
#include <map>
#include <stdexcept>

namespace qcoh {

// Raised when a computation needs a component of the symplectic decomposition
// that the stored ring structure does not carry (the primitive degree-3
// summand).
struct NotDetermined : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Symplectic-type decomposition of a module class: an invariant polynomial,
// one coefficient polynomial per degree-3 generator, one per stored primitive
// pair word, and the unstored leftover.
struct Decomposition {
    Element invariant;               // even context, polynomial in alpha, beta, gamma
    std::vector<Element> oddCoeff;   // per psi_i, even context
    std::vector<Element> primCoeff;  // per stored primitive pair word, even context
    Element leftover;                // module context, gamma-free words
    bool determined() const { return leftover.isZero(); }
};

// Projection workspace for one genus: the Kaehler-type word
// w = sum_i psi_i psi_{g+i}, its powers, and the solved coordinate systems
// for each odd word length. All coordinate extraction reduces to exact linear
// algebra in the word basis, so no orientation convention enters the ratios.
class ProjectionSpace {
public:
    ProjectionSpace(ContextPtr moduleCtx, ContextPtr invCtx, int genus)
        : mod_(std::move(moduleCtx)), inv_(std::move(invCtx)), g_(genus) {
        omega_ = Element(mod_);
        for (int i = 0; i < g_; ++i) {
            int a = mod_->oddGen(i), b = mod_->oddGen(i + g_);
            omega_ += Element::generator(mod_, a) * Element::generator(mod_, b);
        }
        omegaPow_.push_back(Element::constant(mod_, 1));
        for (int k = 1; k <= g_; ++k) omegaPow_.push_back(omegaPow_.back() * omega_);
        full_ = Monomial::one(*mod_);
        full_.odd = (g_ >= 16) ? ~0u : ((1u << (2 * g_)) - 1);
        tTop_ = omegaPow_[g_].coefficient(full_);
        if (tTop_ == 0) throw std::logic_error("degenerate pairing word");
        if (g_ == 3) buildCoordinateSystems();
    }

    const ContextPtr& moduleContext() const { return mod_; }
    const ContextPtr& invariantContext() const { return inv_; }
    const Element& omega() const { return omega_; }

    // coefficient of the full odd word
    Rational T(const Element& x) const { return x.coefficient(full_); }

    // substitute the odd-word expansion gamma -> -2w
    Element expand_gamma(const Element& x) const {
        int gi = mod_->find("gamma");
        Element r(mod_);
        Element gw = omega_ * Rational(-2);
        for (const auto& [m, c] : x.terms()) {
            int e = m.exponent(*mod_, gi);
            if (!e) {
                r.addTerm(m, c);
                continue;
            }
            Monomial rest = m;
            rest.even[mod_->evenSlot(gi)] = 0;
            r += Element::term(mod_, rest, c) * gw.pow(e);
        }
        return r;
    }

    // component in the trivial isotypic summand, as a polynomial in
    // alpha, beta, gamma (any genus)
    Element project_invariant(const Element& x) const {
        Element out(inv_);
        Element gammaInv = Element::generator(inv_, "gamma");
        const Element ex = expand_gamma(x);
        for (const auto& [m, c] : ex.terms()) {
            int len = std::popcount(m.odd);
            if (len % 2) continue;
            int k = len / 2;
            if (k > g_) continue; // cannot happen: word lengths are bounded by 2g
            Monomial w = Monomial::one(*mod_);
            w.odd = m.odd;
            Rational ct = T(Element::term(mod_, w, 1) * omegaPow_[g_ - k]) / tTop_;
            if (ct == 0) continue;
            Element evenPart = evenToInv(m, c);
            out += evenPart * gammaInv.pow(k) * (ct * pow_rat(Rational(-1, 2), k));
        }
        return out;
    }

    // full stored decomposition (genus 3 only)
    Decomposition decompose(const Element& x) const {
        if (g_ != 3) throw std::logic_error("stored decomposition requires genus 3");
        Decomposition d;
        d.invariant = Element(inv_);
        d.oddCoeff.assign(6, Element(inv_));
        d.primCoeff.assign(14, Element(inv_));
        d.leftover = Element(mod_);
        Element gammaInv = Element::generator(inv_, "gamma");

        const Element ex = expand_gamma(x);
        for (const auto& [m, c] : ex.terms()) {
            Element even = evenToInv(m, c);
            uint32_t odd = m.odd;
            int len = std::popcount(odd);
            Element w = Element::term(mod_, oddOnly(m), 1);
            switch (len) {
            case 0:
                d.invariant += even;
                break;
            case 1:
                d.oddCoeff[std::countr_zero(odd)] += even;
                break;
            case 2: {
                Vec coords = solveWith(len2_, idx2_, w);
                for (int j = 0; j < 14; ++j) d.primCoeff[j] += even * coords[j];
                d.invariant += even * gammaInv * (coords[14] * Rational(-1, 2));
                break;
            }
            case 3: {
                Element rest = w;
                for (int i = 0; i < 6; ++i) {
                    int p = pairOf(i);
                    Rational ci = T(w * omegaPsi(p)) / gram3_[i];
                    if (ci == 0) continue;
                    d.oddCoeff[i] += even * gammaInv * (ci * Rational(-1, 2));
                    rest -= omegaPsi(i) * ci;
                }
                d.leftover += rest * evenToMod(m, c);
                break;
            }
            case 4: {
                Vec coords = solveWith(len4_, idx4_, w);
                for (int j = 0; j < 14; ++j)
                    d.primCoeff[j] += even * gammaInv * (coords[j] * Rational(-1, 2));
                d.invariant += even * gammaInv.pow(2) * (coords[14] / 4);
                break;
            }
            case 5: {
                Vec coords = solveWith(len5_, idx5_, w);
                for (int i = 0; i < 6; ++i)
                    d.oddCoeff[i] += even * gammaInv.pow(2) * (coords[i] / 4);
                break;
            }
            case 6:
                d.invariant += even * gammaInv.pow(3) * (T(w) / tTop_ * Rational(-1, 8));
                break;
            default:
                throw std::logic_error("odd word length out of range");
            }
        }
        return d;
    }

    // inverse of decompose against the stored prefactor words; for tests
    Element reassemble(const Decomposition& d, const GenusData& data) const {
        Element r = expand_gamma(transfer_by_name(d.invariant, mod_));
        for (int i = 0; i < (int)d.oddCoeff.size(); ++i)
            r += Element::generator(mod_, mod_->oddGen(i)) *
                 expand_gamma(transfer_by_name(d.oddCoeff[i], mod_));
        const auto& prim = data.pres.pieces.at(1).prefactors;
        for (int j = 0; j < (int)d.primCoeff.size(); ++j)
            r += prim.at(j) * expand_gamma(transfer_by_name(d.primCoeff[j], mod_));
        return r + d.leftover;
    }

private:
    // even part of a term as an invariant-context element (gamma-free here)
    Element evenToInv(const Monomial& m, const Rational& c) const {
        Element r = Element::constant(inv_, c);
        for (int s = 0; s < mod_->evenCount(); ++s) {
            if (!m.even[s]) continue;
            int gi = mod_->evenGen(s);
            r = r * Element::generator(inv_, mod_->gen(gi).name).pow(m.even[s]);
        }
        return r;
    }

    Element evenToMod(const Monomial& m, const Rational& c) const {
        Monomial e = m;
        e.odd = 0;
        return Element::term(mod_, e, c);
    }

    static Monomial oddOnly(const Monomial& m) {
        Monomial w = m;
        for (auto& e : w.even) e = 0;
        return w;
    }

    int pairOf(int slot) const { return slot < g_ ? slot + g_ : slot - g_; }

    Element psiEl(int slot) const { return Element::generator(mod_, mod_->oddGen(slot)); }
    Element omegaPsi(int slot) const { return omega_ * psiEl(slot); }

    // index all odd masks of one popcount
    std::map<uint32_t, int> maskIndex(int len) const {
        std::map<uint32_t, int> ix;
        for (uint32_t m = 0; m < (1u << (2 * g_)); ++m)
            if (std::popcount(m) == len) ix.emplace(m, (int)ix.size());
        return ix;
    }

    Vec wordVector(const Element& e, const std::map<uint32_t, int>& ix) const {
        Vec v(ix.size(), 0);
        for (const auto& [m, c] : e.terms()) v[ix.at(m.odd)] = c;
        return v;
    }

    Vec solveWith(const Mat& inv, const std::map<uint32_t, int>& ix, const Element& w) const {
        return matVec(inv, wordVector(w, ix));
    }

    void buildCoordinateSystems() {
        GenusData data = builtin_data(3, "classical");
        const auto& prim = data.pres.pieces.at(1).prefactors; // 14 pair words

        auto invertOrDie = [](const Mat& m, const char* what) {
            auto r = invert(m);
            if (!r) throw std::logic_error(std::string("coordinate system degenerate: ") + what);
            return *r;
        };

        idx2_ = maskIndex(2);
        Mat b2(15, Vec(15, 0));
        for (int j = 0; j < 14; ++j) putColumn(b2, j, prim[j], idx2_);
        putColumn(b2, 14, omega_, idx2_);
        len2_ = invertOrDie(b2, "pair words");

        idx4_ = maskIndex(4);
        Mat b4(15, Vec(15, 0));
        for (int j = 0; j < 14; ++j) putColumn(b4, j, omega_ * prim[j], idx4_);
        putColumn(b4, 14, omegaPow_[2], idx4_);
        len4_ = invertOrDie(b4, "degree 8 words");

        idx5_ = maskIndex(5);
        Mat b5(6, Vec(6, 0));
        for (int i = 0; i < 6; ++i) putColumn(b5, i, omegaPow_[2] * psiEl(i), idx5_);
        len5_ = invertOrDie(b5, "degree 15 words");

        for (int i = 0; i < 6; ++i) gram3_.push_back(T(omegaPsi(i) * omegaPsi(pairOf(i))));
    }

    void putColumn(Mat& m, int col, const Element& e, const std::map<uint32_t, int>& ix) const {
        for (const auto& [mono, c] : e.terms()) m[ix.at(mono.odd)][col] = c;
    }

    ContextPtr mod_, inv_;
    int g_;
    Element omega_;
    std::vector<Element> omegaPow_;
    Monomial full_;
    Rational tTop_;
    std::map<uint32_t, int> idx2_, idx4_, idx5_;
    Mat len2_, len4_, len5_;
    std::vector<Rational> gram3_;
};

} // namespace qcoh
