#pragma once

#include "qcoh/context.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qcoh {

// Sum of (Scalar x Monomial) terms over a fixed context, stored sparsely with
// the leading term first. Zero coefficients are never stored.
class Element {
public:
    using Terms = std::map<Monomial, Rational, MonoDescCmp>;

    Element() = default;
    explicit Element(ContextPtr c) : ctx_(std::move(c)), terms_(MonoDescCmp{ctx_.get()}) {}

    static Element zero(ContextPtr c) { return Element(std::move(c)); }

    static Element constant(ContextPtr c, const Rational& v) {
        Element e(c);
        e.addTerm(Monomial::one(*c), v);
        return e;
    }

    static Element generator(ContextPtr c, int gi) {
        Element e(c);
        Monomial m = Monomial::one(*c);
        if (c->evenSlot(gi) >= 0)
            m.even[c->evenSlot(gi)] = 1;
        else
            m.odd = 1u << c->oddSlot(gi);
        e.addTerm(m, 1);
        return e;
    }

    static Element generator(const ContextPtr& c, const std::string& name) {
        int gi = c->find(name);
        if (gi < 0) throw std::invalid_argument("unknown generator: " + name);
        return generator(c, gi);
    }

    static Element term(ContextPtr c, Monomial m, const Rational& v) {
        Element e(std::move(c));
        e.addTerm(std::move(m), v);
        return e;
    }

    const ContextPtr& context() const { return ctx_; }
    const Terms& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    size_t termCount() const { return terms_.size(); }

    void addTerm(Monomial m, const Rational& v) {
        if (v == 0) return;
        auto [it, fresh] = terms_.try_emplace(std::move(m), v);
        if (!fresh) {
            it->second += v;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    const Monomial& leadingMonomial() const {
        if (isZero()) throw std::logic_error("leading term of zero");
        return terms_.begin()->first;
    }
    const Rational& leadingCoefficient() const {
        if (isZero()) throw std::logic_error("leading term of zero");
        return terms_.begin()->second;
    }

    // nullopt: zero (degree is "any") or genuinely inhomogeneous
    std::optional<int> homogeneousDegree() const {
        std::optional<int> d;
        for (const auto& [m, c] : terms_) {
            int dm = m.degree(*ctx_);
            if (!d)
                d = dm;
            else if (*d != dm)
                return std::nullopt;
        }
        return d;
    }

    Element homogeneousPart(int deg) const {
        Element r(ctx_);
        for (const auto& [m, c] : terms_)
            if (m.degree(*ctx_) == deg) r.addTerm(m, c);
        return r;
    }

    std::vector<int> degreesPresent() const {
        std::vector<int> ds;
        for (const auto& [m, c] : terms_) {
            int d = m.degree(*ctx_);
            if (std::find(ds.begin(), ds.end(), d) == ds.end()) ds.push_back(d);
        }
        std::sort(ds.begin(), ds.end());
        return ds;
    }

    Element& operator+=(const Element& o) {
        requireSameContext(o);
        for (const auto& [m, c] : o.terms_) addTerm(m, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        requireSameContext(o);
        for (const auto& [m, c] : o.terms_) addTerm(m, -c);
        return *this;
    }
    Element& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    friend Element operator+(Element a, const Element& b) { return a += b, a; }
    friend Element operator-(Element a, const Element& b) { return a -= b, a; }
    friend Element operator*(const Rational& s, Element a) { return a *= s, a; }
    friend Element operator*(Element a, const Rational& s) { return a *= s, a; }
    friend Element operator-(Element a) { return a *= Rational(-1), a; }

    friend Element operator*(const Element& a, const Element& b) {
        a.requireSameContext(b);
        Element r(a.ctx_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                int sign = koszulMergeSign(ma.odd, mb.odd);
                if (!sign) continue;
                Monomial m;
                m.odd = ma.odd | mb.odd;
                m.even.resize(ma.even.size());
                for (size_t s = 0; s < m.even.size(); ++s)
                    m.even[s] = (uint16_t)(ma.even[s] + mb.even[s]);
                r.addTerm(std::move(m), ca * cb * sign);
            }
        }
        return r;
    }

    Element pow(int n) const {
        if (n < 0) throw std::invalid_argument("negative power");
        Element r = constant(ctx_, 1);
        for (int i = 0; i < n; ++i) r = r * *this;
        return r;
    }

    bool operator==(const Element& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        auto it = o.terms_.begin();
        for (const auto& [m, c] : terms_) {
            if (!(m == it->first) || c != it->second) return false;
            ++it;
        }
        return true;
    }
    bool operator!=(const Element& o) const { return !(*this == o); }

    // Display order: total degree descending, then within a degree the
    // earlier-declared generator with the higher exponent leads. Homogeneous
    // polynomials in alpha, beta, gamma therefore print in the familiar
    // alpha^3 + 5*alpha*beta + 4*gamma shape.
    std::string str() const {
        if (isZero()) return "0";
        std::vector<std::pair<Monomial, Rational>> disp(terms_.begin(), terms_.end());
        std::sort(disp.begin(), disp.end(), [&](const auto& x, const auto& y) {
            const Monomial &a = x.first, &b = y.first;
            int da = a.degree(*ctx_), db = b.degree(*ctx_);
            if (da != db) return da > db;
            for (int gi = 0; gi < ctx_->size(); ++gi) {
                int ea = a.exponent(*ctx_, gi), eb = b.exponent(*ctx_, gi);
                if (ea != eb) return ea > eb;
            }
            return false;
        });
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : disp) {
            Rational a = c;
            if (first) {
                if (a < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            os << termStr(m, a);
            first = false;
        }
        return os.str();
    }

private:
    void requireSameContext(const Element& o) const {
        if (ctx_ == o.ctx_) return;
        if (!ctx_ || !o.ctx_ || !ctx_->sameShape(*o.ctx_))
            throw std::invalid_argument("context mismatch");
    }

    std::string termStr(const Monomial& m, const Rational& absCoeff) const {
        std::string mono;
        for (int gi = 0; gi < ctx_->size(); ++gi) {
            int e = m.exponent(*ctx_, gi);
            if (!e) continue;
            if (!mono.empty()) mono += "*";
            mono += ctx_->gen(gi).name;
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) return rat_str(absCoeff);
        if (absCoeff == 1) return mono;
        return rat_str(absCoeff) + "*" + mono;
    }

    ContextPtr ctx_;
    Terms terms_{MonoDescCmp{nullptr}};
};

// Rebuild x over another context, matching generators by name. Signs stay
// correct because each monomial is reassembled by multiplication.
inline Element transfer_by_name(const Element& x, const ContextPtr& target) {
    Element r(target);
    const Context& src = *x.context();
    for (const auto& [m, c] : x.terms()) {
        Element t = Element::constant(target, c);
        for (int gi = 0; gi < src.size(); ++gi) {
            int e = m.exponent(src, gi);
            if (!e) continue;
            int ti = target->find(src.gen(gi).name);
            if (ti < 0)
                throw std::invalid_argument("generator " + src.gen(gi).name +
                                            " has no counterpart in the target context");
            t = t * Element::generator(target, ti).pow(e);
        }
        r += t;
    }
    return r;
}

} // namespace qcoh
