#pragma once

#include "qcoh/rational.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcoh {

enum class Parity { Even, Odd };

struct GeneratorSpec {
    std::string name;
    int degree = 0;
    Parity parity = Parity::Even;
};

// A generator context: fixed list of even (commuting) and odd (anticommuting,
// square-zero) generators. Monomials store even exponents positionally and the
// odd word as a bitmask, so a context supports at most 32 odd generators.
class Context {
public:
    explicit Context(std::vector<GeneratorSpec> gens) : gens_(std::move(gens)) {
        for (size_t i = 0; i < gens_.size(); ++i) {
            const auto& g = gens_[i];
            if (g.name.empty()) throw std::invalid_argument("empty generator name");
            if (find(g.name) != (int)i) throw std::invalid_argument("generator redeclared: " + g.name);
            nameIndex_.push_back((int)i);
            if (g.parity == Parity::Even) {
                evenOf_.push_back((int)i);
                evenSlot_.push_back((int)evenOf_.size() - 1);
                oddSlot_.push_back(-1);
            } else {
                if (oddOf_.size() >= 32) throw std::invalid_argument("too many odd generators");
                oddOf_.push_back((int)i);
                oddSlot_.push_back((int)oddOf_.size() - 1);
                evenSlot_.push_back(-1);
            }
        }
        // Tie-break priority for the weighted-deg-lex order: compare exponents
        // generator by generator, highest degree first, later declaration first.
        priority_.resize(gens_.size());
        for (size_t i = 0; i < gens_.size(); ++i) priority_[i] = (int)i;
        std::sort(priority_.begin(), priority_.end(), [&](int a, int b) {
            if (gens_[a].degree != gens_[b].degree) return gens_[a].degree > gens_[b].degree;
            return a > b;
        });
    }

    int size() const { return (int)gens_.size(); }
    const GeneratorSpec& gen(int i) const { return gens_[i]; }
    int evenCount() const { return (int)evenOf_.size(); }
    int oddCount() const { return (int)oddOf_.size(); }
    int evenGen(int slot) const { return evenOf_[slot]; }   // slot -> generator index
    int oddGen(int slot) const { return oddOf_[slot]; }
    int evenSlot(int gi) const { return evenSlot_[gi]; }    // generator index -> slot or -1
    int oddSlot(int gi) const { return oddSlot_[gi]; }
    const std::vector<int>& priority() const { return priority_; }

    int find(const std::string& name) const {
        for (size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i].name == name) return (int)i;
        return -1;
    }

    bool sameShape(const Context& o) const {
        if (gens_.size() != o.gens_.size()) return false;
        for (size_t i = 0; i < gens_.size(); ++i) {
            if (gens_[i].name != o.gens_[i].name || gens_[i].degree != o.gens_[i].degree ||
                gens_[i].parity != o.gens_[i].parity)
                return false;
        }
        return true;
    }

private:
    std::vector<GeneratorSpec> gens_;
    std::vector<int> nameIndex_;
    std::vector<int> evenOf_, oddOf_;
    std::vector<int> evenSlot_, oddSlot_;
    std::vector<int> priority_;
};

using ContextPtr = std::shared_ptr<const Context>;

// One monomial: even exponents by slot, odd word as bitmask (bit i = odd slot i
// present; words are canonically ascending by slot, signs live in Element).
struct Monomial {
    std::vector<uint16_t> even;
    uint32_t odd = 0;

    static Monomial one(const Context& c) {
        Monomial m;
        m.even.assign(c.evenCount(), 0);
        return m;
    }

    bool isOne() const {
        if (odd) return false;
        for (auto e : even)
            if (e) return false;
        return true;
    }

    int degree(const Context& c) const {
        int d = 0;
        for (int s = 0; s < (int)even.size(); ++s) d += even[s] * c.gen(c.evenGen(s)).degree;
        uint32_t w = odd;
        while (w) {
            int s = std::countr_zero(w);
            d += c.gen(c.oddGen(s)).degree;
            w &= w - 1;
        }
        return d;
    }

    int exponent(const Context& c, int gi) const {
        if (c.evenSlot(gi) >= 0) return even[c.evenSlot(gi)];
        return (odd >> c.oddSlot(gi)) & 1u;
    }

    bool operator==(const Monomial& o) const { return odd == o.odd && even == o.even; }

    bool divides(const Monomial& o) const {
        if ((odd & o.odd) != odd) return false;
        for (size_t s = 0; s < even.size(); ++s)
            if (even[s] > o.even[s]) return false;
        return true;
    }

    // o / this, with this.divides(o); sign handled by the caller via multiply.
    Monomial quotientOf(const Monomial& o) const {
        Monomial q = o;
        q.odd = o.odd & ~odd;
        for (size_t s = 0; s < even.size(); ++s) q.even[s] = (uint16_t)(o.even[s] - even[s]);
        return q;
    }
};

// Koszul sign of concatenating odd words a then b, both canonical masks.
// Returns 0 if they overlap, else +1/-1 from the number of transpositions
// needed to interleave b into a.
inline int koszulMergeSign(uint32_t a, uint32_t b) {
    if (a & b) return 0;
    int swaps = 0;
    uint32_t w = b;
    while (w) {
        int s = std::countr_zero(w);
        // bits of a strictly above s must jump over this element
        swaps += std::popcount(a >> (s + 1));
        w &= w - 1;
    }
    return (swaps & 1) ? -1 : 1;
}

// strict weighted-deg-lex "greater than"
inline bool monoGreater(const Context& c, const Monomial& x, const Monomial& y) {
    int dx = x.degree(c), dy = y.degree(c);
    if (dx != dy) return dx > dy;
    for (int gi : c.priority()) {
        int ex = x.exponent(c, gi), ey = y.exponent(c, gi);
        if (ex != ey) return ex > ey;
    }
    return false;
}

struct MonoDescCmp {
    const Context* ctx;
    bool operator()(const Monomial& a, const Monomial& b) const { return monoGreater(*ctx, a, b); }
};

} // namespace qcoh
