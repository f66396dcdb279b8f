#include "oracle.hpp"

#include "qcoh/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qcoh::oracle {

namespace {

void extendEven(const Context& c, Monomial& m, int slot, int budget, std::vector<Monomial>& out) {
    if (slot == c.evenCount()) {
        out.push_back(m);
        return;
    }
    int d = c.gen(c.evenGen(slot)).degree;
    for (int e = 0; e * d <= budget; ++e) {
        m.even[slot] = (uint16_t)e;
        extendEven(c, m, slot + 1, budget - e * d, out);
    }
    m.even[slot] = 0;
}

using Key = std::pair<uint32_t, std::vector<uint16_t>>;

Key keyOf(const Monomial& m) { return {m.odd, m.even}; }

} // namespace

std::vector<Monomial> monomials_up_to(const ContextPtr& ctx, int maxDeg) {
    const Context& c = *ctx;
    std::vector<Monomial> out;
    for (uint32_t word = 0; word < (1u << c.oddCount()); ++word) {
        int oddDeg = 0;
        for (int s = 0; s < c.oddCount(); ++s)
            if (word >> s & 1u) oddDeg += c.gen(c.oddGen(s)).degree;
        if (oddDeg > maxDeg) continue;
        Monomial m = Monomial::one(c);
        m.odd = word;
        extendEven(c, m, 0, maxDeg - oddDeg, out);
    }
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return monoGreater(c, a, b); });
    return out;
}

namespace {

struct DenseSlice {
    std::vector<Monomial> cols;
    std::map<Key, int> index;
    Mat rows;                 // reduced
    std::vector<int> pivots;  // pivot column of each row

    DenseSlice(const ContextPtr& ctx, const std::vector<Element>& relations, int maxDeg) {
        cols = monomials_up_to(ctx, maxDeg);
        for (size_t i = 0; i < cols.size(); ++i) index[keyOf(cols[i])] = (int)i;
        for (const Element& r : relations) {
            if (r.isZero()) continue;
            int lead = r.leadingMonomial().degree(*ctx);
            for (const Monomial& q : cols) {
                if (q.degree(*ctx) + lead > maxDeg) continue;
                Element row = Element::term(ctx, q, 1) * r;
                if (row.isZero()) continue;
                Vec v(cols.size(), Rational(0));
                for (const auto& [m, coeff] : row.terms()) v[index.at(keyOf(m))] = coeff;
                rows.push_back(std::move(v));
            }
        }
        pivots = rref(rows);
    }

    Vec eliminate(const ContextPtr& ctx, const Element& x) const {
        Vec v(cols.size(), Rational(0));
        for (const auto& [m, coeff] : x.terms()) {
            auto it = index.find(keyOf(m));
            if (it == index.end()) throw std::invalid_argument("element exceeds the degree cap");
            v[it->second] = coeff;
        }
        for (size_t r = 0; r < pivots.size(); ++r) {
            Rational f = v[pivots[r]];
            if (f == 0) continue;
            for (size_t j = pivots[r]; j < v.size(); ++j) v[j] -= f * rows[r][j];
        }
        return v;
    }
};

} // namespace

Element dense_nf(const std::vector<Element>& relations, int maxDeg, const Element& x) {
    ContextPtr ctx = x.context();
    DenseSlice slice(ctx, relations, maxDeg);
    Vec v = slice.eliminate(ctx, x);
    Element out = Element::zero(ctx);
    for (size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0) out = out + Element::term(ctx, slice.cols[j], v[j]);
    return out;
}

std::vector<int> graded_quotient_dims(const ContextPtr& ctx, const std::vector<Element>& relations,
                                      int maxDeg) {
    DenseSlice slice(ctx, relations, maxDeg);
    std::vector<bool> isPivot(slice.cols.size(), false);
    for (int p : slice.pivots) isPivot[p] = true;
    std::vector<int> dims(maxDeg + 1, 0);
    for (size_t j = 0; j < slice.cols.size(); ++j)
        if (!isPivot[j]) ++dims[slice.cols[j].degree(*ctx)];
    return dims;
}

} // namespace qcoh::oracle
