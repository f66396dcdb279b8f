#pragma once

#include "qcoh/groebner.hpp"

#include <memory>
#include <string>
#include <vector>

namespace qcoh {

// One summand of a structured presentation. Prefactors (odd words over the
// full module context) mark an isotypic factor; a piece without prefactors is
// a plain direct summand of the even ring.
struct Piece {
    std::string label;
    std::vector<Element> prefactors;
    std::vector<Element> relations;
    std::vector<Monomial> basis;

    bool operator==(const Piece& o) const {
        return label == o.label && prefactors == o.prefactors && relations == o.relations &&
               basis == o.basis;
    }
};

enum class PresentationMode { Simple, DirectSum, Isotypic };

// Relations and declared bases for one ring. `ctx` is the even (invariant)
// context; `basis` is the declared basis of the main quotient, or the global
// basis when the pieces form a direct sum.
struct Presentation {
    std::string kind;
    ContextPtr ctx;
    std::vector<Element> relations;
    std::vector<Monomial> basis;
    std::vector<Piece> pieces;

    PresentationMode mode() const {
        if (pieces.empty()) return PresentationMode::Simple;
        bool anyPre = false, allPre = true;
        for (const auto& p : pieces) {
            if (p.prefactors.empty())
                allPre = false;
            else
                anyPre = true;
        }
        if (anyPre && !allPre)
            throw std::invalid_argument("pieces must be uniformly split or uniformly prefactored");
        return allPre ? PresentationMode::Isotypic : PresentationMode::DirectSum;
    }

    bool operator==(const Presentation& o) const {
        return kind == o.kind && relations == o.relations && basis == o.basis &&
               pieces == o.pieces;
    }
};

// Reduction engines for every slice of a presentation, plus the glue for
// split presentations: coordinates with respect to the global declared basis
// are recovered by stacking the per-summand normal forms and inverting the
// resulting square system once.
class CompiledPresentation {
public:
    explicit CompiledPresentation(Presentation p) : pres_(std::move(p)), mode_(pres_.mode()) {
        switch (mode_) {
        case PresentationMode::Simple:
            main_ = std::make_unique<ReductionEngine>(pres_.ctx, pres_.relations, pres_.basis);
            dim_ = main_->dimension();
            break;
        case PresentationMode::Isotypic:
            main_ = std::make_unique<ReductionEngine>(pres_.ctx, pres_.relations, pres_.basis);
            dim_ = main_->dimension();
            for (const auto& pc : pres_.pieces)
                pieces_.push_back(std::make_unique<ReductionEngine>(pres_.ctx, pc.relations, pc.basis));
            break;
        case PresentationMode::DirectSum: {
            if (pres_.basis.empty())
                throw std::invalid_argument("split presentation needs a global basis");
            if (!pres_.relations.empty())
                throw std::invalid_argument("split presentation carries relations only in pieces");
            int total = 0;
            for (const auto& pc : pres_.pieces) {
                pieces_.push_back(std::make_unique<ReductionEngine>(pres_.ctx, pc.relations, pc.basis));
                total += pieces_.back()->dimension();
            }
            dim_ = (int)pres_.basis.size();
            if (total != dim_)
                throw std::invalid_argument("global basis size " + std::to_string(dim_) +
                                            " does not match total summand dimension " +
                                            std::to_string(total));
            Mat m(total, Vec(total, 0));
            for (int j = 0; j < total; ++j) {
                Vec col = stack(Element::term(pres_.ctx, pres_.basis[j], 1));
                for (int i = 0; i < total; ++i) m[i][j] = col[i];
            }
            auto inv = invert(m);
            if (!inv)
                throw std::invalid_argument(
                    "global basis is not a basis of the direct sum (rank " +
                    std::to_string(rank(m)) + " of " + std::to_string(total) + ")");
            unstack_ = *inv;
            break;
        }
        }
    }

    const Presentation& presentation() const { return pres_; }
    PresentationMode mode() const { return mode_; }
    int dimension() const { return dim_; }

    const ReductionEngine& mainEngine() const {
        if (!main_) throw std::logic_error("split presentation has no main engine");
        return *main_;
    }
    size_t pieceCount() const { return pieces_.size(); }
    const ReductionEngine& pieceEngine(size_t i) const { return *pieces_.at(i); }
    const Piece& piece(size_t i) const { return pres_.pieces.at(i); }

    // normal form of an even-context element against the declared/global basis
    Element normal_form(const Element& x) const {
        if (mode_ != PresentationMode::DirectSum) return main_->normal_form(x);
        Vec c = matVec(unstack_, stack(x));
        Element r(pres_.ctx);
        for (size_t i = 0; i < pres_.basis.size(); ++i) r.addTerm(pres_.basis[i], c[i]);
        return r;
    }

    Vec coordinates(const Element& x) const {
        if (mode_ != PresentationMode::DirectSum) return main_->declaredCoordinates(x);
        return matVec(unstack_, stack(x));
    }

private:
    Vec stack(const Element& x) const {
        Vec v;
        for (const auto& eng : pieces_) {
            Vec part = eng->coordinates(x);
            v.insert(v.end(), part.begin(), part.end());
        }
        return v;
    }

    Presentation pres_;
    PresentationMode mode_;
    std::unique_ptr<ReductionEngine> main_;
    std::vector<std::unique_ptr<ReductionEngine>> pieces_;
    Mat unstack_;
    int dim_ = 0;
};

} // namespace qcoh
