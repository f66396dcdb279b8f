#pragma once

#include "qcoh/builtins.hpp"
#include "qcoh/presentation.hpp"

#include <fstream>
#include <sstream>

namespace qcoh {

namespace detail {

inline std::string trimmed(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> splitList(const std::string& s) {
    std::vector<std::string> out;
    size_t start = 0;
    while (start <= s.size()) {
        size_t comma = s.find(',', start);
        if (comma == std::string::npos) comma = s.size();
        std::string piece = trimmed(s.substr(start, comma - start));
        if (!piece.empty()) out.push_back(piece);
        start = comma + 1;
    }
    return out;
}

} // namespace detail

// Render ring data in the line-oriented presentation format. The output
// parses back to an identical GenusData.
inline std::string format_presentation(const GenusData& d) {
    std::ostringstream out;
    auto monomials = [&](const std::vector<Monomial>& ms) {
        std::string s;
        for (size_t i = 0; i < ms.size(); ++i) {
            if (i) s += ", ";
            s += format_element(Element::term(d.invCtx, ms[i], 1));
        }
        return s;
    };
    out << "# " << d.pres.kind << " ring data, genus " << d.genus << "\n";
    out << "kind " << d.pres.kind << "\n";
    for (int i = 0; i < d.moduleCtx->size(); ++i) {
        const GeneratorSpec& g = d.moduleCtx->gen(i);
        out << "generator " << g.name << " degree=" << g.degree
            << " parity=" << (g.parity == Parity::Odd ? "odd" : "even") << "\n";
    }
    out << "gamma " << format_element(d.gammaWord) << "\n";
    for (const auto& r : d.pres.relations) out << "relation " << format_element(r) << "\n";
    if (!d.pres.basis.empty()) out << "basis " << monomials(d.pres.basis) << "\n";
    for (const auto& p : d.pres.pieces) {
        out << "piece " << p.label;
        if (!p.prefactors.empty()) {
            out << " prefactors=";
            for (size_t i = 0; i < p.prefactors.size(); ++i) {
                if (i) out << ", ";
                out << format_element(p.prefactors[i]);
            }
        }
        out << "\n";
        for (const auto& r : p.relations) out << "relation " << format_element(r) << "\n";
        if (!p.basis.empty()) out << "basis " << monomials(p.basis) << "\n";
    }
    for (const auto& [x, v] : d.fixtures)
        out << "fixture " << format_element(x) << " = " << rat_str(v) << "\n";
    return out.str();
}

// Parse the line-oriented presentation format and validate the result: the
// gamma class must pair the odd generators as (i, g+i) with coefficient -2,
// and every declared basis must be realizable in its quotient of finite
// dimension. Parse errors carry the offending line number.
inline GenusData parse_presentation(const std::string& text) {
    struct Expr {
        int line;
        std::string text;
    };
    struct RawPiece {
        std::string label;
        std::vector<Expr> prefactors;
        std::vector<Expr> relations;
        std::vector<Expr> basis;
    };

    std::string kind = "custom";
    std::vector<GeneratorSpec> gens;
    Expr gammaExpr{0, ""};
    std::vector<Expr> mainRelations, mainBasis;
    std::vector<RawPiece> pieces;
    std::vector<std::pair<Expr, Expr>> fixtureLines;
    bool inPiece = false;

    std::istringstream in(text);
    std::string raw;
    int lineNo = 0;
    auto fail = [&](const std::string& msg) {
        throw std::runtime_error("line " + std::to_string(lineNo) + ": " + msg);
    };

    while (std::getline(in, raw)) {
        ++lineNo;
        if (size_t h = raw.find('#'); h != std::string::npos) raw.resize(h);
        std::string line = detail::trimmed(raw);
        if (line.empty()) continue;
        size_t sp = line.find_first_of(" \t");
        std::string word = line.substr(0, sp);
        std::string rest = sp == std::string::npos ? "" : detail::trimmed(line.substr(sp + 1));

        if (word == "kind") {
            if (rest.empty()) fail("kind needs a value");
            kind = rest;
        } else if (word == "generator") {
            std::istringstream gs(rest);
            GeneratorSpec g;
            std::string attr;
            gs >> g.name;
            bool haveDeg = false, havePar = false;
            while (gs >> attr) {
                if (attr.rfind("degree=", 0) == 0) {
                    g.degree = std::stoi(attr.substr(7));
                    haveDeg = true;
                } else if (attr.rfind("parity=", 0) == 0) {
                    std::string p = attr.substr(7);
                    if (p != "even" && p != "odd") fail("parity must be even or odd");
                    g.parity = p == "odd" ? Parity::Odd : Parity::Even;
                    havePar = true;
                } else {
                    fail("unknown generator attribute '" + attr + "'");
                }
            }
            if (g.name.empty() || !haveDeg || !havePar)
                fail("generator line needs a name, degree=<n> and parity=<even|odd>");
            if (g.degree <= 0) fail("generator degree must be positive");
            for (const auto& prev : gens)
                if (prev.name == g.name) fail("generator redeclared: " + g.name);
            gens.push_back(std::move(g));
        } else if (word == "gamma") {
            if (rest.empty()) fail("gamma needs an expression");
            gammaExpr = {lineNo, rest};
        } else if (word == "relation") {
            if (rest.empty()) fail("relation needs an expression");
            (inPiece ? pieces.back().relations : mainRelations).push_back({lineNo, rest});
        } else if (word == "basis") {
            auto& target = inPiece ? pieces.back().basis : mainBasis;
            for (auto& entry : detail::splitList(rest)) target.push_back({lineNo, entry});
            if (target.empty()) fail("basis needs at least one monomial");
        } else if (word == "piece") {
            std::istringstream ps(rest);
            RawPiece p;
            ps >> p.label;
            if (p.label.empty()) fail("piece needs a label");
            std::string tail;
            std::getline(ps, tail);
            tail = detail::trimmed(tail);
            if (!tail.empty()) {
                if (tail.rfind("prefactors=", 0) != 0)
                    fail("unknown piece attribute, expected prefactors=<expr,...>");
                for (auto& entry : detail::splitList(tail.substr(11)))
                    p.prefactors.push_back({lineNo, entry});
            }
            pieces.push_back(std::move(p));
            inPiece = true;
        } else if (word == "fixture") {
            size_t eq = rest.rfind('=');
            if (eq == std::string::npos) fail("fixture needs the form <expr> = <value>");
            Expr lhs{lineNo, detail::trimmed(rest.substr(0, eq))};
            Expr rhs{lineNo, detail::trimmed(rest.substr(eq + 1))};
            if (lhs.text.empty() || rhs.text.empty()) fail("fixture needs the form <expr> = <value>");
            fixtureLines.emplace_back(lhs, rhs);
        } else {
            fail("unknown directive '" + word + "'");
        }
    }

    if (gens.empty()) throw std::runtime_error("no generators declared");

    GenusData d;
    d.moduleCtx = std::make_shared<Context>(gens);
    std::vector<GeneratorSpec> evens;
    for (const auto& g : gens)
        if (g.parity == Parity::Even) evens.push_back(g);
    if (evens.empty()) throw std::runtime_error("presentation needs at least one even generator");
    d.invCtx = std::make_shared<Context>(evens);

    int oddCount = d.moduleCtx->oddCount();
    if (oddCount == 0 || oddCount % 2 != 0)
        throw std::runtime_error("odd generators must come in complementary pairs (2g of them)");
    d.genus = oddCount / 2;
    d.pres.kind = kind;
    d.pres.ctx = d.invCtx;

    auto parseIn = [](const Expr& e, const ContextPtr& ctx) {
        try {
            return parse_element(e.text, ctx);
        } catch (const std::exception& ex) {
            throw std::runtime_error("line " + std::to_string(e.line) + ": " + ex.what());
        }
    };
    auto parseMonomialIn = [&](const Expr& e, const ContextPtr& ctx) {
        Element el = parseIn(e, ctx);
        if (el.termCount() != 1 || el.leadingCoefficient() != 1)
            throw std::runtime_error("line " + std::to_string(e.line) +
                                     ": basis entries must be plain monomials");
        return el.leadingMonomial();
    };

    if (gammaExpr.text.empty())
        throw std::runtime_error("missing gamma definition for the odd pairing");
    d.gammaWord = parseIn(gammaExpr, d.moduleCtx);
    try {
        validate_gamma_word(d.gammaWord, d.genus);
    } catch (const std::exception& ex) {
        throw std::runtime_error("line " + std::to_string(gammaExpr.line) + ": " + ex.what());
    }

    for (const auto& e : mainRelations) d.pres.relations.push_back(parseIn(e, d.invCtx));
    for (const auto& e : mainBasis) d.pres.basis.push_back(parseMonomialIn(e, d.invCtx));
    for (const auto& rp : pieces) {
        Piece p;
        p.label = rp.label;
        for (const auto& e : rp.prefactors) p.prefactors.push_back(parseIn(e, d.moduleCtx));
        for (const auto& e : rp.relations) p.relations.push_back(parseIn(e, d.invCtx));
        for (const auto& e : rp.basis) p.basis.push_back(parseMonomialIn(e, d.invCtx));
        d.pres.pieces.push_back(std::move(p));
    }
    for (const auto& [le, re] : fixtureLines) {
        Rational v;
        try {
            v = Rational(re.text);
        } catch (const std::exception&) {
            throw std::runtime_error("line " + std::to_string(re.line) +
                                     ": fixture value must be a rational number");
        }
        d.fixtures.emplace_back(parseIn(le, d.moduleCtx), v);
    }

    // realizability: compiling builds every engine and checks each declared
    // basis against its quotient
    CompiledPresentation check(d.pres);
    (void)check;
    return d;
}

inline GenusData load_presentation_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open presentation file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_presentation(ss.str());
}

} // namespace qcoh
