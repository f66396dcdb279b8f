#pragma once

#include "qcoh/degree_two.hpp"
#include "qcoh/extension_space.hpp"
#include "qcoh/iso_solver.hpp"
#include "qcoh/series.hpp"

#include <map>
#include <random>
#include <tuple>

namespace qcoh {

struct CheckLine {
    std::string label;
    bool pass = false;
    std::string detail; // populated on failure
};

struct CheckResult {
    int id = 0;
    std::string name;
    std::vector<CheckLine> lines;

    bool pass() const {
        for (const auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
    int failedCount() const {
        int n = 0;
        for (const auto& l : lines)
            if (!l.pass) ++n;
        return n;
    }
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool allPass() const {
        for (const auto& c : checks)
            if (!c.pass()) return false;
        return true;
    }
};

inline std::string check_summary(const CheckResult& c) {
    std::string s = "criterion " + std::to_string(c.id) + ": ";
    s += c.pass() ? "PASS" : "FAIL";
    s += "  " + c.name;
    if (!c.pass())
        s += " (" + std::to_string(c.failedCount()) + " of " + std::to_string(c.lines.size()) +
             " checks failed)";
    return s;
}

namespace detail {

class Checker {
public:
    Checker(int id, std::string name) {
        res_.id = id;
        res_.name = std::move(name);
    }

    void eq(const std::string& label, const Rational& got, const Rational& want) {
        if (got == want)
            res_.lines.push_back({label, true, ""});
        else
            res_.lines.push_back({label, false, "expected " + rat_str(want) + ", got " + rat_str(got)});
    }
    void count(const std::string& label, long long got, long long want) {
        if (got == want)
            res_.lines.push_back({label, true, ""});
        else
            res_.lines.push_back(
                {label, false, "expected " + std::to_string(want) + ", got " + std::to_string(got)});
    }
    void elem(const std::string& label, const Element& got, const Element& want) {
        if (got == want)
            res_.lines.push_back({label, true, ""});
        else
            res_.lines.push_back(
                {label, false, "expected " + format_element(want) + ", got " + format_element(got)});
    }
    void truth(const std::string& label, bool pass, const std::string& detail = "") {
        res_.lines.push_back({label, pass, pass ? "" : detail});
    }
    CheckResult take() { return std::move(res_); }

private:
    CheckResult res_;
};

} // namespace detail

// The full verification battery. Every numbered criterion bundles the spot
// values, identities, and structural properties that pin down one layer of
// the computation; a criterion fails when any of its lines disagrees with
// the computed value, and the failing line carries both numbers.
class Verifier {
public:
    explicit Verifier(const Evaluator& ev) : ev_(ev) {}

    static constexpr int criterionCount = 11;

    VerifyReport run_all() const {
        VerifyReport rep;
        for (int i = 1; i <= criterionCount; ++i) rep.checks.push_back(run(i));
        return rep;
    }

    CheckResult run(int id) const {
        switch (id) {
        case 1: return topPairings();
        case 2: return oddPairings();
        case 3: return quantumReduction();
        case 4: return quotientDimensions();
        case 5: return restrictionTable();
        case 6: return degreeOneFixtures();
        case 7: return solverConstants();
        case 8: return degreeTwoGeometry();
        case 9: return seriesTables();
        case 10: return signBridge();
        case 11: return structuralProperties();
        }
        throw std::invalid_argument("criterion id must be between 1 and " +
                                    std::to_string(criterionCount));
    }

private:
    Element I(const std::string& s) const {
        return parse_element(s, ev_.data(3, "classical").invCtx);
    }
    Element M(const std::string& s) const {
        return parse_element(s, ev_.data(3, "classical").moduleCtx);
    }

    CheckResult topPairings() const {
        detail::Checker c(1, "classical top pairings");
        const std::pair<const char*, int> want[] = {
            {"alpha^6", 224},        {"alpha^4*beta", -64}, {"alpha^2*beta^2", 32},
            {"beta^3", 0},           {"alpha^3*gamma", 24}, {"alpha*beta*gamma", -24},
            {"gamma^2", 24}};
        Element one = I("1");
        for (const auto& [w, v] : want)
            c.eq(std::string("<") + w + ">", ev_.classical_pairing(I(w), one), v);
        return c.take();
    }

    CheckResult oddPairings() const {
        detail::Checker c(2, "odd pairings via invariant projection");
        Element pp = M("psi1*psi4");
        c.eq("<psi1*psi4*alpha^3>", ev_.classical_pairing(pp, M("alpha^3")), -4);
        c.eq("<psi1*psi4*alpha*beta>", ev_.classical_pairing(pp, M("alpha*beta")), 4);
        c.eq("<psi1*psi4*gamma>", ev_.classical_pairing(pp, M("gamma")), -4);
        return c.take();
    }

    CheckResult quantumReduction() const {
        detail::Checker c(3, "quantum reduction facts");
        const CompiledPresentation& q = ev_.ring(3, "quantum");
        const ContextPtr& ctx = ev_.data(3, "quantum").invCtx;
        Element g2 = q.normal_form(parse_element("gamma^2", ctx));
        c.elem("gamma^3 reduces to zero", q.normal_form(parse_element("gamma^3", ctx)),
               Element::zero(ctx));
        c.elem("gamma^2*beta^2 reduces to 64*gamma^2",
               q.normal_form(parse_element("gamma^2*beta^2", ctx)), g2 * Rational(64));
        return c.take();
    }

    CheckResult quotientDimensions() const {
        detail::Checker c(4, "quotient dimensions");
        const CompiledPresentation& cl = ev_.ring(3, "classical");
        const CompiledPresentation& qu = ev_.ring(3, "quantum");
        c.count("genus-3 invariant ring (classical)", cl.dimension(), 10);
        c.count("genus-3 invariant ring (quantum)", qu.dimension(), 10);
        c.count("odd-generator piece (classical)", cl.pieceEngine(0).dimension(), 6);
        c.count("odd-generator piece (quantum)", qu.pieceEngine(0).dimension(), 6);
        c.count("primitive pair piece (classical)", cl.pieceEngine(1).dimension(), 3);
        c.count("primitive pair piece (quantum)", qu.pieceEngine(1).dimension(), 3);
        c.count("genus-2 intersection ring", ev_.ring(2, "floer").dimension(), 4);
        c.count("point-fibre parameter ring", RSpace().engine().dimension(), 8);
        return c.take();
    }

    CheckResult restrictionTable() const {
        detail::Checker c(5, "restriction table");
        NSpace n;
        auto N = [&](const std::string& s) { return parse_element(s, n.context()); };
        const std::pair<const char*, const char*> invariantLines[] = {
            {"alpha", "4*omega + h"},
            {"beta", "h^2"},
            {"gamma", "-2*omega*h^2"},
            {"alpha^2", "16*omega^2 + 8*omega*h + h^2"},
            {"alpha*beta", "-8*omega^2*h - 32/3*omega^3"},
            {"beta^2", "8*omega^2*h^2 + 64/3*omega^3*h"},
            {"alpha*gamma", "16*omega^3*h"},
            {"beta*gamma", "-16*omega^3*h^2"}};
        for (const auto& [w, r] : invariantLines) c.elem(w, n.restrict_to_N(M(w)), N(r));
        c.truth("gamma^2", n.restrict_to_N(M("gamma^2")).isZero(),
                "expected zero, got " + format_element(n.restrict_to_N(M("gamma^2"))));

        // the four odd lines hold for every generator index
        const std::pair<const char*, const char*> oddLines[] = {
            {"psi@", "-h*phi@"},
            {"psi@*alpha", "-4*phi@*omega*h - phi@*h^2"},
            {"psi@*beta", "4*phi@*omega*h^2 + 8*phi@*omega^2*h"},
            {"psi@*gamma", "-8*phi@*omega^2*h^2"}};
        for (const auto& [pat, rpat] : oddLines) {
            bool ok = true;
            std::string detail;
            for (int i = 1; i <= 6 && ok; ++i) {
                auto fill = [&](std::string s) {
                    for (size_t p; (p = s.find('@')) != std::string::npos;)
                        s.replace(p, 1, std::to_string(i));
                    return s;
                };
                Element got = n.restrict_to_N(M(fill(pat)));
                Element want = N(fill(rpat));
                if (got != want) {
                    ok = false;
                    detail = fill(pat) + ": expected " + format_element(want) + ", got " +
                             format_element(got);
                }
            }
            std::string shown(pat);
            for (size_t p; (p = shown.find('@')) != std::string::npos;) shown.replace(p, 1, "i");
            c.truth(shown + " (all six indices)", ok, detail);
        }
        return c.take();
    }

    CheckResult degreeOneFixtures() const {
        detail::Checker c(6, "degree-one fixtures");
        NSpace n;
        auto N = [&](const std::string& s) { return parse_element(s, n.context()); };
        c.eq("(alpha, alpha, gamma^2)", n.gw_degree1(M("alpha"), M("alpha"), M("gamma^2")), 0);
        c.eq("(alpha, beta, beta*gamma)", n.gw_degree1(M("alpha"), M("beta"), M("beta*gamma")),
             -96);
        c.eq("fibre invariant of (-phi1*h, h^2, -8*phi4*omega^2*h^2)",
             n.psi_N_degree1(N("-phi1*h"), N("h^2"), N("-8*phi4*omega^2*h^2")), 16);
        return c.take();
    }

    CheckResult solverConstants() const {
        detail::Checker c(7, "solver constants");
        IsoSolver solver(ev_);
        const SolveReport& rep = solver.build_and_solve();
        {
            std::string viol;
            for (const auto& v : rep.violated) viol += (viol.empty() ? "" : "; ") + v;
            c.truth("every equation is satisfied exactly", rep.consistent && rep.violated.empty(),
                    viol.empty() ? "inconsistent system" : viol);
        }
        c.truth("degree-one equations pin their twelve unknowns", rep.degreeOneRank == 12,
                "rank " + std::to_string(rep.degreeOneRank));
        const std::pair<const char*, int> want[] = {
            {"A1", 0},   {"A2", 4},   {"A3", -12}, {"A4", -8}, {"A5", -3},  {"A6", -3},
            {"A7", -20}, {"A8", -12}, {"A9", 8},   {"A10", -6}, {"B1", 0},  {"B2", -1},
            {"B3", 24},  {"B4", -24}, {"B5", -1},  {"C", -8},  {"N1", -4}, {"N2", -4}};
        for (const auto& [name, v] : want) c.eq(name, rep.solution.at(name), v);
        IsoTable t = solver.iso_table();
        bool flagged = false;
        for (const auto& d : t.discrepancies) flagged = flagged || d == "beta^2";
        c.truth("product table flags the beta^2 line", flagged,
                "discrepancy list does not name beta^2");
        return c.take();
    }

    CheckResult degreeTwoGeometry() const {
        detail::Checker c(8, "degree-two geometry");
        RSpace r;
        auto R = [&](const std::string& s) { return parse_element(s, r.context()); };
        c.eq("top pairing of the gamma class", r.pair_R(r.gammaR()), -12);
        c.elem("two presentations of the gamma class", r.reduce(R("-6*(2*h + k)^2*f")),
               r.reduce(R("-12*f*h*k")));
        c.eq("point invariant with alpha and gamma", r.psi2A_alpha_gamma_pt(), -24);
        c.eq("point invariant with beta twice", r.psi2A_beta_beta_pt(), 0);
        return c.take();
    }

    CheckResult seriesTables() const {
        detail::Checker c(9, "generating function tables");
        SeriesTable s2 = series_table(ev_, 2, 10);
        SeriesTable s3 = series_table(ev_, 3, 10);
        SeriesTable f2 = taylor(closed_form(2), 10);
        SeriesTable f3 = taylor(closed_form(3), 10);
        c.count("genus-2 coefficients tabulated", (long long)s2.values.size(), 286);
        c.truth("genus-2 table matches its closed form", s2.values == f2.values,
                "coefficient mismatch");
        c.count("genus-3 coefficients tabulated", (long long)s3.values.size(), 286);
        c.truth("genus-3 table matches its closed form", s3.values == f3.values,
                "coefficient mismatch");
        c.eq("leading coefficient, genus 2", s2.at(0, 0, 1),
             -Rational(2) * factorial(2) / factorial(1));
        c.eq("leading coefficient, genus 3", s3.at(0, 0, 2),
             -Rational(4) * factorial(3) / factorial(2));
        bool ok = true;
        std::string detail;
        for (const auto& [key, v2] : s2.values) {
            auto [a, b, cc] = key;
            if (a + b + cc > 9) continue;
            Rational lhs = Rational(cc + 1) * s3.at(a, b, cc + 1);
            if (lhs != 6 * v2 && ok) {
                ok = false;
                detail = "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                         std::to_string(cc) + "): " + rat_str(lhs) + " vs " + rat_str(6 * v2);
            }
        }
        c.truth("gamma-derivative of the genus-3 function is six times the genus-2 one", ok,
                detail);
        return c.take();
    }

    CheckResult signBridge() const {
        detail::Checker c(10, "sign bridge");
        c.eq("quantum trace of alpha^6", ev_.tilde_psi(M("alpha^6")), 224);
        c.eq("generating functional at alpha^6", ev_.donaldson(M("alpha^6"), 3), -224);
        c.eq("quantum trace of gamma^2", ev_.tilde_psi(M("gamma^2")), 24);
        c.eq("generating functional at gamma^2", ev_.donaldson(M("gamma^2"), 3), -24);
        PsiSeriesReport rep = psi_series_relation(ev_, 10);
        std::string detail;
        if (!rep.ok()) {
            auto [a, b, cc] = rep.mismatches.front().key;
            detail = "first mismatch at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                     std::to_string(cc) + ")";
        }
        c.truth("exponential sign identity to order 10", rep.ok(), detail);
        return c.take();
    }

    CheckResult structuralProperties() const {
        detail::Checker c(11, "structural properties");
        const CompiledPresentation& qu = ev_.ring(3, "quantum");
        const ContextPtr& qctx = ev_.data(3, "quantum").invCtx;
        std::mt19937 rng(7241u);
        auto randomMonomial = [&]() {
            Monomial m = Monomial::one(*qctx);
            m.even[0] = (uint16_t)(rng() % 9);
            m.even[1] = (uint16_t)(rng() % 5);
            m.even[2] = (uint16_t)(rng() % 4);
            return m;
        };

        {
            int bad = 0;
            std::string detail;
            for (int k = 0; k < 100; ++k) {
                Monomial m = randomMonomial();
                int d = m.degree(*qctx);
                Element nf = qu.normal_form(Element::term(qctx, m, 1));
                for (const auto& [t, coeff] : nf.terms()) {
                    int shift = d - t.degree(*qctx);
                    if (((shift % 4) + 4) % 4 != 0) {
                        if (!bad) detail = format_element(Element::term(qctx, m, 1));
                        ++bad;
                        break;
                    }
                }
            }
            c.truth("mod-4 grading of 100 random reductions", bad == 0,
                    std::to_string(bad) + " violations, first at " + detail);
        }

        bruteForceAgreement(c, "classical");
        bruteForceAgreement(c, "quantum");

        {
            const ReductionEngine& eng = qu.mainEngine();
            auto randomElement = [&]() {
                Element x = Element::zero(qctx);
                int terms = 1 + (int)(rng() % 4);
                for (int t = 0; t < terms; ++t) {
                    Rational coeff((long)(rng() % 19) - 9, (long)(rng() % 4) + 1);
                    if (coeff == 0) coeff = 1;
                    x += Element::term(qctx, randomMonomial(), coeff);
                }
                return x;
            };
            std::vector<Element> sample;
            for (int k = 0; k < 100; ++k) sample.push_back(randomElement());
            int badIdem = 0, badLin = 0;
            for (const auto& x : sample)
                if (eng.reduce(eng.reduce(x)) != eng.reduce(x)) ++badIdem;
            for (int k = 0; k + 1 < 100; k += 2) {
                Rational lam((long)(rng() % 19) - 9, (long)(rng() % 4) + 1);
                const Element &x = sample[k], &y = sample[k + 1];
                if (eng.reduce(x + y * lam) != eng.reduce(x) + eng.reduce(y) * lam) ++badLin;
            }
            c.truth("reduction is idempotent on 100 random elements", badIdem == 0,
                    std::to_string(badIdem) + " violations");
            c.truth("reduction is linear on 50 random pairs", badLin == 0,
                    std::to_string(badLin) + " violations");
        }

        c.eq("primitive word pairs to zero against the invariant piece",
             ev_.classical_pairing(M("psi1*psi2"), M("gamma")), 0);
        c.eq("primitive combination pairs to zero against the invariant piece",
             ev_.classical_pairing(M("psi1*psi4 - psi2*psi5"), M("gamma")), 0);
        c.eq("non-complementary odd words pair to zero",
             ev_.classical_pairing(M("psi1*alpha"), M("psi2*beta")), 0);
        c.eq("complementary odd words pair through the projection",
             ev_.classical_pairing(M("psi1*alpha"), M("psi4*beta")), 4);
        Decomposition d = ev_.proj(3).decompose(M("psi1*psi4"));
        c.eq("projection route agrees with the piece-wise pairing",
             ev_.classical_pairing(M("psi1*psi4"), M("gamma")),
             ev_.classical_pairing(d.invariant, I("gamma")));
        return c.take();
    }

    // Rank-reduction oracle: inside the space of monomials of weight at most
    // 16, the span of all monomial multiples of the relations is the full
    // slice of the ideal, so eliminating it by row reduction must reproduce
    // the engine's normal form monomial by monomial.
    void bruteForceAgreement(detail::Checker& c, const std::string& kind) const {
        const GenusData& data = ev_.data(3, kind);
        const ContextPtr& ctx = data.pres.ctx;
        const ReductionEngine& eng = ev_.ring(3, kind).mainEngine();
        const int W = 16;

        std::vector<Monomial> monos;
        std::map<std::tuple<int, int, int>, int> index;
        for (int a = 0; 2 * a <= W; ++a)
            for (int b = 0; 2 * a + 4 * b <= W; ++b)
                for (int cc = 0; 2 * a + 4 * b + 6 * cc <= W; ++cc) {
                    Monomial m = Monomial::one(*ctx);
                    m.even[0] = (uint16_t)a;
                    m.even[1] = (uint16_t)b;
                    m.even[2] = (uint16_t)cc;
                    monos.push_back(m);
                }
        std::sort(monos.begin(), monos.end(),
                  [&](const Monomial& x, const Monomial& y) { return monoGreater(*ctx, x, y); });
        for (size_t i = 0; i < monos.size(); ++i)
            index[{monos[i].even[0], monos[i].even[1], monos[i].even[2]}] = (int)i;

        auto coords = [&](const Element& e) {
            Vec v(monos.size(), 0);
            for (const auto& [m, coeff] : e.terms())
                v[index.at({m.even[0], m.even[1], m.even[2]})] = coeff;
            return v;
        };

        Mat rows;
        for (const auto& r : data.pres.relations) {
            int lead = r.leadingMonomial().degree(*ctx);
            for (const auto& q : monos) {
                if (q.degree(*ctx) + lead > W) continue;
                rows.push_back(coords(Element::term(ctx, q, 1) * r));
            }
        }
        std::vector<int> pivots = rref(rows);

        int bad = 0;
        std::string detail;
        for (const auto& m : monos) {
            Vec v(monos.size(), 0);
            v[index.at({m.even[0], m.even[1], m.even[2]})] = 1;
            for (size_t ri = 0; ri < rows.size(); ++ri) {
                Rational f = v[(size_t)pivots[ri]];
                if (f == 0) continue;
                for (size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[ri][j];
            }
            Element oracle = Element::zero(ctx);
            for (size_t j = 0; j < v.size(); ++j)
                if (v[j] != 0) oracle += Element::term(ctx, monos[j], v[j]);
            if (eng.reduce(Element::term(ctx, m, 1)) != oracle) {
                if (!bad) detail = format_element(Element::term(ctx, m, 1));
                ++bad;
            }
        }
        c.truth("normal forms match a rank-reduction oracle (" + kind + ", " +
                    std::to_string(monos.size()) + " monomials)",
                bad == 0, std::to_string(bad) + " mismatches, first at " + detail);
    }

    const Evaluator& ev_;
};

} // namespace qcoh
