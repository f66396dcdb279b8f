#include <catch2/catch_amalgamated.hpp>

#include "qcoh/series.hpp"

using namespace qcoh;

namespace {

struct Fix {
    Evaluator ev;
    Element I3(const std::string& s) const {
        return parse_element(s, ev.data(3, "classical").invCtx);
    }
    Element I2(const std::string& s) const {
        return parse_element(s, ev.data(2, "floer").invCtx);
    }
};

} // namespace

TEST_CASE_METHOD(Fix, "genus 2 table spot values") {
    SeriesTable t = series_table(ev, 2, 6);
    REQUIRE(t.at(0, 0, 1) == -4);
    REQUIRE(t.at(1, 1, 0) == 4);
    REQUIRE(t.at(0, 1, 0) == 0);
    REQUIRE(t.at(1, 0, 0) == 0);
    REQUIRE(t.values.size() == 84); // all keys with a+b+c <= 6 are materialized
}

TEST_CASE_METHOD(Fix, "genus 3 table spot values and initial conditions") {
    SeriesTable t = series_table(ev, 3, 6);
    REQUIRE(t.at(0, 0, 2) == -12);
    REQUIRE(t.at(6, 0, 0) == rat(-14, 45));
    REQUIRE(t.at(1, 1, 1) == 24);
    for (const auto& [key, v] : t.values) {
        auto [a, b, c] = key;
        if (a + b + c < 3 && !(a == 0 && b == 0 && c == 2)) {
            INFO(a << "," << b << "," << c);
            REQUIRE(v == 0);
        }
    }
}

TEST_CASE_METHOD(Fix, "degree ladder vanishing") {
    for (int genus : {2, 3}) {
        SeriesTable t = series_table(ev, genus, 7);
        for (const auto& [key, v] : t.values) {
            auto [a, b, c] = key;
            if ((2 * a + 4 * b + 6 * c - (6 * genus - 6)) % 4 != 0) {
                INFO("genus " << genus << " key " << a << "," << b << "," << c);
                REQUIRE(v == 0);
            }
        }
    }
}

TEST_CASE("closed forms expand to the right coefficients on their own") {
    SeriesTable t2 = taylor(closed_form(2), 6);
    REQUIRE(t2.at(0, 0, 1) == -4);
    REQUIRE(t2.at(0, 1, 0) == 0);
    REQUIRE(t2.at(1, 1, 0) == 4);
    SeriesTable t3 = taylor(closed_form(3), 6);
    REQUIRE(t3.at(6, 0, 0) == rat(-14, 45));
    REQUIRE(t3.at(0, 0, 0) == 0);
    REQUIRE(t3.at(0, 0, 2) == -12);
    REQUIRE_THROWS_AS(closed_form(4), std::invalid_argument);
}

TEST_CASE_METHOD(Fix, "tables agree with the closed forms to order 10") {
    REQUIRE(compare_series(ev, 2, 10).ok());
    REQUIRE(compare_series(ev, 3, 10).ok());
}

TEST_CASE_METHOD(Fix, "gamma derivative steps down one genus") {
    SeriesTable f3 = series_table(ev, 3, 10);
    SeriesTable f2 = series_table(ev, 2, 9);
    SeriesTable dr = apply_relation(f3, I3("gamma"));
    REQUIRE(dr.order == 9);
    for (const auto& [key, v] : dr.values) {
        INFO(key[0] << "," << key[1] << "," << key[2]);
        REQUIRE(v == f2.at(key[0], key[1], key[2]) * 6);
    }
}

TEST_CASE_METHOD(Fix, "relations annihilate the matching tables") {
    // product of the three genus-2 piece relations in alpha, times gamma
    PdeReport r2 = pde_check(ev, 2, I2("gamma*(alpha-4)*(alpha+4)*alpha^2"), 10);
    REQUIRE(r2.ok());
    REQUIRE(r2.checkedOrder == 5);

    for (const auto& q : ev.data(3, "quantum").pres.relations) {
        INFO(format_element(q));
        REQUIRE(pde_check(ev, 3, q, 9).ok());
    }

    REQUIRE_THROWS_WITH(pde_check(ev, 2, I2("alpha"), 6),
                        Catch::Matchers::ContainsSubstring("nonzero normal form"));
}

TEST_CASE_METHOD(Fix, "sign twist of the quantum relations") {
    const auto& rels = ev.data(3, "quantum").pres.relations;
    REQUIRE(rels.size() == 3);

    Element t0 = twist_relation(rels[0]);
    Element e0 = I3("alpha^3 + 5*alpha*beta + 4*gamma + 24*alpha");
    REQUIRE((t0 == e0 || t0 == e0 * Rational(-1)));

    Element t1 = twist_relation(rels[1]);
    REQUIRE(t1 == I3("alpha^2*beta + beta^2 + 4/3*gamma*alpha - 8*alpha^2 - 16*beta + 64"));

    Element t2 = twist_relation(rels[2]);
    Element e2 = I3("gamma*alpha^2 + gamma*beta - 8*gamma");
    REQUIRE((t2 == e2 || t2 == e2 * Rational(-1)));

    // the twisted relations annihilate the rank-one table instead
    SeriesTable d3 = series_table(ev, 3, 9);
    for (const Element& q : rels) {
        SeriesTable applied = apply_relation(d3, twist_relation(q));
        for (const auto& [key, v] : applied.values) {
            INFO(key[0] << "," << key[1] << "," << key[2]);
            REQUIRE(v == 0);
        }
    }

    REQUIRE_THROWS_WITH(twist_relation(I3("alpha + beta")),
                        Catch::Matchers::ContainsSubstring("mixed parity"));
}

TEST_CASE_METHOD(Fix, "exponential bridge between the two genus 3 tables") {
    PsiSeriesReport rep = psi_series_relation(ev, 8);
    REQUIRE(rep.ok());

    // the sign pattern at the two stored corners
    SeriesTable d = series_table(ev, 3, 6);
    SeriesTable p = psi_table(ev, 6);
    REQUIRE(p.at(0, 0, 2) == 12);
    REQUIRE(d.at(0, 0, 2) == -12);
    REQUIRE(p.at(6, 0, 0) == rat(14, 45));
    REQUIRE(d.at(6, 0, 0) == rat(-14, 45));
}
