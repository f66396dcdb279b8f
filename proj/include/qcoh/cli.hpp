#pragma once
// Command line front end. Each subcommand maps onto one library entry point;
// values print exactly (integers or reduced fractions), never as decimals,
// and output is byte-for-byte deterministic for fixed inputs.
//
// Exit codes: 0 success, 1 usage error, 2 computation error (undetermined
// product or malformed input data), 3 self-check failure.

#include "qcoh/evaluation.hpp"
#include "qcoh/iso_solver.hpp"
#include "qcoh/presentation_io.hpp"
#include "qcoh/series.hpp"
#include "qcoh/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace qcoh {

namespace cli_detail {

using Json = nlohmann::ordered_json;

// num/den as strings: the integers can exceed any machine word.
inline Json rational_fields(const Rational& v) {
    return Json{{"num", numerator(v).str()}, {"den", denominator(v).str()}};
}

inline void emit_scalar(std::ostream& out, const std::string& format, const std::string& command,
                        const Json& inputs, const Rational& v) {
    if (format == "json")
        out << Json{{"command", command}, {"inputs", inputs}, {"value", rational_fields(v)}}.dump()
            << "\n";
    else
        out << rat_str(v) << "\n";
}

} // namespace cli_detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    using cli_detail::Json;

    // Errors must already respect --format json, even when flag parsing is
    // what failed, so sniff the raw arguments up front.
    bool jsonErrors = false;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--format=json" ||
            (a == "--format" && i + 1 < argc && std::string(argv[i + 1]) == "json"))
            jsonErrors = true;
    }
    auto complain = [&](const std::string& msg, int code) {
        if (jsonErrors)
            err << Json{{"error", msg}}.dump() << "\n";
        else
            err << "error: " << msg << "\n";
        return code;
    };

    CLI::App app{"exact intersection pairings, quantum products and generating functions "
                 "for rank two moduli rings",
                 "qcoh"};
    app.require_subcommand(1);

    int genus = 3;
    std::string ring; // empty: quantum for genus 3, floer for genus 2
    std::string format = "text";
    std::string presentationPath;
    int degree = 1;
    int order = 6;
    std::vector<std::string> exprs;

    auto addGenus = [&](CLI::App* c) {
        c->add_option("--genus", genus, "curve genus")->check(CLI::Range(2, 3));
    };
    auto addRing = [&](CLI::App* c) {
        c->add_option("--ring", ring, "classical, quantum or floer")
            ->check(CLI::IsMember({"classical", "quantum", "floer"}));
    };
    auto addFormat = [&](CLI::App* c, bool withCsv) {
        std::vector<std::string> allowed{"text", "json"};
        if (withCsv) allowed.push_back("csv");
        c->add_option("--format", format, "output format")->check(CLI::IsMember(allowed));
    };

    CLI::App* nf = app.add_subcommand("nf", "normal form of an expression in the declared basis");
    addGenus(nf);
    addRing(nf);
    addFormat(nf, false);
    nf->add_option("--presentation", presentationPath, "presentation file replacing the built-in ring");
    nf->add_option("expr", exprs, "expression to reduce")->required()->expected(1);

    CLI::App* eval = app.add_subcommand("eval", "evaluate an expression against the point class");
    addGenus(eval);
    addRing(eval);
    addFormat(eval, false);
    eval->add_option("expr", exprs, "expression to evaluate")->required()->expected(1);

    CLI::App* gw = app.add_subcommand("gw", "fixed-degree invariant with any number of insertions");
    addGenus(gw);
    addFormat(gw, false);
    gw->add_option("--degree", degree, "map degree")->required()->check(CLI::NonNegativeNumber);
    gw->add_option("classes", exprs, "insertion classes")->required();

    CLI::App* gw3 = app.add_subcommand("gw3", "three-point invariant summed over degrees");
    addFormat(gw3, false);
    gw3->add_option("classes", exprs, "exactly three insertion classes")->required()->expected(3);

    CLI::App* series = app.add_subcommand("series", "generating function coefficients up to a total order");
    addGenus(series);
    addFormat(series, true);
    series->add_option("--order", order, "largest total exponent")->required()->check(CLI::Range(0, 24));

    CLI::App* iso = app.add_subcommand("iso", "solved change of basis between the classical and quantum rings");
    addFormat(iso, false);

    CLI::App* verify = app.add_subcommand("verify", "run the full self-check battery");
    addFormat(verify, false);

    CLI::App* exportp = app.add_subcommand("export-presentation", "write a ring presentation file to stdout");
    addGenus(exportp);
    addRing(exportp);
    exportp->add_option("--presentation", presentationPath, "file to reparse and reprint");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        return complain(e.what(), 1);
    }

    const std::string ringName = !ring.empty() ? ring : (genus == 2 ? "floer" : "quantum");

    try {
        Evaluator ev;

        if (nf->parsed()) {
            GenusData d = presentationPath.empty() ? builtin_data(genus, ringName)
                                                   : load_presentation_file(presentationPath);
            CompiledPresentation cp(d.pres);
            Element v = cp.normal_form(parse_element(exprs[0], d.pres.ctx));
            if (format == "json") {
                Json inputs{{"expr", exprs[0]}};
                if (presentationPath.empty()) {
                    inputs["genus"] = genus;
                    inputs["ring"] = ringName;
                } else {
                    inputs["presentation"] = presentationPath;
                }
                out << Json{{"command", "nf"},
                            {"inputs", inputs},
                            {"value", Json{{"element", format_element(v)}}}}
                           .dump()
                    << "\n";
            } else {
                out << format_element(v) << "\n";
            }
            return 0;
        }

        if (eval->parsed()) {
            const GenusData& d = ev.data(genus, ringName); // validates the genus/ring pair
            Element z = parse_element(exprs[0], d.moduleCtx);
            Rational v;
            if (genus == 2)
                v = ev.donaldson(z, 2);
            else if (ringName == "quantum")
                v = ev.tilde_psi(z);
            else
                v = ev.classical_pairing(z, Element::constant(d.moduleCtx, 1));
            cli_detail::emit_scalar(out, format, "eval",
                                    Json{{"genus", genus}, {"ring", ringName}, {"expr", exprs[0]}},
                                    v);
            return 0;
        }

        if (gw->parsed()) {
            ContextPtr mod = module_context(genus);
            std::vector<Element> classes;
            for (const auto& s : exprs) classes.push_back(parse_element(s, mod));
            Rational v = ev.gw_multipoint(classes, degree, genus);
            cli_detail::emit_scalar(
                out, format, "gw",
                Json{{"genus", genus}, {"degree", degree}, {"classes", exprs}}, v);
            return 0;
        }

        if (gw3->parsed()) {
            ContextPtr mod = module_context(3);
            IsoSolver solver(ev);
            Rational v = solver.gw3_classical(parse_element(exprs[0], mod),
                                              parse_element(exprs[1], mod),
                                              parse_element(exprs[2], mod));
            cli_detail::emit_scalar(out, format, "gw3", Json{{"classes", exprs}}, v);
            return 0;
        }

        if (series->parsed()) {
            SeriesTable t = series_table(ev, genus, order);
            if (format == "csv") {
                out << "a,b,c,value-numerator,value-denominator\n";
                for (const auto& [k, v] : t.values)
                    out << k[0] << ',' << k[1] << ',' << k[2] << ',' << numerator(v).str() << ','
                        << denominator(v).str() << "\n";
            } else if (format == "json") {
                Json rows = Json::array();
                for (const auto& [k, v] : t.values) {
                    Json r{{"a", k[0]}, {"b", k[1]}, {"c", k[2]}};
                    r.update(cli_detail::rational_fields(v));
                    rows.push_back(r);
                }
                out << Json{{"command", "series"},
                            {"inputs", Json{{"genus", genus}, {"order", order}}},
                            {"values", rows}}
                           .dump()
                    << "\n";
            } else {
                for (const auto& [k, v] : t.values)
                    out << k[0] << ' ' << k[1] << ' ' << k[2] << "  " << rat_str(v) << "\n";
            }
            return 0;
        }

        if (iso->parsed()) {
            IsoSolver solver(ev);
            SolveReport rep = solver.build_and_solve();
            IsoTable table = solver.iso_table();
            if (format == "json") {
                Json constants = Json::array();
                for (const auto& c : rep.comparisons)
                    constants.push_back(Json{{"name", c.name},
                                             {"solved", cli_detail::rational_fields(c.solved)},
                                             {"published", cli_detail::rational_fields(c.published)},
                                             {"match", c.match}});
                Json rows = Json::array();
                for (const auto& r : table.rows)
                    rows.push_back(Json{{"word", r.label},
                                        {"expansion", format_element(r.expansion)},
                                        {"published", format_element(r.published)},
                                        {"match", r.matchesPublished}});
                out << Json{{"command", "iso"},
                            {"equations", Json{{"degree-1", rep.degreeOneEquations},
                                               {"pairing", rep.pairingEquations},
                                               {"degree-2", rep.degreeTwoEquations}}},
                            {"consistent", rep.consistent},
                            {"constants", constants},
                            {"rows", rows},
                            {"discrepancies", table.discrepancies}}
                           .dump()
                    << "\n";
            } else {
                out << "equations: " << rep.degreeOneEquations << " degree-1 (rank "
                    << rep.degreeOneRank << "), " << rep.pairingEquations << " pairing (rank "
                    << rep.pairingRank << "), " << rep.degreeTwoEquations << " degree-2\n";
                out << "consistent: " << (rep.consistent ? "yes" : "no") << "\n";
                out << "constants:\n";
                for (const auto& c : rep.comparisons) {
                    out << "  " << c.name << " = " << rat_str(c.solved);
                    if (!c.match) out << "   published " << rat_str(c.published);
                    out << "\n";
                }
                out << "table:\n";
                for (const auto& r : table.rows) {
                    out << "  " << r.label << " = " << format_element(r.expansion);
                    if (!r.matchesPublished) out << "   published " << format_element(r.published);
                    out << "\n";
                }
                if (!table.discrepancies.empty()) {
                    out << "discrepancies:";
                    for (const auto& s : table.discrepancies) out << " " << s;
                    out << "\n";
                }
            }
            return 0;
        }

        if (verify->parsed()) {
            Verifier ver(ev);
            VerifyReport rep = ver.run_all();
            if (format == "json") {
                Json checks = Json::array();
                for (const auto& c : rep.checks) {
                    Json lines = Json::array();
                    for (const auto& l : c.lines) {
                        Json e{{"label", l.label}, {"pass", l.pass}};
                        if (!l.pass) e["detail"] = l.detail;
                        lines.push_back(e);
                    }
                    checks.push_back(
                        Json{{"id", c.id}, {"name", c.name}, {"pass", c.pass()}, {"checks", lines}});
                }
                out << Json{{"command", "verify"}, {"criteria", checks}, {"allPass", rep.allPass()}}
                           .dump()
                    << "\n";
            } else {
                for (const auto& c : rep.checks) {
                    out << check_summary(c) << "\n";
                    for (const auto& l : c.lines)
                        if (!l.pass) out << "    " << l.label << ": " << l.detail << "\n";
                }
                out << (rep.allPass() ? "result: PASS" : "result: FAIL") << "\n";
            }
            return rep.allPass() ? 0 : 3;
        }

        if (exportp->parsed()) {
            GenusData d = presentationPath.empty() ? builtin_data(genus, ringName)
                                                   : load_presentation_file(presentationPath);
            out << format_presentation(d);
            return 0;
        }
    } catch (const NotDetermined& e) {
        return complain(e.what(), 2);
    } catch (const ParseError& e) {
        return complain(e.what(), 1);
    } catch (const std::invalid_argument& e) {
        return complain(e.what(), 1);
    } catch (const std::exception& e) {
        return complain(e.what(), 2);
    }
    return complain("no subcommand given", 1);
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("qcoh");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace qcoh
