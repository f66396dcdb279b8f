// Walks the stored genus-3 ring: relations and quotient shape, the solved
// change of basis between the plain and deformed products, and a few products
// and three-point invariants computed from it.

#include "qcoh/iso_solver.hpp"

#include <iostream>

using namespace qcoh;

int main() {
    Evaluator ev;
    const GenusData& d = ev.data(3, "quantum");

    std::cout << "deformed invariant-ring relations:\n";
    for (const Element& r : d.pres.relations) std::cout << "  " << format_element(r) << " = 0\n";
    const CompiledPresentation& ring = ev.ring(3, "quantum");
    std::cout << "invariant quotient dimension: " << ring.mainEngine().dimension() << "\n";
    int moduleDim = ring.mainEngine().dimension();
    for (size_t i = 0; i < ring.pieceCount(); ++i)
        moduleDim += (int)ring.piece(i).prefactors.size() * ring.pieceEngine(i).dimension();
    std::cout << "full module dimension: " << moduleDim << "\n\n";

    IsoSolver solver(ev);
    SolveReport rep = solver.build_and_solve();
    std::cout << "change of basis solved from " << rep.degreeOneEquations << " degree-1, "
              << rep.pairingEquations << " pairing and " << rep.degreeTwoEquations
              << " degree-2 equations (consistent: " << (rep.consistent ? "yes" : "no")
              << ")\n";
    IsoTable table = solver.iso_table();
    std::cout << "basis word = expansion under the ring map\n";
    for (const IsoRow& r : table.rows) {
        std::cout << "  " << r.label << " = " << format_element(r.expansion);
        if (!r.matchesPublished)
            std::cout << "   (literature: " << format_element(r.published) << ")";
        std::cout << "\n";
    }

    ContextPtr mod = d.moduleCtx;
    auto M = [&](const char* s) { return parse_element(s, mod); };
    std::cout << "\nsample deformed products:\n";
    for (auto [x, y] : std::vector<std::pair<const char*, const char*>>{
             {"beta", "gamma"}, {"gamma", "gamma"}, {"psi1", "gamma"}, {"alpha*beta", "beta"}}) {
        std::cout << "  (" << x << ") * (" << y
                  << ") = " << format_element(solver.quantum_product(M(x), M(y))) << "\n";
    }

    std::cout << "\nsample three-point invariants summed over degrees:\n";
    for (auto [x, y, z] : std::vector<std::array<const char*, 3>>{
             {"1", "gamma", "gamma"},
             {"beta", "gamma", "beta*gamma"},
             {"psi1", "beta", "psi4*gamma"},
             {"alpha", "alpha", "gamma^2"}}) {
        std::cout << "  <" << x << ", " << y << ", " << z
                  << "> = " << rat_str(solver.gw3_classical(M(x), M(y), M(z))) << "\n";
    }
    return 0;
}
