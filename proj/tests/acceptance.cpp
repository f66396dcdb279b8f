// Full self-check battery as a standalone gate: one line per criterion, the
// failing checks spelled out with their computed values, nonzero exit when
// anything is red.

#include "qcoh/verify.hpp"

#include <iostream>

int main() {
    qcoh::Evaluator ev;
    qcoh::Verifier ver(ev);
    qcoh::VerifyReport rep = ver.run_all();
    for (const auto& c : rep.checks) {
        std::cout << qcoh::check_summary(c) << "\n";
        for (const auto& l : c.lines)
            if (!l.pass) std::cout << "    " << l.label << ": " << l.detail << "\n";
    }
    std::cout << (rep.allPass() ? "result: PASS" : "result: FAIL") << "\n";
    return rep.allPass() ? 0 : 3;
}
