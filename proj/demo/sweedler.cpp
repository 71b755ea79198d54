// Sweedler's Hopf algebra acting on the dual numbers: the ordinary radical span{x}
// is not H-stable, so J^H = 0 and A is H-simple even though it is not semisimple.

#include <iostream>

#include "hpi/hopfzoo/catalog.hpp"

using namespace hpi;

int main() {
    auto doc = catalog::sweedler_dual_numbers();
    const auto& act = doc.action;

    std::cout << doc.name << ": dim A = " << act.algebra().dim() << ", dim H~ = " << act.effective_image().dim() << "\n";
    auto chk = verify_hopf_module_axioms(act, io::presentation(doc));
    std::cout << "Hopf module axioms: " << (chk ? "hold" : chk.failure) << "\n";

    std::cout << "dim J(A) = " << jacobson_radical(act.algebra()).dim() << ", dim J^H(A) = " << h_radical(act).dim()
              << ", H-simple: " << (is_h_simple(act) ? "yes" : "no") << "\n";

    auto report = exponent_report(act, 5);
    std::cout << io::exponent_report_text(report);

    // c_n = 2^(n+1) - 1 for n <= 5 here, so the roots fall toward d = 2 from above
    auto w = property_star_witness(act, 1, 0);
    if (w) std::cout << "alternating non-identity: alternation of " << w->generator.str() << "\n";
}
