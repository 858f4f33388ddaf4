// Prints the product formula for B_m(x) B_{n-m}(x) expanded in an Euler
// basis two ways (literal and repaired) and the exact gap between them.

#include <eulerbasis/eulerbasis.hpp>

#include <iostream>

int main()
{
    using namespace eulerbasis;
    for (unsigned n = 3; n <= 8; ++n) {
        for (unsigned m = 1; m + 2 <= n; ++m) {
            const auto printed = check_theorem6(n, m, 1, Theorem6Mode::printed);
            const auto corrected = check_theorem6(n, m, 1, Theorem6Mode::corrected);
            std::cout << "n=" << n << " m=" << m << "  corrected " << (corrected.pass ? "ok" : "FAILED")
                      << "  literal gap: " << render_polynomial(printed.discrepancy) << "\n";
        }
    }
}
