// Degrees of sigma_1^a sigma_2^b on the Grassmannian of lines in P^3, and the
// same numbers read off the Catalan traffic map.

#include <iostream>

#include "ctraffic/ctraffic.hpp"

int main() {
    using namespace ctraffic;

    // a + 2b = 4 on G_1(P^3)
    for (int b = 0; b <= 2; ++b) {
        const KappaQuery q{4 - 2 * b, b, 2};
        std::cout << "deg sigma_1^" << q.a << " sigma_2^" << q.b << " = " << kappa(q) << "\n";
    }

    // Only even powers of sigma_1 land on the traffic map: K(m, 2) = kappa_{2m, 2-m}.
    for (int m = 0; m <= 2; ++m) {
        std::cout << "paths to (" << m << ", 2) = " << upsilon(m, 2) << "\n";
    }
}
