// Field arithmetic, prime decomposition, conjugates and a torsion test.
#include <iostream>

#include "ringtower/ringtower.hpp"

using namespace ringtower;

int main() {
    const auto& K = NumberField::get("x^2 + 5", "w", "x");
    auto a = K.parse("1 + w");
    std::cout << "N(1 + w) = " << nf_norm(a) << ", 1/(1 + w) = " << to_string(inv(a)) << "\n";

    const auto& O = Order::equation_order(K, true);
    for (long p : {2, 3, 7}) {
        std::cout << "primes above " << p << ":";
        for (const auto& P : prime_decomposition(O, p))
            std::cout << " (e=" << P.ramification() << ", f=" << P.residue_degree() << ")";
        std::cout << "\n";
    }
    auto A = ideal_mul(prime_decomposition(O, 2)[0].ideal(), prime_decomposition(O, 3)[0].ideal());
    std::cout << "N(P2 * P3) = " << ideal_norm(A) << "\n";

    for (const auto& z : conjugates(a, 64)) std::cout << "conjugate " << to_string(z) << "\n";

    const auto& C = NumberField::get("x^4 + 1", "z", "x");
    std::cout << "z in Q(zeta_8): " << to_string(is_torsion(C.gen())) << "\n";
}
