// Sparse products, gcds and a resultant over a residue-ring tower.
#include <iostream>

#include "ringtower/ringtower.hpp"

using namespace ringtower;

int main() {
    const auto& R = make_mpoly_ring<Integer>(ZZ(), {"x", "y", "z"});
    auto f = R.parse("(x + y + 1)^2 * (x - z)");
    auto g = R.parse("(x + y + 1) * (y^2 + 3)");
    std::cout << "f*g has " << (f * g).length() << " terms\n";
    std::cout << "gcd(f, g) = " << to_string(gcd(f, g)) << "\n";

    const auto& Z = make_poly_ring<Integer>(ZZ(), "t");
    auto a = Z.parse("t^3 - 2*t + 5"), b = Z.parse("t^2 + 1");
    std::cout << "res(a, b) = " << to_string(resultant(a, b)) << "\n";

    // GF(7) -> [y] -> mod (y^2 + 1) -> [s]
    const auto& F7 = make_poly_ring<Zmod>(make_zmod(7), "y");
    const auto& Q = make_residue_ring<Poly<Zmod>>(F7.parse("y^2 + 1"));
    const auto& S = make_poly_ring<Residue<Poly<Zmod>>>(Q, "s");
    auto p = S.parse("s^2 + y*s + 1"), q = S.parse("(y + 1)*s + 3");
    std::cout << "res over GF(7)[y]/(y^2+1) = " << to_string(resultant(p, q)) << "\n";
}
