// Determinant, characteristic and minimal polynomials of an integer matrix.
#include <iostream>

#include "ringtower/ringtower.hpp"

using namespace ringtower;

int main() {
    auto M = make_matrix<Integer>(ZZ(), {{Integer(2), Integer(1), Integer(0)},
                                         {Integer(0), Integer(2), Integer(0)},
                                         {Integer(0), Integer(0), Integer(2)}});
    std::cout << "det      = " << to_string(det(M)) << "\n";
    std::cout << "charpoly = " << to_string(charpoly(M)) << "\n";
    std::cout << "minpoly  = " << to_string(minpoly_integer(M)) << "\n";

    const auto& K = NumberField::get("x^3 + 3*x + 1", "a", "x");
    auto N = make_matrix<NFElem>(K, {{K.parse("a"), K.parse("1")}, {K.parse("a^2"), K.parse("a + 1/2")}});
    std::cout << "det over Q(a) = " << to_string(det(N)) << "\n";
}
