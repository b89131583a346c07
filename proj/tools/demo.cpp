#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ringtower/bench/benchmarks.hpp"
#include "ringtower/ringtower.hpp"

using namespace ringtower;

namespace {

template <class Parent>
void matrix_report(const Parent& R, const nlohmann::json& rows) {
    using E = typename Parent::element_type;
    std::vector<std::vector<E>> m;
    for (const auto& row : rows) {
        std::vector<E> r;
        for (const auto& x : row) r.push_back(R.parse(x.is_string() ? x.get<std::string>() : x.dump()));
        m.push_back(std::move(r));
    }
    auto M = make_matrix<E>(R, m);
    std::cout << "matrix   " << to_string(M) << "\n";
    std::cout << "det      " << to_string(det(M)) << "\n";
    std::cout << "charpoly " << to_string(charpoly(M)) << "\n";
}

int run_matrix(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file);
    nlohmann::json j = nlohmann::json::parse(in);
    std::string ring = j.value("ring", "ZZ");
    const auto& rows = j.at("rows");
    if (ring == "ZZ") {
        matrix_report(ZZ(), rows);
        std::vector<std::vector<Integer>> m;
        for (const auto& row : rows) {
            std::vector<Integer> r;
            for (const auto& x : row) r.push_back(ZZ().parse(x.is_string() ? x.get<std::string>() : x.dump()));
            m.push_back(std::move(r));
        }
        std::cout << "minpoly  " << to_string(minpoly_integer(make_matrix<Integer>(ZZ(), m))) << "\n";
    } else if (ring == "QQ") {
        matrix_report(QQ(), rows);
    } else if (ring.rfind("GF(", 0) == 0 && ring.back() == ')') {
        matrix_report(make_zmod(std::stol(ring.substr(3, ring.size() - 4))), rows);
    } else {
        throw std::runtime_error("unknown ring " + ring + " (use ZZ, QQ or GF(p))");
    }
    return 0;
}

int run_roots(const std::string& poly, long prec) {
    const auto& R = PolyRing<Rational>::get(QQ(), "x");
    std::vector<mpq_class> c;
    Poly<Rational> f = R.parse(poly);
    for (const auto& x : f.coeffs()) c.push_back(x.value());
    auto res = ball_roots_detailed(c, prec);
    for (std::size_t i = 0; i < res.boxes.size(); ++i)
        std::cout << (res.is_real[i] ? "real    " : "complex ") << to_string(res.boxes[i]) << "\n";
    std::cout << "working precision " << res.working_precision << "\n";
    return 0;
}

int run_primes(const std::string& field, std::uint64_t p) {
    const auto& K = NumberField::get(field, "x", "x");
    const Order& O = Order::equation_order(K);
    for (const auto& P : prime_decomposition(O, p))
        std::cout << to_string(P) << "  e=" << P.ramification() << " f=" << P.residue_degree()
                  << " N=" << P.norm().get_str() << "\n";
    return 0;
}

int run_element(const std::string& field, const std::string& elem) {
    const auto& K = NumberField::get(field, "x", "x");
    NFElem a = K.parse(elem);
    std::cout << "element " << to_string(a) << "\n";
    std::cout << "trace   " << nf_trace(a).get_str() << "\n";
    std::cout << "norm    " << nf_norm(a).get_str() << "\n";
    if (!a.is_zero()) std::cout << "inverse " << to_string(inv(a)) << "\n";
    for (const auto& b : conjugates(a, 64)) std::cout << "sigma   " << to_string(b) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ringtower demonstrations"};
    app.require_subcommand(1);

    std::string field = "x^2+1", elem = "x";
    auto* torsion = app.add_subcommand("torsion", "decide whether an element is a root of unity");
    torsion->add_option("--field", field, "defining polynomial in x");
    torsion->add_option("--elem", elem, "element as a polynomial in x");

    std::string efield = "x^3+3*x+1", eelem = "x";
    auto* element = app.add_subcommand("element", "trace, norm, inverse and conjugates of an element");
    element->add_option("--field", efield, "defining polynomial in x");
    element->add_option("--elem", eelem, "element as a polynomial in x");

    std::string file;
    auto* matrix = app.add_subcommand("matrix", "determinant and characteristic polynomial from JSON");
    matrix->add_option("--file", file, "JSON file {\"ring\": \"ZZ\" | \"QQ\" | \"GF(p)\", \"rows\": [[...]]}")
        ->required();

    std::string poly = "x^2-2";
    long prec = 64;
    auto* roots = app.add_subcommand("roots", "certified complex root boxes of a squarefree polynomial");
    roots->add_option("--poly", poly, "polynomial in x with rational coefficients");
    roots->add_option("--prec", prec, "target precision in bits");

    std::string pfield = "x^2+1";
    std::uint64_t p = 5;
    auto* primes = app.add_subcommand("primes", "decompose a rational prime in the equation order");
    primes->add_option("--field", pfield, "defining polynomial in x");
    primes->add_option("--p", p, "rational prime");

    CLI11_PARSE(app, argc, argv);
    try {
        if (*torsion) {
            std::cout << bench::torsion_demo(field, elem) << "\n";
            return 0;
        }
        if (*element) return run_element(efield, eelem);
        if (*matrix) return run_matrix(file);
        if (*roots) return run_roots(poly, prec);
        if (*primes) return run_primes(pfield, p);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 1;
}
