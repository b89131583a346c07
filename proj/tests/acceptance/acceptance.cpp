// One PASS/FAIL line per acceptance criterion. CLI-level criteria run the
// bench executable and read its JSON report and exit status; the rest call
// the shared property drivers directly.

#include <array>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "properties.hpp"
#include "ringtower/bench/benchmarks.hpp"

using namespace ringtower;
using namespace rt_test;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct CliRun {
    int code = -1;
    double wall = 0;
    nlohmann::ordered_json report;
};

/// Runs the bench tool with --json; `report` stays null if the output does not parse.
CliRun bench(const std::string& args) {
    CliRun r;
    std::string cmd = std::string(RINGTOWER_BENCH_EXE) + " " + args + " --json";
    auto t0 = Clock::now();
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
    int st = pclose(p);
    r.wall = since(t0);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    r.report = nlohmann::ordered_json::parse(out, nullptr, false);
    if (r.report.is_discarded()) r.report = nullptr;
    return r;
}

/// Exit status 0 means every oracle that ran agreed.
std::string cli_ok(const CliRun& r, const std::string& what, bool need_oracle) {
    if (r.code != 0) return describe(what, " exited with ", r.code);
    if (!r.report.is_object()) return describe(what, " printed no report");
    if (need_oracle && !r.report.value("oracle_checked", false)) return describe(what, " ran no oracle");
    return "";
}

std::string fingerprint(const CliRun& r) { return r.report.is_object() ? r.report.value("fingerprint", "") : ""; }

std::string within(double secs, double cap, const std::string& what) {
    return secs < cap ? "" : describe(what, " took ", secs, " s (cap ", cap, " s)");
}

/// Concatenates failures; "" when all parts passed.
std::string all(std::initializer_list<std::string> parts) {
    std::string out;
    for (const auto& s : parts)
        if (!s.empty()) out += (out.empty() ? "" : "; ") + s;
    return out;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

template <class F>
std::string timed(double cap, const std::string& what, F&& f) {
    auto t0 = Clock::now();
    std::string v = f();
    return all({v, within(since(t0), cap, what)});
}

// Monomials of total degree <= 2n in four variables.
std::string c1_fateman() {
    auto r10 = bench("fateman --n 10"), r5 = bench("fateman --n 5");
    return all({cli_ok(r10, "fateman n=10", false), cli_ok(r5, "fateman n=5", true),
                fingerprint(r10) == binomial(24, 4).get_str() ? "" : "n=10 term count " + fingerprint(r10),
                fingerprint(r5) == binomial(14, 4).get_str() ? "" : "n=5 term count " + fingerprint(r5)});
}

std::string c2_pearce() {
    auto r3 = bench("pearce --n 3"), r4 = bench("pearce --n 4");
    return all({cli_ok(r3, "pearce n=3", true), cli_ok(r4, "pearce n=4", false), within(r4.wall, 30, "pearce n=4")});
}

std::string c3_heap_oracles() {
    return timed(60, "heap oracle suite", [] {
        return all({heap_oracle_suite<Integer>(Gen<Integer>{}, 2001, 1000),
                    heap_oracle_suite<Rational>(Gen<Rational>{}, 2002, 1000),
                    heap_oracle_suite<Zmod>(Gen<Zmod>{make_zmod(7)}, 2003, 1000),
                    heap_oracle_suite<FqElem>(Gen<FqElem>{FiniteField::get(17, 3)}, 2004, 1000)});
    });
}

std::string c4_resultant_tower() {
    auto r1 = bench("resultant-tower --e 1"), r12 = bench("resultant-tower --e 12");
    auto [s, t] = bench::resultant_tower(1);
    std::string syl = bench::text_fingerprint(to_string(resultant_sylvester(s, t)));
    return all({cli_ok(r1, "e=1", true), fingerprint(r1) == syl ? "" : "e=1 differs from the Sylvester value",
                cli_ok(r12, "e=12", false), within(r12.wall, 120, "e=12")});
}

std::string c5_determinants() { return all({det_triple_agreement(2005, 200), det_cofactor_agreement(2006, 5)}); }

std::string c6_charpolys() { return charpoly_suite(2007, 100, 7); }

std::string c7_minpolys() {
    return timed(120, "minpoly suite", [] { return minpoly_suite(2008, 100); });
}

std::string c8_ideals() {
    auto r100 = bench("ideal --n 16 --count 100 --bound 400");
    const Order& O = bench::ideal_bench_order(16);
    auto prod = bench::random_ideal_product(O, 100, 400, 7);
    std::string norm = fingerprint(r100) == prod.norm_product.get_str() ? "" : "N(product) != prod N(factors)";
    // count 20: two-generator product against the lattice-level product
    auto p20 = bench::random_ideal_product(O, 20, 400, 11);
    const auto& K = O.field();
    IntMat H = scalar_identity(16, 1);
    for (const auto& P : p20.factors) H = oracle_product(K, H, oracle_hnf(P.ideal()));
    std::string hnf20 = oracle_hnf(p20.product) == H ? "" : "count=20 HNF differs from the basis oracle";
    return all({cli_ok(r100, "ideal count=100", true), within(r100.wall, 60, "ideal count=100"), norm, hnf20,
                inverse_suite(2009, 200)});
}

std::string c9_extend_s() { return extend_s_suite(2010, 500); }

std::string c10_balls() { return all({ball_containment_suite(2011, 10000), sqrt2_conjugates(128)}); }

std::string c11_torsion() {
    return all({torsion_roots_of_unity_suite(), torsion_non_torsion_suite(2012, 100), dobrowolski_constant_check(64)});
}

std::string c12_scale() {
    const double hour = 3600;
    auto f = bench("fateman --n 30"), d = bench("nf-det --dim 80"), i = bench("ideal --n 128 --count 100");
    return all({cli_ok(f, "fateman n=30", false), within(f.wall, hour, "fateman n=30"),
                fingerprint(f) == binomial(64, 4).get_str() ? "" : "n=30 term count " + fingerprint(f), cli_ok(d, "nf-det dim=80", false),
                within(d.wall, hour, "nf-det dim=80"), cli_ok(i, "ideal n=128", true), within(i.wall, hour, "ideal n=128")});
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<std::string()> run;
    };
    const Criterion criteria[] = {
        {1, "fateman term counts", c1_fateman},
        {2, "pearce naive-oracle equality", c2_pearce},
        {3, "heap kernels against naive oracles", c3_heap_oracles},
        {4, "resultant tower PRS equals Sylvester", c4_resultant_tower},
        {5, "determinant triple agreement", c5_determinants},
        {6, "charpoly agreement and Cayley-Hamilton", c6_charpolys},
        {7, "minpoly of conjugated companion blocks", c7_minpolys},
        {8, "ideal products, norms and inverses", c8_ideals},
        {9, "S-extension invariance", c9_extend_s},
        {10, "ball containment and sqrt 2 conjugates", c10_balls},
        {11, "torsion decisions", c11_torsion},
        {12, "scale completions", c12_scale},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = Clock::now();
        std::string why;
        try {
            why = c.run();
        } catch (const std::exception& ex) {
            why = describe("exception: ", ex.what());
        }
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.1f s", since(t0));
        if (why.empty()) {
            std::cout << "PASS " << c.id << " " << c.title << " (" << secs << ")" << std::endl;
        } else {
            ++failed;
            std::cout << "FAIL " << c.id << " " << c.title << ": " << why << " (" << secs << ")" << std::endl;
        }
    }
    return failed == 0 ? 0 : 1;
}
