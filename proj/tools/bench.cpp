#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <algorithm>
#include <mutex>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ringtower/bench/benchmarks.hpp"

namespace rb = ringtower::bench;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitOracle = 2;

struct Options {
    bool json = false;
    bool csv = false;
    std::uint64_t seed = 0;
    bool seed_given = false;
    double scale = 1.0;
    int repeat = 1;
    int threads = 1;
};

/// Out-of-range inputs are passed through so the benchmark rejects them.
long scaled(long v, double scale, long floor_value) {
    if (scale == 1.0 || v < floor_value) return v;
    long s = static_cast<long>(std::ceil(static_cast<double>(v) * scale));
    return std::max(floor_value, s);
}

/// Runs `repeat` copies on up to `threads` workers; each copy is single-threaded.
std::vector<rb::BenchReport> run_repeated(const std::function<rb::BenchReport()>& job, int repeat, int threads) {
    std::vector<rb::BenchReport> out(static_cast<std::size_t>(repeat));
    std::vector<std::exception_ptr> errs(out.size());
    std::size_t next = 0;
    std::mutex mu;
    auto worker = [&] {
        for (;;) {
            std::size_t i;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (next >= out.size()) return;
                i = next++;
            }
            try {
                out[i] = job();
            } catch (...) {
                errs[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < std::min(threads, repeat); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
    return out;
}

int emit(const std::vector<rb::BenchReport>& reports, const Options& opt) {
    if (opt.json) {
        if (reports.size() == 1) {
            std::cout << rb::to_json(reports[0]).dump(2) << "\n";
        } else {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& r : reports) arr.push_back(rb::to_json(r));
            std::cout << arr.dump(2) << "\n";
        }
    } else if (opt.csv) {
        std::cout << rb::csv_header() << "\n";
        for (const auto& r : reports) std::cout << rb::to_csv_row(r) << "\n";
    } else {
        for (const auto& r : reports) std::cout << rb::to_text(r) << "\n";
    }
    int code = kExitOk;
    for (const auto& r : reports) {
        if (r.oracle_checked && !r.oracle_ok) {
            std::cerr << "oracle mismatch in " << r.name << "\n";
            code = kExitOracle;
        }
        if (r.fingerprint != reports[0].fingerprint) {
            std::cerr << "fingerprint differs between repetitions\n";
            code = kExitOracle;
        }
    }
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ringtower benchmark harness"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json, "print the report as JSON");
    app.add_flag("--csv", opt.csv, "print the report as CSV");
    app.add_option("--seed", opt.seed, "seed for the SplitMix64 generator")->each([&](const std::string&) {
        opt.seed_given = true;
    });
    app.add_option("--scale", opt.scale, "multiply the size parameter by this factor")
        ->check(CLI::Range(1e-6, 1.0e6));
    app.add_option("--repeat", opt.repeat, "number of repetitions")->check(CLI::PositiveNumber);
    app.add_option("--threads", opt.threads, "repetitions run concurrently")->check(CLI::PositiveNumber);
    app.fallthrough();

    long n = 10;
    auto* fateman = app.add_subcommand("fateman", "f (f + 1) with f = (1 + x + y + z + t)^n");
    fateman->add_option("--n", n, "exponent");

    long pn = 4;
    auto* pearce = app.add_subcommand("pearce", "f g for the five-variable sparse pair");
    pearce->add_option("--n", pn, "exponent");

    long e = 1;
    auto* rt = app.add_subcommand("resultant-tower", "resultant over ((GF(17^11)[y])/(y^3 + 3xy + 1))[z]");
    rt->add_option("--e", e, "exponent");

    long dim = 20;
    auto* nfdet = app.add_subcommand("nf-det", "determinant over Q[a]/(a^3 + 3a + 1)");
    nfdet->add_option("--dim", dim, "matrix dimension");

    long in = 16, count = 100;
    std::uint64_t bound = 400;
    auto* ideal = app.add_subcommand("ideal", "products of random prime ideals in Q[x]/(x^n + 2)");
    ideal->add_option("--n", in, "field degree");
    ideal->add_option("--count", count, "number of factors");
    ideal->add_option("--bound", bound, "norm bound for the prime ideals");

    long mdim = 20;
    auto* mp = app.add_subcommand("minpoly", "minimal polynomial of a conjugated block-companion matrix");
    mp->add_option("--dim", mdim, "matrix dimension");

    CLI11_PARSE(app, argc, argv);

    auto seed_or = [&](std::uint64_t dflt) { return opt.seed_given ? opt.seed : dflt; };
    std::function<rb::BenchReport()> job;
    try {
        if (*fateman) {
            long v = scaled(n, opt.scale, 1);
            job = [v] { return rb::cmd_fateman(v); };
        } else if (*pearce) {
            long v = scaled(pn, opt.scale, 0);
            job = [v] { return rb::cmd_pearce(v); };
        } else if (*rt) {
            long v = scaled(e, opt.scale, 1);
            job = [v] { return rb::cmd_resultant_tower(v); };
        } else if (*nfdet) {
            long v = scaled(dim, opt.scale, 1);
            std::uint64_t s = seed_or(42);
            job = [v, s] { return rb::cmd_nf_det(v, s); };
        } else if (*ideal) {
            long c = scaled(count, opt.scale, 1);
            std::uint64_t s = seed_or(7);
            job = [in = in, c, b = bound, s] { return rb::cmd_ideal(in, c, b, s); };
        } else if (*mp) {
            long v = scaled(mdim, opt.scale, 1);
            std::uint64_t s = seed_or(3);
            job = [v, s] { return rb::cmd_minpoly(v, s); };
        }
        return emit(run_repeated(job, opt.repeat, opt.threads), opt);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitError;
    }
}
