// Timing harness for the path-enumeration kernel: serial reference vs the
// OpenMP-parallel search, verifying that both produce identical sequences.

#include <chrono>
#include <iostream>

#include "ech/capacity.hpp"
#include "ech/corpus.hpp"

using namespace ech;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    long long kmax = argc > 1 ? std::atoll(argv[1]) : 14;
    std::cout << "capacities_bruteforce, kmax=" << kmax << "\n";
    std::cout << "domain,serial_s,parallel_s,speedup,agree\n";
    for (const char* name : {"delta1", "unit_square", "omega1", "rect_1x2", "e23"}) {
        const ConvexDomain& dom = corpus_domain(name).domain;
        auto t0 = clock_type::now();
        auto serial = capacities_bruteforce(dom, kmax, {}, /*parallel=*/false);
        double ts = seconds_since(t0);
        t0 = clock_type::now();
        auto parallel = capacities_bruteforce(dom, kmax, {}, /*parallel=*/true);
        double tp = seconds_since(t0);
        std::cout << name << "," << ts << "," << tp << "," << (tp > 0 ? ts / tp : 0.0) << ","
                  << (serial.values == parallel.values ? "yes" : "NO") << "\n";
    }
    return 0;
}
