// Throughput comparison of the enumeration engines: the OpenMP bitmask
// kernel, the same kernel on one thread, and the serial reference path that
// routes every graph through the public Graph/indices API. All three must
// produce identical scan results; the reference engine is skipped on the
// largest orders where it would dominate the run.

#include <chrono>
#include <cstdio>
#include <string>

#include "vedeg/verifier.hpp"

using namespace vedeg;

namespace {

double run_timed(GraphClass cls, int n, Engine engine, ClassScan& out) {
    const auto start = std::chrono::steady_clock::now();
    out = scan_class(cls, n, engine);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void bench(GraphClass cls, int n, bool with_reference) {
    const char* name = cls == GraphClass::Trees ? "trees" : "connected";
    ClassScan parallel, serial, reference;
    const double tp = run_timed(cls, n, Engine::FastParallel, parallel);
    const double ts = run_timed(cls, n, Engine::FastSerial, serial);
    bool equal = parallel == serial;
    double tr = 0.0;
    if (with_reference) {
        tr = run_timed(cls, n, Engine::Reference, reference);
        equal = equal && serial == reference;
    }
    std::printf("%-9s n=%d  graphs=%-9llu  parallel %8.3fs  serial %8.3fs  speedup %5.2fx",
                name, n, static_cast<unsigned long long>(parallel.graphs), tp, ts,
                tp > 0 ? ts / tp : 0.0);
    if (with_reference)
        std::printf("  reference %8.3fs (%5.2fx vs serial kernel)", tr, ts > 0 ? tr / ts : 0.0);
    std::printf("  results %s\n", equal ? "identical" : "DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
    const bool full = argc > 1 && std::string(argv[1]) == "--full";
    bench(GraphClass::Trees, 7, true);
    bench(GraphClass::Trees, 8, true);
    bench(GraphClass::Trees, 9, full);
    bench(GraphClass::Connected, 6, true);
    bench(GraphClass::Connected, 7, full);
    if (full)
        bench(GraphClass::Trees, 10, false);
    return 0;
}
