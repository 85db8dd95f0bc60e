// Times the serial reference kernels against the OpenMP ones on
// representative codes: the full-ring weight scan at (2,1,3), the largest
// in-cap ternary length-9 ideals, and a capped dual scan.
//
// Build: cmake --build build --target uconsta_bench
// Run:   ./build/tools/uconsta_bench [repeats]

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "uconsta/distance.hpp"
#include "uconsta/scan.hpp"

using namespace uconsta;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

FlatBasis flatten(const Code& code) {
    std::vector<std::vector<FieldElement>> rows;
    for (unsigned r = 0; r < code.dim(); ++r) rows.push_back(code.basis.row(r));
    return FlatBasis::build(code.params.field(), code.params.n(), rows);
}

void bench_weight_scan(const char* label, const CodeSpec& spec, int repeats) {
    Code code = code_span(spec);
    FlatBasis fb = flatten(code);
    double serial = 1e30, parallel = 1e30;
    WeightHistogram hs, hp;
    for (int r = 0; r < repeats; ++r) {
        auto t0 = Clock::now();
        hs = scan_weights_serial(fb);
        serial = std::min(serial, seconds_since(t0));
        t0 = Clock::now();
        hp = scan_weights_parallel(fb);
        parallel = std::min(parallel, seconds_since(t0));
    }
    const bool same = hs == hp;
    std::printf("%-34s dim=%2u words=%10llu  serial %8.3f ms  parallel %8.3f ms  x%.2f  %s\n",
                label, code.dim(), static_cast<unsigned long long>(fb.total_words()),
                serial * 1e3, parallel * 1e3, serial / parallel, same ? "equal" : "DIFFER");
}

void bench_dual_scan(const char* label, const CodeSpec& spec, int repeats) {
    Code code = code_span(spec);
    std::vector<std::vector<FieldElement>> rows;
    for (unsigned r = 0; r < code.dim(); ++r) rows.push_back(code.basis.row(r));
    const auto& field = code.params.field();
    double serial = 1e30, parallel = 1e30;
    DualScanResult rs, rp;
    for (int r = 0; r < repeats; ++r) {
        auto t0 = Clock::now();
        rs = dual_scan_serial(field, code.params.n(), rows);
        serial = std::min(serial, seconds_since(t0));
        t0 = Clock::now();
        rp = dual_scan_parallel(field, code.params.n(), rows);
        parallel = std::min(parallel, seconds_since(t0));
    }
    const bool same = rs.orthogonal_count == rp.orthogonal_count;
    std::printf("%-34s dim=%2u ambient=%9llu  serial %8.3f ms  parallel %8.3f ms  x%.2f  %s\n",
                label, code.dim(),
                static_cast<unsigned long long>(saturating_pow(field.order(), 2 * code.params.n())),
                serial * 1e3, parallel * 1e3, serial / parallel, same ? "equal" : "DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
    const int repeats = argc > 1 ? std::stoi(argv[1]) : 3;
#ifdef _OPENMP
    std::printf("OpenMP threads: %d, repeats: %d (best-of)\n", omp_get_max_threads(), repeats);
#else
    std::printf("built without OpenMP; parallel == serial, repeats: %d\n", repeats);
#endif

    FieldParams f2 = FieldParams::make(2, 1);
    FieldParams f3 = FieldParams::make(3, 1);
    QuotientParams r213 = QuotientParams::make(f2, 3, f2.one());
    QuotientParams r312 = QuotientParams::make(f3, 2, f3.one());

    // whole ring at (2,1,3): 2^16 words
    bench_weight_scan("weight scan <1> (2,1,3)", {SpecKind::Type1Unit, 0, 0, 0, {}, r213}, repeats);
    // large ternary ideals at (3,1,2): 3^13 and 3^12 words
    bench_weight_scan("weight scan type4 i=3 w=2 (3,1,2)",
                      spec_validate({SpecKind::Type4, 3, 0, 2, {f3.one()}, r312}), repeats);
    bench_weight_scan("weight scan type3 i=3 (3,1,2)",
                      spec_validate({SpecKind::Type3, 3, 0, 0, {f3.one()}, r312}), repeats);
    // dual scan over the full ambient 4^8 = 65536 vectors
    bench_dual_scan("dual scan <u(x-1)^3> (2,1,3)",
                    spec_validate({SpecKind::Type2, 3, 0, 0, {}, r213}), repeats);
    return 0;
}
