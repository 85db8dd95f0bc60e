#include <doctest.h>

#include <set>

#include "uconsta/code.hpp"
#include "uconsta/scan.hpp"

using namespace uconsta;

namespace {

QuotientParams ring(unsigned p, unsigned m, unsigned s, long long alpha = 1) {
    FieldParams f = FieldParams::make(p, m);
    return QuotientParams::make(f, s, f.from_int(alpha));
}

FlatBasis flatten(const Code& code) {
    std::vector<std::vector<FieldElement>> rows;
    for (unsigned r = 0; r < code.dim(); ++r) rows.push_back(code.basis.row(r));
    return FlatBasis::build(code.params.field(), code.params.n(), rows);
}

Code make_code(const QuotientParams& q, SpecKind kind, unsigned i = 0, unsigned t = 0,
               unsigned omega = 0, std::vector<long long> h = {}) {
    std::vector<FieldElement> hh;
    for (long long c : h) hh.push_back(q.field().from_int(c));
    return code_span(spec_validate({kind, i, t, omega, std::move(hh), q}));
}

}  // namespace

TEST_CASE("serial and parallel weight scans agree") {
    for (const Code& code : {make_code(ring(2, 1, 3), SpecKind::Type1Unit),
                             make_code(ring(3, 1, 2), SpecKind::Type4, 3, 0, 2, {1}),
                             make_code(ring(2, 2, 2), SpecKind::Type3, 2, 0, 0, {1}),
                             make_code(ring(5, 1, 1, 2), SpecKind::Type3, 3, 1, 0, {1}),
                             make_code(ring(2, 1, 2), SpecKind::Type1Zero)}) {
        FlatBasis fb = flatten(code);
        WeightHistogram serial = scan_weights_serial(fb);
        WeightHistogram parallel = scan_weights_parallel(fb);
        CHECK(serial == parallel);
        uint64_t sum = 0;
        for (uint64_t c : serial) sum += c;
        CHECK(sum == fb.total_words());  // every codeword visited exactly once
        CHECK(serial[0] >= 1);           // the zero word
    }
}

TEST_CASE("scan_visit walks distinct words") {
    Code code = make_code(ring(2, 1, 2), SpecKind::Type3, 1, 0, 0, {1});
    FlatBasis fb = flatten(code);
    std::set<std::vector<uint8_t>> seen;
    scan_visit(fb, [&](uint64_t, const uint8_t* w) {
        seen.insert(std::vector<uint8_t>(w, w + fb.row_bytes()));
    });
    CHECK(seen.size() == fb.total_words());
}

TEST_CASE("serial and parallel dual scans agree") {
    for (const Code& code : {make_code(ring(2, 1, 2), SpecKind::Type2, 1),
                             make_code(ring(2, 1, 3), SpecKind::Type3, 5, 2, 0, {1}),
                             make_code(ring(3, 1, 1, 2), SpecKind::Type4, 2, 0, 1, {1})}) {
        std::vector<std::vector<FieldElement>> rows;
        for (unsigned r = 0; r < code.dim(); ++r) rows.push_back(code.basis.row(r));
        const auto& field = code.params.field();
        DualScanResult serial = dual_scan_serial(field, code.params.n(), rows);
        DualScanResult parallel = dual_scan_parallel(field, code.params.n(), rows);
        CHECK(serial.orthogonal_count == parallel.orthogonal_count);
        // same span either way
        FqMatrix a(field, 2 * code.params.n()), b(field, 2 * code.params.n());
        for (auto& g : serial.generators) a.append_row(g);
        for (auto& g : parallel.generators) b.append_row(g);
        a.rref();
        b.rref();
        CHECK(a == b);
    }
}
