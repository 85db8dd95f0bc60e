// Acceptance suite: runs every verification the library promises, printing
// one PASS/FAIL line per criterion. Exit status 0 iff everything passed.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <tuple>
#include <vector>

#include "oracles.hpp"
#include "uconsta/distance.hpp"
#include "uconsta/isometry.hpp"
#include "uconsta/serialize.hpp"

using namespace uconsta;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<std::string()>& run) {
    auto start = Clock::now();
    std::string detail;
    bool ok = true;
    try {
        detail = run();
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    if (detail.rfind("FAIL", 0) == 0) ok = false;
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("[%d] %-52s %s (%.2fs) %s\n", number, name.c_str(), ok ? "PASS" : "FAIL", secs,
                detail.c_str());
    failures += !ok;
}

QuotientParams ring(unsigned p, unsigned m, unsigned s, long long alpha = 1) {
    FieldParams f = FieldParams::make(p, m);
    return QuotientParams::make(f, s, f.from_int(alpha));
}

const std::vector<std::tuple<unsigned, unsigned, unsigned>> kCyclicSets = {
    {2, 1, 1}, {2, 1, 2}, {2, 1, 3}, {2, 2, 1}, {2, 2, 2},
    {3, 1, 1}, {3, 1, 2}, {3, 2, 1}, {5, 1, 1}};

std::string run_sweeps(const std::vector<QuotientParams>& sets) {
    uint64_t specs = 0, mismatches = 0, skipped = 0;
    double worst_cap = 1.0;
    for (const auto& prm : sets) {
        SweepReport report = verify_sweep(prm, {});
        specs += report.total();
        mismatches += report.mismatched;
        skipped += report.skipped;
        worst_cap = std::min(worst_cap, report.in_cap_fraction());
        if (report.in_cap_fraction() < 0.95)
            return "FAIL: in-cap fraction " + std::to_string(report.in_cap_fraction()) +
                   " below 0.95";
    }
    if (mismatches) return "FAIL: " + std::to_string(mismatches) + " mismatches";
    return std::to_string(sets.size()) + " parameter sets, " + std::to_string(specs) +
           " specs, 0 mismatches, " + std::to_string(skipped) + " skipped, min in-cap " +
           std::to_string(100.0 * worst_cap).substr(0, 5) + "%";
}

}  // namespace

int main() {
    criterion(1, "formula == oracle, cyclic sweeps", [] {
        std::vector<QuotientParams> sets;
        for (auto [p, m, s] : kCyclicSets) sets.push_back(ring(p, m, s));
        return run_sweeps(sets);
    });

    criterion(2, "formula == oracle, alpha-constacyclic sweeps", [] {
        FieldParams f4 = FieldParams::make(2, 2);
        FieldElement y = f4.from_coeffs(std::vector<long long>{0, 1});
        std::vector<QuotientParams> sets{ring(3, 1, 1, 2), ring(3, 1, 2, 2),
                                         QuotientParams::make(f4, 2, y), ring(5, 1, 1, 2),
                                         ring(5, 1, 1, 3), ring(5, 1, 1, 4)};
        return run_sweeps(sets);
    });

    criterion(3, "torsion table reproduction", [] {
        const std::vector<unsigned> want212{1, 2, 2, 4, 0};
        const std::vector<unsigned> want213{1, 2, 2, 2, 2, 4, 4, 8, 0};
        FieldParams f2 = FieldParams::make(2, 1);
        for (auto [s, want] : {std::pair{2u, want212}, {3u, want213}}) {
            auto rows = torsion_table(2, s);
            if (rows.size() != want.size()) return std::string("FAIL: table size");
            for (size_t i = 0; i < want.size(); ++i) {
                if (rows[i].dc.value != want[i])
                    return "FAIL: table (2,1," + std::to_string(s) + ") at i=" +
                           std::to_string(i);
                if (testing::field_code_min_distance(f2, s, static_cast<unsigned>(i)) != want[i])
                    return "FAIL: field oracle differs at i=" + std::to_string(i);
            }
        }
        return std::string("tables (2,1,2) and (2,1,3) equal the field-code oracle");
    });

    criterion(4, "weight-preserving isometry at (3,1,1) alpha=2", [] {
        IsometryContext ctx = compute_alpha0(ring(3, 1, 1, 2));
        IsometryCheckOptions opts;  // exhaustive: 729 elements, all 729^2 sums, 1e5 products
        IsometryCheckReport report = isometry_check(ctx, opts);
        if (!report.ok()) return std::string("FAIL: check failures");
        Limits limits;
        unsigned ideals = 0;
        for (const CodeSpec& spec : enumerate_canonical_specs(ctx.source)) {
            Code code = code_span(spec);
            if (weight_distribution(map_code(ctx, code), limits) !=
                weight_distribution(code, limits))
                return std::string("FAIL: histogram changed for ") +
                       std::string(to_string(spec.kind));
            ++ideals;
        }
        return std::to_string(report.elements_checked) + " elements, " +
               std::to_string(report.add_pairs_checked) + " sums, " +
               std::to_string(report.mul_pairs_checked) + " products, " +
               std::to_string(ideals) + " ideals mapped, 0 failures";
    });

    criterion(5, "structural identities (nilpotency, adic, weight bound)", [] {
        uint64_t checked = 0;
        uint64_t rng = 20250810;
        auto next = [&rng]() {
            uint64_t z = (rng += 0x9E3779B97F4A7C15ULL);
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
            z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
            return z ^ (z >> 31);
        };
        for (auto [p, m, s] : kCyclicSets) {
            QuotientParams prm = ring(p, m, s);
            const auto& field = prm.field();
            // nilpotency with index exactly p^s
            if (!prm.binomial_power(prm.n()).is_zero()) return std::string("FAIL: (x-1)^n != 0");
            if (prm.binomial_power(prm.n() - 1).is_zero())
                return std::string("FAIL: (x-1)^(n-1) == 0");
            // freshman's dream at the plain-polynomial level for k <= s
            unsigned pk = 1;
            for (unsigned k = 1; k <= s; ++k) {
                pk *= p;
                auto lhs = testing::plain_pow_x_minus_1(field, pk);
                std::vector<RuElement> rhs(pk + 1, ru_zero(field));
                rhs[0] = ru_from_field(field.neg(field.one()), field);
                rhs[pk] = ru_one(field);
                if (lhs != rhs) return std::string("FAIL: freshman's dream");
            }
            // adic round trip and the weight bound, exhaustive <= 2^16 else sampled
            double bits = prm.element_bits();
            uint64_t total = saturating_pow(field.order(), 2 * prm.n());
            auto check_one = [&](uint64_t idx) {
                QuotientPoly f = prm.element(idx);
                if (!(prm.adic_collapse(prm.adic_expand(f)) == f)) return false;
                unsigned wa = 0, wb = 0;
                for (unsigned j = 0; j < prm.n(); ++j) {
                    wa += !f[j].a.is_zero();
                    wb += !f[j].b.is_zero();
                }
                return hamming_weight(f) >= std::max(wa, wb);
            };
            if (bits <= 16.0) {
                for (uint64_t idx = 0; idx < total; ++idx, ++checked)
                    if (!check_one(idx)) return std::string("FAIL: identity fails at exhaustive idx");
            } else {
                for (int c = 0; c < 10000; ++c, ++checked)
                    if (!check_one(next() % total)) return std::string("FAIL: identity fails at sample");
            }
        }
        return std::to_string(checked) + " ring elements checked across 9 parameter sets";
    });

    criterion(6, "duality laws at (2,1,1) and (2,1,2)", [] {
        Limits limits;
        unsigned codes = 0;
        for (auto prm : {ring(2, 1, 1), ring(2, 1, 2)}) {
            for (const CodeSpec& spec : enumerate_canonical_specs(prm)) {
                Code code = code_span(spec);
                // dual_bruteforce verifies |C|*|C^perp| = |R|^n (in exponent
                // form) and closure under the alpha^-1 shift internally
                Code dual = dual_bruteforce(code, limits);
                Code back = dual_bruteforce(dual, limits);
                if (!(back.basis == code.basis)) return std::string("FAIL: double dual");
                ++codes;
            }
        }
        return std::to_string(codes) + " codes: cardinality product and shift closure exact";
    });

    criterion(7, "unit census |R*| = p^m(p^m - 1)", [] {
        for (auto [p, m] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u},
                            {2u, 3u}, {3u, 2u}, {2u, 4u}}) {
            FieldParams f = FieldParams::make(p, m);
            uint64_t q = f.order(), units = 0;
            for (uint64_t i = 0; i < q * q; ++i) units += ru_is_unit(ru_element(f, i));
            if (units != q * (q - 1))
                return "FAIL: census at p^m=" + std::to_string(q);
        }
        return std::string("p^m in {2,3,4,5,8,9,16} exact");
    });

    std::printf("%s\n", failures ? "ACCEPTANCE: FAIL" : "ACCEPTANCE: PASS");
    return failures ? 1 : 0;
}
