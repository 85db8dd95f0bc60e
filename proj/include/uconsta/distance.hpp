#pragma once

// The closed-form minimum-distance engine and the formula-vs-oracle
// verification harness. The single source of truth is the piecewise band
// formula for field codes <(x-1)^i> of length p^s; every ideal's distance
// equals that formula evaluated at the ideal's torsion index tau = the least
// e with u(x-1)^e in C:
//
//   tau(<0>) = p^s, tau(<1>) = 0, tau(<u(x-1)^i>) = i,
//   tau(<(x-1)^i + u(x-1)^t h>)                = i   if h = 0
//                                               min(i, p^s-i+t) if h unit
//   tau(<(x-1)^i + u(x-1)^t h, u(x-1)^omega>) = min(omega, tau of the
//                                               principal part)
//
// (The (alpha0*x-1)-based alpha-constacyclic ideals transport to the same
// values through the weight-preserving isometry.) Reports carry counts of
// the specs where this differs from naively evaluating the band formula at
// i resp. omega, which is exactly where the naive evaluation is wrong.

#include <cstdint>
#include <optional>
#include <vector>

#include "uconsta/code.hpp"

namespace uconsta {

struct DistanceCase {
    enum class Band { zero, unit, l_band, tk_band };
    Band band;
    unsigned l = 0;      // l_band: value = l + 2, 0 <= l <= p-2
    unsigned t = 0;      // tk_band: value = (t+1)p^k, 1 <= t <= p-1
    unsigned k = 0;      // tk_band: 1 <= k <= s-1
    unsigned value = 0;  // the distance itself
};

/// The band formula for <(x-1)^i> over GF(p^m) of length p^s, 0 <= i <= p^s.
DistanceCase torsion_distance_formula(unsigned p, unsigned s, uint64_t i);

/// Torsion index tau of a validated spec (p^s for the zero code).
unsigned torsion_index(const CodeSpec& spec);

/// Band formula evaluated naively at the type's headline index (i for Types
/// 2/3, omega for Type 4); diverges from the true distance when tau < that
/// index.
unsigned naive_band_distance(const CodeSpec& spec);

/// Minimum Hamming distance of the spec's ideal: torsion formula at tau.
unsigned spec_distance_formula(const CodeSpec& spec);

/// Distance table rows for i = 0..p^s.
struct TableRow {
    uint64_t i;
    DistanceCase dc;
};
std::vector<TableRow> torsion_table(unsigned p, unsigned s);

// --- the verification sweep ---

struct SweepOptions {
    uint64_t seed = 1729;
    Limits limits{};
    bool include_omega_zero = false;  // also test the omega = 0, h = 0 ideals
};

enum class RowStatus { match, mismatch, skipped };

struct SweepRow {
    SpecKind kind;
    unsigned i = 0, t = 0, omega = 0;
    std::vector<FieldElement> h;
    unsigned dim = 0;
    unsigned formula = 0;
    std::optional<unsigned> oracle;  // absent when skipped (over the cap)
    RowStatus status = RowStatus::skipped;
    bool beyond_small_i_range = false;   // type3 with i > p-1
    bool naive_index_divergent = false;       // formula != naive_band_distance
};

struct SweepReport {
    QuotientParams params;
    uint64_t seed = 0;
    Limits limits{};
    bool include_omega_zero = false;
    std::vector<SweepRow> rows;

    uint64_t matched = 0, mismatched = 0, skipped = 0;
    uint64_t type3_beyond_small_i_range = 0;
    uint64_t naive_index_divergences = 0;

    uint64_t total() const { return rows.size(); }
    double in_cap_fraction() const {
        return rows.empty() ? 1.0 : 1.0 - static_cast<double>(skipped) / rows.size();
    }
    bool all_match() const { return mismatched == 0; }
};

/// The deterministic spec row set of the sweep: all Type 1/2 specs and all
/// validator-admissible Type 3/4 (i, t, omega) combinations, each with
/// h in {0, 1, seeded random unit}.
std::vector<CodeSpec> sweep_specs(const QuotientParams& params, const SweepOptions& opts);

/// One seeded random unit h of degree <= max_deg (unit = nonzero constant
/// adic coordinate); deterministic in (seed, the mix key).
std::vector<FieldElement> random_unit_h(const QuotientParams& params, unsigned max_deg,
                                        uint64_t seed, uint64_t mix);

/// Evaluates spec_distance_formula against min_distance_oracle on every
/// sweep row; over-cap rows are reported as skipped, never errors.
SweepReport verify_sweep(const QuotientParams& params, const SweepOptions& opts = {});

}  // namespace uconsta
