#include "uconsta/distance.hpp"

#include <string>

namespace uconsta {

DistanceCase torsion_distance_formula(unsigned p, unsigned s, uint64_t i) {
    uint64_t ps = saturating_pow(p, s);
    if (i > ps)
        throw ParameterError("torsion index i=" + std::to_string(i) + " outside [0, p^s=" +
                             std::to_string(ps) + "]");
    if (i == 0) return {DistanceCase::Band::unit, 0, 0, 0, 1};
    if (i == ps) return {DistanceCase::Band::zero, 0, 0, 0, 0};
    // l bands: l*p^(s-1)+1 <= i <= (l+1)*p^(s-1), value l+2
    uint64_t ps1 = ps / p;
    if (i <= (uint64_t{p} - 1) * ps1) {
        unsigned l = static_cast<unsigned>((i - 1) / ps1);
        return {DistanceCase::Band::l_band, l, 0, 0, l + 2};
    }
    // (t,k) bands: p^s - p^(s-k) + (t-1)p^(s-k-1) + 1 <= i <= p^s - p^(s-k) + t*p^(s-k-1)
    for (unsigned k = 1; k < s; ++k) {
        uint64_t psk = saturating_pow(p, s - k);
        uint64_t psk1 = psk / p;
        for (unsigned t = 1; t < p; ++t) {
            uint64_t lo = ps - psk + (uint64_t{t} - 1) * psk1 + 1;
            uint64_t hi = ps - psk + uint64_t{t} * psk1;
            if (lo <= i && i <= hi) {
                unsigned value = static_cast<unsigned>((t + 1) * saturating_pow(p, k));
                return {DistanceCase::Band::tk_band, 0, t, k, value};
            }
        }
    }
    throw InternalError("torsion bands failed to cover i=" + std::to_string(i));
}

unsigned torsion_index(const CodeSpec& spec) {
    const unsigned n = spec.params.n();
    switch (spec.kind) {
        case SpecKind::Type1Zero: return n;
        case SpecKind::Type1Unit: return 0;
        case SpecKind::Type2: return spec.i;
        case SpecKind::Type3:
            return spec_h_is_zero(spec) ? spec.i : std::min(spec.i, n - spec.i + spec.t);
        case SpecKind::Type4: {
            unsigned principal =
                spec_h_is_zero(spec) ? spec.i : std::min(spec.i, n - spec.i + spec.t);
            return std::min(spec.omega, principal);
        }
    }
    throw InternalError("unknown spec kind");
}

unsigned naive_band_distance(const CodeSpec& spec) {
    const auto& field = spec.params.field();
    unsigned idx;
    switch (spec.kind) {
        case SpecKind::Type1Zero: idx = spec.params.n(); break;
        case SpecKind::Type1Unit: idx = 0; break;
        case SpecKind::Type2:
        case SpecKind::Type3: idx = spec.i; break;
        case SpecKind::Type4: idx = spec.omega; break;
        default: throw InternalError("unknown spec kind");
    }
    return torsion_distance_formula(field.p(), spec.params.s(), idx).value;
}

unsigned spec_distance_formula(const CodeSpec& spec) {
    const auto& field = spec.params.field();
    return torsion_distance_formula(field.p(), spec.params.s(), torsion_index(spec)).value;
}

std::vector<TableRow> torsion_table(unsigned p, unsigned s) {
    uint64_t ps = saturating_pow(p, s);
    std::vector<TableRow> rows;
    rows.reserve(ps + 1);
    for (uint64_t i = 0; i <= ps; ++i) rows.push_back({i, torsion_distance_formula(p, s, i)});
    return rows;
}

// --- sweep ---

namespace {

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

std::vector<FieldElement> random_unit_h(const QuotientParams& params, unsigned max_deg,
                                        uint64_t seed, uint64_t mix) {
    const auto& field = params.field();
    uint64_t state = seed ^ (mix * 0x9E3779B97F4A7C15ULL);
    std::vector<FieldElement> h(max_deg + 1);
    std::vector<FieldElement> one{field.one()};
    // redraw a few times so the random slot differs from the fixed h in {0,1}
    // whenever the coefficient space allows it
    for (int attempt = 0; attempt < 16; ++attempt) {
        for (auto& c : h) c = field.element(splitmix64(state) % field.order());
        // force the unit condition: the constant adic coordinate is the
        // F-linear evaluation at alpha0^-1, so shifting h_0 by (1 - eval)
        // makes it exactly 1 if it was 0
        std::vector<RuElement> coeffs(params.n(), ru_zero(field));
        for (size_t k = 0; k < h.size(); ++k) coeffs[k].a = h[k];
        FieldElement eval = params.adic_expand(params.from_coeffs(coeffs)).coords[0].a;
        if (eval.is_zero()) h[0] = field.add(h[0], field.one());
        std::vector<FieldElement> trimmed = h;
        while (!trimmed.empty() && trimmed.back().is_zero()) trimmed.pop_back();
        if (!(trimmed == one) && !trimmed.empty()) return trimmed;
    }
    return one;  // only unit available (e.g. GF(2), max_deg = 0)
}

std::vector<CodeSpec> sweep_specs(const QuotientParams& params, const SweepOptions& opts) {
    const unsigned n = params.n();
    std::vector<CodeSpec> out;
    ValidateOptions vopts{.allow_omega_zero = opts.include_omega_zero};

    auto mixed = [](SpecKind kind, unsigned i, unsigned t, unsigned omega) {
        return (uint64_t{static_cast<unsigned>(kind)} << 48) ^ (uint64_t{i} << 32) ^
               (uint64_t{t} << 16) ^ omega;
    };
    // h slots: 0, 1, seeded random unit of the admitted degree
    auto push_h_slots = [&](SpecKind kind, unsigned i, unsigned t, unsigned omega,
                            unsigned max_deg) {
        out.push_back(spec_validate({kind, i, t, omega, {}, params}, vopts));
        out.push_back(spec_validate({kind, i, t, omega, {params.field().one()}, params}, vopts));
        out.push_back(spec_validate(
            {kind, i, t, omega, random_unit_h(params, max_deg, opts.seed, mixed(kind, i, t, omega)), params},
            vopts));
    };

    out.push_back(spec_validate({SpecKind::Type1Zero, 0, 0, 0, {}, params}, vopts));
    out.push_back(spec_validate({SpecKind::Type1Unit, 0, 0, 0, {}, params}, vopts));
    for (unsigned i = 0; i < n; ++i)
        out.push_back(spec_validate({SpecKind::Type2, i, 0, 0, {}, params}, vopts));
    for (unsigned i = 1; i < n; ++i)
        for (unsigned t = 0; t < i; ++t) push_h_slots(SpecKind::Type3, i, t, 0, i - t - 1);
    for (unsigned i = 1; i < n; ++i)
        for (unsigned t = 0; t < i; ++t)
            for (unsigned omega = opts.include_omega_zero ? 0 : 1; omega < i; ++omega) {
                // h = 0 admits any omega < i; h != 0 needs t < omega
                out.push_back(spec_validate({SpecKind::Type4, i, t, omega, {}, params}, vopts));
                if (omega > t) {
                    out.push_back(spec_validate(
                        {SpecKind::Type4, i, t, omega, {params.field().one()}, params}, vopts));
                    out.push_back(spec_validate(
                        {SpecKind::Type4, i, t, omega,
                         random_unit_h(params, omega - t - 1, opts.seed,
                                       mixed(SpecKind::Type4, i, t, omega)),
                         params},
                        vopts));
                }
            }
    return out;
}

SweepReport verify_sweep(const QuotientParams& params, const SweepOptions& opts) {
    SweepReport report{params, opts.seed, opts.limits, opts.include_omega_zero, {}};
    for (const CodeSpec& spec : sweep_specs(params, opts)) {
        SweepRow row;
        row.kind = spec.kind;
        row.i = spec.i;
        row.t = spec.t;
        row.omega = spec.omega;
        row.h = spec.h;
        row.formula = spec_distance_formula(spec);
        row.beyond_small_i_range =
            spec.kind == SpecKind::Type3 && spec.i > params.field().p() - 1;
        row.naive_index_divergent = row.formula != naive_band_distance(spec);
        Code code = code_span(spec);
        row.dim = code.dim();
        try {
            row.oracle = min_distance_oracle(code, opts.limits);
            row.status = *row.oracle == row.formula ? RowStatus::match : RowStatus::mismatch;
        } catch (const ResourceError&) {
            row.status = RowStatus::skipped;
        }
        switch (row.status) {
            case RowStatus::match: ++report.matched; break;
            case RowStatus::mismatch: ++report.mismatched; break;
            case RowStatus::skipped: ++report.skipped; break;
        }
        report.type3_beyond_small_i_range += row.beyond_small_i_range;
        report.naive_index_divergences += row.naive_index_divergent;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace uconsta
