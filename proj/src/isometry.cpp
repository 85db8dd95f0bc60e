#include "uconsta/isometry.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace uconsta {

IsometryContext compute_alpha0(const QuotientParams& target) {
    // QuotientParams::make already computed alpha0 and asserted
    // alpha0^(p^s)*alpha = 1; repackage with the cyclic source ring.
    return {target.cyclic_twin(), target, target.alpha0(), target.alpha_q(), target.alpha_r()};
}

namespace {

QuotientPoly scale_by_powers(const QuotientParams& from, const QuotientParams& to,
                             const QuotientPoly& f, const FieldElement& base) {
    from.check(f);
    const auto& field = from.field();
    std::vector<RuElement> coeffs(f.coeffs());
    FieldElement power = field.one();
    for (unsigned j = 0; j < f.n(); ++j) {
        coeffs[j] = ru_scale(field, coeffs[j], power);
        power = field.mul(power, base);
    }
    return to.from_coeffs(std::move(coeffs));
}

}  // namespace

QuotientPoly apply_isometry(const IsometryContext& ctx, const QuotientPoly& f) {
    return scale_by_powers(ctx.source, ctx.target, f, ctx.alpha0);
}

QuotientPoly apply_isometry_inverse(const IsometryContext& ctx, const QuotientPoly& g) {
    return scale_by_powers(ctx.target, ctx.source, g, ctx.target.field().inv(ctx.alpha0));
}

IsometryCheckReport isometry_check(const IsometryContext& ctx, const IsometryCheckOptions& opts) {
    const QuotientParams& src = ctx.source;
    IsometryCheckReport report;
    double total_bits = src.element_bits();
    if (opts.exhaustive && total_bits > 20.0)
        throw ResourceError(total_bits, 20,
                            "exhaustive isometry check needs |R_1| <= 2^20 elements");
    const uint64_t total = saturating_pow(src.field().order(), 2 * src.n());

    uint64_t rng = opts.seed;
    auto next = [&rng]() {
        uint64_t z = (rng += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    };
    auto element_at = [&](uint64_t idx) { return src.element(idx); };

    // weight preservation + injectivity: checked over distinct source
    // elements (all of them in exhaustive mode, a deduplicated sample
    // otherwise), so any equal images are genuine collisions
    std::vector<uint64_t> indices;
    if (opts.exhaustive) {
        indices.resize(total);
        for (uint64_t idx = 0; idx < total; ++idx) indices[idx] = idx;
    } else {
        for (uint64_t c = 0; c < opts.samples; ++c) indices.push_back(next() % total);
        std::sort(indices.begin(), indices.end());
        indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    }
    {
        std::vector<QuotientPoly> images;
        images.reserve(indices.size());
        for (uint64_t idx : indices) {
            QuotientPoly f = element_at(idx);
            QuotientPoly g = apply_isometry(ctx, f);
            if (hamming_weight(g) != hamming_weight(f)) ++report.weight_failures;
            images.push_back(std::move(g));
            ++report.elements_checked;
        }
        std::sort(images.begin(), images.end(),
                  [](const QuotientPoly& a, const QuotientPoly& b) { return a.coeffs() < b.coeffs(); });
        for (size_t k = 1; k < images.size(); ++k)
            if (images[k] == images[k - 1]) ++report.injectivity_collisions;
    }

    // additivity: phi(f+g) = phi(f) + phi(g)
    if (opts.exhaustive) {
        uint64_t pairs = total > UINT64_MAX / total ? UINT64_MAX : total * total;
        if (pairs > opts.add_pairs)
            throw ResourceError(2 * total_bits, 0,
                                "exhaustive additivity needs |R_1|^2 <= the add-pairs budget of " +
                                    std::to_string(opts.add_pairs));
        std::vector<QuotientPoly> elems, images;
        elems.reserve(total);
        images.reserve(total);
        for (uint64_t idx = 0; idx < total; ++idx) {
            elems.push_back(element_at(idx));
            images.push_back(apply_isometry(ctx, elems.back()));
        }
        for (uint64_t a = 0; a < total; ++a)
            for (uint64_t b = 0; b < total; ++b) {
                if (!(apply_isometry(ctx, src.add(elems[a], elems[b])) ==
                      ctx.target.add(images[a], images[b])))
                    ++report.add_failures;
                ++report.add_pairs_checked;
            }
    } else {
        for (uint64_t c = 0; c < opts.add_pairs; ++c) {
            QuotientPoly fa = element_at(next() % total);
            QuotientPoly fb = element_at(next() % total);
            if (!(apply_isometry(ctx, src.add(fa, fb)) ==
                  ctx.target.add(apply_isometry(ctx, fa), apply_isometry(ctx, fb))))
                ++report.add_failures;
            ++report.add_pairs_checked;
        }
    }

    // multiplicativity: phi(f*g) = phi(f) * phi(g), products in the
    // respective quotients; seeded pairs in both modes (products are O(n^2))
    for (uint64_t c = 0; c < opts.mul_pairs; ++c) {
        QuotientPoly fa = element_at(next() % total);
        QuotientPoly fb = element_at(next() % total);
        if (!(apply_isometry(ctx, src.mul(fa, fb)) ==
              ctx.target.mul(apply_isometry(ctx, fa), apply_isometry(ctx, fb))))
            ++report.mul_failures;
        ++report.mul_pairs_checked;
    }
    return report;
}

Code map_code(const IsometryContext& ctx, const Code& code) {
    if (!(code.params == ctx.source))
        throw ParameterError("map_code expects a code over the cyclic source ring");
    std::vector<std::vector<FieldElement>> rows;
    for (unsigned r = 0; r < code.dim(); ++r)
        rows.push_back(poly_to_row(apply_isometry(ctx, row_to_poly(ctx.source, code.basis.row(r)))));
    // transport the spec: phi(<(x-1)^i + u(x-1)^t h(x)>) is generated with
    // h~(x) = h(alpha0*x), i.e. coefficients h_k * alpha0^k
    std::optional<CodeSpec> spec;
    if (code.spec) {
        CodeSpec mapped = *code.spec;
        mapped.params = ctx.target;
        const auto& field = ctx.target.field();
        FieldElement power = field.one();
        for (auto& c : mapped.h) {
            c = field.mul(c, power);
            power = field.mul(power, ctx.alpha0);
        }
        spec = spec_validate(std::move(mapped), ValidateOptions{.allow_omega_zero = true});
    }
    return code_from_rows(ctx.target, std::move(rows), std::move(spec));
}

}  // namespace uconsta
