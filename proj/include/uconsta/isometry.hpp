#pragma once

// The weight-preserving ring isomorphism phi: R[x]/(x^(p^s)-1) ->
// R[x]/(x^(p^s)-alpha), f(x) -> f(alpha0*x), realized as the coefficient
// scaling c_j -> c_j*alpha0^j (deg f < n, so substitution never reduces).

#include <cstdint>

#include "uconsta/code.hpp"

namespace uconsta {

struct IsometryContext {
    QuotientParams source;  // alpha = 1
    QuotientParams target;  // the given alpha
    FieldElement alpha0;
    unsigned alpha_q = 0, alpha_r = 0;
};

/// Builds the context for the target ring's alpha; asserts the defining
/// identity alpha0^(p^s) = alpha^-1. Throws ParameterError for alpha = 0
/// (QuotientParams cannot hold one, so that is checked upstream).
IsometryContext compute_alpha0(const QuotientParams& target);

QuotientPoly apply_isometry(const IsometryContext& ctx, const QuotientPoly& f);
QuotientPoly apply_isometry_inverse(const IsometryContext& ctx, const QuotientPoly& g);

struct IsometryCheckOptions {
    bool exhaustive = true;    // walk all ring elements (unary checks)
    uint64_t add_pairs = 1u << 20;  // additivity pairs (all pairs if they fit, else error/sample)
    uint64_t mul_pairs = 100000;    // seeded multiplicativity pairs
    uint64_t samples = 10000;       // elements in randomized mode
    uint64_t seed = 1729;
};

struct IsometryCheckReport {
    uint64_t elements_checked = 0;
    uint64_t add_pairs_checked = 0;
    uint64_t mul_pairs_checked = 0;
    uint64_t weight_failures = 0;
    uint64_t add_failures = 0;
    uint64_t mul_failures = 0;
    uint64_t injectivity_collisions = 0;
    bool ok() const {
        return weight_failures + add_failures + mul_failures + injectivity_collisions == 0;
    }
};

/// Exhaustive mode: maps every ring element (weight preservation +
/// injectivity over the full ring, |R_1| <= 2^20 required), checks
/// additivity over all ordered pairs (requires |R_1|^2 <= add_pairs, else
/// ResourceError) and multiplicativity over mul_pairs seeded pairs.
/// Randomized mode: everything on seeded samples.
IsometryCheckReport isometry_check(const IsometryContext& ctx, const IsometryCheckOptions& opts);

/// Image of a cyclic code under phi: basis rows mapped and re-canonicalized,
/// x-closure re-verified, spec transported (h(x) -> h(alpha0*x)).
Code map_code(const IsometryContext& ctx, const Code& code);

}  // namespace uconsta
