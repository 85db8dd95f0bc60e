#pragma once

// The chain ring R = GF(p^m) + u*GF(p^m) with u^2 = 0, kept deliberately
// concrete: an element is the pair (a, b) for a + u*b, so the residue map
// a + u*b -> a is a plain field access.

#include <cstdint>

#include "uconsta/errors.hpp"
#include "uconsta/field.hpp"

namespace uconsta {

struct RuElement {
    FieldElement a;  // residue part
    FieldElement b;  // u part

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    auto operator<=>(const RuElement&) const = default;
};

inline RuElement ru_zero(const FieldParams& f) { return {f.zero(), f.zero()}; }
inline RuElement ru_one(const FieldParams& f) { return {f.one(), f.zero()}; }
inline RuElement ru_u(const FieldParams& f) { return {f.zero(), f.one()}; }
inline RuElement ru_from_field(const FieldElement& a, const FieldParams& f) {
    return {a, f.zero()};
}

inline RuElement ru_add(const FieldParams& f, const RuElement& x, const RuElement& y) {
    return {f.add(x.a, y.a), f.add(x.b, y.b)};
}

inline RuElement ru_sub(const FieldParams& f, const RuElement& x, const RuElement& y) {
    return {f.sub(x.a, y.a), f.sub(x.b, y.b)};
}

inline RuElement ru_neg(const FieldParams& f, const RuElement& x) {
    return {f.neg(x.a), f.neg(x.b)};
}

// (a1 + u b1)(a2 + u b2) = a1 a2 + u (a1 b2 + a2 b1), the u^2 term vanishes.
inline RuElement ru_mul(const FieldParams& f, const RuElement& x, const RuElement& y) {
    return {f.mul(x.a, y.a), f.add(f.mul(x.a, y.b), f.mul(x.b, y.a))};
}

// scale by a plain field element
inline RuElement ru_scale(const FieldParams& f, const RuElement& x, const FieldElement& c) {
    return {f.mul(x.a, c), f.mul(x.b, c)};
}

inline bool ru_is_unit(const RuElement& x) { return !x.a.is_zero(); }

// (a + u b)^-1 = a^-1 - u a^-2 b
inline RuElement ru_inv(const FieldParams& f, const RuElement& x) {
    if (!ru_is_unit(x)) throw NotInvertibleError("element of uF_{p^m} is not invertible");
    FieldElement ai = f.inv(x.a);
    return {ai, f.neg(f.mul(f.mul(ai, ai), x.b))};
}

// index <-> element, index in [0, p^(2m)): a = low digits, b = high digits
inline RuElement ru_element(const FieldParams& f, uint64_t index) {
    return {f.element(index % f.order()), f.element(index / f.order())};
}

inline uint64_t ru_index(const FieldParams& f, const RuElement& x) {
    return f.index_of(x.a) + f.order() * f.index_of(x.b);
}

}  // namespace uconsta
