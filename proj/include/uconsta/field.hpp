#pragma once

// Exact arithmetic in Z_p and in the extension field GF(p^m), with elements
// stored as dense residue vectors in a canonical polynomial basis. The
// modulus of GF(p^m) is always the lexicographically smallest monic
// irreducible of degree m over Z_p (coefficients read lowest-degree-first as
// a base-p integer), so two constructions of the same (p, m) are always the
// same field.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "uconsta/errors.hpp"
#include "uconsta/limits.hpp"

namespace uconsta {

// Hard compile-time bound on m; Limits::max_m may be raised up to this.
inline constexpr unsigned kMaxExtensionDegree = 8;

class FieldParams;

/// One element of GF(p^m): m residues mod p, lowest degree first. Elements
/// carry their (p, m) tag so that cross-field operands are detected.
class FieldElement {
  public:
    FieldElement() = default;  // tagless zero; rejected by any FieldParams

    unsigned p() const { return p_; }
    unsigned m() const { return m_; }
    unsigned coeff(unsigned i) const { return c_[i]; }

    bool is_zero() const {
        for (unsigned i = 0; i < m_; ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    std::vector<int> coeffs() const { return std::vector<int>(c_.begin(), c_.begin() + m_); }

    /// Compact text form: residues joined by '.', e.g. y+1 in GF(4) -> "1.1";
    /// for m = 1 just the residue.
    std::string to_string() const;

    // equality plus an arbitrary-but-stable order for sorting
    auto operator<=>(const FieldElement&) const = default;

  private:
    friend class FieldParams;
    std::array<uint8_t, kMaxExtensionDegree> c_{};
    uint8_t p_ = 0;
    uint8_t m_ = 0;
};

/// The field GF(p^m) itself: modulus + all arithmetic. Immutable after
/// construction; every operation is a pure function, safe to share across
/// threads.
class FieldParams {
  public:
    /// Canonical construction of GF(p^m). Throws ParameterError for
    /// non-prime p or out-of-range (p, m).
    static FieldParams make(unsigned p, unsigned m, const Limits& limits = {});

    unsigned p() const { return p_; }
    unsigned m() const { return m_; }
    uint64_t order() const { return order_; }  // p^m
    /// Monic modulus, length m+1, lowest degree first, leading coefficient 1.
    const std::vector<uint8_t>& modulus() const { return modulus_; }

    bool operator==(const FieldParams& o) const { return p_ == o.p_ && m_ == o.m_; }

    FieldElement zero() const;
    FieldElement one() const;
    /// index -> element with base-p digits of index as coefficients; inverse
    /// of index_of. Enumerating index = 0..order()-1 walks the whole field.
    FieldElement element(uint64_t index) const;
    uint64_t index_of(const FieldElement& x) const;
    /// Builds an element from arbitrary integer coefficients (reduced mod p).
    FieldElement from_coeffs(std::span<const long long> coeffs) const;
    FieldElement from_int(long long value) const;

    FieldElement add(const FieldElement& x, const FieldElement& y) const;
    FieldElement sub(const FieldElement& x, const FieldElement& y) const;
    FieldElement neg(const FieldElement& x) const;
    FieldElement mul(const FieldElement& x, const FieldElement& y) const;
    /// Extended Euclidean inverse; throws DivisionByZeroError on 0.
    FieldElement inv(const FieldElement& x) const;
    /// Square-and-multiply; negative exponents go through inv, so 0 raised to
    /// a negative power throws DivisionByZeroError.
    FieldElement pow(const FieldElement& x, long long e) const;

    /// Throws ParameterError unless x carries this field's (p, m) tag.
    void check(const FieldElement& x) const;

  private:
    FieldParams(unsigned p, unsigned m, std::vector<uint8_t> modulus);

    unsigned p_, m_;
    uint64_t order_;
    std::vector<uint8_t> modulus_;
};

}  // namespace uconsta
