#pragma once

// The ambient quotient ring R_alpha = R[x]/(x^n - alpha) with n = p^s and
// alpha a nonzero field constant, plus the (alpha0*x - 1)-adic coordinate
// system ((x - 1)-adic in the cyclic case alpha = 1). alpha0 satisfies
// alpha0^(p^s) = alpha^-1, so f(x) -> f(alpha0*x) carries the cyclic ring
// onto R_alpha; the adic machinery reuses the cyclic code path through that
// substitution.

#include <cstdint>
#include <vector>

#include "uconsta/limits.hpp"
#include "uconsta/ring.hpp"

namespace uconsta {

class QuotientParams;

// Cheap identity tag carried by polynomials so cross-ring operands are
// detected without embedding the full params in every value.
struct QuotientSig {
    uint8_t p = 0, m = 0, s = 0;
    FieldElement alpha;
    bool operator==(const QuotientSig&) const = default;
};

/// Element of R_alpha as a fully reduced coefficient vector c_0..c_{n-1}.
class QuotientPoly {
  public:
    QuotientPoly() = default;

    unsigned n() const { return static_cast<unsigned>(coeffs_.size()); }
    const RuElement& operator[](unsigned j) const { return coeffs_[j]; }
    const std::vector<RuElement>& coeffs() const { return coeffs_; }
    const QuotientSig& sig() const { return sig_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    bool operator==(const QuotientPoly&) const = default;

  private:
    friend class QuotientParams;
    QuotientSig sig_;
    std::vector<RuElement> coeffs_;
};

/// Coordinates a_0..a_{n-1} of an element in the basis {(alpha0*x - 1)^i}
/// ({(x-1)^i} when alpha = 1).
struct AdicCoords {
    QuotientSig sig;
    std::vector<RuElement> coords;
    bool operator==(const AdicCoords&) const = default;
};

/// Number of nonzero R-coordinates.
unsigned hamming_weight(const QuotientPoly& f);

class QuotientParams {
  public:
    /// n = p^s, alpha nonzero. Throws ParameterError on violations or when
    /// n exceeds limits.max_n.
    static QuotientParams make(FieldParams field, unsigned s, FieldElement alpha,
                               const Limits& limits = {});

    const FieldParams& field() const { return field_; }
    unsigned s() const { return s_; }
    unsigned n() const { return n_; }
    const FieldElement& alpha() const { return alpha_; }
    bool is_cyclic() const { return alpha_ == field_.one(); }

    /// alpha0 = alpha^(-p^(m - alpha_r)) with s = alpha_q*m + alpha_r; the
    /// defining identity alpha0^(p^s) * alpha = 1 is asserted at construction.
    const FieldElement& alpha0() const { return alpha0_; }
    unsigned alpha_q() const { return alpha_q_; }
    unsigned alpha_r() const { return alpha_r_; }

    QuotientSig sig() const { return {static_cast<uint8_t>(field_.p()), static_cast<uint8_t>(field_.m()), static_cast<uint8_t>(s_), alpha_}; }
    /// Same field and s with alpha = 1 (the isometry source ring).
    QuotientParams cyclic_twin() const;
    /// Same field and s with alpha^-1 (where duals of alpha-constacyclic codes live).
    QuotientParams inverse_twin() const;

    bool operator==(const QuotientParams& o) const {
        return field_ == o.field_ && s_ == o.s_ && alpha_ == o.alpha_;
    }

    // --- construction of elements ---
    QuotientPoly zero() const;
    QuotientPoly one() const;
    QuotientPoly monomial(unsigned degree, const RuElement& c) const;
    QuotientPoly from_coeffs(std::vector<RuElement> coeffs) const;  // length n
    /// (alpha0*x - 1)^e computed in the quotient, 0 <= e <= n.
    QuotientPoly binomial_power(unsigned e) const;
    /// Element with index written in base p^(2m): coordinate j has digit j.
    QuotientPoly element(uint64_t index) const;
    /// log2 |R_alpha| = 2*m*n*log2(p), for cap checks.
    double element_bits() const;

    // --- arithmetic (all results canonical) ---
    QuotientPoly add(const QuotientPoly& f, const QuotientPoly& g) const;
    QuotientPoly sub(const QuotientPoly& f, const QuotientPoly& g) const;
    QuotientPoly mul(const QuotientPoly& f, const QuotientPoly& g) const;
    QuotientPoly neg(const QuotientPoly& f) const;
    QuotientPoly scale(const QuotientPoly& f, const RuElement& c) const;
    QuotientPoly mul_u(const QuotientPoly& f) const;
    /// The lambda-constacyclic shift (c_0,..,c_{n-1}) -> (alpha*c_{n-1}, c_0, ..);
    /// identical to multiplication by x.
    QuotientPoly shift(const QuotientPoly& f) const;

    // --- adic coordinates (Taylor expansion about the nilpotent generator) ---
    AdicCoords adic_expand(const QuotientPoly& f) const;
    QuotientPoly adic_collapse(const AdicCoords& coords) const;
    /// True iff the residue part of the constant adic coordinate is nonzero
    /// (equivalently: f lies outside the maximal ideal <u, alpha0*x - 1>).
    bool is_unit(const QuotientPoly& f) const;

    void check(const QuotientPoly& f) const;
    void check(const AdicCoords& c) const;

  private:
    QuotientParams(FieldParams field, unsigned s, unsigned n, FieldElement alpha);

    FieldParams field_;
    unsigned s_, n_;
    FieldElement alpha_, alpha0_;
    unsigned alpha_q_, alpha_r_;
    Limits limits_;
};

}  // namespace uconsta
