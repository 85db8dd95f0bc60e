#pragma once

// Ideal (= constacyclic code) construction and brute-force analysis in
// R_alpha. Codes are stored as canonical RREF bases of the flattening
// R_alpha ~ F^(2n) (residue coordinates first, then u coordinates), so two
// codes are equal iff their basis matrices are identical.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "uconsta/quotient.hpp"

namespace uconsta {

// --- small dense linear algebra over GF(p^m) ---

class FqMatrix {
  public:
    FqMatrix(FieldParams field, unsigned cols);

    unsigned rows() const { return static_cast<unsigned>(data_.size() / cols_); }
    unsigned cols() const { return cols_; }
    const FieldParams& field() const { return field_; }
    const FieldElement& at(unsigned r, unsigned c) const { return data_[size_t{r} * cols_ + c]; }
    std::vector<FieldElement> row(unsigned r) const;

    void append_row(std::vector<FieldElement> row);
    /// Reduced row echelon form: leftmost pivots, pivots scaled to 1, full
    /// back-elimination, zero rows dropped. Canonical for row-space equality.
    void rref();
    /// Reduce v against the rref'ed rows; returns true iff v reduces to zero,
    /// i.e. v lies in the row space.
    bool reduce(std::vector<FieldElement>& v) const;
    bool contains(std::vector<FieldElement> v) const { return reduce(v); }

    bool operator==(const FqMatrix& o) const {
        return field_ == o.field_ && cols_ == o.cols_ && data_ == o.data_;
    }

  private:
    FieldParams field_;
    unsigned cols_;
    std::vector<FieldElement> data_;
    std::vector<unsigned> pivots_;  // valid after rref()
};

// --- ideal descriptors of the classification ---

enum class SpecKind { Type1Zero, Type1Unit, Type2, Type3, Type4 };

std::string_view to_string(SpecKind kind);

struct CodeSpec {
    SpecKind kind;
    unsigned i = 0;
    unsigned t = 0;
    unsigned omega = 0;
    std::vector<FieldElement> h;  // coefficients over F, lowest degree first; empty = 0
    QuotientParams params;
};

inline bool spec_h_is_zero(const CodeSpec& spec) {
    for (const auto& c : spec.h)
        if (!c.is_zero()) return false;
    return true;
}

struct ValidateOptions {
    // Admits omega = 0 with h = 0 (the ideal <(x-1)^i, u>); off by default,
    // the classification's literal omega range starts at 1.
    bool allow_omega_zero = false;
};

/// Checks every range/unit constraint of the classification; returns the
/// spec with h trimmed of trailing zeros. Throws ValidationError naming the
/// violated constraint.
CodeSpec spec_validate(CodeSpec spec, const ValidateOptions& opts = {});

/// Generator polynomials in canonical form; (x-1)-based when alpha = 1,
/// (alpha0*x - 1)-based otherwise.
std::vector<QuotientPoly> spec_generators(const CodeSpec& spec);

// --- concrete codes ---

struct Code {
    std::optional<CodeSpec> spec;  // absent for duals and mapped images without one
    QuotientParams params;
    FqMatrix basis;  // canonical RREF, 2n columns

    unsigned dim() const { return basis.rows(); }
    /// |C| = p^(m*dim); returned as the exponent since it can exceed 2^64.
    uint64_t cardinality_exponent() const { return uint64_t{params.field().m()} * dim(); }
};

/// F-span of {x^j g, u x^j g} over all generators, row-reduced; verifies the
/// resulting row space is closed under multiplication by x.
Code code_span(const CodeSpec& spec);

/// RREF + x-closure verification over arbitrary rows (used by map_code and
/// the dual); rows use this code's params for the closure shift.
Code code_from_rows(QuotientParams params, std::vector<std::vector<FieldElement>> rows,
                    std::optional<CodeSpec> spec);

std::vector<FieldElement> poly_to_row(const QuotientPoly& f);
QuotientPoly row_to_poly(const QuotientParams& params, std::span<const FieldElement> row);

/// Throws ResourceError when p^(m*dim) > 2^limits.enum_cap_bits.
void ensure_enumerable(const Code& code, const Limits& limits);

/// Visits all p^(m*dim) codewords exactly once.
void for_each_codeword(const Code& code, const Limits& limits,
                       const std::function<void(const QuotientPoly&)>& visit);
std::vector<QuotientPoly> code_enumerate(const Code& code, const Limits& limits);

/// Minimum weight over nonzero codewords; 0 for the zero code.
unsigned min_distance_oracle(const Code& code, const Limits& limits);

/// Exact weight -> count histogram over all codewords.
std::map<unsigned, uint64_t> weight_distribution(const Code& code, const Limits& limits);

/// All vectors of R^n orthogonal to every codeword, by scanning the whole
/// ambient space (|R|^n <= 2^limits.dual_cap_bits). The result lives in the
/// alpha^-1 ring and is verified to be closed under that ring's shift and to
/// satisfy dim(C) + dim(dual) = 2n.
Code dual_bruteforce(const Code& code, const Limits& limits);

/// The full list of distinct ideals of R_alpha, one canonical spec each:
/// Type 3/4 h swept over adic-canonical unit representatives and Type 4
/// omega over its exact nonprincipality range (including omega = 0, h = 0).
/// Intended for test-scale parameters.
std::vector<CodeSpec> enumerate_canonical_specs(const QuotientParams& params);

}  // namespace uconsta
