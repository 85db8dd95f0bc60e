#include "uconsta/code.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "uconsta/scan.hpp"

namespace uconsta {

// --- FqMatrix ---

FqMatrix::FqMatrix(FieldParams field, unsigned cols) : field_(std::move(field)), cols_(cols) {}

std::vector<FieldElement> FqMatrix::row(unsigned r) const {
    return {data_.begin() + size_t{r} * cols_, data_.begin() + size_t{r + 1} * cols_};
}

void FqMatrix::append_row(std::vector<FieldElement> row) {
    if (row.size() != cols_) throw ParameterError("row length does not match matrix width");
    for (const auto& c : row) field_.check(c);
    data_.insert(data_.end(), row.begin(), row.end());
    pivots_.clear();
}

void FqMatrix::rref() {
    auto at = [&](unsigned r, unsigned c) -> FieldElement& { return data_[size_t{r} * cols_ + c]; };
    unsigned nrows = rows();
    unsigned rank = 0;
    pivots_.clear();
    for (unsigned col = 0; col < cols_ && rank < nrows; ++col) {
        unsigned pivot = nrows;
        for (unsigned r = rank; r < nrows; ++r)
            if (!at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot == nrows) continue;
        if (pivot != rank)
            for (unsigned c = 0; c < cols_; ++c) std::swap(at(pivot, c), at(rank, c));
        FieldElement inv = field_.inv(at(rank, col));
        for (unsigned c = 0; c < cols_; ++c) at(rank, c) = field_.mul(at(rank, c), inv);
        for (unsigned r = 0; r < nrows; ++r) {
            if (r == rank || at(r, col).is_zero()) continue;
            FieldElement f = at(r, col);
            for (unsigned c = 0; c < cols_; ++c)
                at(r, c) = field_.sub(at(r, c), field_.mul(f, at(rank, c)));
        }
        pivots_.push_back(col);
        ++rank;
    }
    data_.resize(size_t{rank} * cols_);
}

bool FqMatrix::reduce(std::vector<FieldElement>& v) const {
    if (v.size() != cols_) throw ParameterError("vector length does not match matrix width");
    for (unsigned r = 0; r < pivots_.size(); ++r) {
        const FieldElement c = v[pivots_[r]];  // by value: v[pivot] is written below
        if (c.is_zero()) continue;
        for (unsigned k = 0; k < cols_; ++k)
            v[k] = field_.sub(v[k], field_.mul(c, at(r, k)));
    }
    return std::all_of(v.begin(), v.end(), [](const FieldElement& x) { return x.is_zero(); });
}

// --- specs ---

std::string_view to_string(SpecKind kind) {
    switch (kind) {
        case SpecKind::Type1Zero: return "type1_zero";
        case SpecKind::Type1Unit: return "type1_unit";
        case SpecKind::Type2: return "type2";
        case SpecKind::Type3: return "type3";
        case SpecKind::Type4: return "type4";
    }
    throw InternalError("unknown spec kind");
}

namespace {

void trim_h(std::vector<FieldElement>& h) {
    while (!h.empty() && h.back().is_zero()) h.pop_back();
}

// h as an element of the ambient ring (pure residue part)
QuotientPoly embed_h(const CodeSpec& spec) {
    const auto& params = spec.params;
    std::vector<RuElement> coeffs(params.n(), ru_zero(params.field()));
    for (size_t k = 0; k < spec.h.size(); ++k) coeffs[k].a = spec.h[k];
    return params.from_coeffs(std::move(coeffs));
}

[[noreturn]] void fail(const std::string& constraint, const std::string& detail) {
    throw ValidationError(constraint, constraint + ": " + detail);
}

}  // namespace

CodeSpec spec_validate(CodeSpec spec, const ValidateOptions& opts) {
    const unsigned n = spec.params.n();
    for (const auto& c : spec.h) spec.params.field().check(c);
    trim_h(spec.h);
    const bool h_zero = spec.h.empty();
    const bool is_t12 = spec.kind == SpecKind::Type1Zero || spec.kind == SpecKind::Type1Unit ||
                        spec.kind == SpecKind::Type2;

    if (is_t12) {
        if (!h_zero) fail("h not admitted", std::string(to_string(spec.kind)) + " carries no h(x)");
        if (spec.t != 0 || spec.omega != 0)
            fail("t/omega not admitted", std::string(to_string(spec.kind)) + " carries no t or omega");
    }
    switch (spec.kind) {
        case SpecKind::Type1Zero:
        case SpecKind::Type1Unit:
            if (spec.i != 0) fail("i not admitted", "trivial ideals carry no index i");
            break;
        case SpecKind::Type2:
            if (spec.i > n - 1)
                fail("type2 range 0 <= i <= p^s-1", "i=" + std::to_string(spec.i) +
                                                        " with p^s-1=" + std::to_string(n - 1));
            break;
        case SpecKind::Type4:
            if (spec.omega >= spec.i)
                fail("type4 range omega < i", "omega=" + std::to_string(spec.omega) +
                                                  " with i=" + std::to_string(spec.i) +
                                                  " (otherwise the ideal is principal)");
            if (h_zero) {
                if (spec.omega == 0 && !opts.allow_omega_zero)
                    fail("type4 range 0 < omega < i for h = 0",
                         "omega=0 (enable allow_omega_zero to admit <(x-1)^i, u>)");
            } else {
                if (spec.omega <= spec.t)
                    fail("type4 range t < omega for h != 0", "omega=" + std::to_string(spec.omega) +
                                                                 " with t=" + std::to_string(spec.t));
                if (spec.h.size() - 1 > spec.omega - spec.t - 1)
                    fail("type4 degree bound deg(h) <= omega-t-1",
                         "deg(h)=" + std::to_string(spec.h.size() - 1) + " with omega-t-1=" +
                             std::to_string(spec.omega - spec.t - 1));
            }
            [[fallthrough]];
        case SpecKind::Type3:
            if (spec.i < 1 || spec.i > n - 1)
                fail("type3/4 range 1 <= i <= p^s-1", "i=" + std::to_string(spec.i) +
                                                          " with p^s-1=" + std::to_string(n - 1));
            if (spec.t >= spec.i)
                fail("type3/4 range 0 <= t < i",
                     "t=" + std::to_string(spec.t) + " with i=" + std::to_string(spec.i));
            if (spec.kind == SpecKind::Type3 && spec.omega != 0)
                fail("omega not admitted", "type3 carries no omega");
            if (!h_zero) {
                if (spec.h.size() > n)
                    fail("h degree bound deg(h) < p^s", "deg(h)=" + std::to_string(spec.h.size() - 1));
                if (!spec.params.is_unit(embed_h(spec)))
                    fail("h must be 0 or a unit",
                         "h has zero constant adic coordinate, i.e. h(alpha0^-1) = 0");
            }
            break;
        default:
            break;
    }
    return spec;
}

std::vector<QuotientPoly> spec_generators(const CodeSpec& spec) {
    const auto& params = spec.params;
    switch (spec.kind) {
        case SpecKind::Type1Zero:
            return {params.zero()};
        case SpecKind::Type1Unit:
            return {params.one()};
        case SpecKind::Type2:
            return {params.mul_u(params.binomial_power(spec.i))};
        case SpecKind::Type3:
        case SpecKind::Type4: {
            QuotientPoly g = params.binomial_power(spec.i);
            if (!spec_h_is_zero(spec))
                g = params.add(
                    g, params.mul_u(params.mul(params.binomial_power(spec.t), embed_h(spec))));
            if (spec.kind == SpecKind::Type3) return {g};
            return {g, params.mul_u(params.binomial_power(spec.omega))};
        }
    }
    throw InternalError("unknown spec kind");
}

// --- codes ---

std::vector<FieldElement> poly_to_row(const QuotientPoly& f) {
    const unsigned n = f.n();
    std::vector<FieldElement> row(2 * n);
    for (unsigned j = 0; j < n; ++j) {
        row[j] = f[j].a;
        row[n + j] = f[j].b;
    }
    return row;
}

QuotientPoly row_to_poly(const QuotientParams& params, std::span<const FieldElement> row) {
    const unsigned n = params.n();
    if (row.size() != 2 * n) throw ParameterError("flattened row must have length 2n");
    std::vector<RuElement> coeffs(n);
    for (unsigned j = 0; j < n; ++j) coeffs[j] = {row[j], row[n + j]};
    return params.from_coeffs(std::move(coeffs));
}

Code code_from_rows(QuotientParams params, std::vector<std::vector<FieldElement>> rows,
                    std::optional<CodeSpec> spec) {
    FqMatrix basis(params.field(), 2 * params.n());
    for (auto& r : rows) basis.append_row(std::move(r));
    basis.rref();
    // closure under multiplication by x (the constacyclic shift)
    for (unsigned r = 0; r < basis.rows(); ++r) {
        QuotientPoly f = row_to_poly(params, basis.row(r));
        if (!basis.contains(poly_to_row(params.shift(f))))
            throw InternalError("row space is not closed under the constacyclic shift");
    }
    return Code{std::move(spec), std::move(params), std::move(basis)};
}

Code code_span(const CodeSpec& spec) {
    const auto& params = spec.params;
    std::vector<std::vector<FieldElement>> rows;
    for (const auto& g : spec_generators(spec)) {
        QuotientPoly f = g;
        for (unsigned j = 0; j < params.n(); ++j) {
            rows.push_back(poly_to_row(f));
            rows.push_back(poly_to_row(params.mul_u(f)));
            f = params.shift(f);
        }
    }
    return code_from_rows(params, std::move(rows), spec);
}

void ensure_enumerable(const Code& code, const Limits& limits) {
    const auto& field = code.params.field();
    if (limits.enum_cap_bits >= 63)
        throw ParameterError("enumeration cap must be below 63 bits");
    if (!pow_fits_bits(field.p(), code.cardinality_exponent(), limits.enum_cap_bits)) {
        double bits = code.cardinality_exponent() * std::log2(static_cast<double>(field.p()));
        char need[32];
        std::snprintf(need, sizeof need, "%.2f", bits);
        throw ResourceError(bits, limits.enum_cap_bits,
                            "enumeration needs p^(m*dim) = 2^" + std::string(need) +
                                " codewords, over the 2^" + std::to_string(limits.enum_cap_bits) +
                                " cap");
    }
}

namespace {

FlatBasis flat_basis_of(const Code& code) {
    std::vector<std::vector<FieldElement>> rows;
    rows.reserve(code.dim());
    for (unsigned r = 0; r < code.dim(); ++r) rows.push_back(code.basis.row(r));
    return FlatBasis::build(code.params.field(), code.params.n(), rows);
}

QuotientPoly word_to_poly(const QuotientParams& params, const uint8_t* word) {
    const auto& field = params.field();
    const unsigned n = params.n(), m = field.m();
    std::vector<RuElement> coeffs(n);
    auto read = [&](size_t k) {
        std::array<long long, kMaxExtensionDegree> c{};
        for (unsigned d = 0; d < m; ++d) c[d] = word[k * m + d];
        return field.from_coeffs(std::span<const long long>(c.data(), m));
    };
    for (unsigned j = 0; j < n; ++j) coeffs[j] = {read(j), read(size_t{n} + j)};
    return params.from_coeffs(std::move(coeffs));
}

}  // namespace

void for_each_codeword(const Code& code, const Limits& limits,
                       const std::function<void(const QuotientPoly&)>& visit) {
    ensure_enumerable(code, limits);
    FlatBasis fb = flat_basis_of(code);
    scan_visit(fb, [&](uint64_t, const uint8_t* w) { visit(word_to_poly(code.params, w)); });
}

std::vector<QuotientPoly> code_enumerate(const Code& code, const Limits& limits) {
    std::vector<QuotientPoly> out;
    for_each_codeword(code, limits, [&](const QuotientPoly& f) { out.push_back(f); });
    return out;
}

unsigned min_distance_oracle(const Code& code, const Limits& limits) {
    ensure_enumerable(code, limits);
    WeightHistogram hist = scan_weights_parallel(flat_basis_of(code));
    for (unsigned w = 1; w < hist.size(); ++w)
        if (hist[w]) return w;
    return 0;  // zero code convention
}

std::map<unsigned, uint64_t> weight_distribution(const Code& code, const Limits& limits) {
    ensure_enumerable(code, limits);
    WeightHistogram hist = scan_weights_parallel(flat_basis_of(code));
    std::map<unsigned, uint64_t> out;
    for (unsigned w = 0; w < hist.size(); ++w)
        if (hist[w]) out[w] = hist[w];
    return out;
}

Code dual_bruteforce(const Code& code, const Limits& limits) {
    const auto& field = code.params.field();
    const unsigned n = code.params.n();
    if (limits.dual_cap_bits >= 63) throw ParameterError("dual scan cap must be below 63 bits");
    if (!pow_fits_bits(field.order(), 2 * n, limits.dual_cap_bits)) {
        double bits = code.params.element_bits();
        char need[32];
        std::snprintf(need, sizeof need, "%.2f", bits);
        throw ResourceError(bits, limits.dual_cap_bits,
                            "dual scan needs |R|^n = 2^" + std::string(need) +
                                " vectors, over the 2^" + std::to_string(limits.dual_cap_bits) +
                                " cap");
    }
    std::vector<std::vector<FieldElement>> rows;
    for (unsigned r = 0; r < code.dim(); ++r) rows.push_back(code.basis.row(r));
    DualScanResult scan = dual_scan_parallel(field, n, rows);
    // the dual of a lambda-constacyclic code is lambda^-1-constacyclic
    Code dual = code_from_rows(code.params.inverse_twin(), std::move(scan.generators), std::nullopt);
    if (code.dim() + dual.dim() != 2 * n)
        throw InternalError("duality defect: dim(C) + dim(C^perp) != 2n");
    if (scan.orthogonal_count != saturating_pow(field.order(), dual.dim()))
        throw InternalError("duality defect: orthogonal count is not |F|^dim");
    return dual;
}

// --- canonical distinct-ideal enumeration ---

namespace {

// All unit polynomials h with adic degree < max_len in the (alpha0*x-1)
// basis, returned in x-basis coefficients. Constant coordinate nonzero.
std::vector<std::vector<FieldElement>> canonical_units(const QuotientParams& params,
                                                       unsigned max_len) {
    const auto& field = params.field();
    std::vector<std::vector<FieldElement>> out;
    uint64_t count = saturating_pow(field.order(), max_len);
    for (uint64_t idx = 0; idx < count; ++idx) {
        uint64_t v = idx;
        AdicCoords coords{params.sig(), std::vector<RuElement>(params.n(), ru_zero(field))};
        for (unsigned j = 0; j < max_len; ++j) {
            coords.coords[j].a = field.element(v % field.order());
            v /= field.order();
        }
        if (coords.coords[0].a.is_zero()) continue;
        QuotientPoly h = params.adic_collapse(coords);
        std::vector<FieldElement> coeffs;
        for (unsigned j = 0; j < params.n(); ++j) coeffs.push_back(h[j].a);
        while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
        out.push_back(std::move(coeffs));
    }
    return out;
}

}  // namespace

std::vector<CodeSpec> enumerate_canonical_specs(const QuotientParams& params) {
    const unsigned n = params.n();
    std::vector<CodeSpec> out;
    out.push_back({SpecKind::Type1Zero, 0, 0, 0, {}, params});
    out.push_back({SpecKind::Type1Unit, 0, 0, 0, {}, params});
    for (unsigned i = 0; i < n; ++i) out.push_back({SpecKind::Type2, i, 0, 0, {}, params});
    for (unsigned i = 1; i < n; ++i) {
        out.push_back({SpecKind::Type3, i, 0, 0, {}, params});  // h = 0
        for (unsigned t = 0; t < i; ++t) {
            // h matters modulo (x-1)^min(i-t, p^s-i): adic-canonical units
            unsigned max_len = std::min(i - t, n - i);
            for (auto& h : canonical_units(params, max_len))
                out.push_back({SpecKind::Type3, i, t, 0, std::move(h), params});
        }
    }
    ValidateOptions relaxed{.allow_omega_zero = true};
    for (unsigned i = 1; i < n; ++i) {
        // h = 0: <(x-1)^i, u(x-1)^omega>, nonprincipal for omega < i; omega=0
        // is the genuine ideal <(x-1)^i, u>
        for (unsigned omega = 0; omega < i; ++omega)
            out.push_back(
                spec_validate({SpecKind::Type4, i, 0, omega, {}, params}, relaxed));
        // h a unit: omega below the principal part's torsion index
        // min(i, p^s-i+t), else the second generator is redundant
        for (unsigned t = 0; t < i; ++t) {
            unsigned torsion = std::min(i, n - i + t);
            for (unsigned omega = t + 1; omega < torsion; ++omega)
                for (auto& h : canonical_units(params, omega - t))
                    out.push_back({SpecKind::Type4, i, t, omega, std::move(h), params});
        }
    }
    for (auto& spec : out) spec = spec_validate(std::move(spec), relaxed);
    return out;
}

}  // namespace uconsta
