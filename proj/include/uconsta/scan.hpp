#pragma once

// Flat enumeration kernels behind the brute-force oracles. A code basis is
// lowered to byte matrices over Z_p and every one of the p^(m*dim) codewords
// is visited with an odometer walk that touches O(1) amortized rows per
// step. Each kernel comes in a serial reference version and an OpenMP
// version; they must produce identical results (the tests compare them, the
// bench target times them).

#include <cstdint>
#include <functional>
#include <vector>

#include "uconsta/field.hpp"

namespace uconsta {

/// Basis of dim rows over GF(p^m), flattened to row_bytes = 2*n*m residues
/// each (residue block then u block), with all p^m scalar multiples of every
/// row precomputed so the walk needs only byte additions mod p.
struct FlatBasis {
    unsigned p = 0;       // prime
    unsigned m = 0;       // extension degree
    unsigned n = 0;       // R-coordinates per word
    uint64_t q = 0;       // p^m
    unsigned dim = 0;     // rows
    std::vector<uint8_t> scaled;  // [dim][q][row_bytes]

    size_t row_bytes() const { return size_t{2} * n * m; }
    const uint8_t* scaled_row(unsigned row, uint64_t scalar) const {
        return scaled.data() + (row * q + scalar) * row_bytes();
    }
    uint64_t total_words() const;  // q^dim; callers cap-check first

    /// rows given as flattened field-element indices per coordinate,
    /// row-major, length dim*2n; multiples computed with exact field ops.
    static FlatBasis build(const FieldParams& field, unsigned n,
                           const std::vector<std::vector<FieldElement>>& rows);
};

/// counts[w] = number of codewords of Hamming weight w, 0 <= w <= n.
using WeightHistogram = std::vector<uint64_t>;

WeightHistogram scan_weights_serial(const FlatBasis& basis);
WeightHistogram scan_weights_parallel(const FlatBasis& basis);

/// Walks every codeword in index order and hands (index, word bytes) to the
/// visitor; serial, used by the streaming enumeration API.
void scan_visit(const FlatBasis& basis,
                const std::function<void(uint64_t, const uint8_t*)>& visit);

/// Brute-force dual scan: iterates all q^(2n) ambient vectors of R^n and
/// keeps those orthogonal (R-valued dot product) to every basis row.
/// Returns an (unreduced) generating set of the orthogonal module plus the
/// exact count of orthogonal vectors.
struct DualScanResult {
    std::vector<std::vector<FieldElement>> generators;  // independent rows only
    uint64_t orthogonal_count = 0;
};

DualScanResult dual_scan_serial(const FieldParams& field, unsigned n,
                                const std::vector<std::vector<FieldElement>>& rows);
DualScanResult dual_scan_parallel(const FieldParams& field, unsigned n,
                                  const std::vector<std::vector<FieldElement>>& rows);

}  // namespace uconsta
