#include "uconsta/scan.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace uconsta {

uint64_t FlatBasis::total_words() const {
    uint64_t r = 1;
    for (unsigned i = 0; i < dim; ++i) {
        if (r > UINT64_MAX / q) return UINT64_MAX;
        r *= q;
    }
    return r;
}

FlatBasis FlatBasis::build(const FieldParams& field, unsigned n,
                           const std::vector<std::vector<FieldElement>>& rows) {
    FlatBasis b;
    b.p = field.p();
    b.m = field.m();
    b.n = n;
    b.q = field.order();
    b.dim = static_cast<unsigned>(rows.size());
    const size_t L = b.row_bytes();
    b.scaled.assign(size_t{b.dim} * b.q * L, 0);
    for (unsigned r = 0; r < b.dim; ++r) {
        for (uint64_t e = 0; e < b.q; ++e) {
            FieldElement scalar = field.element(e);
            uint8_t* out = b.scaled.data() + (r * b.q + e) * L;
            for (unsigned k = 0; k < 2 * n; ++k) {
                FieldElement v = field.mul(rows[r][k], scalar);
                for (unsigned d = 0; d < b.m; ++d) out[size_t{k} * b.m + d] = static_cast<uint8_t>(v.coeff(d));
            }
        }
    }
    return b;
}

namespace {

inline void add_row(uint8_t* word, const uint8_t* row, size_t len, unsigned p) {
    for (size_t k = 0; k < len; ++k) {
        unsigned v = word[k] + row[k];
        word[k] = static_cast<uint8_t>(v >= p ? v - p : v);
    }
}

inline void sub_row(uint8_t* word, const uint8_t* row, size_t len, unsigned p) {
    for (size_t k = 0; k < len; ++k) {
        unsigned v = word[k] + p - row[k];
        word[k] = static_cast<uint8_t>(v >= p ? v - p : v);
    }
}

inline unsigned word_weight(const uint8_t* word, unsigned n, unsigned m) {
    unsigned w = 0;
    for (unsigned j = 0; j < n; ++j) {
        const uint8_t* a = word + size_t{j} * m;
        const uint8_t* b = word + size_t{n + j} * m;
        bool nz = false;
        for (unsigned d = 0; d < m; ++d) nz |= (a[d] | b[d]) != 0;
        w += nz;
    }
    return w;
}

// Walks codeword indices [begin, end) in base-q odometer order, maintaining
// the current word incrementally: one row subtraction + addition per digit
// change, amortized O(1) digit changes per step.
template <typename Visit>
void walk_range(const FlatBasis& b, uint64_t begin, uint64_t end, Visit&& visit) {
    const size_t L = b.row_bytes();
    std::vector<uint8_t> word(L, 0);
    std::vector<uint64_t> digits(b.dim, 0);
    uint64_t seed = begin;
    for (unsigned i = 0; i < b.dim; ++i) {
        digits[i] = seed % b.q;
        seed /= b.q;
        if (digits[i]) add_row(word.data(), b.scaled_row(i, digits[i]), L, b.p);
    }
    for (uint64_t idx = begin; idx < end; ++idx) {
        visit(idx, word.data());
        if (idx + 1 == end) break;
        for (unsigned i = 0;; ++i) {
            sub_row(word.data(), b.scaled_row(i, digits[i]), L, b.p);
            digits[i] = digits[i] + 1 == b.q ? 0 : digits[i] + 1;
            add_row(word.data(), b.scaled_row(i, digits[i]), L, b.p);
            if (digits[i] != 0) break;
        }
    }
}

}  // namespace

WeightHistogram scan_weights_serial(const FlatBasis& basis) {
    WeightHistogram hist(basis.n + 1, 0);
    walk_range(basis, 0, basis.total_words(),
               [&](uint64_t, const uint8_t* w) { ++hist[word_weight(w, basis.n, basis.m)]; });
    return hist;
}

WeightHistogram scan_weights_parallel(const FlatBasis& basis) {
#ifndef _OPENMP
    return scan_weights_serial(basis);
#else
    const uint64_t total = basis.total_words();
    WeightHistogram hist(basis.n + 1, 0);
    const int chunks = std::max(1, omp_get_max_threads());
#pragma omp parallel
    {
        WeightHistogram local(basis.n + 1, 0);
#pragma omp for schedule(static)
        for (int c = 0; c < chunks; ++c) {
            uint64_t begin = total / chunks * c + std::min<uint64_t>(c, total % chunks);
            uint64_t end = begin + total / chunks + (static_cast<uint64_t>(c) < total % chunks);
            walk_range(basis, begin, end,
                       [&](uint64_t, const uint8_t* w) { ++local[word_weight(w, basis.n, basis.m)]; });
        }
#pragma omp critical
        for (size_t w = 0; w < hist.size(); ++w) hist[w] += local[w];
    }
    return hist;
#endif
}

void scan_visit(const FlatBasis& basis,
                const std::function<void(uint64_t, const uint8_t*)>& visit) {
    walk_range(basis, 0, basis.total_words(), visit);
}

namespace {

// Minimal row-echelon set used to keep only independent orthogonal vectors
// during the dual scan.
struct EchelonSet {
    const FieldParams& field;
    unsigned cols;
    std::vector<std::vector<FieldElement>> rows;  // each scaled to pivot 1
    std::vector<unsigned> pivots;

    bool full() const { return rows.size() == cols; }

    // returns true if v was independent (and got inserted)
    bool insert(std::vector<FieldElement> v) {
        for (size_t r = 0; r < rows.size(); ++r) {
            const FieldElement c = v[pivots[r]];  // by value: v[pivot] is written below
            if (c.is_zero()) continue;
            for (unsigned k = 0; k < cols; ++k)
                v[k] = field.sub(v[k], field.mul(c, rows[r][k]));
        }
        unsigned piv = cols;
        for (unsigned k = 0; k < cols; ++k)
            if (!v[k].is_zero()) {
                piv = k;
                break;
            }
        if (piv == cols) return false;
        FieldElement inv = field.inv(v[piv]);
        for (unsigned k = 0; k < cols; ++k) v[k] = field.mul(v[k], inv);
        rows.push_back(std::move(v));
        pivots.push_back(piv);
        return true;
    }
};

std::vector<FieldElement> ambient_vector(const FieldParams& field, unsigned n, uint64_t index) {
    std::vector<FieldElement> v(2 * n);
    const uint64_t q = field.order();
    for (unsigned k = 0; k < 2 * n; ++k) {
        v[k] = field.element(index % q);
        index /= q;
    }
    return v;
}

// R-valued dot product of the ambient vector v with row r is zero iff both
// sum(va*ra) = 0 and sum(va*rb + vb*ra) = 0.
bool orthogonal_to_row(const FieldParams& field, unsigned n,
                       const std::vector<FieldElement>& v, const std::vector<FieldElement>& r) {
    FieldElement da = field.zero(), db = field.zero();
    for (unsigned j = 0; j < n; ++j) {
        da = field.add(da, field.mul(v[j], r[j]));
        db = field.add(db, field.add(field.mul(v[j], r[n + j]), field.mul(v[n + j], r[j])));
    }
    return da.is_zero() && db.is_zero();
}

DualScanResult dual_scan_range(const FieldParams& field, unsigned n,
                               const std::vector<std::vector<FieldElement>>& rows,
                               uint64_t begin, uint64_t end) {
    DualScanResult out;
    EchelonSet basis{field, 2 * n, {}, {}};
    for (uint64_t idx = begin; idx < end; ++idx) {
        std::vector<FieldElement> v = ambient_vector(field, n, idx);
        bool ok = true;
        for (const auto& r : rows)
            if (!orthogonal_to_row(field, n, v, r)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        ++out.orthogonal_count;
        if (!basis.full()) basis.insert(std::move(v));
    }
    out.generators = std::move(basis.rows);
    return out;
}

}  // namespace

DualScanResult dual_scan_serial(const FieldParams& field, unsigned n,
                                const std::vector<std::vector<FieldElement>>& rows) {
    uint64_t total = 1;
    for (unsigned k = 0; k < 2 * n; ++k) total *= field.order();
    return dual_scan_range(field, n, rows, 0, total);
}

DualScanResult dual_scan_parallel(const FieldParams& field, unsigned n,
                                  const std::vector<std::vector<FieldElement>>& rows) {
#ifndef _OPENMP
    return dual_scan_serial(field, n, rows);
#else
    uint64_t total = 1;
    for (unsigned k = 0; k < 2 * n; ++k) total *= field.order();
    const int chunks = std::max(1, omp_get_max_threads());
    std::vector<DualScanResult> parts(chunks);
#pragma omp parallel for schedule(static)
    for (int c = 0; c < chunks; ++c) {
        uint64_t begin = total / chunks * c + std::min<uint64_t>(c, total % chunks);
        uint64_t end = begin + total / chunks + (static_cast<uint64_t>(c) < total % chunks);
        parts[c] = dual_scan_range(field, n, rows, begin, end);
    }
    DualScanResult out;
    EchelonSet basis{field, 2 * n, {}, {}};
    for (auto& part : parts) {
        out.orthogonal_count += part.orthogonal_count;
        for (auto& g : part.generators)
            if (!basis.full()) basis.insert(std::move(g));
    }
    out.generators = std::move(basis.rows);
    return out;
#endif
}

}  // namespace uconsta
