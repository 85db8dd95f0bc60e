#include "uconsta/field.hpp"

#include <algorithm>

namespace uconsta {

namespace {

bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Dense polynomials over Z_p, lowest degree first, used only inside this
// translation unit (modulus search, reduction, inversion).
using Poly = std::vector<uint8_t>;

unsigned degree(const Poly& f) {
    for (unsigned i = static_cast<unsigned>(f.size()); i-- > 0;)
        if (f[i] != 0) return i;
    return 0;  // the zero polynomial reports degree 0; callers test is_zero first
}

bool is_zero_poly(const Poly& f) {
    return std::all_of(f.begin(), f.end(), [](uint8_t c) { return c == 0; });
}

uint8_t scalar_inv(unsigned a, unsigned p) {
    // p is prime and small; Fermat
    unsigned r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<uint8_t>(r);
}

// Long division over Z_p: returns {quotient, remainder}, g nonzero.
std::pair<Poly, Poly> poly_divmod(Poly f, const Poly& g, unsigned p) {
    unsigned dg = degree(g);
    uint8_t lead_inv = scalar_inv(g[dg], p);
    Poly q(f.size(), 0);
    while (!is_zero_poly(f)) {
        unsigned df = degree(f);
        if (df < dg) break;
        unsigned c = f[df] * lead_inv % p;
        q[df - dg] = static_cast<uint8_t>(c);
        for (unsigned i = 0; i <= dg; ++i) {
            unsigned k = df - dg + i;
            f[k] = static_cast<uint8_t>((f[k] + p * p - c * g[i]) % p);
        }
    }
    return {std::move(q), std::move(f)};
}

Poly poly_mod(Poly f, const Poly& g, unsigned p) {
    return poly_divmod(std::move(f), g, p).second;
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
    Poly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<uint8_t>((out[i + j] + a[i] * b[j]) % p);
    }
    return out;
}

// Irreducibility by exhaustive trial division: no monic factor of degree
// 1..m/2. Feasible at desk scale (m <= 8, p <= 13).
bool is_irreducible(const Poly& f, unsigned p, unsigned m) {
    for (unsigned d = 1; 2 * d <= m; ++d) {
        uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (uint64_t idx = 0; idx < count; ++idx) {
            Poly g(d + 1, 0);
            uint64_t v = idx;
            for (unsigned i = 0; i < d; ++i) {
                g[i] = static_cast<uint8_t>(v % p);
                v /= p;
            }
            g[d] = 1;
            if (is_zero_poly(poly_mod(f, g, p))) return false;
        }
    }
    return true;
}

}  // namespace

std::string FieldElement::to_string() const {
    std::string out;
    for (unsigned i = 0; i < m_; ++i) {
        if (i) out += '.';
        out += std::to_string(static_cast<int>(c_[i]));
    }
    return out;
}

FieldParams::FieldParams(unsigned p, unsigned m, std::vector<uint8_t> modulus)
    : p_(p), m_(m), order_(1), modulus_(std::move(modulus)) {
    for (unsigned i = 0; i < m_; ++i) order_ *= p_;
}

FieldParams FieldParams::make(unsigned p, unsigned m, const Limits& limits) {
    if (!is_prime(p))
        throw ParameterError("p must be prime, got " + std::to_string(p));
    if (m < 1 || m > limits.max_m || m > kMaxExtensionDegree)
        throw ParameterError("extension degree m=" + std::to_string(m) + " outside [1, " +
                             std::to_string(std::min(limits.max_m, kMaxExtensionDegree)) + "]");
    if (p > limits.max_p || p > 251)
        throw ParameterError("p=" + std::to_string(p) + " exceeds the configured cap " +
                             std::to_string(std::min<unsigned>(limits.max_p, 251)));

    // Lex-smallest monic irreducible: candidates ordered by their base-p
    // value, lowest degree first.
    uint64_t count = 1;
    for (unsigned i = 0; i < m; ++i) count *= p;
    for (uint64_t idx = 0; idx < count; ++idx) {
        Poly f(m + 1, 0);
        uint64_t v = idx;
        for (unsigned i = 0; i < m; ++i) {
            f[i] = static_cast<uint8_t>(v % p);
            v /= p;
        }
        f[m] = 1;
        if (is_irreducible(f, p, m)) return FieldParams(p, m, std::move(f));
    }
    throw InternalError("no irreducible polynomial found for p=" + std::to_string(p) +
                        " m=" + std::to_string(m));
}

void FieldParams::check(const FieldElement& x) const {
    if (x.p_ != p_ || x.m_ != m_)
        throw ParameterError("field element does not belong to GF(" + std::to_string(p_) + "^" +
                             std::to_string(m_) + ")");
}

FieldElement FieldParams::zero() const {
    FieldElement e;
    e.p_ = static_cast<uint8_t>(p_);
    e.m_ = static_cast<uint8_t>(m_);
    return e;
}

FieldElement FieldParams::one() const {
    FieldElement e = zero();
    e.c_[0] = 1;
    return e;
}

FieldElement FieldParams::element(uint64_t index) const {
    if (index >= order_) throw ParameterError("field element index out of range");
    FieldElement e = zero();
    for (unsigned i = 0; i < m_; ++i) {
        e.c_[i] = static_cast<uint8_t>(index % p_);
        index /= p_;
    }
    return e;
}

uint64_t FieldParams::index_of(const FieldElement& x) const {
    check(x);
    uint64_t idx = 0;
    for (unsigned i = m_; i-- > 0;) idx = idx * p_ + x.c_[i];
    return idx;
}

FieldElement FieldParams::from_coeffs(std::span<const long long> coeffs) const {
    if (coeffs.size() > m_)
        throw ParameterError("coefficient vector longer than extension degree m=" +
                             std::to_string(m_));
    FieldElement e = zero();
    long long p = p_;
    for (size_t i = 0; i < coeffs.size(); ++i)
        e.c_[i] = static_cast<uint8_t>(((coeffs[i] % p) + p) % p);
    return e;
}

FieldElement FieldParams::from_int(long long value) const {
    long long coeffs[1] = {value};
    return from_coeffs(coeffs);
}

FieldElement FieldParams::add(const FieldElement& x, const FieldElement& y) const {
    check(x);
    check(y);
    FieldElement r = zero();
    for (unsigned i = 0; i < m_; ++i) {
        unsigned v = x.c_[i] + y.c_[i];
        r.c_[i] = static_cast<uint8_t>(v >= p_ ? v - p_ : v);
    }
    return r;
}

FieldElement FieldParams::sub(const FieldElement& x, const FieldElement& y) const {
    check(x);
    check(y);
    FieldElement r = zero();
    for (unsigned i = 0; i < m_; ++i) {
        unsigned v = x.c_[i] + p_ - y.c_[i];
        r.c_[i] = static_cast<uint8_t>(v >= p_ ? v - p_ : v);
    }
    return r;
}

FieldElement FieldParams::neg(const FieldElement& x) const { return sub(zero(), x); }

FieldElement FieldParams::mul(const FieldElement& x, const FieldElement& y) const {
    check(x);
    check(y);
    std::array<unsigned, 2 * kMaxExtensionDegree> prod{};
    for (unsigned i = 0; i < m_; ++i) {
        if (x.c_[i] == 0) continue;
        for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + x.c_[i] * y.c_[j]) % p_;
    }
    // reduce by the monic modulus: x^m = -(modulus without leading term)
    for (unsigned k = 2 * m_ - 2; k + 1 > m_; --k) {
        unsigned c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (unsigned i = 0; i < m_; ++i)
            prod[k - m_ + i] = (prod[k - m_ + i] + p_ * p_ - c * modulus_[i]) % p_;
    }
    FieldElement r = zero();
    for (unsigned i = 0; i < m_; ++i) r.c_[i] = static_cast<uint8_t>(prod[i] % p_);
    return r;
}

FieldElement FieldParams::inv(const FieldElement& x) const {
    check(x);
    if (x.is_zero()) throw DivisionByZeroError("inverse of 0 in GF(p^m)");
    // Extended Euclid on (modulus, x) over Z_p, maintaining t_i * x == r_i
    // (mod modulus). Ends with r0 a nonzero constant since the modulus is
    // irreducible and x != 0.
    Poly r0(modulus_), r1(x.c_.begin(), x.c_.begin() + m_);
    Poly t0{0}, t1{1};
    while (!is_zero_poly(r1)) {
        auto [q, rem] = poly_divmod(r0, r1, p_);
        Poly qt = poly_mul(q, t1, p_);
        Poly tn(std::max(t0.size(), qt.size()), 0);
        for (size_t i = 0; i < tn.size(); ++i) {
            unsigned a = i < t0.size() ? t0[i] : 0;
            unsigned b = i < qt.size() ? qt[i] : 0;
            tn[i] = static_cast<uint8_t>((a + p_ - b % p_) % p_);
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(tn);
    }
    if (degree(r0) != 0 || r0[0] == 0) throw InternalError("gcd(modulus, x) not a unit");
    unsigned scale = scalar_inv(r0[0], p_);
    Poly t = poly_mod(std::move(t0), modulus_, p_);
    FieldElement r = zero();
    for (unsigned i = 0; i < m_ && i < t.size(); ++i)
        r.c_[i] = static_cast<uint8_t>(t[i] * scale % p_);
    return r;
}

FieldElement FieldParams::pow(const FieldElement& x, long long e) const {
    check(x);
    FieldElement base = x;
    unsigned long long exp;
    if (e < 0) {
        base = inv(x);  // throws DivisionByZeroError for x = 0
        exp = static_cast<unsigned long long>(-(e + 1)) + 1;
    } else {
        exp = static_cast<unsigned long long>(e);
    }
    FieldElement r = one();
    while (exp) {
        if (exp & 1) r = mul(r, base);
        base = mul(base, base);
        exp >>= 1;
    }
    return r;
}

}  // namespace uconsta
