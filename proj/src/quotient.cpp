#include "uconsta/quotient.hpp"

#include <cmath>
#include <string>

namespace uconsta {

unsigned hamming_weight(const QuotientPoly& f) {
    unsigned w = 0;
    for (const auto& c : f.coeffs())
        if (!c.is_zero()) ++w;
    return w;
}

QuotientParams::QuotientParams(FieldParams field, unsigned s, unsigned n, FieldElement alpha)
    : field_(std::move(field)), s_(s), n_(n), alpha_(alpha) {
    // s = alpha_q * m + alpha_r by the Division Algorithm, 0 <= alpha_r < m;
    // alpha0 = alpha^(-p^(m - alpha_r)), so alpha0^(p^s) = alpha^-1.
    alpha_q_ = s_ / field_.m();
    alpha_r_ = s_ % field_.m();
    long long exp = 1;
    for (unsigned i = 0; i < field_.m() - alpha_r_; ++i) exp *= field_.p();
    alpha0_ = field_.pow(alpha_, -exp);
    FieldElement back = alpha0_;
    for (unsigned i = 0; i < s_; ++i) back = field_.pow(back, field_.p());
    if (field_.mul(back, alpha_) != field_.one())
        throw InternalError("alpha0 defining identity alpha0^(p^s) = alpha^-1 failed");
}

QuotientParams QuotientParams::make(FieldParams field, unsigned s, FieldElement alpha,
                                    const Limits& limits) {
    field.check(alpha);
    if (alpha.is_zero()) throw ParameterError("constacyclic constant alpha must be nonzero");
    if (s < 1) throw ParameterError("s must be >= 1");
    uint64_t n = 1;
    for (unsigned i = 0; i < s; ++i) {
        n *= field.p();
        if (n > limits.max_n)
            throw ParameterError("code length p^s = " + std::to_string(n) +
                                 "... exceeds the configured cap " + std::to_string(limits.max_n));
    }
    QuotientParams q(std::move(field), s, static_cast<unsigned>(n), alpha);
    q.limits_ = limits;
    return q;
}

QuotientParams QuotientParams::cyclic_twin() const {
    return is_cyclic() ? *this : make(field_, s_, field_.one(), limits_);
}

QuotientParams QuotientParams::inverse_twin() const {
    return make(field_, s_, field_.inv(alpha_), limits_);
}

void QuotientParams::check(const QuotientPoly& f) const {
    if (!(f.sig() == sig()))
        throw ParameterError("polynomial does not belong to this quotient ring");
}

void QuotientParams::check(const AdicCoords& c) const {
    if (!(c.sig == sig()))
        throw ParameterError("adic coordinates do not belong to this quotient ring");
}

QuotientPoly QuotientParams::zero() const {
    QuotientPoly f;
    f.sig_ = sig();
    f.coeffs_.assign(n_, ru_zero(field_));
    return f;
}

QuotientPoly QuotientParams::one() const { return monomial(0, ru_one(field_)); }

QuotientPoly QuotientParams::monomial(unsigned degree, const RuElement& c) const {
    if (degree >= n_) throw ParameterError("monomial degree must be < n");
    QuotientPoly f = zero();
    f.coeffs_[degree] = c;
    return f;
}

QuotientPoly QuotientParams::from_coeffs(std::vector<RuElement> coeffs) const {
    if (coeffs.size() != n_) throw ParameterError("coefficient vector must have length n");
    for (const auto& c : coeffs) {
        field_.check(c.a);
        field_.check(c.b);
    }
    QuotientPoly f;
    f.sig_ = sig();
    f.coeffs_ = std::move(coeffs);
    return f;
}

QuotientPoly QuotientParams::binomial_power(unsigned e) const {
    if (e > n_) throw ParameterError("binomial power exponent must be <= n");
    QuotientPoly base = zero();  // alpha0*x - 1 (n = p^s >= 2, so degree 1 fits)
    base.coeffs_[0] = ru_from_field(field_.neg(field_.one()), field_);
    base.coeffs_[1] = ru_from_field(alpha0_, field_);
    QuotientPoly r = one();
    for (unsigned i = 0; i < e; ++i) r = mul(r, base);
    return r;
}

QuotientPoly QuotientParams::element(uint64_t index) const {
    QuotientPoly f = zero();
    uint64_t q = field_.order() * field_.order();
    for (unsigned j = 0; j < n_; ++j) {
        f.coeffs_[j] = ru_element(field_, index % q);
        index /= q;
    }
    if (index != 0) throw ParameterError("ring element index out of range");
    return f;
}

double QuotientParams::element_bits() const {
    return 2.0 * field_.m() * n_ * std::log2(static_cast<double>(field_.p()));
}

QuotientPoly QuotientParams::add(const QuotientPoly& f, const QuotientPoly& g) const {
    check(f);
    check(g);
    QuotientPoly r = f;
    for (unsigned j = 0; j < n_; ++j) r.coeffs_[j] = ru_add(field_, f[j], g[j]);
    return r;
}

QuotientPoly QuotientParams::sub(const QuotientPoly& f, const QuotientPoly& g) const {
    check(f);
    check(g);
    QuotientPoly r = f;
    for (unsigned j = 0; j < n_; ++j) r.coeffs_[j] = ru_sub(field_, f[j], g[j]);
    return r;
}

QuotientPoly QuotientParams::neg(const QuotientPoly& f) const {
    check(f);
    QuotientPoly r = f;
    for (unsigned j = 0; j < n_; ++j) r.coeffs_[j] = ru_neg(field_, f[j]);
    return r;
}

QuotientPoly QuotientParams::scale(const QuotientPoly& f, const RuElement& c) const {
    check(f);
    QuotientPoly r = f;
    for (unsigned j = 0; j < n_; ++j) r.coeffs_[j] = ru_mul(field_, f[j], c);
    return r;
}

QuotientPoly QuotientParams::mul_u(const QuotientPoly& f) const {
    check(f);
    QuotientPoly r = zero();
    for (unsigned j = 0; j < n_; ++j) r.coeffs_[j].b = f[j].a;  // u*(a + ub) = u*a
    return r;
}

QuotientPoly QuotientParams::mul(const QuotientPoly& f, const QuotientPoly& g) const {
    check(f);
    check(g);
    // schoolbook product, then x^(n+j) -> alpha * x^j
    std::vector<RuElement> acc(2 * n_ - 1, ru_zero(field_));
    for (unsigned i = 0; i < n_; ++i) {
        if (f[i].is_zero()) continue;
        for (unsigned j = 0; j < n_; ++j) {
            if (g[j].is_zero()) continue;
            acc[i + j] = ru_add(field_, acc[i + j], ru_mul(field_, f[i], g[j]));
        }
    }
    QuotientPoly r = zero();
    for (unsigned k = 0; k < n_; ++k) r.coeffs_[k] = acc[k];
    for (unsigned k = n_; k < 2 * n_ - 1; ++k)
        r.coeffs_[k - n_] =
            ru_add(field_, r.coeffs_[k - n_], ru_scale(field_, acc[k], alpha_));
    return r;
}

QuotientPoly QuotientParams::shift(const QuotientPoly& f) const {
    check(f);
    QuotientPoly r = zero();
    r.coeffs_[0] = ru_scale(field_, f[n_ - 1], alpha_);
    for (unsigned j = 1; j < n_; ++j) r.coeffs_[j] = f[j - 1];
    return r;
}

AdicCoords QuotientParams::adic_expand(const QuotientPoly& f) const {
    check(f);
    // Pull back through x -> alpha0*x (a no-op when alpha = 1): coords of f
    // in {(alpha0*x - 1)^i} equal coords of f(alpha0^-1 * x) in {(x - 1)^i}.
    std::vector<RuElement> c = f.coeffs();
    if (!is_cyclic()) {
        FieldElement inv0 = field_.inv(alpha0_);
        FieldElement power = field_.one();
        for (unsigned j = 0; j < n_; ++j) {
            c[j] = ru_scale(field_, c[j], power);
            power = field_.mul(power, inv0);
        }
    }
    // Repeated synthetic division by (x - 1): after each pass c[lo] is the
    // next Taylor coefficient and c[lo+1..] the quotient.
    AdicCoords out{sig(), std::vector<RuElement>(n_, ru_zero(field_))};
    for (unsigned lo = 0; lo < n_; ++lo) {
        for (unsigned j = n_ - 1; j > lo; --j) c[j - 1] = ru_add(field_, c[j - 1], c[j]);
        out.coords[lo] = c[lo];
    }
    return out;
}

QuotientPoly QuotientParams::adic_collapse(const AdicCoords& coords) const {
    check(coords);
    // Horner in (x - 1) at the plain-representative level: degrees stay < n,
    // no quotient reduction can occur.
    std::vector<RuElement> c(n_, ru_zero(field_));
    for (unsigned i = n_; i-- > 0;) {
        // c <- c * (x - 1) + a_i
        for (unsigned j = n_ - 1; j > 0; --j)
            c[j] = ru_sub(field_, c[j - 1], c[j]);
        c[0] = ru_sub(field_, coords.coords[i], c[0]);
    }
    QuotientPoly r = zero();
    r.coeffs_ = std::move(c);
    if (!is_cyclic()) {
        FieldElement power = field_.one();
        for (unsigned j = 0; j < n_; ++j) {
            r.coeffs_[j] = ru_scale(field_, r.coeffs_[j], power);
            power = field_.mul(power, alpha0_);
        }
    }
    return r;
}

bool QuotientParams::is_unit(const QuotientPoly& f) const {
    return !adic_expand(f).coords[0].a.is_zero();
}

}  // namespace uconsta
