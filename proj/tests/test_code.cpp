#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "uconsta/code.hpp"
#include "uconsta/distance.hpp"

using namespace uconsta;

namespace {

QuotientParams ring(unsigned p, unsigned m, unsigned s, long long alpha = 1) {
    FieldParams f = FieldParams::make(p, m);
    return QuotientParams::make(f, s, f.from_int(alpha));
}

CodeSpec spec_of(const QuotientParams& q, SpecKind kind, unsigned i = 0, unsigned t = 0,
                 unsigned omega = 0, std::vector<long long> h = {}) {
    std::vector<FieldElement> hh;
    for (long long c : h) hh.push_back(q.field().from_int(c));
    return spec_validate({kind, i, t, omega, std::move(hh), q});
}

// canonical fingerprint of a code's row space
std::string basis_key(const Code& code) {
    std::string key = std::to_string(code.dim()) + ";";
    for (unsigned r = 0; r < code.dim(); ++r)
        for (unsigned c = 0; c < code.basis.cols(); ++c)
            key += code.basis.at(r, c).to_string() + ",";
    return key;
}

}  // namespace

TEST_CASE("spec validation constraints") {
    QuotientParams q212 = ring(2, 1, 2);
    // Type 2 index range excludes i = p^s
    CHECK_THROWS_AS(spec_of(q212, SpecKind::Type2, 4), ValidationError);
    CHECK(spec_of(q212, SpecKind::Type2, 3).i == 3);
    // Type 4 needs omega < i, otherwise principal
    CHECK_THROWS_AS(spec_of(q212, SpecKind::Type4, 2, 0, 2, {1}), ValidationError);
    // accepted Type 3
    CHECK(spec_of(q212, SpecKind::Type3, 3, 1, 0, {1}).t == 1);
    // h must be a unit: h = 1 + x vanishes at 1 over Z_2
    CHECK_THROWS_AS(spec_of(q212, SpecKind::Type3, 3, 0, 0, {1, 1}), ValidationError);
    // t below i
    CHECK_THROWS_AS(spec_of(q212, SpecKind::Type3, 2, 2, 0, {1}), ValidationError);
    // degree bound for Type 4 (h = x is a unit over Z_2: h(1) = 1)
    CHECK_THROWS_AS(spec_of(q212, SpecKind::Type4, 3, 0, 1, {0, 1}), ValidationError);
    CHECK(spec_of(q212, SpecKind::Type4, 3, 0, 2, {0, 1}).omega == 2);
    // omega = 0 only with the relaxed option
    CHECK_THROWS_AS(spec_of(q212, SpecKind::Type4, 2, 0, 0), ValidationError);
    CodeSpec relaxed = spec_validate({SpecKind::Type4, 2, 0, 0, {}, q212},
                                     ValidateOptions{.allow_omega_zero = true});
    CHECK(relaxed.omega == 0);
    // stray fields on Type 1/2
    CHECK_THROWS_AS(spec_of(q212, SpecKind::Type2, 1, 1), ValidationError);
    CHECK_THROWS_AS(spec_of(q212, SpecKind::Type1Unit, 1), ValidationError);
    // violated-constraint name is carried
    try {
        spec_of(q212, SpecKind::Type2, 4);
        CHECK(false);
    } catch (const ValidationError& e) {
        CHECK(e.constraint.find("0 <= i <= p^s-1") != std::string::npos);
    }
}

TEST_CASE("generators") {
    QuotientParams q212 = ring(2, 1, 2);
    auto gens_unit = spec_generators(spec_of(q212, SpecKind::Type1Unit));
    REQUIRE(gens_unit.size() == 1);
    CHECK(gens_unit[0] == q212.one());

    auto gens_t2 = spec_generators(spec_of(q212, SpecKind::Type2, 3));
    REQUIRE(gens_t2.size() == 1);
    std::vector<RuElement> expect(4, ru_u(q212.field()));  // u(x^3+x^2+x+1)
    CHECK(gens_t2[0] == q212.from_coeffs(expect));

    auto gens_t4 = spec_generators(spec_of(q212, SpecKind::Type4, 2, 0, 1, {1}));
    REQUIRE(gens_t4.size() == 2);
    CHECK(gens_t4[0] == q212.add(q212.binomial_power(2), q212.monomial(0, ru_u(q212.field()))));
    CHECK(gens_t4[1] == q212.mul_u(q212.binomial_power(1)));
}

TEST_CASE("span dimensions") {
    QuotientParams q212 = ring(2, 1, 2);
    CHECK(code_span(spec_of(q212, SpecKind::Type1Zero)).dim() == 0);
    CHECK(code_span(spec_of(q212, SpecKind::Type2, 0)).dim() == 4);   // <u>, |C| = 16
    CHECK(code_span(spec_of(q212, SpecKind::Type3, 3)).dim() == 2);   // <(x-1)^3>
    CHECK(code_span(spec_of(q212, SpecKind::Type1Unit)).dim() == 8);  // whole ring
}

TEST_CASE("enumeration") {
    Limits limits;
    QuotientParams q212 = ring(2, 1, 2);
    auto zero_words = code_enumerate(code_span(spec_of(q212, SpecKind::Type1Zero)), limits);
    REQUIRE(zero_words.size() == 1);
    CHECK(zero_words[0].is_zero());

    auto t2_words = code_enumerate(code_span(spec_of(q212, SpecKind::Type2, 3)), limits);
    REQUIRE(t2_words.size() == 2);  // {0, u(x^3+x^2+x+1)}
    CHECK(((t2_words[0].is_zero()) != (t2_words[1].is_zero())));

    QuotientParams q211 = ring(2, 1, 1);
    auto all = code_enumerate(code_span(spec_of(q211, SpecKind::Type1Unit)), limits);
    CHECK(all.size() == 16);  // |R|^2
    std::set<std::vector<RuElement>> distinct;
    for (const auto& w : all) distinct.insert(w.coeffs());
    CHECK(distinct.size() == 16);
}

TEST_CASE("oracle and weight distribution") {
    Limits limits;
    QuotientParams q212 = ring(2, 1, 2);
    CHECK(min_distance_oracle(code_span(spec_of(q212, SpecKind::Type1Zero)), limits) == 0);
    CHECK(min_distance_oracle(code_span(spec_of(q212, SpecKind::Type1Unit)), limits) == 1);
    CHECK(min_distance_oracle(code_span(spec_of(q212, SpecKind::Type3, 3)), limits) == 4);

    auto wd_zero = weight_distribution(code_span(spec_of(q212, SpecKind::Type1Zero)), limits);
    CHECK(wd_zero == std::map<unsigned, uint64_t>{{0, 1}});
    auto wd_t2 = weight_distribution(code_span(spec_of(q212, SpecKind::Type2, 3)), limits);
    CHECK(wd_t2 == std::map<unsigned, uint64_t>{{0, 1}, {4, 1}});
    QuotientParams q211 = ring(2, 1, 1);
    auto wd_u = weight_distribution(code_span(spec_of(q211, SpecKind::Type2, 0)), limits);
    CHECK(wd_u == std::map<unsigned, uint64_t>{{0, 1}, {1, 2}, {2, 1}});
}

TEST_CASE("shift closure of enumerated codewords") {
    Limits limits;
    for (auto spec : {spec_of(ring(2, 1, 2), SpecKind::Type3, 2, 0, 0, {1}),
                      spec_of(ring(3, 1, 1, 2), SpecKind::Type3, 2, 1, 0, {2}),
                      spec_of(ring(3, 1, 1, 2), SpecKind::Type4, 2, 0, 1, {1})}) {
        Code code = code_span(spec);
        for_each_codeword(code, limits, [&](const QuotientPoly& f) {
            CHECK(code.basis.contains(poly_to_row(spec.params.shift(f))));
        });
    }
}

TEST_CASE("u times the monic generator stays inside Type 3/4 ideals") {
    for (auto spec : {spec_of(ring(2, 1, 2), SpecKind::Type3, 3, 1, 0, {1}),
                      spec_of(ring(3, 1, 1), SpecKind::Type3, 2, 0, 0, {1}),
                      spec_of(ring(2, 1, 2), SpecKind::Type4, 2, 0, 1, {1})}) {
        Code code = code_span(spec);
        QuotientPoly g1 = spec_generators(spec)[0];
        CHECK(code.basis.contains(poly_to_row(spec.params.mul_u(g1))));
    }
}

TEST_CASE("dual codes by brute force") {
    Limits limits;
    QuotientParams q212 = ring(2, 1, 2);
    // <0> and <1> are dual to each other
    Code dual_of_zero = dual_bruteforce(code_span(spec_of(q212, SpecKind::Type1Zero)), limits);
    CHECK(dual_of_zero.dim() == 8);
    Code dual_of_ring = dual_bruteforce(code_span(spec_of(q212, SpecKind::Type1Unit)), limits);
    CHECK(dual_of_ring.dim() == 0);
    // <u> is self-dual at length 4: |C| = |C^perp| = 16 and same row space
    Code c = code_span(spec_of(q212, SpecKind::Type2, 0));
    Code dual = dual_bruteforce(c, limits);
    CHECK(dual.dim() == 4);
    CHECK(basis_key(dual) == basis_key(c));
    // cap refusal
    QuotientParams q312 = ring(3, 1, 2);
    CHECK_THROWS_AS(dual_bruteforce(code_span(spec_of(q312, SpecKind::Type2, 0)), limits),
                    ResourceError);
}

TEST_CASE("enumeration cap carries the required budget") {
    Limits limits;
    QuotientParams q312 = ring(3, 1, 2);
    try {
        min_distance_oracle(code_span(spec_of(q312, SpecKind::Type1Unit)), limits);
        CHECK(false);
    } catch (const ResourceError& e) {
        CHECK(e.required_bits > e.cap_bits);
        CHECK(e.cap_bits == limits.enum_cap_bits);
    }
}

TEST_CASE("omega = 0 ideal <(x-1)^i, u>") {
    Limits limits;
    QuotientParams q212 = ring(2, 1, 2);
    CodeSpec spec = spec_validate({SpecKind::Type4, 2, 0, 0, {}, q212},
                                  ValidateOptions{.allow_omega_zero = true});
    Code code = code_span(spec);
    CHECK(code.dim() == 6);  // (n-i) + n
    CHECK(min_distance_oracle(code, limits) == 1);
    CHECK(spec_distance_formula(spec) == 1);
}

TEST_CASE("canonical spec lists are pairwise distinct ideals") {
    for (auto prm : {ring(2, 1, 2), ring(3, 1, 1)}) {
        std::set<std::string> keys;
        auto specs = enumerate_canonical_specs(prm);
        for (const auto& spec : specs) CHECK(keys.insert(basis_key(code_span(spec))).second);
        CHECK(keys.size() == specs.size());
    }
}

TEST_CASE("canonical spec list is the complete ideal lattice") {
    // every ideal is a sum of principal ideals: collect all <g>, close under
    // pairwise sums, and compare against the canonical enumeration
    for (auto prm : {ring(2, 1, 1), ring(2, 1, 2), ring(3, 1, 1), ring(3, 1, 1, 2)}) {
        const unsigned n = prm.n();
        uint64_t total = 1;
        for (unsigned k = 0; k < 2 * n; ++k) total *= prm.field().order();

        auto span_rows = [&](const std::vector<std::vector<FieldElement>>& gens_rows) {
            std::vector<std::vector<FieldElement>> rows;
            for (const auto& gr : gens_rows) {
                QuotientPoly f = row_to_poly(prm, gr);
                for (unsigned j = 0; j < n; ++j) {
                    rows.push_back(poly_to_row(f));
                    rows.push_back(poly_to_row(prm.mul_u(f)));
                    f = prm.shift(f);
                }
            }
            return code_from_rows(prm, rows, std::nullopt);
        };

        std::set<std::string> ideals;
        std::vector<Code> reps;
        auto add = [&](Code code) {
            if (ideals.insert(basis_key(code)).second) reps.push_back(std::move(code));
        };
        for (uint64_t idx = 0; idx < total; ++idx)
            add(span_rows({poly_to_row(prm.element(idx))}));
        // close under sums until stable
        for (size_t a = 0; a < reps.size(); ++a)
            for (size_t b = 0; b < a; ++b) {
                std::vector<std::vector<FieldElement>> rows;
                for (unsigned r = 0; r < reps[a].dim(); ++r) rows.push_back(reps[a].basis.row(r));
                for (unsigned r = 0; r < reps[b].dim(); ++r) rows.push_back(reps[b].basis.row(r));
                add(code_from_rows(prm, rows, std::nullopt));
            }

        std::set<std::string> canonical;
        for (const auto& spec : enumerate_canonical_specs(prm))
            canonical.insert(basis_key(code_span(spec)));
        CHECK(canonical == ideals);
    }
}
