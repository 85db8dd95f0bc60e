#include <doctest.h>

#include <algorithm>

#include "uconsta/serialize.hpp"

using namespace uconsta;

TEST_CASE("code spec wire format") {
    json j = json::parse(R"({"p":2,"m":1,"s":2,"alpha":[1],"kind":"type3","i":3,"t":1,"h":[1]})");
    CodeSpec spec = code_spec_from_json(j);
    CHECK(spec.kind == SpecKind::Type3);
    CHECK(spec.i == 3);
    CHECK(spec.t == 1);
    CHECK(spec.h.size() == 1);
    CHECK(spec.params.n() == 4);
    CHECK(spec.params.is_cyclic());

    json back = code_spec_to_json(spec);
    CHECK(back.at("kind") == "type3");
    CHECK(back.at("h") == json::array({1}));  // m = 1: scalar coefficients
    CHECK(back.at("alpha") == json::array({1}));
    CodeSpec again = code_spec_from_json(back);
    CHECK(again.kind == spec.kind);
    CHECK(again.i == spec.i);
    CHECK(again.t == spec.t);
    CHECK(again.h == spec.h);
}

TEST_CASE("alpha defaults to 1 and scalars are accepted") {
    CodeSpec spec =
        code_spec_from_json(json::parse(R"({"p":3,"m":1,"s":1,"kind":"type2","i":2})"));
    CHECK(spec.params.is_cyclic());
    CodeSpec spec2 = code_spec_from_json(
        json::parse(R"({"p":3,"m":1,"s":1,"alpha":2,"kind":"type2","i":2})"));
    CHECK(spec2.params.alpha() == spec2.params.field().from_int(2));
}

TEST_CASE("extension field coefficients are arrays") {
    json j = json::parse(
        R"({"p":2,"m":2,"s":2,"alpha":[0,1],"kind":"type3","i":2,"t":0,"h":[[1,1]]})");
    CodeSpec spec = code_spec_from_json(j);
    CHECK(spec.params.alpha() == spec.params.field().from_coeffs(std::vector<long long>{0, 1}));
    CHECK(spec.h[0] == spec.params.field().from_coeffs(std::vector<long long>{1, 1}));
    json back = code_spec_to_json(spec);
    CHECK(back.at("h") == json::array({json::array({1, 1})}));
}

TEST_CASE("invalid specs are rejected with context") {
    CHECK_THROWS_AS(code_spec_from_json(json::parse(R"({"p":4,"m":1,"s":1,"kind":"type2"})")),
                    ParameterError);
    CHECK_THROWS_AS(
        code_spec_from_json(json::parse(R"({"p":2,"m":1,"s":2,"kind":"type2","i":4})")),
        ValidationError);
    CHECK_THROWS_AS(code_spec_from_json(json::parse(R"({"p":2,"m":1,"s":2,"kind":"nope"})")),
                    ParameterError);
    CHECK_THROWS_AS(code_spec_from_json(json::parse(R"({"p":2,"m":1,"s":2})")), ParameterError);
    // non-canonical modulus is refused for determinism
    CHECK_THROWS_AS(quotient_params_from_json(json::parse(
                        R"({"p":2,"m":2,"s":1,"modulus":[1,0,1]})")),
                    ParameterError);
}

TEST_CASE("field params and elements") {
    FieldParams f4 = FieldParams::make(2, 2);
    json j = field_params_to_json(f4);
    CHECK(j.at("p") == 2);
    CHECK(j.at("m") == 2);
    CHECK(j.at("modulus") == json::array({1, 1, 1}));
    FieldElement y1 = f4.from_coeffs(std::vector<long long>{1, 1});
    CHECK(field_element_to_json(y1) == json::array({1, 1}));
    CHECK(field_element_from_json(f4, json::array({1, 1})) == y1);
    CHECK(field_element_from_json(f4, json(1)) == f4.one());
}

TEST_CASE("polynomial round trip") {
    FieldParams f2 = FieldParams::make(2, 1);
    QuotientParams prm = QuotientParams::make(f2, 2, f2.one());
    QuotientPoly f = prm.add(prm.one(), prm.monomial(2, ru_u(f2)));
    json j = poly_to_json(f);
    CHECK(j.size() == 4);
    CHECK(j[0] == json{{"a", json::array({1})}, {"b", json::array({0})}});
    CHECK(poly_from_json(prm, j) == f);
}

TEST_CASE("compact cell strings") {
    FieldParams f4 = FieldParams::make(2, 2);
    std::vector<FieldElement> h{f4.one(), f4.from_coeffs(std::vector<long long>{0, 1})};
    CHECK(h_to_string(h) == "1.0|0.1");
    CHECK(h_to_string({}) == "0");
    FieldParams f3 = FieldParams::make(3, 1);
    QuotientParams prm = QuotientParams::make(f3, 1, f3.one());
    QuotientPoly f = prm.add(prm.one(), prm.monomial(1, ru_u(f3)));
    CHECK(poly_to_string(f) == "1:0|0:1|0:0");
}

TEST_CASE("weight csv") {
    std::map<unsigned, uint64_t> hist{{0, 1}, {4, 1}};
    CHECK(weights_to_csv(hist) == "weight,count\n0,1\n4,1\n");
}

TEST_CASE("sweep csv header and shape") {
    FieldParams f2 = FieldParams::make(2, 1);
    QuotientParams prm = QuotientParams::make(f2, 1, f2.one());
    SweepReport report = verify_sweep(prm, {});
    std::string csv = sweep_to_csv(report);
    CHECK(csv.rfind("kind,i,t,omega,h,dim,formula,oracle,match\n", 0) == 0);
    size_t lines = std::count(csv.begin(), csv.end(), '\n');
    CHECK(lines == report.total() + 1);
    json j = sweep_to_json(report);
    CHECK(j.at("summary").at("mismatched") == 0);
    CHECK(j.at("rows").size() == report.total());
}
