#include "uconsta/serialize.hpp"

#include <cinttypes>
#include <cstdio>
#include <sstream>

namespace uconsta {

namespace {

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::vector<long long> int_vector(const json& j) {
    std::vector<long long> out;
    if (j.is_number_integer()) {
        out.push_back(j.get<long long>());
        return out;
    }
    if (!j.is_array()) throw ParameterError("expected an integer or an array of integers");
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw ParameterError("expected integer coefficients");
        out.push_back(e.get<long long>());
    }
    return out;
}

json element_json(const FieldElement& x, unsigned m) {
    if (m == 1) return json(x.coeff(0));
    json arr = json::array();
    for (unsigned d = 0; d < m; ++d) arr.push_back(x.coeff(d));
    return arr;
}

}  // namespace

json field_element_to_json(const FieldElement& x) {
    json arr = json::array();
    for (unsigned d = 0; d < x.m(); ++d) arr.push_back(x.coeff(d));
    return arr;
}

FieldElement field_element_from_json(const FieldParams& field, const json& j) {
    std::vector<long long> coeffs = int_vector(j);
    return field.from_coeffs(coeffs);
}

json field_params_to_json(const FieldParams& field) {
    json mod = json::array();
    for (uint8_t c : field.modulus()) mod.push_back(static_cast<int>(c));
    return json{{"p", field.p()}, {"m", field.m()}, {"modulus", mod}};
}

json ru_to_json(const RuElement& x) {
    return json{{"a", field_element_to_json(x.a)}, {"b", field_element_to_json(x.b)}};
}

RuElement ru_from_json(const FieldParams& field, const json& j) {
    if (!j.is_object() || !j.contains("a") || !j.contains("b"))
        throw ParameterError("R element must be {\"a\": [...], \"b\": [...]}");
    return {field_element_from_json(field, j.at("a")), field_element_from_json(field, j.at("b"))};
}

json quotient_params_to_json(const QuotientParams& params) {
    json out = field_params_to_json(params.field());
    out["s"] = params.s();
    out["alpha"] = field_element_to_json(params.alpha());
    return out;
}

QuotientParams quotient_params_from_json(const json& j, const Limits& limits) {
    if (!j.contains("p") || !j.contains("m") || !j.contains("s"))
        throw ParameterError("quotient params need p, m and s");
    FieldParams field = FieldParams::make(j.at("p").get<unsigned>(), j.at("m").get<unsigned>(), limits);
    if (j.contains("modulus")) {
        std::vector<long long> given = int_vector(j.at("modulus"));
        std::vector<uint8_t> canon = field.modulus();
        bool same = given.size() == canon.size();
        for (size_t k = 0; same && k < canon.size(); ++k) same = given[k] == canon[k];
        if (!same) throw ParameterError("modulus must be the canonical lex-smallest irreducible");
    }
    FieldElement alpha = j.contains("alpha") ? field_element_from_json(field, j.at("alpha"))
                                             : field.one();
    return QuotientParams::make(std::move(field), j.at("s").get<unsigned>(), alpha, limits);
}

json poly_to_json(const QuotientPoly& f) {
    json arr = json::array();
    for (unsigned k = 0; k < f.n(); ++k) arr.push_back(ru_to_json(f[k]));
    return arr;
}

QuotientPoly poly_from_json(const QuotientParams& params, const json& j) {
    if (!j.is_array() || j.size() != params.n())
        throw ParameterError("polynomial must be an array of n coefficients");
    std::vector<RuElement> coeffs;
    for (const auto& e : j) coeffs.push_back(ru_from_json(params.field(), e));
    return params.from_coeffs(std::move(coeffs));
}

SpecKind spec_kind_from_string(const std::string& s) {
    if (s == "type1_zero" || s == "zero") return SpecKind::Type1Zero;
    if (s == "type1_unit" || s == "unit") return SpecKind::Type1Unit;
    if (s == "type2") return SpecKind::Type2;
    if (s == "type3") return SpecKind::Type3;
    if (s == "type4") return SpecKind::Type4;
    throw ParameterError("unknown spec kind '" + s + "'");
}

json code_spec_to_json(const CodeSpec& spec) {
    json out = quotient_params_to_json(spec.params);
    out.erase("modulus");  // implied by (p, m)
    out["kind"] = std::string(to_string(spec.kind));
    const unsigned m = spec.params.field().m();
    switch (spec.kind) {
        case SpecKind::Type1Zero:
        case SpecKind::Type1Unit: break;
        case SpecKind::Type2: out["i"] = spec.i; break;
        case SpecKind::Type4: out["omega"] = spec.omega; [[fallthrough]];
        case SpecKind::Type3: {
            out["i"] = spec.i;
            out["t"] = spec.t;
            json h = json::array();
            for (const auto& c : spec.h) h.push_back(element_json(c, m));
            out["h"] = h;
            break;
        }
    }
    return out;
}

CodeSpec code_spec_from_json(const json& j, const Limits& limits, const ValidateOptions& opts) {
    QuotientParams params = quotient_params_from_json(j, limits);
    if (!j.contains("kind")) throw ParameterError("code spec needs a kind");
    CodeSpec spec{spec_kind_from_string(j.at("kind").get<std::string>()), 0, 0, 0, {}, params};
    if (j.contains("i")) spec.i = j.at("i").get<unsigned>();
    if (j.contains("t")) spec.t = j.at("t").get<unsigned>();
    if (j.contains("omega")) spec.omega = j.at("omega").get<unsigned>();
    if (j.contains("h")) {
        const json& h = j.at("h");
        if (!h.is_array()) throw ParameterError("h must be an array of coefficients");
        for (const auto& e : h) spec.h.push_back(field_element_from_json(params.field(), e));
    }
    return spec_validate(std::move(spec), opts);
}

json code_to_json(const Code& code) {
    const unsigned m = code.params.field().m();
    json basis = json::array();
    for (unsigned r = 0; r < code.dim(); ++r) {
        json row = json::array();
        for (unsigned c = 0; c < code.basis.cols(); ++c)
            row.push_back(element_json(code.basis.at(r, c), m));
        basis.push_back(row);
    }
    json out{{"params", quotient_params_to_json(code.params)},
             {"dim", code.dim()},
             {"cardinality_exponent", code.cardinality_exponent()},
             {"basis", basis}};
    if (pow_fits_bits(code.params.field().p(), code.cardinality_exponent(), 62))
        out["cardinality"] = saturating_pow(code.params.field().p(), code.cardinality_exponent());
    if (code.spec) out["spec"] = code_spec_to_json(*code.spec);
    return out;
}

std::string h_to_string(const std::vector<FieldElement>& h) {
    if (h.empty()) return "0";
    std::string out;
    for (size_t k = 0; k < h.size(); ++k) {
        if (k) out += '|';
        out += h[k].to_string();
    }
    return out;
}

std::string poly_to_string(const QuotientPoly& f) {
    std::string out;
    for (unsigned k = 0; k < f.n(); ++k) {
        if (k) out += '|';
        out += f[k].a.to_string() + ':' + f[k].b.to_string();
    }
    return out;
}

std::string weights_to_csv(const std::map<unsigned, uint64_t>& hist) {
    std::string out = "weight,count\n";
    for (const auto& [w, c] : hist) out += std::to_string(w) + ',' + std::to_string(c) + '\n';
    return out;
}

json weights_to_json(const std::map<unsigned, uint64_t>& hist) {
    json arr = json::array();
    for (const auto& [w, c] : hist) arr.push_back(json{{"weight", w}, {"count", c}});
    return arr;
}

// --- sweep reports ---

namespace {

const char* status_string(RowStatus s) {
    switch (s) {
        case RowStatus::match: return "yes";
        case RowStatus::mismatch: return "no";
        case RowStatus::skipped: return "skip";
    }
    return "?";
}

std::string row_csv(const SweepRow& row) {
    std::string out;
    out += std::string(to_string(row.kind)) + ',' + std::to_string(row.i) + ',' +
           std::to_string(row.t) + ',' + std::to_string(row.omega) + ',' + h_to_string(row.h) +
           ',' + std::to_string(row.dim) + ',' + std::to_string(row.formula) + ',';
    out += row.oracle ? std::to_string(*row.oracle) : std::string("-");
    out += ',';
    out += status_string(row.status);
    return out;
}

}  // namespace

std::string sweep_to_csv(const SweepReport& report) {
    std::string out = "kind,i,t,omega,h,dim,formula,oracle,match\n";
    for (const auto& row : report.rows) out += row_csv(row) + '\n';
    return out;
}

std::string sweep_to_text(const SweepReport& report) {
    const auto& f = report.params.field();
    std::ostringstream out;
    out << "verify sweep over GF(" << f.p() << "^" << f.m() << ")+uGF(.), n=" << report.params.n()
        << ", alpha=" << report.params.alpha().to_string() << ", seed=" << report.seed << "\n";
    out << "  kind        i   t   w  h            dim  formula  oracle  match\n";
    for (const auto& row : report.rows) {
        char line[160];
        std::string kind(to_string(row.kind));
        std::string h = h_to_string(row.h);
        std::string oracle = row.oracle ? std::to_string(*row.oracle) : std::string("-");
        std::snprintf(line, sizeof line, "  %-10s %3u %3u %3u  %-12s %3u  %7u  %6s  %s\n",
                      kind.c_str(), row.i, row.t, row.omega, h.c_str(), row.dim, row.formula,
                      oracle.c_str(), status_string(row.status));
        out << line;
    }
    out << "specs: " << report.total() << "  matched: " << report.matched
        << "  mismatched: " << report.mismatched << "  skipped: " << report.skipped
        << "  in-cap: " << fixed(100.0 * report.in_cap_fraction(), 2) << "%\n";
    if (report.type3_beyond_small_i_range)
        out << "note: " << report.type3_beyond_small_i_range
            << " type3 specs lie beyond the literature's stated range i <= p-1; the oracle "
               "adjudicates them\n";
    if (report.naive_index_divergences)
        out << "note: " << report.naive_index_divergences
            << " specs have torsion index below the naive band index (i resp. omega); the "
               "formula uses the torsion index, which is what the oracle confirms\n";
    return out.str();
}

json sweep_to_json(const SweepReport& report) {
    const unsigned m = report.params.field().m();
    json rows = json::array();
    for (const auto& row : report.rows) {
        json h = json::array();
        for (const auto& c : row.h) h.push_back(element_json(c, m));
        json r{{"kind", std::string(to_string(row.kind))}, {"i", row.i},      {"t", row.t},
               {"omega", row.omega},                       {"h", h},          {"dim", row.dim},
               {"formula", row.formula},                   {"match", status_string(row.status)}};
        r["oracle"] = row.oracle ? json(*row.oracle) : json(nullptr);
        if (row.beyond_small_i_range) r["beyond_small_i_range"] = true;
        if (row.naive_index_divergent) r["naive_band_index_differs"] = true;
        rows.push_back(std::move(r));
    }
    return json{{"params", quotient_params_to_json(report.params)},
                {"seed", report.seed},
                {"enum_cap_bits", report.limits.enum_cap_bits},
                {"include_omega_zero", report.include_omega_zero},
                {"rows", rows},
                {"summary",
                 json{{"total", report.total()},
                      {"matched", report.matched},
                      {"mismatched", report.mismatched},
                      {"skipped", report.skipped},
                      {"in_cap_fraction", report.in_cap_fraction()},
                      {"type3_beyond_small_i_range", report.type3_beyond_small_i_range},
                      {"naive_index_divergences", report.naive_index_divergences}}}};
}

// --- distance tables ---

namespace {

const char* band_string(DistanceCase::Band b) {
    switch (b) {
        case DistanceCase::Band::zero: return "zero";
        case DistanceCase::Band::unit: return "unit";
        case DistanceCase::Band::l_band: return "l";
        case DistanceCase::Band::tk_band: return "tk";
    }
    return "?";
}

}  // namespace

std::string table_to_csv(const std::vector<TableRow>& rows) {
    std::string out = "i,case,l,t,k,distance\n";
    for (const auto& row : rows) {
        out += std::to_string(row.i) + ',' + band_string(row.dc.band) + ',';
        out += row.dc.band == DistanceCase::Band::l_band ? std::to_string(row.dc.l) : std::string("-");
        out += ',';
        out += row.dc.band == DistanceCase::Band::tk_band ? std::to_string(row.dc.t) : std::string("-");
        out += ',';
        out += row.dc.band == DistanceCase::Band::tk_band ? std::to_string(row.dc.k) : std::string("-");
        out += ',' + std::to_string(row.dc.value) + '\n';
    }
    return out;
}

std::string table_to_text(const QuotientParams& params, const std::vector<TableRow>& rows) {
    const auto& f = params.field();
    const bool cyclic = params.is_cyclic();
    const std::string gen = cyclic ? "(x-1)" : "(" + params.alpha0().to_string() + "x-1)";
    std::ostringstream out;
    out << "distances for length " << params.n() << " = " << f.p() << "^" << params.s()
        << " over GF(" << f.p() << "^" << f.m() << ")+uGF(" << f.p() << "^" << f.m()
        << "), alpha=" << params.alpha().to_string() << "\n";
    out << "  i  band      d\n";
    for (const auto& row : rows) {
        char line[96];
        std::string band = band_string(row.dc.band);
        if (row.dc.band == DistanceCase::Band::l_band) band += "(l=" + std::to_string(row.dc.l) + ")";
        if (row.dc.band == DistanceCase::Band::tk_band)
            band += "(t=" + std::to_string(row.dc.t) + ",k=" + std::to_string(row.dc.k) + ")";
        std::snprintf(line, sizeof line, "%3" PRIu64 "  %-9s %2u\n", row.i, band.c_str(),
                      row.dc.value);
        out << line;
    }
    out << "per-type summary (d[i] = table row i, tau = torsion index):\n";
    out << "  <0> -> 0, <1> -> 1\n";
    out << "  <u" << gen << "^i>, 0 <= i <= " << params.n() - 1 << "            -> d[i]\n";
    out << "  <" << gen << "^i + u" << gen << "^t h>, h = 0      -> d[i]\n";
    out << "  <" << gen << "^i + u" << gen << "^t h>, h a unit   -> d[min(i, " << params.n()
        << "-i+t)]\n";
    out << "  <" << gen << "^i + u" << gen << "^t h, u" << gen
        << "^w>  -> d[min(w, tau of the principal part)]\n";
    return out.str();
}

json table_to_json(const QuotientParams& params, const std::vector<TableRow>& rows) {
    json arr = json::array();
    for (const auto& row : rows) {
        json r{{"i", row.i}, {"case", band_string(row.dc.band)}, {"distance", row.dc.value}};
        if (row.dc.band == DistanceCase::Band::l_band) r["l"] = row.dc.l;
        if (row.dc.band == DistanceCase::Band::tk_band) {
            r["t"] = row.dc.t;
            r["k"] = row.dc.k;
        }
        arr.push_back(std::move(r));
    }
    return json{{"params", quotient_params_to_json(params)},
                {"rows", arr},
                {"per_type",
                 json{{"type1_zero", 0},
                      {"type1_unit", 1},
                      {"type2", "distance = row i"},
                      {"type3", "distance = row i for h = 0, row min(i, p^s-i+t) for h a unit"},
                      {"type4", "distance = row min(omega, torsion index of the principal part)"}}}};
}

// --- isometry reports ---

std::string isometry_report_to_text(const IsometryContext& ctx, const IsometryCheckReport& r) {
    std::ostringstream out;
    out << "isometry f(x) -> f(alpha0*x): alpha=" << ctx.target.alpha().to_string()
        << " alpha_q=" << ctx.alpha_q << " alpha_r=" << ctx.alpha_r
        << " alpha0=" << ctx.alpha0.to_string() << "\n";
    out << "  elements checked:  " << r.elements_checked << " (weight preservation + injectivity)\n";
    out << "  addition pairs:    " << r.add_pairs_checked << "\n";
    out << "  product pairs:     " << r.mul_pairs_checked << "\n";
    out << "  failures: weight=" << r.weight_failures << " add=" << r.add_failures
        << " mul=" << r.mul_failures << " collisions=" << r.injectivity_collisions << "\n";
    out << (r.ok() ? "OK\n" : "FAILED\n");
    return out.str();
}

json isometry_report_to_json(const IsometryContext& ctx, const IsometryCheckReport& r) {
    return json{{"alpha", field_element_to_json(ctx.target.alpha())},
                {"alpha_q", ctx.alpha_q},
                {"alpha_r", ctx.alpha_r},
                {"alpha0", field_element_to_json(ctx.alpha0)},
                {"elements_checked", r.elements_checked},
                {"add_pairs_checked", r.add_pairs_checked},
                {"mul_pairs_checked", r.mul_pairs_checked},
                {"weight_failures", r.weight_failures},
                {"add_failures", r.add_failures},
                {"mul_failures", r.mul_failures},
                {"injectivity_collisions", r.injectivity_collisions},
                {"ok", r.ok()}};
}

}  // namespace uconsta
