// Command-line front end: construction, distance evaluation, verification
// sweeps, distance tables and isometry checks, with text/json/csv output.
//
// Exit codes: 0 = success / all checks match, 1 = a verification mismatch,
// 2 = invalid input or a resource refusal.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "uconsta/serialize.hpp"

using namespace uconsta;

namespace {

struct GlobalOptions {
    unsigned p = 2;
    unsigned m = 1;
    unsigned s = 1;
    std::string alpha = "1";
    std::string format = "text";
    std::string out_path;
    uint64_t seed = 1729;
    unsigned enum_cap = 22;
    unsigned dual_cap = 20;

    Limits limits() const {
        Limits l;
        l.enum_cap_bits = enum_cap;
        l.dual_cap_bits = dual_cap;
        return l;
    }
};

FieldElement parse_alpha(const FieldParams& field, const std::string& text) {
    std::vector<long long> coeffs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) coeffs.push_back(std::stoll(item));
    return field.from_coeffs(coeffs);
}

QuotientParams params_from(const GlobalOptions& g) {
    FieldParams field = FieldParams::make(g.p, g.m, g.limits());
    return QuotientParams::make(field, g.s, parse_alpha(field, g.alpha), g.limits());
}

void emit(const GlobalOptions& g, const std::string& text) {
    if (g.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(g.out_path, std::ios::binary);
    if (!out) throw ParameterError("cannot open output file " + g.out_path);
    out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

CodeSpec load_spec(const GlobalOptions& g, const std::string& spec_text,
                   const std::string& spec_file) {
    std::string text = spec_text;
    if (!spec_file.empty()) {
        std::ifstream in(spec_file);
        if (!in) throw ParameterError("cannot open spec file " + spec_file);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    if (text.empty()) throw ParameterError("code commands need --spec or --spec-file");
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParameterError(std::string("spec JSON parse error: ") + e.what());
    }
    return code_spec_from_json(j, g.limits());
}

int run_field(const GlobalOptions& g) {
    FieldParams field = FieldParams::make(g.p, g.m, g.limits());
    if (g.format == "json") {
        emit(g, dump(field_params_to_json(field)));
    } else if (g.format == "csv") {
        std::string mod;
        for (size_t k = 0; k < field.modulus().size(); ++k)
            mod += (k ? "." : "") + std::to_string(field.modulus()[k]);
        emit(g, "p,m,modulus\n" + std::to_string(field.p()) + ',' + std::to_string(field.m()) +
                    ',' + mod + '\n');
    } else {
        std::ostringstream out;
        out << "GF(" << field.p() << "^" << field.m() << "), " << field.order()
            << " elements, modulus coefficients (low to high): ";
        for (size_t k = 0; k < field.modulus().size(); ++k)
            out << (k ? " " : "") << static_cast<int>(field.modulus()[k]);
        out << "\n";
        emit(g, out.str());
    }
    return 0;
}

int run_code_build(const GlobalOptions& g, const CodeSpec& spec) {
    Code code = code_span(spec);
    if (g.format == "json") {
        emit(g, dump(code_to_json(code)));
        return 0;
    }
    std::ostringstream out;
    if (g.format == "csv") {
        out << "kind,i,t,omega,h,dim,cardinality_exponent\n"
            << to_string(spec.kind) << ',' << spec.i << ',' << spec.t << ',' << spec.omega << ','
            << h_to_string(spec.h) << ',' << code.dim() << ',' << code.cardinality_exponent()
            << '\n';
    } else {
        out << "spec: " << code_spec_to_json(spec).dump() << "\n";
        out << "generators:";
        for (const auto& gpoly : spec_generators(spec)) out << " " << poly_to_string(gpoly);
        out << "\ndim over GF(p^m): " << code.dim() << "\n|C| = " << g.p << "^"
            << code.cardinality_exponent();
        if (pow_fits_bits(g.p, code.cardinality_exponent(), 62))
            out << " = " << saturating_pow(g.p, code.cardinality_exponent());
        out << "\nbasis rows (a-block | u-block):\n";
        for (unsigned r = 0; r < code.dim(); ++r)
            out << "  " << poly_to_string(row_to_poly(code.params, code.basis.row(r))) << "\n";
    }
    emit(g, out.str());
    return 0;
}

int run_code_distance(const GlobalOptions& g, const CodeSpec& spec) {
    Code code = code_span(spec);
    unsigned formula = spec_distance_formula(spec);
    std::optional<unsigned> oracle;
    std::string skip_reason;
    try {
        oracle = min_distance_oracle(code, g.limits());
    } catch (const ResourceError& e) {
        skip_reason = e.what();
    }
    std::string match = oracle ? (*oracle == formula ? "yes" : "no") : "skip";
    if (g.format == "json") {
        json j{{"spec", code_spec_to_json(spec)},
               {"dim", code.dim()},
               {"formula", formula},
               {"oracle", oracle ? json(*oracle) : json(nullptr)},
               {"match", match}};
        if (!skip_reason.empty()) j["skip_reason"] = skip_reason;
        emit(g, dump(j));
    } else if (g.format == "csv") {
        emit(g, "kind,i,t,omega,h,dim,formula,oracle,match\n" + std::string(to_string(spec.kind)) +
                    ',' + std::to_string(spec.i) + ',' + std::to_string(spec.t) + ',' +
                    std::to_string(spec.omega) + ',' + h_to_string(spec.h) + ',' +
                    std::to_string(code.dim()) + ',' + std::to_string(formula) + ',' +
                    (oracle ? std::to_string(*oracle) : std::string("-")) + ',' + match + '\n');
    } else {
        std::ostringstream out;
        out << "formula: " << formula << "\n";
        if (oracle)
            out << "oracle:  " << *oracle << "\nmatch:   " << match << "\n";
        else
            out << "oracle:  skipped (" << skip_reason << ")\n";
        emit(g, out.str());
    }
    return match == "no" ? 1 : 0;
}

int run_code_enumerate(const GlobalOptions& g, const CodeSpec& spec) {
    Code code = code_span(spec);
    std::ostringstream out;
    if (g.format == "json") {
        json arr = json::array();
        for_each_codeword(code, g.limits(),
                          [&](const QuotientPoly& f) { arr.push_back(poly_to_json(f)); });
        out << dump(arr);
    } else if (g.format == "csv") {
        out << "index,weight,word\n";
        uint64_t idx = 0;
        for_each_codeword(code, g.limits(), [&](const QuotientPoly& f) {
            out << idx++ << ',' << hamming_weight(f) << ',' << poly_to_string(f) << '\n';
        });
    } else {
        for_each_codeword(code, g.limits(), [&](const QuotientPoly& f) {
            out << poly_to_string(f) << "  (weight " << hamming_weight(f) << ")\n";
        });
    }
    emit(g, out.str());
    return 0;
}

int run_code_dual(const GlobalOptions& g, const CodeSpec& spec) {
    Code code = code_span(spec);
    Code dual = dual_bruteforce(code, g.limits());
    if (g.format == "json") {
        json j{{"code", code_to_json(code)},
               {"dual", code_to_json(dual)},
               {"cardinality_product_exponent", code.cardinality_exponent() + dual.cardinality_exponent()},
               {"ambient_exponent", uint64_t{2} * g.m * code.params.n()}};
        emit(g, dump(j));
        return 0;
    }
    std::ostringstream out;
    if (g.format == "csv") {
        out << "dim,dual_dim,ambient_dim\n"
            << code.dim() << ',' << dual.dim() << ',' << 2 * code.params.n() << '\n';
    } else {
        out << "dim(C) = " << code.dim() << ", dim(C^perp) = " << dual.dim()
            << ", |C|*|C^perp| = p^" << g.m * (code.dim() + dual.dim()) << " = |R|^"
            << code.params.n() << "\n";
        out << "dual lives in alpha^-1 = " << dual.params.alpha().to_string()
            << " ring; closure under its shift verified\n";
        out << "dual basis rows:\n";
        for (unsigned r = 0; r < dual.dim(); ++r)
            out << "  " << poly_to_string(row_to_poly(dual.params, dual.basis.row(r))) << "\n";
    }
    emit(g, out.str());
    return 0;
}

int run_code_weights(const GlobalOptions& g, const CodeSpec& spec) {
    Code code = code_span(spec);
    auto hist = weight_distribution(code, g.limits());
    if (g.format == "json")
        emit(g, dump(weights_to_json(hist)));
    else if (g.format == "csv")
        emit(g, weights_to_csv(hist));
    else {
        std::ostringstream out;
        for (const auto& [w, c] : hist) out << "weight " << w << ": " << c << "\n";
        emit(g, out.str());
    }
    return 0;
}

int run_verify(const GlobalOptions& g, bool include_omega_zero) {
    QuotientParams params = params_from(g);
    SweepOptions opts;
    opts.seed = g.seed;
    opts.limits = g.limits();
    opts.include_omega_zero = include_omega_zero;
    SweepReport report = verify_sweep(params, opts);
    if (g.format == "json")
        emit(g, dump(sweep_to_json(report)));
    else if (g.format == "csv")
        emit(g, sweep_to_csv(report));
    else
        emit(g, sweep_to_text(report));
    return report.all_match() ? 0 : 1;
}

int run_table(const GlobalOptions& g) {
    QuotientParams params = params_from(g);
    auto rows = torsion_table(g.p, g.s);
    if (g.format == "json")
        emit(g, dump(table_to_json(params, rows)));
    else if (g.format == "csv")
        emit(g, table_to_csv(rows));
    else
        emit(g, table_to_text(params, rows));
    return 0;
}

int run_isometry(const GlobalOptions& g, const std::string& mode, uint64_t budget,
                 uint64_t add_budget, uint64_t samples, bool map_codes) {
    QuotientParams target = params_from(g);
    IsometryContext ctx = compute_alpha0(target);
    IsometryCheckOptions opts;
    opts.exhaustive = mode == "exhaustive";
    opts.mul_pairs = budget;
    opts.add_pairs = add_budget;
    opts.samples = samples;
    opts.seed = g.seed;
    IsometryCheckReport report = isometry_check(ctx, opts);

    json mapped = json::array();
    std::ostringstream mapped_text;
    uint64_t mapped_failures = 0;
    if (map_codes) {
        for (const CodeSpec& spec : enumerate_canonical_specs(ctx.source)) {
            Code code = code_span(spec);
            json entry{{"spec", code_spec_to_json(spec)}, {"dim", code.dim()}};
            std::string label = std::string(to_string(spec.kind)) + " i=" + std::to_string(spec.i) +
                                " t=" + std::to_string(spec.t) + " w=" + std::to_string(spec.omega) +
                                " h=" + h_to_string(spec.h);
            try {
                auto before = weight_distribution(code, g.limits());
                auto after = weight_distribution(map_code(ctx, code), g.limits());
                bool same = before == after;
                mapped_failures += !same;
                entry["histograms_equal"] = same;
                mapped_text << "  " << label << ": " << (same ? "equal" : "DIFFER") << "\n";
            } catch (const ResourceError&) {
                entry["histograms_equal"] = nullptr;
                mapped_text << "  " << label << ": skipped (over cap)\n";
            }
            mapped.push_back(std::move(entry));
        }
    }

    if (g.format == "json") {
        json j = isometry_report_to_json(ctx, report);
        if (map_codes) j["mapped_ideals"] = mapped;
        emit(g, dump(j));
    } else {
        std::string text = isometry_report_to_text(ctx, report);
        if (map_codes)
            text += "mapped ideals (weight histograms before/after):\n" + mapped_text.str();
        emit(g, text);
    }
    return report.ok() && mapped_failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constacyclic codes of length p^s over GF(p^m) + u GF(p^m), u^2 = 0"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand name

    GlobalOptions g;
    app.add_option("--p", g.p, "prime characteristic")->envname("UCONSTA_P");
    app.add_option("--m", g.m, "extension degree")->envname("UCONSTA_M");
    app.add_option("--s", g.s, "length exponent, n = p^s")->envname("UCONSTA_S");
    app.add_option("--alpha", g.alpha,
                   "constacyclic constant as comma-separated coefficients, lowest degree first "
                   "(scalar shorthand for m = 1)")
        ->envname("UCONSTA_ALPHA");
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->envname("UCONSTA_FORMAT");
    app.add_option("--out", g.out_path, "write output to this file instead of stdout")
        ->envname("UCONSTA_OUT");
    app.add_option("--seed", g.seed, "seed for all randomized checks")->envname("UCONSTA_SEED");
    app.add_option("--enum-cap", g.enum_cap, "codeword enumeration cap in bits")
        ->envname("UCONSTA_ENUM_CAP");
    app.add_option("--dual-cap", g.dual_cap, "ambient dual-scan cap in bits")
        ->envname("UCONSTA_DUAL_CAP");

    app.add_subcommand("field", "print the canonical field GF(p^m)")->fallthrough();

    CLI::App* code = app.add_subcommand("code", "operate on a single code spec");
    code->require_subcommand(1);
    code->fallthrough();
    std::string spec_text, spec_file;
    for (const char* name : {"build", "distance", "enumerate", "dual", "weights"}) {
        CLI::App* sub = code->add_subcommand(name);
        sub->fallthrough();
        sub->add_option("--spec", spec_text, "code spec as inline JSON");
        sub->add_option("--spec-file", spec_file, "path to a code spec JSON file");
    }
    code->get_subcommand("build")->description("span the ideal: dim, cardinality, basis");
    code->get_subcommand("distance")->description("closed-form distance vs brute-force oracle");
    code->get_subcommand("enumerate")->description("stream all codewords");
    code->get_subcommand("dual")->description("brute-force dual code");
    code->get_subcommand("weights")->description("exact weight distribution");

    bool include_omega_zero = false;
    CLI::App* verify = app.add_subcommand(
        "verify", "sweep all classified specs, compare formula against the oracle");
    verify->fallthrough();
    verify->add_flag("--include-omega-zero", include_omega_zero,
                     "also sweep the omega = 0, h = 0 ideals <(x-1)^i, u>");

    app.add_subcommand("table", "emit the full distance table for i = 0..p^s")->fallthrough();

    CLI::App* isometry = app.add_subcommand(
        "isometry", "check the weight-preserving map onto the alpha-constacyclic ring");
    isometry->fallthrough();
    std::string mode = "exhaustive";
    uint64_t budget = 100000, add_budget = uint64_t{1} << 20, samples = 10000;
    bool map_codes = false;
    isometry->add_option("--mode", mode, "exhaustive or randomized")
        ->check(CLI::IsMember({"exhaustive", "randomized"}));
    isometry->add_option("--budget", budget, "product pairs to check");
    isometry->add_option("--add-budget", add_budget, "addition pairs budget");
    isometry->add_option("--samples", samples, "elements sampled in randomized mode");
    isometry->add_flag("--map-codes", map_codes,
                       "map every cyclic ideal and compare weight histograms");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand("field")) return run_field(g);
        if (app.got_subcommand("verify")) return run_verify(g, include_omega_zero);
        if (app.got_subcommand("table")) return run_table(g);
        if (app.got_subcommand("isometry"))
            return run_isometry(g, mode, budget, add_budget, samples, map_codes);
        if (app.got_subcommand("code")) {
            CodeSpec spec = load_spec(g, spec_text, spec_file);
            if (code->got_subcommand("build")) return run_code_build(g, spec);
            if (code->got_subcommand("distance")) return run_code_distance(g, spec);
            if (code->got_subcommand("enumerate")) return run_code_enumerate(g, spec);
            if (code->got_subcommand("dual")) return run_code_dual(g, spec);
            if (code->got_subcommand("weights")) return run_code_weights(g, spec);
        }
    } catch (const ResourceError& e) {
        std::cerr << "resource refusal: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "invalid spec: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
