#include "sylvinv/commands.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <exception>
#include <string>

#include "sylvinv/bench_scenario.hpp"
#include "sylvinv/bezout.hpp"
#include "sylvinv/confluence.hpp"
#include "sylvinv/dyadic_inverse.hpp"
#include "sylvinv/errors.hpp"
#include "sylvinv/sylvester.hpp"

namespace sylvinv {

namespace {

const json& require_field(const json& input, const char* key) {
    if (!input.is_object()) throw ValidationError("input must be a JSON object");
    if (!input.contains(key)) throw ValidationError(std::string("input is missing \"") + key + "\"");
    return input[key];
}

PolynomialDocument polynomial_field(const json& input, const char* key) {
    try {
        return parse_polynomial_document(require_field(input, key));
    } catch (const DegenerateInput& e) {
        throw DegenerateInput(std::string(key) + ": " + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(std::string(key) + ": " + e.what());
    }
}

/// Zeros of a document: as declared, or found numerically (simple only).
FactoredPolynomial zeros_of(const PolynomialDocument& doc, const char* name, bool allow_root_finding,
                            std::vector<std::string>& warnings, const std::string& needed_by) {
    if (doc.is_factored()) return doc.factored();
    if (!allow_root_finding) {
        throw ValidationError(needed_by + " needs factored input for " + name + "; pass --find-roots to compute zeros");
    }
    const Polynomial p = doc.coefficients();
    if (p.is_zero() || p.degree() < 1) throw DegenerateInput(std::string(name) + ": degree must be >= 1");
    std::vector<Complex> roots = find_roots(p);
    sort_canonical(roots);
    warnings.push_back(std::string(name) +
                       ": zeros computed from coefficients and treated as simple; multiplicities are not detected");
    return FactoredPolynomial::from_simple_zeros(p.leading(), roots);
}

json dyads_to_json(const DyadicDecomposition& dec) {
    json out = json::array();
    for (const Dyad& d : dec.dyads) {
        out.push_back({{"side", d.side == Side::a ? "a" : "b"},
                       {"node_index", d.node_index},
                       {"node", to_json(d.node)},
                       {"order", d.order},
                       {"weight", to_json(d.weight)},
                       {"row", to_json(d.row_poly)}});
    }
    return out;
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::string error_kind(const std::exception& e) {
    if (dynamic_cast<const DegenerateInput*>(&e)) return "degenerate_input";
    if (dynamic_cast<const ValidationError*>(&e)) return "validation";
    if (dynamic_cast<const SingularSylvester*>(&e)) return "singular_sylvester";
    if (dynamic_cast<const SingularMatrix*>(&e)) return "singular_matrix";
    if (dynamic_cast<const RootFindingFailed*>(&e)) return "root_finding_failed";
    if (dynamic_cast<const json::exception*>(&e)) return "invalid_json";
    return "internal";
}

int exit_code_for(const std::string& kind) {
    if (kind == "singular_sylvester" || kind == "singular_matrix") return exit_code::singular;
    if (kind == "internal") return 1;
    return exit_code::validation;
}

CommandOptions checked(const CommandOptions& options) {
    if (!(options.guards.singular_tol >= 0.0)) throw ValidationError("--guard-tol must be nonnegative");
    if (!(options.verify_tol > 0.0)) throw ValidationError("--verify-tol must be positive");
    return options;
}

void require_method(const CommandOptions& options, std::initializer_list<const char*> allowed, const char* command) {
    std::string list;
    for (const char* m : allowed) {
        if (options.method == m) return;
        list += list.empty() ? m : std::string(", ") + m;
    }
    throw ValidationError(std::string(command) + " does not support --method " + options.method + " (choose " + list +
                          ")");
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"sylvester", "invert", "solve", "adjugate", "confluence", "bench"};
    return names;
}

json cmd_sylvester(const json& input, const CommandOptions& options, std::vector<std::string>&) {
    require_method(options, {"auto"}, "sylvester");
    const PolynomialDocument a = polynomial_field(input, "a");
    const PolynomialDocument b = polynomial_field(input, "b");
    const SylvesterLayout s = build_sylvester(a.coefficients(), b.coefficients());
    const Complex d = det(s.matrix);
    json out{{"m", s.m}, {"n", s.n}, {"matrix", to_json(s.matrix)}, {"det", to_json(d)}};
    if (a.is_factored() && b.is_factored()) {
        const Complex ra = det_via_roots(a.factored(), b.factored());
        const Complex rb = det_via_roots_b_side(a.factored(), b.factored());
        const double floor = DBL_EPSILON * hadamard_bound(s.matrix);
        const double ref = std::max({std::abs(d), std::abs(ra), floor});
        const double diff = std::max(std::abs(ra - d), std::abs(rb - d)) / ref;
        out["det_via_roots"] = to_json(ra);
        out["det_via_roots_b_side"] = to_json(rb);
        out["det_relative_difference"] = diff;
        out["det_agreement"] = diff <= options.verify_tol;
    }
    return out;
}

json cmd_invert(const json& input, const CommandOptions& options, std::vector<std::string>& warnings) {
    require_method(options, {"auto", "dyadic", "oracle"}, "invert");
    const PolynomialDocument a = polynomial_field(input, "a");
    const PolynomialDocument b = polynomial_field(input, "b");
    const SylvesterLayout s = build_sylvester(a.coefficients(), b.coefficients());

    std::string method = options.method;
    if (method == "auto") {
        method = (a.is_factored() && b.is_factored()) || options.find_roots ? "dyadic" : "oracle";
    }
    json out{{"method", method}, {"m", s.m}, {"n", s.n}, {"sylvester", to_json(s.matrix)}};
    DenseMatrix inv;
    if (method == "dyadic") {
        const FactoredPolynomial fa = zeros_of(a, "a", options.find_roots, warnings, "dyadic inverse");
        const FactoredPolynomial fb = zeros_of(b, "b", options.find_roots, warnings, "dyadic inverse");
        const DyadicDecomposition dec = fa.all_simple() && fb.all_simple() ? inverse_simple(fa, fb, options.guards)
                                                                           : inverse_general(fa, fb, options.guards);
        inv = materialize(dec);
        out["dyads"] = dyads_to_json(dec);
    } else {
        try {
            inv = inverse(s.matrix);
        } catch (const SingularMatrix& e) {
            throw SingularSylvester(std::string("Sylvester matrix is singular (a and b share a zero): ") + e.what());
        }
        out["dyads"] = json::array();
    }
    const double norm = distance_to_scaled_identity(multiply(s.matrix, inv), 1.0);
    out["inverse"] = to_json(inv);
    out["verification_norm"] = norm;
    out["verified"] = norm <= options.verify_tol;
    if (!(norm <= options.verify_tol)) warnings.push_back("||S S^-1 - I|| exceeds --verify-tol");
    return out;
}

json cmd_solve(const json& input, const CommandOptions& options, std::vector<std::string>& warnings) {
    require_method(options, {"auto", "lagrange", "hermite", "oracle", "dyadic"}, "solve");
    const PolynomialDocument a = polynomial_field(input, "a");
    const PolynomialDocument b = polynomial_field(input, "b");
    const Polynomial c = polynomial_field(input, "c").coefficients();

    std::string method = options.method;
    if (method == "auto") {
        if (a.is_factored() && b.is_factored()) {
            method = a.factored().all_simple() && b.factored().all_simple() ? "lagrange" : "hermite";
        } else {
            method = "oracle";
        }
    }
    BezoutSolution sol;
    if (method == "oracle") {
        try {
            sol = solve_oracle(a.coefficients(), b.coefficients(), c);
        } catch (const SingularMatrix& e) {
            throw SingularSylvester(std::string("Sylvester matrix is singular (a and b share a zero): ") + e.what());
        }
    } else {
        // Lagrange formulas only need simple zeros, so they may always find them.
        const bool allow = options.find_roots || method == "lagrange";
        const FactoredPolynomial fa = zeros_of(a, "a", allow, warnings, method);
        const FactoredPolynomial fb = zeros_of(b, "b", allow, warnings, method);
        if (method == "lagrange") {
            sol = solve_lagrange(fa, fb, c, options.guards);
        } else if (method == "hermite") {
            sol = solve_hermite(fa, fb, c, options.guards);
        } else {
            sol = solve_dyadic(fa, fb, c, options.guards);
        }
    }
    const double scale = bezout_scale(a.coefficients(), b.coefficients(), c);
    const bool verified = sol.residual <= options.verify_tol * scale;
    if (!verified) warnings.push_back("residual exceeds --verify-tol * scale");
    return {{"method", method},     {"x", to_json(sol.x)},  {"y", to_json(sol.y)},
            {"residual", sol.residual}, {"scale", scale}, {"verified", verified}};
}

json cmd_adjugate(const json& input, const CommandOptions& options, std::vector<std::string>& warnings) {
    require_method(options, {"auto", "dyadic"}, "adjugate");
    const PolynomialDocument a = polynomial_field(input, "a");
    const PolynomialDocument b = polynomial_field(input, "b");
    const SylvesterLayout s = build_sylvester(a.coefficients(), b.coefficients());
    const FactoredPolynomial fa = zeros_of(a, "a", options.find_roots, warnings, "adjugate");
    const FactoredPolynomial fb = zeros_of(b, "b", options.find_roots, warnings, "adjugate");
    if (!fa.all_simple() || !fb.all_simple()) {
        throw ValidationError(
            "the dyadic adjugate formula covers simple zeros only; a zero of multiplicity > 1 was declared "
            "(use invert for the inverse with multiple zeros)");
    }
    const DyadicDecomposition dec = adj_simple(fa, fb);
    const DenseMatrix adj = materialize(dec);
    const Complex d = det(s.matrix);
    const double norm = distance_to_scaled_identity(multiply(s.matrix, adj), d);
    const double scale = std::max(1.0, hadamard_bound(s.matrix));
    const bool verified = norm <= options.verify_tol * scale;
    if (!verified) warnings.push_back("||S adj S - det S I|| exceeds --verify-tol * scale");
    return {{"m", s.m},
            {"n", s.n},
            {"sylvester", to_json(s.matrix)},
            {"dyads", dyads_to_json(dec)},
            {"adjugate", to_json(adj)},
            {"det", to_json(d)},
            {"verification_norm", norm},
            {"scale", scale},
            {"verified", verified}};
}

json cmd_confluence(const json& input, const CommandOptions& options, std::vector<std::string>&) {
    require_method(options, {"auto"}, "confluence");
    const json& f = require_field(input, "family");
    if (!f.is_object()) throw ValidationError("\"family\" must be an object");
    ConfluenceFamily family;
    if (f.contains("leading_a")) family.leading_a = complex_from_json(f["leading_a"]);
    if (f.contains("leading_b")) family.leading_b = complex_from_json(f["leading_b"]);
    family.theta = complex_from_json(require_field(f, "theta"));
    family.alpha_path.drift = complex_list_from_json(require_field(f, "alpha_drift"));
    family.beta_path.drift = complex_list_from_json(require_field(f, "beta_drift"));
    if (f.contains("fixed_a")) family.fixed_a = zeros_from_json(f["fixed_a"]);
    if (f.contains("fixed_b")) family.fixed_b = zeros_from_json(f["fixed_b"]);

    const Polynomial c = input.contains("c") ? polynomial_field(input, "c").coefficients() : Polynomial::constant(1.0);
    const json& t = require_field(input, "taus");
    if (!t.is_array()) throw ValidationError("\"taus\" must be a list of numbers");
    std::vector<double> taus;
    for (const json& v : t) {
        if (!v.is_number()) throw ValidationError("\"taus\" must be a list of numbers");
        taus.push_back(v.get<double>());
    }

    const ConvergenceReport report = convergence_experiment(family, c, taus, options.guards);
    const LimitSolutions limits = limit_solutions(family, c, options.guards);
    json rows = json::array();
    for (const ConvergenceRow& r : report.rows) {
        rows.push_back(
            {{"tau", r.tau}, {"inverse_error", r.inverse_error}, {"x_error", r.x_error}, {"y_error", r.y_error}});
    }
    json out{{"m", family.m()},
             {"n", family.n()},
             {"rows", rows},
             {"limit_inverse", to_json(limit_inverse(family, options.guards))},
             {"limit_x", to_json(limits.x)},
             {"limit_y", to_json(limits.y)},
             {"inverse_errors_decrease", report.inverse_errors_decrease()}};
    if (taus.size() > 1) {
        out["inverse_slope"] = optional_number(report.inverse_slope);
        out["x_slope"] = optional_number(report.x_slope);
        out["y_slope"] = optional_number(report.y_slope);
    }
    return out;
}

json cmd_bench(const json& input, const CommandOptions& options, std::vector<std::string>& warnings) {
    require_method(options, {"auto"}, "bench");
    const BenchScenario scenario = BenchScenario::from_json(input);
    const BenchReport r = run_bench(scenario, options.guards);
    auto stats = [](const PipelineStats& p) {
        return json{{"seconds", p.seconds}, {"max_relative_residual", p.max_relative_residual}};
    };
    const bool verified = r.tracking.max_relative_residual <= options.verify_tol &&
                          r.oracle.max_relative_residual <= options.verify_tol && r.agreement <= options.verify_tol;
    if (!verified) warnings.push_back("bench residuals or agreement exceed --verify-tol");
    return {{"ticks", r.ticks},
            {"m", r.m},
            {"n", r.n},
            {"tracking", stats(r.tracking)},
            {"oracle", stats(r.oracle)},
            {"agreement", r.agreement},
            {"speedup", r.tracking.seconds > 0.0 ? json(r.oracle.seconds / r.tracking.seconds) : json(nullptr)},
            {"verified", verified}};
}

CommandResult run_command(std::string_view name, const json& input, const CommandOptions& options) {
    CommandResult result;
    try {
        const CommandOptions opts = checked(options);
        if (name == "sylvester") {
            result.output = cmd_sylvester(input, opts, result.warnings);
        } else if (name == "invert") {
            result.output = cmd_invert(input, opts, result.warnings);
        } else if (name == "solve") {
            result.output = cmd_solve(input, opts, result.warnings);
        } else if (name == "adjugate") {
            result.output = cmd_adjugate(input, opts, result.warnings);
        } else if (name == "confluence") {
            result.output = cmd_confluence(input, opts, result.warnings);
        } else if (name == "bench") {
            result.output = cmd_bench(input, opts, result.warnings);
        } else {
            throw ValidationError("unknown command " + std::string(name));
        }
        result.exit_code = exit_code::ok;
    } catch (const std::exception& e) {
        const std::string kind = error_kind(e);
        result.exit_code = exit_code_for(kind);
        result.output = {{"error", {{"kind", kind}, {"message", e.what()}}}};
    }
    return result;
}

}  // namespace sylvinv
