#include "rigiditykit/cli.hpp"

#include <json.hpp>

#include <chrono>
#include <cctype>
#include <functional>
#include <ostream>
#include <sstream>

#include "rigiditykit/negativity.hpp"
#include "rigiditykit/hypersurface.hpp"
#include "rigiditykit/sampling.hpp"
#include "rigiditykit/stokes.hpp"
#include "rigiditykit/vandermonde.hpp"

namespace rigiditykit::cli {

using nlohmann::ordered_json;

namespace {

ordered_json rationals_json(const std::vector<Rational>& values) {
    ordered_json arr = ordered_json::array();
    for (const auto& v : values) arr.push_back(to_string(v));
    return arr;
}

ordered_json doubles_json(const std::vector<double>& values) {
    ordered_json arr = ordered_json::array();
    for (double v : values) arr.push_back(format_double(v));
    return arr;
}

std::string scalar_text(const ordered_json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

bool all_scalars(const ordered_json& arr) {
    for (const auto& item : arr)
        if (item.is_object() || item.is_array()) return false;
    return true;
}

void render_text(const ordered_json& j, std::ostream& os, int indent = 0) {
    const std::string pad(indent, ' ');
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            os << pad << key << ":\n";
            render_text(value, os, indent + 2);
        } else if (value.is_array() && !all_scalars(value)) {
            os << pad << key << ":\n";
            for (const auto& item : value) {
                os << pad << "  -\n";
                render_text(item, os, indent + 4);
            }
        } else if (value.is_array()) {
            os << pad << key << ": [";
            for (std::size_t i = 0; i < value.size(); ++i)
                os << (i ? " " : "") << scalar_text(value[i]);
            os << "]\n";
        } else {
            os << pad << key << ": " << scalar_text(value) << "\n";
        }
    }
}

std::string kv_csv(const std::vector<std::pair<std::string, std::string>>& rows) {
    std::string out = "field,value\n";
    for (const auto& [k, v] : rows) out += k + "," + v + "\n";
    return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

std::vector<std::string> rational_strings(const std::vector<Rational>& values) {
    std::vector<std::string> out;
    for (const auto& v : values) out.push_back(to_string(v));
    return out;
}

void emit(const ordered_json& j, const std::string& csv, OutputFormat format, std::ostream& out) {
    switch (format) {
        case OutputFormat::json:
            out << j.dump(2) << "\n";
            break;
        case OutputFormat::csv:
            out << csv;
            break;
        case OutputFormat::text:
            render_text(j, out);
            break;
    }
}

template <class Fn>
int guarded(std::ostream& diag, Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        diag << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        diag << "internal error: " << e.what() << "\n";
        return 4;
    }
}

long parse_long_strict(const std::string& text) {
    std::string body = text;
    if (body.empty()) throw ParseError("empty integer");
    std::size_t start = body[0] == '-' || body[0] == '+' ? 1 : 0;
    if (start == body.size()) throw ParseError("not an integer: '" + text + "'");
    for (std::size_t i = start; i < body.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(body[i])))
            throw ParseError("not an integer: '" + text + "'");
    }
    try {
        return std::stol(body);
    } catch (const std::exception&) {
        throw ParseError("integer out of range: '" + text + "'");
    }
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

ordered_json identity_flags_json(const IdentityFlags& flags) {
    ordered_json j;
    j["c_matches_d_product"] = flags.c_matches_d_product;
    j["interpolation_values"] = flags.interpolation_values;
    j["interpolation_poly"] = flags.interpolation_poly;
    j["trace_matches"] = flags.trace_matches;
    j["factorization_matches"] = flags.factorization_matches;
    j["sum_d_sq_dominates"] = flags.sum_d_sq_dominates;
    j["negative"] = flags.negative;
    return j;
}

ordered_json bound_chain_json(const BoundChainReport& chain) {
    ordered_json j;
    j["B"] = format_double(chain.B);
    j["p0"] = chain.p0;
    j["branch"] = chain.max_branch ? "argmax" : "argmin";
    j["all_hold"] = chain.all_hold;
    ordered_json steps = ordered_json::array();
    for (const auto& step : chain.steps) {
        ordered_json s;
        s["label"] = step.label;
        s["lhs"] = format_double(step.lhs);
        s["rhs"] = format_double(step.rhs);
        s["strict"] = step.strict;
        s["holds"] = step.holds;
        steps.push_back(std::move(s));
    }
    j["steps"] = std::move(steps);
    return j;
}

ordered_json certificate_json(const InequalityCertificate& cert) {
    ordered_json j;
    j["schema_version"] = 1;
    j["command"] = "certify";
    j["kind"] = kind_traits<Rational>::name;
    j["n"] = cert.lambdas.size();
    j["r"] = cert.r;
    j["lambdas"] = rationals_json(cert.lambdas);
    j["L"] = to_string(cert.L_direct);
    j["L_direct"] = to_string(cert.L_direct);
    j["L_factored"] = to_string(cert.L_factored);
    j["B"] = to_string(cert.bcd.B);
    j["sum_d_sq"] = to_string(cert.sum_d_sq);
    j["p_indices"] = cert.bcd.p_indices;
    j["b"] = rationals_json(cert.bcd.b);
    j["c"] = rationals_json(cert.bcd.c);
    j["d"] = rationals_json(cert.bcd.d);
    j["identity_flags"] = identity_flags_json(cert.identity_flags);
    j["bound_chain"] = bound_chain_json(cert.bound_chain);
    j["all_ok"] = cert.identity_flags.all() && cert.bound_chain.all_hold;
    return j;
}

std::string certificate_csv(const InequalityCertificate& cert) {
    std::vector<std::pair<std::string, std::string>> rows;
    rows.emplace_back("n", std::to_string(cert.lambdas.size()));
    rows.emplace_back("r", std::to_string(cert.r));
    rows.emplace_back("lambdas", join(rational_strings(cert.lambdas), ";"));
    rows.emplace_back("L", to_string(cert.L_direct));
    rows.emplace_back("L_direct", to_string(cert.L_direct));
    rows.emplace_back("L_factored", to_string(cert.L_factored));
    rows.emplace_back("B", to_string(cert.bcd.B));
    rows.emplace_back("sum_d_sq", to_string(cert.sum_d_sq));
    rows.emplace_back("b", join(rational_strings(cert.bcd.b), ";"));
    rows.emplace_back("c", join(rational_strings(cert.bcd.c), ";"));
    rows.emplace_back("d", join(rational_strings(cert.bcd.d), ";"));
    rows.emplace_back("identities_hold", cert.identity_flags.all() ? "true" : "false");
    rows.emplace_back("bound_chain_holds", cert.bound_chain.all_hold ? "true" : "false");
    return kv_csv(rows);
}

ordered_json curvature_table_json(const std::vector<CurvatureReport>& table) {
    ordered_json arr = ordered_json::array();
    for (const auto& rep : table) {
        ordered_json row;
        row["theta"] = format_double(rep.theta);
        row["lambdas"] = doubles_json(rep.lambdas);
        row["H"] = format_double(rep.H);
        row["S"] = format_double(rep.S);
        row["R"] = format_double(rep.R);
        arr.push_back(std::move(row));
    }
    return arr;
}

std::string curvature_table_csv(int n, const std::vector<CurvatureReport>& table) {
    std::string out = "theta";
    for (int i = 1; i <= n; ++i) out += ",l" + std::to_string(i);
    out += ",H,S,R\n";
    for (const auto& rep : table) {
        out += format_double(rep.theta);
        for (double l : rep.lambdas) out += "," + format_double(l);
        out += "," + format_double(rep.H) + "," + format_double(rep.S) + "," + format_double(rep.R) + "\n";
    }
    return out;
}

}  // namespace

OutputFormat parse_output_format(const std::string& name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "text") return OutputFormat::text;
    throw ParseError("unknown output format '" + name + "' (expected json, csv, or text)");
}

void validate(const RunConfig& config) {
    if (config.n_lo < 3 || config.n_hi > 16 || config.n_lo > config.n_hi)
        throw ParseError("n range must lie within [3, 16]");
    if (config.rational_bound < 1) throw ParseError("rational bound must be >= 1");
    const auto& t = config.tolerances;
    if (!(t.distinctness > 0 && t.residual > 0 && t.curvature > 0 && t.strictness_margin > 0))
        throw ParseError("tolerances must be positive");
    if (!(config.pole_margin > 0)) throw ParseError("pole margin must be positive");
}

std::pair<int, int> parse_n_range(const std::string& text) {
    auto pos = text.find("..");
    if (pos == std::string::npos) {
        int k = static_cast<int>(parse_long_strict(text));
        return {k, k};
    }
    int lo = static_cast<int>(parse_long_strict(text.substr(0, pos)));
    int hi = static_cast<int>(parse_long_strict(text.substr(pos + 2)));
    return {lo, hi};
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    if (text.empty()) throw ParseError("empty value list");
    std::vector<Rational> values;
    for (const auto& token : split(text, ',')) values.push_back(parse_rational(token));
    return values;
}

std::vector<int> parse_int_list(const std::string& text) {
    if (text.empty()) throw ParseError("empty integer list");
    std::vector<int> values;
    for (const auto& token : split(text, ',')) values.push_back(static_cast<int>(parse_long_strict(token)));
    return values;
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const VerificationFailure*>(&e)) return 1;
    if (dynamic_cast<const ParseError*>(&e)) return 2;
    if (dynamic_cast<const InvalidRange*>(&e)) return 2;
    if (dynamic_cast<const IndexOutOfRange*>(&e)) return 2;
    if (dynamic_cast<const PoleProximity*>(&e)) return 2;
    if (dynamic_cast<const NonIntegralSolution*>(&e)) return 2;
    if (dynamic_cast<const DegenerateSpectrum*>(&e)) return 3;
    if (dynamic_cast<const SingularSystem*>(&e)) return 3;
    return 4;  // identity/bound/positivity violations and anything unexpected
}

int cmd_certify(const std::string& lambdas, int r, const RunConfig& config, std::ostream& out,
                std::ostream& diag) {
    return guarded(diag, [&] {
        validate(config);
        Spectrum<Rational> s(parse_rational_list(lambdas));
        auto cert = certify(s, r, config.tolerances.strictness_margin);
        emit(certificate_json(cert), certificate_csv(cert), config.format, out);
        return 0;
    });
}

int cmd_scan(const RunConfig& config, std::ostream& out, std::ostream& diag) {
    return guarded(diag, [&] {
        validate(config);
        if (config.trials < 1) throw ParseError("scan needs at least one trial");
        const auto start = std::chrono::steady_clock::now();

        struct PerN {
            int n = 0;
            long certificates = 0;
            long violations = 0;
            Rational l_min, l_max;
            bool seen = false;
        };
        std::vector<PerN> rows;
        ordered_json violation_details = ordered_json::array();
        Rational l_min, l_max;
        bool seen = false;
        long certificates = 0;
        long violations = 0;

        for (int n = config.n_lo; n <= config.n_hi; ++n) {
            PerN row;
            row.n = n;
            for (int trial = 0; trial < config.trials; ++trial) {
                auto rng = make_trial_rng(config.seed, static_cast<std::uint64_t>(n),
                                          static_cast<std::uint64_t>(trial));
                auto s = sample_spectrum(rng, n, config.rational_bound);
                try {
                    auto certs = certify_all(s, config.tolerances.strictness_margin);
                    for (const auto& cert : certs) {
                        ++row.certificates;
                        ++certificates;
                        if (!row.seen || cert.L_direct < row.l_min) row.l_min = cert.L_direct;
                        if (!row.seen || cert.L_direct > row.l_max) row.l_max = cert.L_direct;
                        row.seen = true;
                        if (!seen || cert.L_direct < l_min) l_min = cert.L_direct;
                        if (!seen || cert.L_direct > l_max) l_max = cert.L_direct;
                        seen = true;
                    }
                } catch (const Error& e) {
                    ++row.violations;
                    ++violations;
                    ordered_json detail;
                    detail["n"] = n;
                    detail["trial"] = trial;
                    detail["lambdas"] = rationals_json(s.values());
                    detail["error"] = e.what();
                    violation_details.push_back(detail);
                    diag << "violation at n=" << n << " trial=" << trial << " lambdas=["
                         << join(rational_strings(s.values()), ",") << "]: " << e.what() << "\n";
                }
            }
            rows.push_back(std::move(row));
        }

        ordered_json j;
        j["schema_version"] = 1;
        j["command"] = "scan";
        j["seed"] = config.seed;
        j["trials"] = config.trials;
        j["n_range"] = {config.n_lo, config.n_hi};
        j["rational_bound"] = config.rational_bound;
        j["certificates"] = certificates;
        j["violations"] = violations;
        j["L_min"] = seen ? to_string(l_min) : "";
        j["L_max"] = seen ? to_string(l_max) : "";
        ordered_json per_n = ordered_json::array();
        std::string csv = "n,certificates,violations,L_min,L_max\n";
        for (const auto& row : rows) {
            ordered_json rj;
            rj["n"] = row.n;
            rj["certificates"] = row.certificates;
            rj["violations"] = row.violations;
            rj["L_min"] = row.seen ? to_string(row.l_min) : "";
            rj["L_max"] = row.seen ? to_string(row.l_max) : "";
            per_n.push_back(std::move(rj));
            csv += std::to_string(row.n) + "," + std::to_string(row.certificates) + "," +
                   std::to_string(row.violations) + "," + (row.seen ? to_string(row.l_min) : "") +
                   "," + (row.seen ? to_string(row.l_max) : "") + "\n";
        }
        j["per_n"] = std::move(per_n);
        j["violation_details"] = std::move(violation_details);

        const auto elapsed =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        diag << "scan: " << certificates << " certificates in " << elapsed.count() << " ms\n";

        emit(j, csv, config.format, out);
        return violations == 0 ? 0 : 1;
    });
}

int cmd_derivatives(const std::string& lambdas, const std::string& f_j, bool float_kind,
                    const RunConfig& config, std::ostream& out, std::ostream& diag) {
    return guarded(diag, [&] {
        validate(config);
        auto values = parse_rational_list(lambdas);
        Rational fj = parse_rational(f_j);

        ordered_json j;
        j["schema_version"] = 1;
        j["command"] = "derivatives";
        std::string csv = "i,closed_form,generic\n";

        if (float_kind) {
            std::vector<double> dvals;
            for (const auto& v : values) dvals.push_back(to_double(v));
            Spectrum<double> s(std::move(dvals), config.tolerances.distinctness);
            auto closed = derivatives_closed_form(s, to_double(fj));
            auto generic = solve_derivatives_generic(s, to_double(fj));
            double discrepancy = 0.0;
            for (int i = 0; i < s.n(); ++i)
                discrepancy = std::max(discrepancy,
                                       std::fabs(closed.lambda_derivs[i] - generic.lambda_derivs[i]));
            j["kind"] = kind_traits<double>::name;
            j["lambdas"] = doubles_json(s.values());
            j["f_j"] = format_double(to_double(fj));
            j["closed_form"] = doubles_json(closed.lambda_derivs);
            j["generic"] = doubles_json(generic.lambda_derivs);
            j["max_discrepancy"] = format_double(discrepancy);
            j["residual"] = format_double(generic.residual);
            j["ill_conditioned"] = is_ill_conditioned(generic, config.tolerances.residual);
            j["moment_identities"] = moment_identities_hold(s, generic, config.tolerances.residual);
            for (int i = 0; i < s.n(); ++i)
                csv += std::to_string(i + 1) + "," + format_double(closed.lambda_derivs[i]) + "," +
                       format_double(generic.lambda_derivs[i]) + "\n";
        } else {
            Spectrum<Rational> s(std::move(values));
            auto closed = derivatives_closed_form(s, fj);
            auto generic = solve_derivatives_generic(s, fj);
            if (!(closed.lambda_derivs == generic.lambda_derivs))
                throw IdentityViolation("closed form and elimination disagree in exact arithmetic");
            if (!moment_identities_hold(s, closed))
                throw IdentityViolation("moment identities fail in exact arithmetic");
            j["kind"] = kind_traits<Rational>::name;
            j["lambdas"] = rationals_json(s.values());
            j["f_j"] = to_string(fj);
            j["closed_form"] = rationals_json(closed.lambda_derivs);
            j["generic"] = rationals_json(generic.lambda_derivs);
            j["max_discrepancy"] = "0";
            j["moment_identities"] = true;
            for (int i = 0; i < s.n(); ++i)
                csv += std::to_string(i + 1) + "," + to_string(closed.lambda_derivs[i]) + "," +
                       to_string(generic.lambda_derivs[i]) + "\n";
        }
        emit(j, csv, config.format, out);
        return 0;
    });
}

int cmd_stokes(const std::string& lambdas, const std::string& f, const RunConfig& config,
               std::ostream& out, std::ostream& diag) {
    return guarded(diag, [&] {
        validate(config);
        Spectrum<Rational> s(parse_rational_list(lambdas));
        GradientData<Rational> g{parse_rational_list(f)};

        Rational via_l = A_via_L(s, g);
        Rational via_triples = A_via_triple_sum(s, g);
        if (!(via_l == via_triples))
            throw IdentityViolation("the two evaluations of A disagree in exact arithmetic");
        auto verdict = rigidity_verdict(s, g);

        ordered_json j;
        j["schema_version"] = 1;
        j["command"] = "stokes";
        j["kind"] = kind_traits<Rational>::name;
        j["lambdas"] = rationals_json(s.values());
        j["f"] = rationals_json(g.f);
        j["A"] = to_string(verdict.A);
        j["A_via_L"] = to_string(via_l);
        j["A_via_triple_sum"] = to_string(via_triples);
        j["is_rigid"] = verdict.is_rigid;
        j["forced_f_zero"] = verdict.forced_f_zero;

        std::vector<std::pair<std::string, std::string>> rows;
        rows.emplace_back("lambdas", join(rational_strings(s.values()), ";"));
        rows.emplace_back("f", join(rational_strings(g.f), ";"));
        rows.emplace_back("A", to_string(verdict.A));
        rows.emplace_back("A_via_L", to_string(via_l));
        rows.emplace_back("A_via_triple_sum", to_string(via_triples));
        rows.emplace_back("is_rigid", verdict.is_rigid ? "true" : "false");
        rows.emplace_back("forced_f_zero", verdict.forced_f_zero ? "true" : "false");
        emit(j, kv_csv(rows), config.format, out);
        return 0;
    });
}

int cmd_isoparametric(int n, int g, const std::string& multiplicities, int samples, bool minimal,
                      const RunConfig& config, std::ostream& out, std::ostream& diag) {
    return guarded(diag, [&] {
        validate(config);
        std::vector<int> mults;
        if (multiplicities.empty()) {
            if (n != g)
                throw ParseError("multiplicities are required when g != n");
            mults.assign(g, 1);
        } else {
            mults = parse_int_list(multiplicities);
        }
        IsoparametricFamily fam(n, g, mults);

        ordered_json j;
        j["schema_version"] = 1;
        j["command"] = "isoparametric";
        j["n"] = n;
        j["g"] = g;
        j["multiplicities"] = fam.multiplicities;

        if (minimal) {
            double theta = find_minimal_theta(fam, config.pole_margin);
            auto rep = curvature_report(fam, theta, config.pole_margin);
            j["minimal_theta"] = format_double(theta);
            j["report"] = curvature_table_json({rep})[0];
            emit(j, curvature_table_csv(n, {rep}), config.format, out);
            return 0;
        }

        if (samples < 1) throw ParseError("need at least one sample");
        std::vector<CurvatureReport> table;
        double max_abs_r = 0.0;
        if (fam.is_simple() && (g == 3 || g == 4 || g == 6)) {
            auto rep = verify_zero_scalar_curvature(fam, samples, config.pole_margin);
            table = std::move(rep.table);
            max_abs_r = rep.max_abs_R;
        } else {
            double lo = config.pole_margin;
            double width = fam.theta_sup() - 2 * config.pole_margin;
            for (int i = 0; i < samples; ++i) {
                double theta = lo + (i + 0.5) * width / samples;
                table.push_back(curvature_report(fam, theta, config.pole_margin));
                max_abs_r = std::max(max_abs_r, std::fabs(table.back().R));
            }
        }
        j["samples"] = samples;
        j["max_abs_R"] = format_double(max_abs_r);
        j["within_tolerance"] = max_abs_r <= config.tolerances.curvature;
        j["table"] = curvature_table_json(table);
        emit(j, curvature_table_csv(n, table), config.format, out);
        return 0;
    });
}

int cmd_clifford(int n, int r, const RunConfig& config, std::ostream& out, std::ostream& diag) {
    return guarded(diag, [&] {
        validate(config);
        auto profile = clifford_torus_spectrum(n, r);
        double p1 = 0.0;
        double p2 = 0.0;
        for (int i = 0; i < profile.g; ++i) {
            p1 += profile.multiplicities[i] * profile.values[i];
            p2 += profile.multiplicities[i] * profile.values[i] * profile.values[i];
        }

        ordered_json j;
        j["schema_version"] = 1;
        j["command"] = "clifford";
        j["n"] = n;
        j["r"] = r;
        ordered_json values = ordered_json::array();
        for (double v : profile.values) values.push_back(format_double(v));
        j["values"] = std::move(values);
        j["multiplicities"] = profile.multiplicities;
        j["p1"] = format_double(p1);
        j["p2"] = format_double(p2);

        std::vector<std::pair<std::string, std::string>> rows;
        rows.emplace_back("n", std::to_string(n));
        rows.emplace_back("r", std::to_string(r));
        for (int i = 0; i < profile.g; ++i)
            rows.emplace_back("value_x" + std::to_string(profile.multiplicities[i]),
                              format_double(profile.values[i]));
        rows.emplace_back("p1", format_double(p1));
        rows.emplace_back("p2", format_double(p2));
        emit(j, kv_csv(rows), config.format, out);
        return 0;
    });
}

}  // namespace rigiditykit::cli
