/*
   Copyright 2026 The defrost authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "defrost/families.hpp"
#include "defrost/stirling.hpp"
#include "defrost/verify.hpp"
#include "defrost/version.hpp"

namespace {

using defrost::poly;
using defrost::rational;
using json = nlohmann::ordered_json;

// Exit codes: 0 success, 1 identity/verification failure, 2 usage or
// parameter error.
constexpr int exit_ok = 0;
constexpr int exit_verify_failure = 1;
constexpr int exit_usage = 2;

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Desk-scale bound on n; DEFROST_MAX_N overrides it.
int hard_cap() {
    const char* env = std::getenv("DEFROST_MAX_N");
    if (env == nullptr) {
        return 64;
    }
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || value < 1) {
        throw usage_error("invalid DEFROST_MAX_N: \"" + std::string(env) + "\"");
    }
    return static_cast<int>(value);
}

void check_cap(int n, const char* what) {
    if (n < 0) {
        throw usage_error(std::string(what) + " must be >= 0");
    }
    const int cap = hard_cap();
    if (n > cap) {
        throw usage_error(std::string(what) + " exceeds the cap of " +
                          std::to_string(cap) + " (override with DEFROST_MAX_N)");
    }
}

rational parse_rational(const std::string& text, const char* flag) {
    try {
        return rational::parse(text);
    } catch (const defrost::parse_error&) {
        throw usage_error(std::string("invalid rational for ") + flag + ": \"" + text +
                          "\"");
    }
}

enum class family_id { dfe, dfe_r, dbern, dgen, cfe };

family_id family_from_name(const std::string& name) {
    if (name == "dfe") return family_id::dfe;
    if (name == "dfe-r") return family_id::dfe_r;
    if (name == "dbern") return family_id::dbern;
    if (name == "dgen") return family_id::dgen;
    if (name == "cfe") return family_id::cfe;
    throw usage_error("unknown family: \"" + name + "\"");
}

struct family_args {
    family_id id = family_id::dfe;
    rational u;
    rational lambda;
    int order = 1;
};

/// Resolves and validates the per-family parameter set.
family_args resolve_family(const std::string& name, const std::optional<std::string>& u_text,
                           const std::optional<std::string>& lambda_text, int order) {
    family_args out;
    out.id = family_from_name(name);
    out.order = order;
    if (order < 1) {
        throw usage_error("--order must be >= 1");
    }
    const bool needs_u =
        out.id == family_id::dfe || out.id == family_id::dfe_r || out.id == family_id::cfe;
    const bool needs_lambda = out.id != family_id::cfe;
    if (needs_u) {
        if (!u_text) {
            throw usage_error("family " + name + " requires --u");
        }
        out.u = parse_rational(*u_text, "--u");
        if (out.u.is_one()) {
            throw usage_error("u must not equal 1");
        }
    }
    if (needs_lambda) {
        if (!lambda_text) {
            throw usage_error("family " + name + " requires --lambda");
        }
        out.lambda = parse_rational(*lambda_text, "--lambda");
    }
    return out;
}

poly family_poly(const family_args& fam, int n) {
    switch (fam.id) {
    case family_id::dfe:
        return defrost::dfe_poly(n, fam.u, fam.lambda);
    case family_id::dfe_r:
        return defrost::dfe_higher_poly(n, fam.order, fam.u, fam.lambda);
    case family_id::dbern:
        return defrost::deg_bernoulli_poly(n, fam.lambda);
    case family_id::dgen:
        return defrost::deg_genocchi_poly(n, fam.lambda);
    case family_id::cfe:
        return fam.order == 1 ? defrost::classical_fe_poly(n, fam.u)
                              : defrost::classical_fe_higher_poly(n, fam.order, fam.u);
    }
    throw usage_error("unreachable family");
}

/// Family values at x = 0 for n = 0..max_n, via the number recurrences
/// where the family has one.
std::vector<rational> family_numbers(const family_args& fam, int max_n) {
    switch (fam.id) {
    case family_id::dfe:
        return defrost::dfe_numbers(fam.u, fam.lambda, max_n).values;
    case family_id::dfe_r:
        return defrost::dfe_higher_numbers(fam.order, fam.u, fam.lambda, max_n).values;
    case family_id::dbern:
        return defrost::deg_bernoulli_numbers(fam.lambda, max_n).values;
    case family_id::dgen:
    case family_id::cfe: {
        std::vector<rational> values;
        values.reserve(static_cast<std::size_t>(max_n) + 1);
        for (int n = 0; n <= max_n; ++n) {
            values.push_back(family_poly(fam, n).eval(rational(0)));
        }
        return values;
    }
    }
    throw usage_error("unreachable family");
}

std::vector<std::string> coeff_strings(const poly& p) {
    if (p.is_zero()) {
        return {"0"};
    }
    std::vector<std::string> out;
    out.reserve(p.coefficients().size());
    for (const rational& c : p.coefficients()) {
        out.push_back(c.str());
    }
    return out;
}

json base_doc(const char* command) {
    json doc;
    doc["tool"] = "defrost";
    doc["version"] = std::string(defrost::version);
    doc["command"] = command;
    return doc;
}

void add_family_params(json& doc, const family_args& fam, const std::string& name) {
    doc["family"] = name;
    if (fam.id == family_id::dfe || fam.id == family_id::dfe_r || fam.id == family_id::cfe) {
        doc["u"] = fam.u.str();
    }
    if (fam.id != family_id::cfe) {
        doc["lambda"] = fam.lambda.str();
    }
    if (fam.id == family_id::dfe_r || fam.id == family_id::cfe) {
        doc["order"] = fam.order;
    }
}

void emit(const json& doc) {
    std::cout << doc.dump(2) << "\n";
}

std::string quoted_csv(const std::string& s) {
    return "\"" + s + "\"";
}

// --- poly -------------------------------------------------------------------

struct poly_options {
    std::string family;
    int n = 0;
    std::optional<std::string> u;
    std::optional<std::string> lambda;
    int order = 1;
    std::optional<std::string> x;
    std::string format = "json";
};

int run_poly(const poly_options& opt) {
    check_cap(opt.n, "--n");
    const family_args fam = resolve_family(opt.family, opt.u, opt.lambda, opt.order);
    const poly p = family_poly(fam, opt.n);

    std::optional<rational> at;
    if (opt.x) {
        at = parse_rational(*opt.x, "--x");
    }

    if (opt.format == "csv") {
        if (at) {
            std::cout << quoted_csv(p.eval(*at).str()) << "\n";
        } else {
            const auto coeffs = coeff_strings(p);
            for (std::size_t i = 0; i < coeffs.size(); ++i) {
                std::cout << (i > 0 ? "," : "") << quoted_csv(coeffs[i]);
            }
            std::cout << "\n";
        }
        return exit_ok;
    }

    json doc = base_doc("poly");
    add_family_params(doc, fam, opt.family);
    doc["n"] = opt.n;
    if (at) {
        doc["x"] = at->str();
        doc["value"] = p.eval(*at).str();
    } else {
        doc["coefficients"] = coeff_strings(p);
    }
    emit(doc);
    return exit_ok;
}

// --- table ------------------------------------------------------------------

struct table_options {
    std::string family;
    int max_n = 0;
    std::optional<std::string> u;
    std::optional<std::string> lambda;
    int order = 1;
    bool coeffs = false;
    std::string format = "json";
};

int run_table(const table_options& opt) {
    check_cap(opt.max_n, "--max-n");
    const family_args fam = resolve_family(opt.family, opt.u, opt.lambda, opt.order);

    if (opt.coeffs) {
        std::vector<std::vector<std::string>> rows;
        rows.reserve(static_cast<std::size_t>(opt.max_n) + 1);
        for (int n = 0; n <= opt.max_n; ++n) {
            rows.push_back(coeff_strings(family_poly(fam, n)));
        }
        if (opt.format == "csv") {
            std::cout << "n,coefficients\n";
            for (int n = 0; n <= opt.max_n; ++n) {
                std::cout << n;
                for (const auto& c : rows[static_cast<std::size_t>(n)]) {
                    std::cout << "," << quoted_csv(c);
                }
                std::cout << "\n";
            }
            return exit_ok;
        }
        json doc = base_doc("table");
        add_family_params(doc, fam, opt.family);
        doc["max_n"] = opt.max_n;
        doc["polynomials"] = rows;
        emit(doc);
        return exit_ok;
    }

    const std::vector<rational> values = family_numbers(fam, opt.max_n);
    if (opt.format == "csv") {
        std::cout << "n,value\n";
        for (int n = 0; n <= opt.max_n; ++n) {
            std::cout << n << "," << quoted_csv(values[static_cast<std::size_t>(n)].str())
                      << "\n";
        }
        return exit_ok;
    }
    json doc = base_doc("table");
    add_family_params(doc, fam, opt.family);
    doc["max_n"] = opt.max_n;
    json list = json::array();
    for (const rational& v : values) {
        list.push_back(v.str());
    }
    doc["values"] = list;
    emit(doc);
    return exit_ok;
}

// --- verify -----------------------------------------------------------------

struct verify_options {
    std::string identity = "all";
    std::vector<std::string> u;
    std::vector<std::string> lambda;
    std::vector<int> orders;
    std::vector<int> ds;
    int max_n = 12;
};

int run_verify(const verify_options& opt) {
    check_cap(opt.max_n, "--max-n");
    defrost::verify::param_grid grid = defrost::verify::param_grid::default_grid();
    if (!opt.u.empty()) {
        grid.u_values.clear();
        for (const auto& text : opt.u) {
            grid.u_values.push_back(parse_rational(text, "--u"));
        }
    }
    if (!opt.lambda.empty()) {
        grid.lambda_values.clear();
        for (const auto& text : opt.lambda) {
            grid.lambda_values.push_back(parse_rational(text, "--lambda"));
        }
    }
    if (!opt.orders.empty()) {
        for (int r : opt.orders) {
            if (r < 1) {
                throw usage_error("--order must be >= 1");
            }
        }
        grid.r_values = opt.orders;
    }
    if (!opt.ds.empty()) {
        for (int d : opt.ds) {
            if (d < 1) {
                throw usage_error("--d must be >= 1");
            }
        }
        grid.d_values = opt.ds;
    }

    std::vector<defrost::verify::verify_report> reports;
    if (opt.identity == "all") {
        reports = defrost::verify::check_all(grid, opt.max_n);
    } else {
        const auto id = defrost::verify::identity_from_string(opt.identity);
        if (!id) {
            throw usage_error("unknown identity: \"" + opt.identity + "\"");
        }
        reports = defrost::verify::check_identity(*id, grid, opt.max_n);
    }

    std::cout << defrost::verify::reports_to_json(reports) << "\n";
    for (const auto& rep : reports) {
        if (rep.status == defrost::verify::check_status::fail) {
            return exit_verify_failure;
        }
    }
    return exit_ok;
}

// --- convert ----------------------------------------------------------------

struct convert_options {
    std::string direction;
    std::string u;
    std::string lambda;
    int order = 1;
    int max_m = 8;
    std::string format = "json";
};

int run_convert(const convert_options& opt) {
    check_cap(opt.max_m, "--max-m");
    if (opt.order < 1) {
        throw usage_error("--order must be >= 1");
    }
    if (opt.direction != "h2H" && opt.direction != "H2h") {
        throw usage_error("--direction must be h2H or H2h");
    }
    const rational u = parse_rational(opt.u, "--u");
    if (u.is_one()) {
        throw usage_error("u must not equal 1");
    }
    const rational lambda = parse_rational(opt.lambda, "--lambda");
    const bool to_classical = opt.direction == "h2H";

    std::vector<poly> input;
    input.reserve(static_cast<std::size_t>(opt.max_m) + 1);
    for (int n = 0; n <= opt.max_m; ++n) {
        input.push_back(to_classical
                            ? defrost::dfe_higher_poly(n, opt.order, u, lambda)
                            : defrost::classical_fe_higher_poly(n, opt.order, u));
    }
    const std::vector<poly> output = to_classical
                                         ? defrost::s2_transform<poly>(input, lambda)
                                         : defrost::s1_transform<poly>(input, lambda);

    bool all_match = true;
    std::vector<bool> match(output.size());
    for (int m = 0; m <= opt.max_m; ++m) {
        const poly target =
            to_classical ? defrost::classical_fe_higher_poly(m, opt.order, u)
                         : defrost::dfe_higher_poly(m, opt.order, u, lambda);
        match[static_cast<std::size_t>(m)] = output[static_cast<std::size_t>(m)] == target;
        all_match = all_match && match[static_cast<std::size_t>(m)];
    }

    if (opt.format == "csv") {
        std::cout << "m,match,coefficients\n";
        for (int m = 0; m <= opt.max_m; ++m) {
            std::cout << m << "," << (match[static_cast<std::size_t>(m)] ? "true" : "false");
            for (const auto& c : coeff_strings(output[static_cast<std::size_t>(m)])) {
                std::cout << "," << quoted_csv(c);
            }
            std::cout << "\n";
        }
    } else {
        json doc = base_doc("convert");
        doc["direction"] = opt.direction;
        doc["u"] = u.str();
        doc["lambda"] = lambda.str();
        doc["order"] = opt.order;
        doc["max_m"] = opt.max_m;
        json rows = json::array();
        for (int m = 0; m <= opt.max_m; ++m) {
            json row;
            row["m"] = m;
            row["coefficients"] = coeff_strings(output[static_cast<std::size_t>(m)]);
            row["match"] = static_cast<bool>(match[static_cast<std::size_t>(m)]);
            rows.push_back(row);
        }
        doc["rows"] = rows;
        emit(doc);
        return all_match ? exit_ok : exit_verify_failure;
    }
    return all_match ? exit_ok : exit_verify_failure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computation and verification of degenerate Frobenius-Euler, "
                 "Bernoulli and Genocchi polynomial families"};
    app.set_version_flag("--version", std::string("defrost ") + std::string(defrost::version));
    app.require_subcommand(1);

    poly_options poly_opt;
    CLI::App* poly_cmd = app.add_subcommand("poly", "print one family polynomial");
    poly_cmd->add_option("--family", poly_opt.family, "dfe|dfe-r|dbern|dgen|cfe")
        ->required();
    poly_cmd->add_option("--n", poly_opt.n, "polynomial degree index")->required();
    poly_cmd->add_option("--u", poly_opt.u, "parameter u as p/q");
    poly_cmd->add_option("--lambda", poly_opt.lambda, "parameter lambda as p/q");
    poly_cmd->add_option("--order", poly_opt.order, "order r (dfe-r, cfe)");
    poly_cmd->add_option("--x", poly_opt.x, "evaluate at x instead of printing coefficients");
    poly_cmd->add_option("--format", poly_opt.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    table_options table_opt;
    CLI::App* table_cmd = app.add_subcommand("table", "print family values for n = 0..N");
    table_cmd->add_option("--family", table_opt.family, "dfe|dfe-r|dbern|dgen|cfe")
        ->required();
    table_cmd->add_option("--max-n", table_opt.max_n, "largest index N")->required();
    table_cmd->add_option("--u", table_opt.u, "parameter u as p/q");
    table_cmd->add_option("--lambda", table_opt.lambda, "parameter lambda as p/q");
    table_cmd->add_option("--order", table_opt.order, "order r (dfe-r, cfe)");
    table_cmd->add_flag("--coeffs", table_opt.coeffs,
                        "emit polynomial coefficient rows instead of numbers");
    table_cmd->add_option("--format", table_opt.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    verify_options verify_opt;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "check the identity catalogue over a parameter grid");
    verify_cmd->add_option("--identity", verify_opt.identity,
                           "identity name or \"all\"");
    verify_cmd->add_option("--u", verify_opt.u, "grid values for u (repeatable)");
    verify_cmd->add_option("--lambda", verify_opt.lambda,
                           "grid values for lambda (repeatable)");
    verify_cmd->add_option("--order", verify_opt.orders, "grid values for r (repeatable)");
    verify_cmd->add_option("--d", verify_opt.ds, "grid values for d (repeatable)");
    verify_cmd->add_option("--max-n", verify_opt.max_n, "largest index checked");

    convert_options convert_opt;
    CLI::App* convert_cmd = app.add_subcommand(
        "convert", "Stirling-transform a family sequence and cross-check the target");
    convert_cmd->add_option("--direction", convert_opt.direction, "h2H|H2h")->required();
    convert_cmd->add_option("--u", convert_opt.u, "parameter u as p/q")->required();
    convert_cmd->add_option("--lambda", convert_opt.lambda, "parameter lambda as p/q")
        ->required();
    convert_cmd->add_option("--order", convert_opt.order, "order r");
    convert_cmd->add_option("--max-m", convert_opt.max_m, "largest index M");
    convert_cmd->add_option("--format", convert_opt.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "defrost: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (poly_cmd->parsed()) {
            return run_poly(poly_opt);
        }
        if (table_cmd->parsed()) {
            return run_table(table_opt);
        }
        if (verify_cmd->parsed()) {
            return run_verify(verify_opt);
        }
        return run_convert(convert_opt);
    } catch (const usage_error& e) {
        std::cerr << "defrost: " << e.what() << "\n";
        return exit_usage;
    } catch (const defrost::error& e) {
        std::cerr << "defrost: " << e.what() << "\n";
        return exit_usage;
    }
}
